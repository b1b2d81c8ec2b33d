// Command-line front end; talks to the core exclusively through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcurve/symcurve.h"

namespace {

int status_to_exit(sc_status st) {
    switch (st) {
        case SC_OK: return 0;
        case SC_ERROR_PARSE: return 1;
        case SC_ERROR_PRECONDITION: return 2;
        case SC_ERROR_INTERNAL: return 3;
        default: return 2;
    }
}

int die(sc_status st) {
    std::cerr << "error: " << sc_last_error() << "\n";
    return status_to_exit(st);
}

sc_status load_set(const std::string& path, sc_set** out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return SC_ERROR_PARSE;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    sc_status st = sc_set_parse_json(text.c_str(), out);
    if (st == SC_OK && sc_set_warning(*out)) std::cerr << path << ": " << sc_set_warning(*out) << "\n";
    if (st != SC_OK && *sc_last_error()) std::cerr << "error: " << sc_last_error() << "\n";
    return st;
}

int emit(sc_report* rep, const std::string& format, bool pretty) {
    if (format == "json")
        std::cout << sc_report_json(rep, pretty ? 1 : 0);
    else
        std::cout << sc_report_text(rep);
    sc_report_free(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial invariants of symmetric spatial curves and polynomial families"};
    app.require_subcommand(1);

    std::string format = "json";
    bool pretty = false;
    std::string which = "total";
    std::string file;
    std::vector<std::string> files;
    int dim = 3;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        cmd->add_flag("--pretty", pretty, "indent JSON output");
    };

    auto* c_classify = app.add_subcommand("classify", "classify a 3D support set");
    c_classify->add_option("file", file, "input JSON file")->required();
    add_common(c_classify);

    auto* c_inv = app.add_subcommand("invariants", "full curve report for a 3D support set");
    c_inv->add_option("file", file, "input JSON file")->required();
    add_common(c_inv);

    auto* c_fan = app.add_subcommand("fan", "tropical fan of the symmetric curve");
    c_fan->add_option("file", file, "input JSON file")->required();
    c_fan->add_option("--which", which, "total, proper or diagonal")
        ->check(CLI::IsMember({"total", "proper", "diagonal"}));
    add_common(c_fan);

    auto* c_gal = app.add_subcommand("galois", "Galois verdict for a one-parameter family");
    c_gal->add_option("file", file, "input JSON file")->required();
    add_common(c_gal);

    auto* c_mv = app.add_subcommand("mv", "lattice mixed volume of dim sets of dimension dim");
    c_mv->add_option("files", files, "input JSON files (one per set)")->required();
    c_mv->add_option("--dim", dim, "ambient dimension")->check(CLI::IsMember({1, 2, 3}));
    add_common(c_mv);

    CLI11_PARSE(app, argc, argv);

    if (c_mv->parsed()) {
        if (files.size() != static_cast<size_t>(dim)) {
            std::cerr << "error: expected " << dim << " input files for --dim " << dim << "\n";
            return 2;
        }
        std::vector<sc_set*> sets(files.size(), nullptr);
        for (size_t i = 0; i < files.size(); ++i) {
            sc_status st = load_set(files[i], &sets[i]);
            if (st != SC_OK) return status_to_exit(st);
        }
        int64_t value = 0;
        sc_status st = sc_mixed_volume(const_cast<const sc_set* const*>(sets.data()), sets.size(), &value);
        for (auto* s : sets) sc_set_free(s);
        if (st != SC_OK) return die(st);
        if (format == "json")
            std::cout << "{\"mixed_volume\":" << value << ",\"schema_version\":\"1\"}\n";
        else
            std::cout << value << "\n";
        return 0;
    }

    sc_set* set = nullptr;
    sc_status st = load_set(file, &set);
    if (st != SC_OK) return status_to_exit(st);

    sc_report* rep = nullptr;
    if (c_classify->parsed()) st = sc_classify(set, &rep);
    else if (c_inv->parsed()) st = sc_invariants(set, &rep);
    else if (c_fan->parsed()) st = sc_fan(set, which.c_str(), &rep);
    else st = sc_galois(set, &rep);

    sc_set_free(set);
    if (st != SC_OK) return die(st);
    return emit(rep, format, pretty);
}
