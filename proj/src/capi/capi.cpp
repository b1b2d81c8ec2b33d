#include "symcurve/symcurve.h"

#include <cstring>

#include "bkk.hpp"
#include "report.hpp"

using namespace symcurve;

struct sc_set {
    InputDocument doc;
    std::string warning;
};

struct sc_report {
    std::string json_plain, json_pretty, text;
};

namespace {

thread_local std::string g_last_error;

sc_status fail(sc_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

sc_status from_exception() {
    try {
        throw;
    } catch (const sc_error& e) {
        g_last_error = e.what();
        switch (e.kind()) {
            case errc::parse: return SC_ERROR_PARSE;
            case errc::precondition: return SC_ERROR_PRECONDITION;
            default: return SC_ERROR_INTERNAL;
        }
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SC_ERROR_INTERNAL;
    }
}

template <typename Fn>
sc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SC_OK;
    } catch (...) {
        return from_exception();
    }
}

} // namespace

extern "C" {

sc_status sc_set_parse_json(const char* text, sc_set** out) {
    if (!text || !out) return fail(SC_ERROR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto s = new sc_set{parse_input(text), {}};
        if (s->doc.deduplicated) s->warning = "duplicate points were removed from the input";
        *out = s;
    });
}

sc_status sc_set_create(int dim, const int64_t* coords, size_t npoints, sc_set** out) {
    if (!coords || !out || npoints == 0) return fail(SC_ERROR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        if (dim < 1 || dim > 3) throw precondition_error("dimension must be 1, 2 or 3");
        std::vector<Vec> pts;
        for (size_t i = 0; i < npoints; ++i) {
            Vec p(dim);
            for (int k = 0; k < dim; ++k) p[k] = coords[i * static_cast<size_t>(dim) + static_cast<size_t>(k)];
            pts.push_back(p);
        }
        auto s = new sc_set{InputDocument{SupportSet::of(dim, std::move(pts)), "", false}, {}};
        s->doc.deduplicated = s->doc.set.had_duplicates;
        if (s->doc.deduplicated) s->warning = "duplicate points were removed from the input";
        *out = s;
    });
}

void sc_set_free(sc_set* s) { delete s; }

int sc_set_dim(const sc_set* s) { return s ? s->doc.set.dim : 0; }

size_t sc_set_size(const sc_set* s) { return s ? s->doc.set.size() : 0; }

const char* sc_set_warning(const sc_set* s) {
    return (s && !s->warning.empty()) ? s->warning.c_str() : nullptr;
}

sc_status sc_classify(const sc_set* s, sc_report** out) {
    if (!s || !out) return fail(SC_ERROR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        Classification c = classify(s->doc.set);
        auto r = new sc_report;
        r->json_plain = classification_json(s->doc, c, false);
        r->json_pretty = classification_json(s->doc, c, true);
        r->text = classification_text(c);
        *out = r;
    });
}

sc_status sc_invariants(const sc_set* s, sc_report** out) {
    if (!s || !out) return fail(SC_ERROR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        CurveReport rep = curve_report(s->doc.set);
        auto r = new sc_report;
        r->json_plain = curve_report_json(s->doc, rep, false);
        r->json_pretty = curve_report_json(s->doc, rep, true);
        r->text = curve_report_text(rep);
        *out = r;
    });
}

sc_status sc_fan(const sc_set* s, const char* which, sc_report** out) {
    if (!s || !out || !which) return fail(SC_ERROR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        std::string w = which;
        TropicalFan f;
        if (w == "total") {
            f = tropical_fan_symmetric(s->doc.set);
        } else if (w == "proper") {
            f = tropical_fan_proper(s->doc.set);
        } else if (w == "diagonal") {
            f = pullback_antidiagonal(dual_fan_2d(project_along(s->doc.set, antidiagonal())));
        } else {
            throw precondition_error("fan selector must be total, proper or diagonal");
        }
        auto r = new sc_report;
        r->json_plain = fan_json(s->doc, w, f, false);
        r->json_pretty = fan_json(s->doc, w, f, true);
        r->text = fan_text(w, f);
        *out = r;
    });
}

sc_status sc_galois(const sc_set* s, sc_report** out) {
    if (!s || !out) return fail(SC_ERROR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        GaloisVerdict v = galois_verdict(FamilySupport::from_points(s->doc.set));
        auto r = new sc_report;
        r->json_plain = galois_json(s->doc, v, false);
        r->json_pretty = galois_json(s->doc, v, true);
        r->text = galois_text(v);
        *out = r;
    });
}

sc_status sc_mixed_volume(const sc_set* const* sets, size_t count, int64_t* out) {
    if (!sets || !out || count == 0) return fail(SC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<SupportSet> args;
        for (size_t i = 0; i < count; ++i) {
            if (!sets[i]) throw precondition_error("null set");
            args.push_back(sets[i]->doc.set);
        }
        *out = bkk_count(args);
    });
}

const char* sc_report_json(sc_report* r, int pretty) {
    if (!r) return "";
    return pretty ? r->json_pretty.c_str() : r->json_plain.c_str();
}

const char* sc_report_text(sc_report* r) { return r ? r->text.c_str() : ""; }

void sc_report_free(sc_report* r) { delete r; }

const char* sc_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
