#include "report.hpp"

#include <sstream>

#include <json.hpp>

namespace symcurve {

using nlohmann::json;

namespace {

json vec_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.dim; ++i) a.push_back(v[i]);
    return a;
}

json set_json(const SupportSet& s) {
    json a = json::array();
    for (const auto& p : s.pts) a.push_back(vec_json(p));
    return a;
}

json fan_rays_json(const TropicalFan& f) {
    json a = json::array();
    for (const auto& [g, m] : f.rays)
        a.push_back(json{{"generator", vec_json(g)}, {"multiplicity", m}});
    return a;
}

json classification_body(const Classification& c) {
    json flags{{"D", c.flag_D},   {"E", c.flag_E},   {"C1", c.flag_C1}, {"C2", c.flag_C2},
               {"I10", c.flag_I10}, {"I1", c.flag_I1}, {"I2", c.flag_I2}};
    json w = json::object();
    if (c.e_direction) w["e_direction"] = vec_json(*c.e_direction);
    if (c.c1_normal) w["c1_normal"] = vec_json(*c.c1_normal);
    if (c.c2_plane_t) w["c2_plane_t"] = *c.c2_plane_t;
    if (c.i10_direction) w["i10_direction"] = vec_json(*c.i10_direction);
    if (c.i1_levels) w["i1_levels"] = json::array({(*c.i1_levels)[0], (*c.i1_levels)[1]});
    if (c.i2_tau) w["i2_tau"] = *c.i2_tau;
    if (c.i2_c) w["i2_c"] = *c.i2_c;
    if (c.i2_direction) w["i2_direction"] = vec_json(*c.i2_direction);
    json b{{"canonical_type", curve_type_name(c.canonical)},
           {"exceptional", c.exceptional()},
           {"flags", flags},
           {"witness", w}};
    b["denominator"] = c.denominator ? json(*c.denominator) : json(nullptr);
    b["c2_segment_length"] = c.q ? json(*c.q) : json(nullptr);
    b["i2_length"] = c.d_prime ? json(*c.d_prime) : json(nullptr);
    return b;
}

json input_body(const InputDocument& in) {
    json b{{"points", set_json(in.set)}};
    if (!in.name.empty()) b["name"] = in.name;
    return b;
}

json blinder_json(const BlinderRecord& r) {
    json crit = json::array(), adj = json::array();
    for (const auto& g : r.critical) crit.push_back(vec_json(g));
    for (const auto& g : r.adjacent) adj.push_back(vec_json(g));
    return json{{"edge", set_json(r.edge)},
                {"direction", vec_json(r.direction)},
                {"gamma", vec_json(r.gamma)},
                {"h", r.h},
                {"length", r.length},
                {"coblinder", set_json(r.coblinder)},
                {"covolume", r.covol},
                {"distance", r.l},
                {"critical", crit},
                {"adjacent", adj}};
}

template <typename T>
json opt_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

std::string dump(const json& j, bool pretty) {
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

} // namespace

InputDocument parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("input must be a JSON object");
    InputDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw parse_error("name must be a string");
        doc.name = j["name"].get<std::string>();
    }
    auto need_int = [](const json& v) {
        if (!v.is_number_integer()) throw parse_error("coordinates must be integers");
        return v.get<long long>();
    };
    if (j.contains("points")) {
        const auto& pts = j["points"];
        if (!pts.is_array() || pts.empty()) throw parse_error("points must be a non-empty array");
        int dim = -1;
        std::vector<Vec> v;
        for (const auto& row : pts) {
            if (!row.is_array()) throw parse_error("each point must be an array of integers");
            int rd = static_cast<int>(row.size());
            if (rd < 1 || rd > 3) throw parse_error("points must have 1 to 3 coordinates");
            if (dim == -1) dim = rd;
            if (rd != dim) throw parse_error("points must all have the same dimension");
            Vec p(dim);
            for (int i = 0; i < dim; ++i) p[i] = need_int(row[static_cast<size_t>(i)]);
            v.push_back(p);
        }
        doc.set = SupportSet::of(dim, std::move(v));
    } else if (j.contains("coefficients")) {
        const auto& co = j["coefficients"];
        if (!co.is_object() || co.empty()) throw parse_error("coefficients must be a non-empty object");
        std::vector<Vec> v;
        for (auto it = co.begin(); it != co.end(); ++it) {
            long long x;
            try {
                size_t pos = 0;
                x = std::stoll(it.key(), &pos);
                if (pos != it.key().size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw parse_error("coefficient keys must be integer exponents");
            }
            if (!it.value().is_array()) throw parse_error("each coefficient support must be an array");
            for (const auto& t : it.value()) v.push_back(Vec(x, need_int(t)));
        }
        if (v.empty()) throw parse_error("coefficient supports are all empty");
        doc.set = SupportSet::of(2, std::move(v));
    } else {
        throw parse_error("input needs a \"points\" or \"coefficients\" field");
    }
    doc.deduplicated = doc.set.had_duplicates;
    return doc;
}

std::string classification_json(const InputDocument& in, const Classification& c, bool pretty) {
    json j{{"schema_version", "1"}, {"input", input_body(in)}, {"classification", classification_body(c)}};
    return dump(j, pretty);
}

std::string curve_report_json(const InputDocument& in, const CurveReport& r, bool pretty) {
    json j{{"schema_version", "1"}, {"input", input_body(in)}};
    j["classification"] = classification_body(r.cls);
    j["kind"] = r.kind;
    j["denominator"] = opt_json(r.d);
    j["sharp"] = opt_json(r.sharp);
    j["euler_total"] = opt_json(r.euler_total);
    j["euler_proper"] = opt_json(r.euler_proper);
    j["genus_proper"] = opt_json(r.genus_proper);
    j["fan_total"] = r.fan_total ? fan_rays_json(*r.fan_total) : json(nullptr);
    j["fan_proper"] = r.fan_proper ? fan_rays_json(*r.fan_proper) : json(nullptr);
    j["ray_multiplicity_sum"] = opt_json(r.ray_sum);
    if (r.diagonal) {
        j["diagonal"] = json{{"count", r.diagonal->count},
                             {"support", set_json(r.diagonal->support)},
                             {"euler_each", r.diagonal->euler_each},
                             {"genus_each", r.diagonal->genus_each},
                             {"intersections_each", r.diagonal->intersections_each}};
    } else {
        j["diagonal"] = nullptr;
    }
    json bl = json::array();
    for (const auto& b : r.blinders) bl.push_back(blinder_json(b));
    j["blinders"] = bl;
    j["connectivity"] = json{{"connected", r.connected}, {"reason", r.connectivity_reason}};
    j["component_counts"] = json{{"diagonal", opt_json(r.components_diagonal)},
                                 {"proper", opt_json(r.components_proper)},
                                 {"total", opt_json(r.components_total)}};
    j["singular_points_total"] = opt_json(r.singular_points_total);
    j["blinder_sum"] = opt_json(r.blinder_sum);
    j["blinder_sum_scaled"] = opt_json(r.blinder_sum_scaled);
    j["sheet_irreducible"] = opt_json(r.sheet_irreducible);
    return dump(j, pretty);
}

std::string fan_json(const InputDocument& in, const std::string& which, const TropicalFan& f, bool pretty) {
    json j{{"schema_version", "1"},
           {"input", input_body(in)},
           {"which", which},
           {"rays", fan_rays_json(f)},
           {"ray_multiplicity_sum", f.multiplicity_sum()},
           {"balanced", f.balanced()}};
    return dump(j, pretty);
}

std::string galois_json(const InputDocument& in, const GaloisVerdict& v, bool pretty) {
    json j{{"schema_version", "1"}, {"input", input_body(in)}};
    j["d"] = opt_json(v.d);
    j["n"] = v.n;
    j["N"] = v.N;
    j["q"] = v.q;
    j["Q"] = v.Q;
    j["sharp1"] = v.sharp1;
    j["sharp2"] = v.sharp2;
    j["sharp3"] = v.sharp3;
    j["rh_identity_ok"] = v.rh_identity_ok;
    j["full_symmetric"] = v.full_symmetric;
    j["reason"] = v.reason;
    return dump(j, pretty);
}

std::string mixed_volume_json(long long value, bool pretty) {
    json j{{"schema_version", "1"}, {"mixed_volume", value}};
    return dump(j, pretty);
}

namespace {

std::string fan_lines(const TropicalFan& f, const std::string& indent) {
    std::ostringstream os;
    for (const auto& [g, m] : f.rays) os << indent << g << " x " << m << "\n";
    if (f.rays.empty()) os << indent << "(no rays)\n";
    return os.str();
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
    if (!v) return "undefined";
    std::ostringstream os;
    os << *v;
    return os.str();
}

} // namespace

std::string classification_text(const Classification& c) {
    std::ostringstream os;
    os << "type: " << curve_type_name(c.canonical) << "\n";
    os << "exceptional: " << (c.exceptional() ? "yes" : "no") << "\n";
    os << "denominator: " << opt_str(c.denominator) << "\n";
    os << "flags: D=" << c.flag_D << " E=" << c.flag_E << " C1=" << c.flag_C1 << " C2=" << c.flag_C2
       << " I10=" << c.flag_I10 << " I1=" << c.flag_I1 << " I2=" << c.flag_I2 << "\n";
    if (c.q) os << "c2_segment_length: " << *c.q << "\n";
    if (c.d_prime) os << "i2_length: " << *c.d_prime << "\n";
    return os.str();
}

std::string curve_report_text(const CurveReport& r) {
    std::ostringstream os;
    os << classification_text(r.cls);
    os << "kind: " << r.kind << "\n";
    os << "sharp: " << opt_str(r.sharp) << "\n";
    os << "euler_total: " << opt_str(r.euler_total) << "\n";
    os << "euler_proper: " << opt_str(r.euler_proper) << "\n";
    os << "genus_proper: " << opt_str(r.genus_proper) << "\n";
    os << "components: diagonal=" << opt_str(r.components_diagonal)
       << " proper=" << opt_str(r.components_proper) << " total=" << opt_str(r.components_total) << "\n";
    os << "connected: " << (r.connected ? "yes" : "no") << " (" << r.connectivity_reason << ")\n";
    os << "blinders: " << r.blinders.size() << "\n";
    for (const auto& b : r.blinders) {
        os << "  edge";
        for (const auto& p : b.edge.pts) os << " " << p;
        os << "  gamma " << b.gamma << "  h " << b.h << "  length " << b.length << "  covol " << b.covol
           << "  distance " << b.l << "\n";
    }
    if (r.fan_total) os << "fan_total:\n" << fan_lines(*r.fan_total, "  ");
    if (r.fan_proper) os << "fan_proper:\n" << fan_lines(*r.fan_proper, "  ");
    return os.str();
}

std::string fan_text(const std::string& which, const TropicalFan& f) {
    std::ostringstream os;
    os << "fan (" << which << "), multiplicity sum " << f.multiplicity_sum() << ":\n"
       << fan_lines(f, "  ");
    return os.str();
}

std::string galois_text(const GaloisVerdict& v) {
    std::ostringstream os;
    os << "full_symmetric: " << (v.full_symmetric ? "yes" : "no") << "\n";
    os << "reason: " << v.reason << "\n";
    os << "d: " << opt_str(v.d) << "\n";
    os << "n: " << v.n << "  N: " << v.N << "  q: " << v.q << "  Q: " << v.Q << "\n";
    os << "branch points: sharp1=" << v.sharp1 << " sharp2=" << v.sharp2 << " sharp3=" << v.sharp3
       << "\n";
    os << "riemann_hurwitz_ok: " << (v.rh_identity_ok ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace symcurve
