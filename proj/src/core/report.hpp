#pragma once

#include <string>

#include "galois.hpp"
#include "invariants.hpp"

namespace symcurve {

// Parsed input document: a support set plus optional metadata.
struct InputDocument {
    SupportSet set;
    std::string name;
    bool deduplicated = false;
};

// Accepts {"points": [[..],..]} with uniform arity 1..3, or
// {"coefficients": {"j": [t-exponents]}} for Galois families (dimension 2).
InputDocument parse_input(const std::string& text);

// Canonical machine-readable reports: keys sorted, rays sorted, schema_version "1".
std::string classification_json(const InputDocument& in, const Classification& c, bool pretty);
std::string curve_report_json(const InputDocument& in, const CurveReport& r, bool pretty);
std::string fan_json(const InputDocument& in, const std::string& which, const TropicalFan& f, bool pretty);
std::string galois_json(const InputDocument& in, const GaloisVerdict& v, bool pretty);
std::string mixed_volume_json(long long value, bool pretty);

std::string classification_text(const Classification& c);
std::string curve_report_text(const CurveReport& r);
std::string fan_text(const std::string& which, const TropicalFan& f);
std::string galois_text(const GaloisVerdict& v);

} // namespace symcurve
