#pragma once

#include <stdexcept>
#include <string>

namespace symcurve {

// Error taxonomy mirrors the CLI exit codes: 1 parse, 2 precondition, 3 internal.
enum class errc { parse = 1, precondition = 2, internal = 3 };

class sc_error : public std::runtime_error {
public:
    sc_error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

struct parse_error : sc_error {
    explicit parse_error(const std::string& msg) : sc_error(errc::parse, msg) {}
};

struct precondition_error : sc_error {
    explicit precondition_error(const std::string& msg) : sc_error(errc::precondition, msg) {}
};

// Violated internal assertions (balancing, divisibility, overflow). These signal bugs,
// not bad input.
struct internal_error : sc_error {
    explicit internal_error(const std::string& msg) : sc_error(errc::internal, msg) {}
};

} // namespace symcurve
