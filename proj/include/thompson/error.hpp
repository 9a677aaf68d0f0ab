#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

// Every failure the library can report. The CLI maps these onto exit codes,
// so keep the set closed and the meanings stable.
enum class errc {
    parse_error,
    not_dyadic_quotient,
    exponent_overflow,
    bad_endpoints,
    not_increasing,
    slope_not_power_of_two,
    out_of_domain,
    unknown_generator,
    arity_mismatch,
    trivial_word,
    trivial_relation,
    size_limit_exceeded,
    length_mismatch,
    constraint_conflict,
    not_monotone,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace thompson
