#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "thompson/error.hpp"

namespace thompson {

using Integer = boost::multiprecision::cpp_int;

// A dyadic rational p / 2^e held in canonical form: e > 0 implies p odd,
// and zero is stored as (0, 0). Canonical values are equal iff their fields
// are equal, so comparison and hashing never need arithmetic.
//
// Numerators are arbitrary precision on purpose. Composing k group elements
// multiplies slopes, so exponents grow linearly with word length and the
// numerators grow with them; fixed-width integers would overflow around
// word length 60.
class DyadicRational {
public:
    DyadicRational() = default;

    DyadicRational(long long value) : num_(value) {} // NOLINT: integers embed

    static DyadicRational normalize(Integer numerator, std::int64_t exponent) {
        check_exponent(exponent);
        if (numerator == 0) return {};
        const Integer magnitude = abs(numerator);
        std::int64_t drop = static_cast<std::int64_t>(boost::multiprecision::lsb(magnitude));
        if (drop > exponent) drop = exponent;
        DyadicRational r;
        r.num_ = numerator >> static_cast<unsigned>(drop);
        r.exp_ = exponent - drop;
        return r;
    }

    const Integer& numerator() const { return num_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
        std::int64_t e = std::max(a.exp_, b.exp_);
        check_exponent(e);
        return normalize((a.num_ << static_cast<unsigned>(e - a.exp_)) +
                             (b.num_ << static_cast<unsigned>(e - b.exp_)),
                         e);
    }

    friend DyadicRational operator-(const DyadicRational& a) {
        DyadicRational r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
        return a + (-b);
    }

    friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
        check_exponent(a.exp_ + b.exp_);
        return normalize(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }

    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
        std::int64_t e = std::max(a.exp_, b.exp_);
        Integer lhs = a.num_ << static_cast<unsigned>(e - a.exp_);
        Integer rhs = b.num_ << static_cast<unsigned>(e - b.exp_);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const {
        // Rendering only; everything else stays exact.
        return static_cast<double>(num_) / std::ldexp(1.0, static_cast<int>(exp_));
    }

private:
    static void check_exponent(std::int64_t e) {
        // Practical words keep exponents under a few thousand; the cap turns
        // runaway growth into a diagnosable error instead of bad allocations.
        constexpr std::int64_t limit = std::int64_t(1) << 31;
        if (e < 0 || e > limit) fail(errc::exponent_overflow, "dyadic exponent out of range");
    }

    Integer num_ = 0;
    std::int64_t exp_ = 0;
};

// Exact quotient a / b. Dyadics are not closed under division; when the
// reduced quotient would carry an odd factor in the denominator this throws
// errc::not_dyadic_quotient, which is how a slope that is not a power of two
// shows up in membership checks.
inline DyadicRational div_exact(const DyadicRational& a, const DyadicRational& b) {
    if (b.is_zero()) fail(errc::not_dyadic_quotient, "division by zero");
    if (a.is_zero()) return {};
    // a/b = (na/nb) * 2^(eb-ea); nb's odd part must divide na.
    Integer nb = b.numerator();
    std::int64_t shift = 0;
    if (nb % 2 == 0) { // b may be a canonical even integer such as 4
        const Integer magnitude = abs(nb);
        shift = static_cast<std::int64_t>(boost::multiprecision::lsb(magnitude));
        nb >>= static_cast<unsigned>(shift);
    }
    if (a.numerator() % nb != 0)
        fail(errc::not_dyadic_quotient, "quotient has an odd factor in the denominator");
    Integer q = a.numerator() / nb;
    std::int64_t e = a.exponent() - b.exponent() + shift;
    if (e >= 0) return DyadicRational::normalize(q, e);
    return DyadicRational::normalize(q << static_cast<unsigned>(-e), 0);
}

// log2 of a value that is an exact power of two, if it is one.
inline bool log2_exact(const DyadicRational& d, std::int64_t& out) {
    if (d.sign() <= 0) return false;
    const Integer& n = d.numerator();
    if (boost::multiprecision::lsb(n) != boost::multiprecision::msb(n)) return false;
    out = static_cast<std::int64_t>(boost::multiprecision::msb(n)) - d.exponent();
    return true;
}

inline DyadicRational pow2(std::int64_t e) {
    if (e >= 0) return DyadicRational::normalize(Integer(1) << static_cast<unsigned>(e), 0);
    return DyadicRational::normalize(1, -e);
}

// Text form: an optionally signed decimal integer, or "p/q" with q a positive
// decimal power of two. Non-canonical input ("6/16") is accepted and reduced.
inline DyadicRational parse_dyadic(std::string_view text) {
    auto bad = [&](const char* why) {
        fail(errc::parse_error, "bad dyadic '" + std::string(text) + "': " + why);
    };
    size_t slash = text.find('/');
    std::string_view num_part = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
        if (s.empty()) bad("empty number");
        size_t i = 0;
        bool negative = false;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) bad("missing digits");
        for (size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') bad("not a decimal integer");
        Integer value(std::string(s.substr(i)));
        return negative ? Integer(-value) : value;
    };
    Integer p = parse_int(num_part, true);
    if (slash == std::string_view::npos) return DyadicRational::normalize(p, 0);
    Integer q = parse_int(text.substr(slash + 1), false);
    if (q <= 0) bad("denominator must be positive");
    if (boost::multiprecision::lsb(q) != boost::multiprecision::msb(q))
        bad("denominator is not a power of two");
    return DyadicRational::normalize(p, static_cast<std::int64_t>(boost::multiprecision::msb(q)));
}

inline std::string to_string(const DyadicRational& d) {
    std::string s = d.numerator().str();
    if (d.exponent() > 0)
        s += "/" + (Integer(1) << static_cast<unsigned>(d.exponent())).str();
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const DyadicRational& d) {
    return os << to_string(d);
}

} // namespace thompson
