#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/error.hpp"

namespace thompson {

struct Breakpoint {
    DyadicRational x;
    DyadicRational y;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// An element of Thompson's group F: a piecewise linear orientation-preserving
// homeomorphism of [0,1] with dyadic breakpoints and power-of-two slopes.
//
// The breakpoint list is kept canonical — no interior point collinear with
// its neighbours — so structural equality of the lists is equality in the
// group, and is_identity is a length check.
class FElement {
public:
    static FElement identity() {
        FElement e;
        e.points_ = {{DyadicRational(0), DyadicRational(0)}, {DyadicRational(1), DyadicRational(1)}};
        return e;
    }

    // Validates every membership condition and strips removable breakpoints.
    static FElement from_breakpoints(std::vector<Breakpoint> points) {
        if (points.size() < 2 || points.front() != Breakpoint{DyadicRational(0), DyadicRational(0)} ||
            points.back() != Breakpoint{DyadicRational(1), DyadicRational(1)})
            fail(errc::bad_endpoints, "breakpoints must run from (0,0) to (1,1)");
        for (size_t i = 0; i + 1 < points.size(); ++i) {
            if (points[i + 1].x <= points[i].x || points[i + 1].y <= points[i].y)
                fail(errc::not_increasing, "breakpoints must increase strictly in x and y");
        }
        std::vector<std::int64_t> logs(points.size() - 1);
        for (size_t i = 0; i + 1 < points.size(); ++i)
            logs[i] = slope_log(points[i], points[i + 1]);
        FElement e;
        e.points_.reserve(points.size());
        e.points_.push_back(points.front());
        for (size_t i = 1; i + 1 < points.size(); ++i)
            if (logs[i - 1] != logs[i]) e.points_.push_back(points[i]);
        e.points_.push_back(points.back());
        return e;
    }

    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    size_t size() const { return points_.size(); }

    friend bool operator==(const FElement& a, const FElement& b) { return a.points_ == b.points_; }

private:
    static std::int64_t slope_log(const Breakpoint& a, const Breakpoint& b) {
        std::int64_t log = 0;
        try {
            if (!log2_exact(div_exact(b.y - a.y, b.x - a.x), log))
                fail(errc::slope_not_power_of_two,
                     "segment slope is not a power of two near x = " + to_string(a.x));
        } catch (const error& e) {
            if (e.code() != errc::not_dyadic_quotient) throw;
            fail(errc::slope_not_power_of_two,
                 "segment slope is not dyadic near x = " + to_string(a.x));
        }
        return log;
    }

    std::vector<Breakpoint> points_;
};

inline bool is_identity(const FElement& f) { return f.size() == 2; }

inline DyadicRational evaluate(const FElement& f, const DyadicRational& x) {
    if (x < DyadicRational(0) || x > DyadicRational(1))
        fail(errc::out_of_domain, "evaluation point " + to_string(x) + " outside [0,1]");
    const auto& pts = f.breakpoints();
    auto it = std::lower_bound(pts.begin(), pts.end(), x,
                               [](const Breakpoint& b, const DyadicRational& v) { return b.x < v; });
    if (it->x == x) return it->y;
    const Breakpoint& lo = *std::prev(it);
    const Breakpoint& hi = *it;
    DyadicRational slope = div_exact(hi.y - lo.y, hi.x - lo.x);
    return lo.y + (x - lo.x) * slope;
}

// The unique x with f(x) = y. Power-of-two slopes make preimages of dyadic
// points dyadic, so this is exact as well.
inline DyadicRational preimage(const FElement& f, const DyadicRational& y) {
    if (y < DyadicRational(0) || y > DyadicRational(1))
        fail(errc::out_of_domain, "preimage point " + to_string(y) + " outside [0,1]");
    const auto& pts = f.breakpoints();
    auto it = std::lower_bound(pts.begin(), pts.end(), y,
                               [](const Breakpoint& b, const DyadicRational& v) { return b.y < v; });
    if (it->y == y) return it->x;
    const Breakpoint& lo = *std::prev(it);
    const Breakpoint& hi = *it;
    DyadicRational slope = div_exact(hi.y - lo.y, hi.x - lo.x);
    return lo.x + div_exact(y - lo.y, slope);
}

inline FElement inverse(const FElement& f) {
    std::vector<Breakpoint> swapped;
    swapped.reserve(f.size());
    for (const Breakpoint& p : f.breakpoints()) swapped.push_back({p.y, p.x});
    return FElement::from_breakpoints(std::move(swapped));
}

// compose(f, g) is x -> f(g(x)): the right factor acts first. Breakpoints of
// the product sit at breakpoints of g and at g-preimages of breakpoints of f.
inline FElement compose(const FElement& f, const FElement& g) {
    std::vector<DyadicRational> xs;
    xs.reserve(f.size() + g.size());
    for (const Breakpoint& p : g.breakpoints()) xs.push_back(p.x);
    for (const Breakpoint& p : f.breakpoints()) xs.push_back(preimage(g, p.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (const DyadicRational& x : xs) pts.push_back({x, evaluate(f, evaluate(g, x))});
    return FElement::from_breakpoints(std::move(pts));
}

namespace detail {

inline FElement generator_zero() {
    return FElement::from_breakpoints({{DyadicRational(0), DyadicRational(0)},
                                       {parse_dyadic("1/2"), parse_dyadic("1/4")},
                                       {parse_dyadic("3/4"), parse_dyadic("1/2")},
                                       {DyadicRational(1), DyadicRational(1)}});
}

inline FElement generator_one() {
    return FElement::from_breakpoints({{DyadicRational(0), DyadicRational(0)},
                                       {parse_dyadic("1/2"), parse_dyadic("1/2")},
                                       {parse_dyadic("3/4"), parse_dyadic("5/8")},
                                       {parse_dyadic("7/8"), parse_dyadic("3/4")},
                                       {DyadicRational(1), DyadicRational(1)}});
}

} // namespace detail

// x_0 and x_1 from their explicit formulas; higher generators by the defining
// conjugation x_{i+1} = x_0^{-1} x_i x_0.
inline FElement standard_generator(int i) {
    if (i < 0) fail(errc::out_of_domain, "generator index must be non-negative");
    if (i == 0) return detail::generator_zero();
    FElement x0 = detail::generator_zero();
    FElement x0_inv = inverse(x0);
    FElement e = detail::generator_one();
    for (int j = 1; j < i; ++j) e = compose(x0_inv, compose(e, x0));
    return e;
}

// Image in F/[F,F] = Z + Z: base-2 logarithms of the slopes at 0 and 1.
inline std::pair<std::int64_t, std::int64_t> abelianization(const FElement& f) {
    const auto& pts = f.breakpoints();
    auto log_of = [](const Breakpoint& a, const Breakpoint& b) {
        std::int64_t log = 0;
        log2_exact(div_exact(b.y - a.y, b.x - a.x), log);
        return log;
    };
    return {log_of(pts[0], pts[1]), log_of(pts[pts.size() - 2], pts.back())};
}

// True iff f is trivial in neighbourhoods of 0 and 1, i.e. f lies in the
// derived subgroup. Slope 1 at the ends is not enough on its own: a segment
// y = x + c also has slope 1. With the endpoints pinned at (0,0) and (1,1),
// both conditions collapse to the adjacent breakpoints being fixed points.
inline bool in_derived_subgroup(const FElement& f) {
    const auto& pts = f.breakpoints();
    return pts[1].x == pts[1].y && pts[pts.size() - 2].x == pts[pts.size() - 2].y;
}

inline std::string to_text(const FElement& f) {
    std::string out;
    for (const Breakpoint& p : f.breakpoints()) {
        out += to_string(p.x);
        out += ' ';
        out += to_string(p.y);
        out += '\n';
    }
    return out;
}

// One breakpoint per line, "x y"; validation matches from_breakpoints.
inline FElement parse_element(std::string_view text) {
    std::vector<Breakpoint> pts;
    std::istringstream lines{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string xs, ys, extra;
        if (!(fields >> xs)) continue; // blank line
        if (!(fields >> ys) || (fields >> extra))
            fail(errc::parse_error,
                 "line " + std::to_string(lineno) + ": expected 'x y' breakpoint");
        pts.push_back({parse_dyadic(xs), parse_dyadic(ys)});
    }
    return FElement::from_breakpoints(std::move(pts));
}

} // namespace thompson
