#pragma once

#include <cassert>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/element.hpp"
#include "thompson/error.hpp"

namespace thompson {

class DyadicPartition {
public:
    static DyadicPartition from_points(std::vector<DyadicRational> points) {
        if (points.size() < 2 || !points.front().is_zero() ||
            !(points.back() == DyadicRational(1)))
            fail(errc::bad_endpoints, "partition must run from 0 to 1");
        for (std::size_t i = 1; i < points.size(); ++i)
            if (!(points[i - 1] < points[i]))
                fail(errc::not_increasing, "partition points must strictly increase");
        DyadicPartition p;
        p.points_ = std::move(points);
        return p;
    }

    const std::vector<DyadicRational>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    friend bool operator==(const DyadicPartition& a, const DyadicPartition& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<DyadicRational> points_;
};

inline DyadicPartition parse_partition(const std::string& text) {
    std::istringstream in(text);
    std::vector<DyadicRational> points;
    std::string token;
    while (in >> token) points.push_back(parse_dyadic(token));
    return DyadicPartition::from_points(std::move(points));
}

inline std::string to_string(const DyadicPartition& p) {
    std::string out;
    for (const DyadicRational& x : p.points()) {
        if (!out.empty()) out += ' ';
        out += to_string(x);
    }
    return out;
}

// How a source segment of length c1 stretches onto a target segment of
// length c2 > c1.  With c1 = t1/2^j1 and c2 = t2/2^j2 in lowest terms:
// bring both to the denominator 2^(j1+j2), giving integer lengths
// z1 = t1*2^j2 and z2 = t2*2^j1.  A slope-1 prefix eats all but one grid
// cell of the source; the last cell, of length 1/2^(j1+j2), is split in
// proportion to 2^source_exps[i] and stretched onto the target remainder
// (ratio = z2-z1+1 cells) split in proportion to 2^target_exps[i].
struct SegmentPlan {
    Integer z1;
    Integer z2;
    Integer ratio;                       // z2 - z1 + 1
    DyadicRational d;                    // slope-1 prefix length: (z1-1)/2^(j1+j2)
    std::vector<long long> target_exps;  // binary expansion of ratio, descending
    std::vector<long long> source_exps;  // same count, summing to 1
};

inline SegmentPlan plan_segment(const DyadicRational& c1, const DyadicRational& c2) {
    if (!(c1 > DyadicRational(0)) || !(c1 < c2))
        fail(errc::not_increasing, "segment plan needs 0 < c1 < c2");
    if (DyadicRational(1) < c2)
        fail(errc::out_of_domain, "segment lengths cannot exceed 1");
    const long long j1 = c1.exponent(), j2 = c2.exponent();
    SegmentPlan plan;
    plan.z1 = c1.numerator() << j2;
    plan.z2 = c2.numerator() << j1;
    plan.ratio = plan.z2 - plan.z1 + 1;
    plan.d = DyadicRational::normalize(plan.z1 - 1, j1 + j2);

    for (long long bit = msb(plan.ratio); bit >= 0; --bit)
        if (bit_test(plan.ratio, static_cast<unsigned>(bit)))
            plan.target_exps.push_back(bit);
    const std::size_t m = plan.target_exps.size();
    if (m == 1) {
        plan.source_exps = {0};
    } else {
        for (std::size_t i = 1; i < m; ++i)
            plan.source_exps.push_back(-static_cast<long long>(i));
        plan.source_exps.push_back(-static_cast<long long>(m - 1));
    }

    assert(c1 - plan.d == pow2(-(j1 + j2)));
    assert(c2 - plan.d == DyadicRational::normalize(plan.ratio, j1 + j2));
    return plan;
}

// Breakpoints of a PL map [x_lo,x_hi] -> [y_lo,y_hi] with dyadic breakpoints
// and power-of-2 slopes, endpoints to endpoints.
inline std::vector<Breakpoint> segment_map(const DyadicRational& x_lo,
                                           const DyadicRational& x_hi,
                                           const DyadicRational& y_lo,
                                           const DyadicRational& y_hi) {
    if (!(x_lo < x_hi) || !(y_lo < y_hi))
        fail(errc::not_increasing, "segment endpoints must increase");
    if (x_lo < DyadicRational(0) || DyadicRational(1) < x_hi ||
        y_lo < DyadicRational(0) || DyadicRational(1) < y_hi)
        fail(errc::out_of_domain, "segments live inside [0,1]");
    const DyadicRational c1 = x_hi - x_lo;
    const DyadicRational c2 = y_hi - y_lo;
    if (c1 == c2) return {{x_lo, y_lo}, {x_hi, y_hi}};
    if (c2 < c1) {
        std::vector<Breakpoint> swapped = segment_map(y_lo, y_hi, x_lo, x_hi);
        for (Breakpoint& b : swapped) std::swap(b.x, b.y);
        return swapped;
    }

    const SegmentPlan plan = plan_segment(c1, c2);
    const DyadicRational cell = c1 - plan.d;  // 1/2^(j1+j2)
    std::vector<Breakpoint> out;
    out.push_back({x_lo, y_lo});
    DyadicRational x = x_lo, y = y_lo;
    if (!plan.d.is_zero()) {
        x = x + plan.d;
        y = y + plan.d;
        out.push_back({x, y});
    }
    for (std::size_t i = 0; i < plan.target_exps.size(); ++i) {
        x = x + cell * pow2(plan.source_exps[i]);
        y = y + cell * pow2(plan.target_exps[i]);
        out.push_back({x, y});
    }
    assert(x == x_hi);
    assert(y == y_hi);
    return out;
}

// The element of F carrying one partition onto the other pointwise.
inline FElement interpolate(const DyadicPartition& source, const DyadicPartition& target) {
    if (source.size() != target.size())
        fail(errc::length_mismatch, "partitions have " + std::to_string(source.size()) +
                                        " and " + std::to_string(target.size()) +
                                        " points");
    std::vector<Breakpoint> all;
    for (std::size_t i = 0; i + 1 < source.size(); ++i) {
        std::vector<Breakpoint> seg =
            segment_map(source.points()[i], source.points()[i + 1], target.points()[i],
                        target.points()[i + 1]);
        for (const Breakpoint& b : seg)
            if (all.empty() || all.back().x < b.x) all.push_back(b);
    }
    return FElement::from_breakpoints(std::move(all));
}

}  // namespace thompson
