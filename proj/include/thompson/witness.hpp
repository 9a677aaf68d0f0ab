#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/element.hpp"
#include "thompson/error.hpp"
#include "thompson/interpolate.hpp"
#include "thompson/word.hpp"

namespace thompson {

// A strictly increasing partial function on (0,1): what a witness element is
// required to do before partition interpolation fills in the rest.
class PartialDyadicMap {
public:
    static PartialDyadicMap from_pairs(
        std::vector<std::pair<DyadicRational, DyadicRational>> pairs) {
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        const DyadicRational zero(0), one(1);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!(zero < pairs[i].first) || !(pairs[i].first < one) ||
                !(zero < pairs[i].second) || !(pairs[i].second < one))
                fail(errc::out_of_domain, "constraints must lie strictly inside (0,1)");
            if (i == 0) continue;
            if (pairs[i - 1].first == pairs[i].first) {
                if (pairs[i - 1].second == pairs[i].second)
                    fail(errc::constraint_conflict,
                         "duplicate constraint at " + to_string(pairs[i].first));
                fail(errc::constraint_conflict,
                     "two outputs required at " + to_string(pairs[i].first));
            }
            if (!(pairs[i - 1].second < pairs[i].second))
                fail(errc::not_monotone, "outputs must increase with inputs");
        }
        PartialDyadicMap m;
        m.constraints_ = std::move(pairs);
        return m;
    }

    const std::vector<std::pair<DyadicRational, DyadicRational>>& constraints() const {
        return constraints_;
    }
    std::size_t size() const { return constraints_.size(); }
    bool empty() const { return constraints_.empty(); }

private:
    std::vector<std::pair<DyadicRational, DyadicRational>> constraints_;
};

// Extend the partial map to all of [0,1].
inline FElement complete(const PartialDyadicMap& partial) {
    if (partial.empty()) return FElement::identity();
    std::vector<DyadicRational> inputs = {DyadicRational(0)};
    std::vector<DyadicRational> outputs = {DyadicRational(0)};
    for (const auto& [in, out] : partial.constraints()) {
        inputs.push_back(in);
        outputs.push_back(out);
    }
    inputs.push_back(DyadicRational(1));
    outputs.push_back(DyadicRational(1));
    return interpolate(DyadicPartition::from_points(std::move(inputs)),
                       DyadicPartition::from_points(std::move(outputs)));
}

// beta_i = i/2^m for the smallest m keeping all k+1 points inside (0,1)
inline std::vector<DyadicRational> default_partition(int k) {
    if (k < 1) fail(errc::trivial_word, "need a word of length at least 1");
    std::int64_t m = 0;
    while ((Integer(1) << static_cast<unsigned>(m)) < k + 2) ++m;
    std::vector<DyadicRational> beta;
    beta.reserve(k + 1);
    for (int i = 1; i <= k + 1; ++i) beta.push_back(DyadicRational::normalize(i, m));
    return beta;
}

// The action plan of a word on the beta chain: the i-th ACTING letter is the
// i-th from the right.  A positive letter g must move beta_i up to
// beta_{i+1}; an inverse letter must map beta_{i+1} back down to beta_i.
// Reducedness keeps each generator's constraints strictly increasing.
inline std::vector<PartialDyadicMap> constraints_from_word(
    const FreeWord& w, const std::vector<DyadicRational>& beta) {
    if (w.empty()) fail(errc::trivial_word, "the trivial word vanishes everywhere");
    const std::size_t k = w.size();
    if (beta.size() != k + 1)
        fail(errc::length_mismatch, "word of length " + std::to_string(k) + " needs " +
                                        std::to_string(k + 1) + " partition points");
    std::vector<std::vector<std::pair<DyadicRational, DyadicRational>>> raw(w.arity());
    for (std::size_t i = 1; i <= k; ++i) {
        const Letter u = w.letters()[k - i];
        if (u.sign > 0)
            raw[u.index].emplace_back(beta[i - 1], beta[i]);
        else
            raw[u.index].emplace_back(beta[i], beta[i - 1]);
    }
    std::vector<PartialDyadicMap> maps;
    maps.reserve(raw.size());
    for (auto& pairs : raw) maps.push_back(PartialDyadicMap::from_pairs(std::move(pairs)));
    return maps;
}

struct WitnessReport {
    FreeWord word;
    std::vector<DyadicRational> beta;
    std::vector<FElement> tuple;
    DyadicRational moved_from;
    DyadicRational moved_to;
    bool verified = false;
};

namespace detail {

inline WitnessReport verify_witness(const FreeWord& w,
                                    const std::vector<DyadicRational>& beta,
                                    const std::vector<FElement>& tuple) {
    WitnessReport report;
    report.word = w;
    report.beta = beta;
    report.tuple = tuple;
    report.moved_from = beta.front();
    report.moved_to = beta.back();
    report.verified = !(report.moved_from == report.moved_to) &&
                      apply_word(w, tuple, report.moved_from) == report.moved_to;
    return report;
}

}  // namespace detail

// The constructive heart: elements on which the word provably does not
// vanish, certified by the displacement of beta_1.
inline WitnessReport witness_for_word(const FreeWord& w) {
    if (w.empty()) fail(errc::trivial_word, "the trivial word vanishes everywhere");
    const std::vector<DyadicRational> beta = default_partition(static_cast<int>(w.size()));
    std::vector<FElement> tuple;
    for (const PartialDyadicMap& m : constraints_from_word(w, beta))
        tuple.push_back(complete(m));
    return detail::verify_witness(w, beta, tuple);
}

struct MultiWitness {
    std::vector<FElement> tuple;
    std::vector<WitnessReport> reports;
};

// One tuple that witnesses every word at once: word j's beta chain lives in
// its own dyadic window (j/M, (j+1)/M), so the per-generator constraint sets
// merge without collisions.
inline MultiWitness multi_witness(const std::vector<FreeWord>& words, int n) {
    if (n < 1) fail(errc::arity_mismatch, "need at least one generator");
    for (const FreeWord& w : words) {
        if (w.empty()) fail(errc::trivial_word, "the trivial word vanishes everywhere");
        if (w.arity() > n)
            fail(errc::arity_mismatch, "word '" + to_string(w) + "' uses " +
                                           std::to_string(w.arity()) +
                                           " generators, tuple has " + std::to_string(n));
    }

    std::int64_t mexp = 0;
    while ((Integer(1) << static_cast<unsigned>(mexp)) < static_cast<long long>(words.size()) + 1)
        ++mexp;

    std::vector<std::vector<DyadicRational>> betas;
    std::vector<std::vector<std::pair<DyadicRational, DyadicRational>>> raw(n);
    for (std::size_t j = 0; j < words.size(); ++j) {
        std::vector<DyadicRational> beta =
            default_partition(static_cast<int>(words[j].size()));
        for (DyadicRational& t : beta)
            t = (DyadicRational(static_cast<long long>(j)) + t) * pow2(-mexp);
        const std::size_t k = words[j].size();
        for (std::size_t i = 1; i <= k; ++i) {
            const Letter u = words[j].letters()[k - i];
            if (u.sign > 0)
                raw[u.index].emplace_back(beta[i - 1], beta[i]);
            else
                raw[u.index].emplace_back(beta[i], beta[i - 1]);
        }
        betas.push_back(std::move(beta));
    }

    MultiWitness result;
    for (auto& pairs : raw)
        result.tuple.push_back(complete(PartialDyadicMap::from_pairs(std::move(pairs))));
    for (std::size_t j = 0; j < words.size(); ++j) {
        std::vector<FElement> tuple(result.tuple.begin(),
                                    result.tuple.begin() + words[j].arity());
        result.reports.push_back(detail::verify_witness(words[j], betas[j], tuple));
    }
    return result;
}

// Witness every reduced word of length < k at once.  The guard bounds the
// raw enumeration size before any work happens.
inline MultiWitness universal_witness(int n, int k,
                                      Dedup dedup = Dedup::inversion_and_conjugacy,
                                      std::size_t word_limit = 10000) {
    if (n < 1) fail(errc::arity_mismatch, "need at least one generator");
    if (k < 2) fail(errc::trivial_word, "no reduced words of length below 1");
    unsigned long long raw_count = 0, layer = 2ull * n;
    for (int len = 1; len < k; ++len) {
        raw_count += layer;
        if (raw_count > word_limit)
            fail(errc::size_limit_exceeded,
                 "enumeration of words below length " + std::to_string(k) + " exceeds " +
                     std::to_string(word_limit) + " words");
        layer *= 2ull * n - 1;
    }
    return multi_witness(enumerate_reduced(n, k, dedup), n);
}

inline std::string to_text(const WitnessReport& report) {
    std::string out = "word: " + to_string(report.word) + "\n";
    out += "beta:";
    for (const DyadicRational& b : report.beta) out += " " + to_string(b);
    out += "\n";
    for (std::size_t g = 0; g < report.tuple.size(); ++g) {
        FreeWord name = FreeWord::from_letters({{static_cast<int>(g), 1}},
                                               report.word.arity());
        out += "generator " + to_string(name) + ":\n";
        for (const Breakpoint& b : report.tuple[g].breakpoints())
            out += "  " + to_string(b.x) + " " + to_string(b.y) + "\n";
    }
    out += "moved_from: " + to_string(report.moved_from) + "\n";
    out += "moved_to: " + to_string(report.moved_to) + "\n";
    out += std::string("verified: ") + (report.verified ? "true" : "false") + "\n";
    return out;
}

}  // namespace thompson
