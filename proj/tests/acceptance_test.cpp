// Acceptance suite: ten timed criteria covering the headline constructions.
// Each prints one PASS/FAIL line; the process exits nonzero if any fail or
// overrun their time budget.

#include <thompson/thompson.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "test_util.hpp"

#define REQUIRE(cond)                                                                  \
    do {                                                                               \
        if (!(cond))                                                                   \
            throw std::runtime_error(std::string("check failed at line ") +            \
                                     std::to_string(__LINE__) + ": " #cond);           \
    } while (0)

namespace {

using namespace thompson;
using testutil::d;
using testutil::random_element;
using testutil::random_point;

FreeWord random_word(std::mt19937& rng, int arity, int length) {
    std::uniform_int_distribution<int> pick_gen(0, arity - 1);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    while (true) {
        std::vector<Letter> raw;
        for (int i = 0; i < length; ++i)
            raw.push_back({pick_gen(rng), pick_sign(rng) ? 1 : -1});
        FreeWord w = FreeWord::from_letters(raw, arity);
        if (!w.empty()) return w;
    }
}

// Random partition of [0,1] with the given point count, exponents <= 8.
DyadicPartition random_partition(std::mt19937& rng, int points) {
    std::uniform_int_distribution<int> numerator(1, 255);
    std::set<int> interior;
    while (static_cast<int>(interior.size()) < points - 2) interior.insert(numerator(rng));
    std::vector<DyadicRational> all = {DyadicRational(0)};
    for (int v : interior) all.push_back(DyadicRational::normalize(v, 8));
    all.push_back(DyadicRational(1));
    return DyadicPartition::from_points(all);
}

void relations_and_conjugation() {
    const std::vector<FElement> pair = {standard_generator(0), standard_generator(1)};
    const FreeWord p = parse_word("aB", 2);
    for (const char* conjugate : {"Aba", "AAbaa"}) {
        const FreeWord relator = commutator(p, parse_word(conjugate, 2));
        REQUIRE(!relator.empty());
        REQUIRE(is_identity(evaluate_word(relator, pair)));
    }
    for (int i = 0; i <= 4; ++i) {
        for (int k = i + 1; k <= 4; ++k) {
            const FElement lhs = compose(
                compose(inverse(standard_generator(i)), standard_generator(k)),
                standard_generator(i));
            REQUIRE(lhs == standard_generator(k + 1));
        }
    }
}

void shift_dynamics() {
    const FElement x0 = standard_generator(0);
    const FElement x0_inv = inverse(x0);
    const std::vector<std::pair<const char*, const char*>> pieces = {
        {"1/8", "1/4"}, {"1/4", "1/2"}, {"1/2", "3/4"}, {"3/4", "7/8"}, {"7/8", "15/16"}};
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        // One direction of the shift belongs to x0, the other to its inverse.
        REQUIRE(evaluate(x0_inv, d(pieces[i].first)) == d(pieces[i + 1].first));
        REQUIRE(evaluate(x0_inv, d(pieces[i].second)) == d(pieces[i + 1].second));
        REQUIRE(evaluate(x0, d(pieces[i + 1].first)) == d(pieces[i].first));
        REQUIRE(evaluate(x0, d(pieces[i + 1].second)) == d(pieces[i].second));
    }
}

void interpolation_round() {
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> count(2, 10);
    for (int round = 0; round < 500; ++round) {
        const int points = count(rng);
        const DyadicPartition source = random_partition(rng, points);
        const DyadicPartition target = random_partition(rng, points);
        const FElement f = interpolate(source, target);
        REQUIRE(FElement::from_breakpoints(f.breakpoints()) == f);
        for (int i = 0; i < points; ++i)
            REQUIRE(evaluate(f, source.points()[i]) == target.points()[i]);

        for (int i = 0; i + 1 < points; ++i) {
            const DyadicRational l1 = source.points()[i + 1] - source.points()[i];
            const DyadicRational l2 = target.points()[i + 1] - target.points()[i];
            if (l1 == l2) continue;
            const DyadicRational c1 = l1 < l2 ? l1 : l2;
            const DyadicRational c2 = l1 < l2 ? l2 : l1;
            const SegmentPlan plan = plan_segment(c1, c2);
            REQUIRE(c1 - plan.d == pow2(-(c1.exponent() + c2.exponent())));
            REQUIRE(plan.ratio == plan.z2 - plan.z1 + 1);
            REQUIRE(plan.target_exps.size() == plan.source_exps.size());
            Integer ratio_sum = 0;
            for (long long k : plan.target_exps) ratio_sum += Integer(1) << k;
            REQUIRE(ratio_sum == plan.ratio);
            DyadicRational unit_sum(0);
            for (long long k : plan.source_exps) unit_sum = unit_sum + pow2(k);
            REQUIRE(unit_sum == DyadicRational(1));
        }
    }
}

void exhaustive_short_words() {
    const std::vector<FreeWord> words = enumerate_reduced(2, 7, Dedup::none);
    REQUIRE(words.size() == 1456);
    for (const FreeWord& w : words) {
        const WitnessReport report = witness_for_word(w);
        REQUIRE(report.verified);
        REQUIRE(!is_identity(evaluate_word(w, report.tuple)));
    }
}

void universal_tuples() {
    for (int k = 2; k <= 6; ++k) {
        const MultiWitness result = universal_witness(2, k);
        REQUIRE(result.tuple.size() == 2);
        REQUIRE(!result.reports.empty());
        for (const WitnessReport& r : result.reports) {
            REQUIRE(r.verified);
            REQUIRE(!is_identity(evaluate_word(r.word, r.tuple)));
        }
    }
    const MultiWitness result = universal_witness(3, 4);
    REQUIRE(result.tuple.size() == 3);
    REQUIRE(!result.reports.empty());
    for (const WitnessReport& r : result.reports) {
        REQUIRE(r.verified);
        REQUIRE(!is_identity(evaluate_word(r.word, r.tuple)));
    }
}

void combined_relations() {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> list_size(1, 4);
    std::uniform_int_distribution<int> word_len(1, 4);
    for (int round = 0; round < 200; ++round) {
        std::vector<FreeWord> relations;
        const int m = list_size(rng);
        for (int i = 0; i < m; ++i) relations.push_back(random_word(rng, 2, word_len(rng)));
        REQUIRE(!combine_identity(relations).empty());
    }

    // A commutator word vanishes at every equal-component pair, so the
    // combined word must vanish there too.
    for (int round = 0; round < 50; ++round) {
        FreeWord vanishing = FreeWord::trivial(2);
        while (vanishing.empty())
            vanishing = commutator(random_word(rng, 2, 2), random_word(rng, 2, 2));
        std::vector<FreeWord> relations = {vanishing, random_word(rng, 2, word_len(rng))};
        if (round % 2) std::swap(relations[0], relations[1]);
        const FreeWord combined = combine_identity(relations);
        const FElement g = random_element(rng, 4);
        REQUIRE(is_identity(evaluate_word(combined, {g, g})));
    }

    const std::vector<FreeWord> powers = {parse_word("a", 2), parse_word("aa", 2)};
    REQUIRE(combine_identity(powers) == parse_word("aa", 2));
    const std::vector<FreeWord> shared_root = {parse_word("abab", 2), parse_word("ab", 2)};
    REQUIRE(combine_identity(shared_root) == parse_word("abab", 2));
}

void embedding_preserves_nontriviality() {
    std::size_t total = 0;
    for (int arity = 1; arity <= 3; ++arity) {
        for (const FreeWord& w : enumerate_reduced(arity, 5, Dedup::none)) {
            const FreeWord embedded = embed_two_vars(w);
            REQUIRE(!embedded.empty());
            const WitnessReport direct = witness_for_word(w);
            const WitnessReport via_embedding = witness_for_word(embedded);
            REQUIRE(direct.verified);
            REQUIRE(via_embedding.verified);
            REQUIRE(!is_identity(evaluate_word(embedded, via_embedding.tuple)));
            ++total;
        }
    }
    REQUIRE(total == 8 + 160 + 936);
}

void abelianization_predicates() {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> len(0, 6);
    for (int round = 0; round < 200; ++round) {
        const FElement f = random_element(rng, len(rng));
        const FElement g = random_element(rng, len(rng));
        const auto [fa, fb] = abelianization(f);
        const auto [ga, gb] = abelianization(g);
        const auto [ca, cb] = abelianization(compose(f, g));
        REQUIRE(ca == fa + ga);
        REQUIRE(cb == fb + gb);

        const FElement commuted =
            compose(compose(compose(f, g), inverse(f)), inverse(g));
        REQUIRE(in_derived_subgroup(commuted));
        REQUIRE(abelianization(commuted) == std::make_pair(std::int64_t{0}, std::int64_t{0}));
        if (in_derived_subgroup(f))
            REQUIRE(abelianization(f) == std::make_pair(std::int64_t{0}, std::int64_t{0}));
    }
}

// Alternating words x0^{a1} x1^{±b1} x0^{a2} ... with positive x0 blocks and
// one sign per x1 block; no two adjacent blocks share a generator.
void collect_alternating(const FElement& acc, int last_gen, int budget, int& count,
                         std::set<std::string>& images) {
    if (budget == 0) return;
    const FElement x0 = standard_generator(0);
    const FElement x1 = standard_generator(1);
    const FElement x1_inv = inverse(x1);
    for (int gen = 0; gen <= 1; ++gen) {
        if (gen == last_gen) continue;
        const int signs = gen == 0 ? 1 : 2;
        for (int s = 0; s < signs; ++s) {
            const FElement& step = gen == 0 ? x0 : (s == 0 ? x1 : x1_inv);
            FElement block = acc;
            for (int size = 1; size <= budget; ++size) {
                block = compose(block, step);
                ++count;
                images.insert(to_text(block));
                collect_alternating(block, gen, budget - size, count, images);
            }
        }
    }
}

void alternating_forms_distinct() {
    std::set<std::string> images;
    int count = 0;
    collect_alternating(FElement::identity(), -1, 5, count, images);
    REQUIRE(count == 167);
    images.insert(to_text(FElement::identity()));
    REQUIRE(images.size() == 168);
}

void pointwise_oracle() {
    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> len(0, 8);
    for (int round = 0; round < 100; ++round) {
        const FElement f = random_element(rng, len(rng));
        const FElement g = random_element(rng, len(rng));
        const FElement fg = compose(f, g);
        for (int i = 0; i < 100; ++i) {
            const DyadicRational x = random_point(rng);
            REQUIRE(evaluate(fg, x) == evaluate(f, evaluate(g, x)));
            REQUIRE(preimage(f, evaluate(f, x)) == x);
        }
    }
}

struct Criterion {
    const char* label;
    double budget_seconds;
    std::function<void()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"relators vanish at (x0, x1); conjugation shifts generator indices", 1.0,
         relations_and_conjugation},
        {"x0 translates standard-subdivision pieces with exact endpoints", 1.0,
         shift_dynamics},
        {"partition interpolation: 500 random pairs, exact images, consistent plans", 5.0,
         interpolation_round},
        {"every reduced 2-generator word of length <= 6 has a verified witness", 60.0,
         exhaustive_short_words},
        {"universal witness tuples for arity 2 (bounds 2..6) and arity 3 (bound 4)", 120.0,
         universal_tuples},
        {"combined relation is never trivial, inherits vanishing, obeys the power rule", 10.0,
         combined_relations},
        {"two-generator embedding preserves nontriviality (arity <= 3, length <= 4)", 60.0,
         embedding_preserves_nontriviality},
        {"abelianization is additive; commutators land in the derived subgroup", 5.0,
         abelianization_predicates},
        {"alternating normal forms of length <= 5 are pairwise distinct", 30.0,
         alternating_forms_distinct},
        {"compose matches pointwise evaluation; preimage inverts evaluate", 5.0,
         pointwise_oracle},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string reason;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && elapsed >= c.budget_seconds)
            reason = "exceeded time budget";
        const bool ok = reason.empty();
        failures += ok ? 0 : 1;
        std::printf("[%2zu] %s  %6.2fs (budget %3.0fs)  %s%s%s\n", i + 1,
                    ok ? "PASS" : "FAIL", elapsed, c.budget_seconds, c.label,
                    ok ? "" : " — ", reason.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
