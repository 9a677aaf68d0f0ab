#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/error.hpp"

namespace thompson {

struct Letter {
    int index = 0;
    int sign = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.index, -l.sign}; }

// letter order used wherever words are compared: a < A < b < B < ...
inline int letter_rank(Letter l) { return 2 * l.index + (l.sign < 0 ? 1 : 0); }

// Freely reduced word over generators 0..arity-1.  Reduction happens on
// construction, so a FreeWord never holds an adjacent cancelling pair.
class FreeWord {
public:
    FreeWord() = default;

    static FreeWord trivial(int arity) {
        FreeWord w;
        w.arity_ = arity;
        return w;
    }

    static FreeWord from_letters(std::vector<Letter> raw, int arity) {
        FreeWord w;
        w.arity_ = arity;
        for (Letter l : raw) {
            if (l.sign != 1 && l.sign != -1)
                fail(errc::parse_error, "letter sign must be +1 or -1");
            if (l.index < 0 || l.index >= arity)
                fail(errc::unknown_generator,
                     "generator " + std::to_string(l.index) + " outside arity " +
                         std::to_string(arity));
            if (!w.letters_.empty() && w.letters_.back() == inverse(l))
                w.letters_.pop_back();
            else
                w.letters_.push_back(l);
        }
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    int arity() const { return arity_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // equality is equality of free-group elements; arity is bookkeeping
    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a.letters_ == b.letters_;
    }

private:
    std::vector<Letter> letters_;
    int arity_ = 0;
};

inline FreeWord parse_word(const std::string& text, int arity) {
    if (arity < 1) fail(errc::parse_error, "word arity must be at least 1");
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        Letter l;
        if ((c == 'g' || c == 'G') && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            l.sign = c == 'g' ? 1 : -1;
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            try {
                l.index = std::stoi(text.substr(i + 1, j - i - 1));
            } catch (const std::out_of_range&) {
                fail(errc::parse_error, "generator index out of range in '" + text + "'");
            }
            i = j;
        } else if (c >= 'a' && c <= 'z') {
            l.index = c - 'a';
            l.sign = 1;
            // words in few variables are conventionally written in x, y, z
            if (l.index >= arity && c >= 'x') l.index = c - 'x';
            ++i;
        } else if (c >= 'A' && c <= 'Z') {
            l.index = c - 'A';
            l.sign = -1;
            if (l.index >= arity && c >= 'X') l.index = c - 'X';
            ++i;
        } else {
            fail(errc::parse_error,
                 "unexpected character '" + std::string(1, text[i]) + "' in word");
        }
        if (l.index >= arity)
            fail(errc::unknown_generator, "generator " + std::to_string(l.index) +
                                              " outside arity " + std::to_string(arity));
        letters.push_back(l);
    }
    return FreeWord::from_letters(std::move(letters), arity);
}

inline std::string to_string(const FreeWord& w) {
    std::string out;
    const bool letter_form = w.arity() <= 26;
    for (Letter l : w.letters()) {
        if (letter_form) {
            out += static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.index);
        } else {
            if (!out.empty()) out += ' ';
            out += l.sign > 0 ? 'g' : 'G';
            out += std::to_string(l.index);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const FreeWord& w) {
    return os << to_string(w);
}

// words are reduced on construction, so reduce is the identity
inline const FreeWord& reduce(const FreeWord& w) { return w; }

inline FreeWord invert_word(const FreeWord& w) {
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : letters) l = inverse(l);
    return FreeWord::from_letters(std::move(letters), w.arity());
}

inline FreeWord concat(const FreeWord& u, const FreeWord& v) {
    std::vector<Letter> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return FreeWord::from_letters(std::move(letters), std::max(u.arity(), v.arity()));
}

// w = conjugator . core . conjugator^-1 with core cyclically reduced
inline std::pair<FreeWord, FreeWord> cyclic_reduce(const FreeWord& w) {
    const std::vector<Letter>& l = w.letters();
    std::size_t lo = 0, hi = l.size();
    while (hi - lo >= 2 && l[lo] == inverse(l[hi - 1])) {
        ++lo;
        --hi;
    }
    FreeWord conj = FreeWord::from_letters({l.begin(), l.begin() + lo}, w.arity());
    FreeWord core = FreeWord::from_letters({l.begin() + lo, l.begin() + hi}, w.arity());
    return {conj, core};
}

// Writes w as c . q^m . c^-1 directly: q is cyclically reduced, so the
// repeats never cancel and the output length is exactly what gets built.
inline FreeWord power(const FreeWord& w, long long m) {
    if (m == 0 || w.empty()) return FreeWord::trivial(w.arity());
    const FreeWord base = m < 0 ? invert_word(w) : w;
    unsigned long long reps = m < 0 ? -static_cast<unsigned long long>(m)
                                    : static_cast<unsigned long long>(m);
    auto [conj, core] = cyclic_reduce(base);
    std::vector<Letter> letters = conj.letters();
    letters.reserve(2 * conj.size() + reps * core.size());
    for (unsigned long long r = 0; r < reps; ++r)
        letters.insert(letters.end(), core.letters().begin(), core.letters().end());
    for (auto it = conj.letters().rbegin(); it != conj.letters().rend(); ++it)
        letters.push_back(inverse(*it));
    return FreeWord::from_letters(std::move(letters), w.arity());
}

inline FreeWord commutator(const FreeWord& u, const FreeWord& v) {
    return concat(concat(u, v), concat(invert_word(u), invert_word(v)));
}

inline bool commutes_free(const FreeWord& u, const FreeWord& v) {
    return commutator(u, v).empty();
}

// smallest q with w = q^e (as reduced words), e >= 1
inline std::pair<FreeWord, int> primitive_root(const FreeWord& w) {
    if (w.empty()) fail(errc::trivial_word, "the trivial word has no primitive root");
    auto [conj, core] = cyclic_reduce(w);
    const std::vector<Letter>& p = core.letters();
    const std::size_t n = p.size();
    std::size_t period = n;
    for (std::size_t q = 1; q <= n / 2; ++q) {
        if (n % q != 0) continue;
        bool repeats = true;
        for (std::size_t i = q; i < n && repeats; ++i) repeats = p[i] == p[i - q];
        if (repeats) {
            period = q;
            break;
        }
    }
    std::vector<Letter> letters = conj.letters();
    letters.insert(letters.end(), p.begin(), p.begin() + period);
    for (auto it = conj.letters().rbegin(); it != conj.letters().rend(); ++it)
        letters.push_back(inverse(*it));
    return {FreeWord::from_letters(std::move(letters), w.arity()),
            static_cast<int>(n / period)};
}

// Folds a list of relations into a single word that vanishes wherever any
// input does: h_1 = f_1, then h_i = [h_{i-1}, f_i], except that when the two
// commute they are powers w^alpha, w^beta of a common root and h_i = w^{alpha*beta}.
inline FreeWord combine_identity(const std::vector<FreeWord>& relations,
                                 std::size_t size_limit = 1000000) {
    if (relations.empty()) fail(errc::trivial_relation, "need at least one relation");
    for (const FreeWord& r : relations)
        if (r.empty()) fail(errc::trivial_relation, "relations must be nontrivial");
    FreeWord h = relations.front();
    for (std::size_t i = 1; i < relations.size(); ++i) {
        const FreeWord& f = relations[i];
        if (commutes_free(h, f)) {
            auto [root_h, alpha] = primitive_root(h);
            auto [root_f, beta] = primitive_root(f);
            if (root_h == invert_word(root_f))
                beta = -beta;
            else if (!(root_h == root_f))
                throw std::logic_error("commuting free words must share a primitive root");
            const long long exp = static_cast<long long>(alpha) * beta;
            auto [conj, core] = cyclic_reduce(root_h);
            const unsigned long long grown =
                2 * conj.size() + core.size() * static_cast<unsigned long long>(
                                                    exp < 0 ? -exp : exp);
            if (grown > size_limit)
                fail(errc::size_limit_exceeded,
                     "combined word would reach " + std::to_string(grown) + " letters");
            h = power(root_h, exp);
        } else {
            h = commutator(h, f);
            if (h.size() > size_limit)
                fail(errc::size_limit_exceeded,
                     "combined word reached " + std::to_string(h.size()) + " letters");
        }
    }
    return h;
}

// substitute generator i |-> x^-i y x^i; these conjugates freely generate,
// so nontrivial input gives nontrivial output
inline FreeWord embed_two_vars(const FreeWord& f) {
    std::vector<Letter> out;
    for (Letter l : f.letters()) {
        for (int j = 0; j < l.index; ++j) out.push_back({0, -1});
        out.push_back({1, l.sign});
        for (int j = 0; j < l.index; ++j) out.push_back({0, 1});
    }
    return FreeWord::from_letters(std::move(out), 2);
}

enum class Dedup { none, inversion, inversion_and_conjugacy };

namespace detail {

inline std::vector<int> rank_sequence(const std::vector<Letter>& letters) {
    std::vector<int> seq;
    seq.reserve(letters.size());
    for (Letter l : letters) seq.push_back(letter_rank(l));
    return seq;
}

// lex-least rotation over the cyclic core and its inverse: conjugate words
// and a word and its inverse all share one key
inline std::vector<int> conjugacy_key(const FreeWord& w) {
    auto [conj, core] = cyclic_reduce(w);
    std::vector<int> best;
    for (const FreeWord& variant : {core, invert_word(core)}) {
        std::vector<int> seq = rank_sequence(variant.letters());
        for (std::size_t r = 0; r < seq.size(); ++r) {
            std::vector<int> rot(seq.begin() + r, seq.end());
            rot.insert(rot.end(), seq.begin(), seq.begin() + r);
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

}  // namespace detail

// All reduced nontrivial words of length < max_len, in length-then-letter
// order.  Inversion dedup keeps the first of {w, w^-1}; conjugacy dedup keeps
// the first representative of each conjugacy class (up to inversion).
inline std::vector<FreeWord> enumerate_reduced(int arity, int max_len,
                                               Dedup dedup = Dedup::none) {
    if (arity < 1 || max_len < 1)
        fail(errc::parse_error, "enumeration needs arity >= 1 and max_len >= 1");
    std::vector<Letter> alphabet;
    for (int i = 0; i < arity; ++i) {
        alphabet.push_back({i, 1});
        alphabet.push_back({i, -1});
    }
    std::vector<FreeWord> out;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<Letter>> frontier = {{}};
    for (int len = 1; len < max_len; ++len) {
        std::vector<std::vector<Letter>> next;
        next.reserve(frontier.size() * alphabet.size());
        for (const std::vector<Letter>& prefix : frontier) {
            for (Letter l : alphabet) {
                if (!prefix.empty() && prefix.back() == inverse(l)) continue;
                std::vector<Letter> word = prefix;
                word.push_back(l);
                FreeWord candidate = FreeWord::from_letters(word, arity);
                switch (dedup) {
                    case Dedup::none:
                        out.push_back(candidate);
                        break;
                    case Dedup::inversion: {
                        std::vector<int> fwd = detail::rank_sequence(candidate.letters());
                        std::vector<int> rev =
                            detail::rank_sequence(invert_word(candidate).letters());
                        if (fwd <= rev) out.push_back(candidate);
                        break;
                    }
                    case Dedup::inversion_and_conjugacy:
                        if (seen.insert(detail::conjugacy_key(candidate)).second)
                            out.push_back(candidate);
                        break;
                }
                next.push_back(std::move(word));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// rightmost letter of the written word acts first
inline FElement evaluate_word(const FreeWord& w, const std::vector<FElement>& tuple) {
    if (static_cast<int>(tuple.size()) != w.arity())
        fail(errc::arity_mismatch, "word of arity " + std::to_string(w.arity()) +
                                       " evaluated at " + std::to_string(tuple.size()) +
                                       " elements");
    FElement acc = FElement::identity();
    for (Letter l : w.letters())
        acc = compose(acc, l.sign > 0 ? tuple[l.index] : inverse(tuple[l.index]));
    return acc;
}

// Track a single point through the word without building the composite:
// the certificate form of evaluate_word.
inline DyadicRational apply_word(const FreeWord& w, const std::vector<FElement>& tuple,
                                 DyadicRational x) {
    if (static_cast<int>(tuple.size()) != w.arity())
        fail(errc::arity_mismatch, "word of arity " + std::to_string(w.arity()) +
                                       " applied with " + std::to_string(tuple.size()) +
                                       " elements");
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        x = it->sign > 0 ? evaluate(tuple[it->index], x) : preimage(tuple[it->index], x);
    return x;
}

inline bool length_lex_less(const FreeWord& a, const FreeWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return detail::rank_sequence(a.letters()) < detail::rank_sequence(b.letters());
}

}  // namespace thompson
