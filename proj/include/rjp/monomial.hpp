#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace rjp {

using Letter = uint8_t;
using Word = std::vector<Letter>;

/// Ordered monomial over a fixed alphabet: one exponent per generator,
/// standing for gen[0]^e0 gen[1]^e1 ... in the declared generator order.
struct Mono {
    std::vector<uint16_t> e;

    Mono() = default;
    explicit Mono(size_t ngens) : e(ngens, 0) {}

    size_t ngens() const { return e.size(); }
    unsigned length() const { return std::accumulate(e.begin(), e.end(), 0u); }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    int last_letter() const { // largest generator appearing; -1 for the empty monomial
        for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i)
            if (e[static_cast<size_t>(i)]) return i;
        return -1;
    }
    Word word() const {
        Word w;
        w.reserve(length());
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned j = 0; j < e[i]; ++j) w.push_back(static_cast<Letter>(i));
        return w;
    }
    bool operator==(const Mono&) const = default;
    auto operator<=>(const Mono&) const = default; // structural order, for map keys only
};

/// Graded-lexicographic order on words: total length first, then leftmost
/// letter comparison in the declared generator order.
inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// The same order restricted to ordered monomials, computed without
/// expanding to words: at the first generator where exponents differ the
/// monomial with the larger exponent has more copies of the smaller letter
/// up front, hence is lexicographically smaller.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        for (size_t i = 0; i < a.e.size() && i < b.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
};

inline bool mono_word_less(const Mono& m, const Word& w) { return word_less(m.word(), w); }

} // namespace rjp
