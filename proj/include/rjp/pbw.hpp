#pragma once

#include <algorithm>
#include <optional>
#include <sstream>

#include "rewrite.hpp"

namespace rjp {

struct TerminationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Every right-hand-side monomial must compare strictly below its rule's
/// left-hand side in graded-lex; with that, exhaustive rewriting terminates
/// and never increases word length.
template <ScalarField K>
TerminationReport check_termination(const RewriteSystem<K>& sys) {
    TerminationReport rep;
    auto names = sys.names();
    auto check = [&](const Word& lhs, const NCPoly<K>& rhs, const std::string& label) {
        for (auto& [m, c] : rhs.terms()) {
            Word w = m.word();
            if (!word_less(w, lhs)) {
                rep.ok = false;
                std::ostringstream os;
                os << label << ": rhs monomial not below lhs";
                rep.violations.push_back(os.str());
            }
        }
    };
    for (auto& [key, rhs] : sys.pair_rules()) {
        Word lhs{key.first, key.second};
        check(lhs, rhs, names[key.first] + " " + names[key.second]);
    }
    for (auto& [g, pr] : sys.power_rules()) {
        Word lhs(pr.n, g);
        check(lhs, pr.rhs, names[g] + "^" + std::to_string(pr.n));
    }
    // completeness: every descending two-letter word must be reducible
    for (Letter b = 0; b < sys.ngens(); ++b)
        for (Letter a = 0; a < b; ++a)
            if (!sys.find_pair_rule(b, a)) {
                rep.ok = false;
                rep.violations.push_back("missing rule for descending pair " + names[b] + " " + names[a]);
            }
    return rep;
}

struct Ambiguity {
    Word word;
    std::string description;
};

/// All overlap ambiguities between rule left-hand sides, reduced both ways.
/// Returns those whose two normal forms differ; empty means the diamond
/// lemma applies and the irreducible monomials form a PBW basis.
template <ScalarField K>
std::vector<Ambiguity> check_confluence(const RewriteSystem<K>& sys) {
    std::vector<Ambiguity> bad;
    auto names = sys.names();

    // reduce w by applying `rhs` over lhs at position pos, then normalizing
    auto resolve = [&](const Word& w, size_t pos, size_t len, const NCPoly<K>& rhs) {
        NCPoly<K> acc;
        for (auto& [m, c] : rhs.terms()) {
            Word nw(w.begin(), w.begin() + static_cast<long>(pos));
            Word tail = m.word();
            nw.insert(nw.end(), tail.begin(), tail.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(pos + len), w.end());
            NCPoly<K> q = sys.normalize_word(nw);
            for (auto& [mm, cc] : q.terms()) acc.add_term(mm, c * cc);
        }
        return acc;
    };
    auto check = [&](const Word& w, size_t p1, size_t l1, const NCPoly<K>& r1, size_t p2, size_t l2,
                     const NCPoly<K>& r2, const std::string& desc) {
        NCPoly<K> a = resolve(w, p1, l1, r1);
        NCPoly<K> b = resolve(w, p2, l2, r2);
        if (!(a == b)) bad.push_back({w, desc});
    };
    auto word_str = [&](const Word& w) {
        std::string s;
        for (Letter l : w) s += (s.empty() ? "" : " ") + names[l];
        return s;
    };

    // pair x pair: lhs1 = (c b), lhs2 = (b a)  ->  word c b a
    for (auto& [k1, r1] : sys.pair_rules())
        for (auto& [k2, r2] : sys.pair_rules()) {
            if (k1.second != k2.first) continue;
            Word w{k1.first, k1.second, k2.second};
            check(w, 0, 2, r1, 1, 2, r2, "overlap " + word_str(w));
        }
    // pair (b a) x power a^n: word b a^n
    for (auto& [k, r] : sys.pair_rules()) {
        const auto* pw = sys.find_power_rule(k.second);
        if (!pw) continue;
        Word w{k.first};
        w.insert(w.end(), pw->n, k.second);
        check(w, 0, 2, r, 1, pw->n, pw->rhs, "overlap " + word_str(w));
    }
    // power b^n x pair (b a): word b^n a
    for (auto& [k, r] : sys.pair_rules()) {
        const auto* pw = sys.find_power_rule(k.first);
        if (!pw) continue;
        Word w(pw->n, k.first);
        w.push_back(k.second);
        check(w, 0, pw->n, pw->rhs, pw->n - 1, 2, r, "overlap " + word_str(w));
    }
    // power self-overlap: word g^{2n-1}
    for (auto& [g, pw] : sys.power_rules()) {
        Word w(2 * pw.n - 1, g);
        check(w, 0, pw.n, pw.rhs, pw.n - 1, pw.n, pw.rhs, "overlap " + word_str(w));
    }
    return bad;
}

/// True if no rule applies anywhere inside the ordered monomial. Power
/// rules cannot fire (exponents stay below the bounds); an ascending
/// two-letter rule such as g g^{-1} -> 1 fires when its letters are
/// adjacent in the support.
template <ScalarField K>
bool is_normal_mono(const RewriteSystem<K>& sys, const Mono& m) {
    int prev = -1;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (prev >= 0 && sys.find_pair_rule(static_cast<Letter>(prev), static_cast<Letter>(i))) return false;
        if (m.e[i] >= 2 && sys.find_pair_rule(static_cast<Letter>(i), static_cast<Letter>(i))) return false;
        prev = static_cast<int>(i);
    }
    return true;
}

/// All irreducible ordered monomials consistent with the exponent domains.
/// For systems with an unbounded generator a length cap must be supplied.
template <ScalarField K>
std::vector<Mono> enumerate_basis(const RewriteSystem<K>& sys, std::optional<unsigned> max_length = std::nullopt) {
    bool finite = true;
    for (auto& g : sys.gens())
        if (g.bound == 0) finite = false;
    if (!finite && !max_length)
        throw std::invalid_argument("enumerate_basis: infinite system requires a length cap");

    std::vector<Mono> out;
    Mono cur(sys.ngens());
    unsigned len = 0;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == sys.ngens()) {
            if (is_normal_mono(sys, cur)) out.push_back(cur);
            return;
        }
        unsigned cap = sys.gens()[i].bound ? sys.gens()[i].bound - 1 : (max_length ? *max_length : 0u);
        if (max_length && cap > *max_length - len) cap = *max_length - len;
        for (unsigned e = 0; e <= cap; ++e) {
            cur.e[i] = static_cast<uint16_t>(e);
            len += e;
            if (!max_length || len <= *max_length) self(self, i + 1);
            len -= e;
        }
        cur.e[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), MonoLess{});
    return out;
}

/// Idempotency and a few structural sanity properties are asserted in the
/// test suite; here we only expose the counting helpers the CLI needs.
template <ScalarField K>
size_t basis_count(const RewriteSystem<K>& sys) {
    size_t n = 1;
    for (auto& g : sys.gens()) {
        if (g.bound == 0) throw std::invalid_argument("basis_count: infinite system");
        n *= g.bound;
    }
    return n;
}

} // namespace rjp
