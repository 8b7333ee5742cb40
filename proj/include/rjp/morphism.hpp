#pragma once

#include "algebra.hpp"

namespace rjp {

/// An algebra/Hopf-algebra map given by generator images in the target.
template <ScalarField K>
struct MorphismSpec {
    std::string name;
    const AlgebraSpec<K>* source = nullptr;
    const AlgebraSpec<K>* target = nullptr;
    std::vector<NCPoly<K>> images; // one per source generator, normalized
    bool graded = false;

    mutable std::map<Mono, NCPoly<K>> memo;

    NCPoly<K> apply_mono(const Mono& m) const {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        const auto& tsys = target->sys();
        NCPoly<K> r = tsys.one();
        Word w = m.word();
        for (Letter l : w) r = tsys.mul(r, images[l]);
        memo.emplace(m, r);
        return r;
    }
    NCPoly<K> apply(const NCPoly<K>& p) const {
        NCPoly<K> r;
        for (auto& [m, c] : p.terms()) {
            NCPoly<K> q = apply_mono(m);
            for (auto& [mm, cc] : q.terms()) r.add_term(mm, c * cc);
        }
        return r;
    }
    Tensor2<K> apply2(const Tensor2<K>& t) const {
        Tensor2<K> r;
        for (auto& [k, c] : t.terms()) {
            NCPoly<K> a = apply_mono(k[0]), b = apply_mono(k[1]);
            for (auto& [am, ac] : a.terms())
                for (auto& [bm, bc] : b.terms()) r.add_term({am, bm}, c * ac * bc);
        }
        return r;
    }
};

struct MorphismReport {
    bool ok = true;
    std::string first_failure;
    void fail(const std::string& s) {
        if (ok) first_failure = s;
        ok = false;
    }
};

/// Every defining relation of the source must map to zero after target
/// normalization; with hopf set, generator coproducts and counits must be
/// intertwined as well.
template <ScalarField K>
MorphismReport check_morphism(const MorphismSpec<K>& m, bool hopf) {
    MorphismReport rep;
    const auto& ssys = m.source->sys();
    const auto& tsys = m.target->sys();
    auto names = ssys.names();

    for (auto& [key, rhs] : ssys.pair_rules()) {
        NCPoly<K> lhs_img = tsys.mul(m.images[key.first], m.images[key.second]);
        NCPoly<K> rhs_img = m.apply(rhs);
        if (!(lhs_img == rhs_img))
            rep.fail("relation " + names[key.first] + " " + names[key.second] + " not preserved");
    }
    for (auto& [g, pr] : ssys.power_rules()) {
        NCPoly<K> lhs_img = tsys.one();
        for (unsigned i = 0; i < pr.n; ++i) lhs_img = tsys.mul(lhs_img, m.images[g]);
        NCPoly<K> rhs_img = m.apply(pr.rhs);
        if (!(lhs_img == rhs_img))
            rep.fail("relation " + names[g] + "^" + std::to_string(pr.n) + " not preserved");
    }
    if (m.graded) {
        for (Letter g = 0; g < ssys.ngens(); ++g) {
            int d = ssys.gens()[g].degree;
            for (auto& [mm, c] : m.images[g].terms())
                if (tsys.degree(mm) != d) rep.fail("image of " + names[g] + " not homogeneous of its degree");
        }
    }
    if (hopf) {
        for (Letter g = 0; g < ssys.ngens(); ++g) {
            Tensor2<K> lhs = coproduct(*m.target, m.images[g]);
            Tensor2<K> rhs = m.apply2(m.source->cop[g]);
            if (!(lhs == rhs)) rep.fail("coproduct of " + names[g] + " not intertwined");
            K eps_img = counit(*m.target, m.images[g]);
            if (!(eps_img == m.source->counit_vals[g])) rep.fail("counit of " + names[g] + " not preserved");
        }
    }
    return rep;
}

// --- the pre-Nichols poset ------------------------------------------------

/// Parameters of a member of the G family; a != 0 is reserved for k < l.
struct GParams {
    unsigned k = 1, l = 1;
    long long a = 0;
};

struct PosetDecision {
    bool geq = false;
    std::string clause;   // which comparison clause decided
    std::string detail;
};

inline long long fp_power_residue(long long b, unsigned e, unsigned p) {
    // b^(p^e) mod p; by Fermat this is just b mod p, but compute honestly
    Fp r(b, p);
    for (unsigned i = 0; i < e; ++i) r = r.pow(p);
    long long v = static_cast<long long>(r.value());
    return v;
}

/// Decide G(k,l,a) >= G(k',l',b) in the pre-Nichols poset. Morphisms are the
/// identity on x and y, so existence is governed by the four comparison
/// clauses; the certificate can be validated with check_morphism.
inline PosetDecision poset_compare(const GParams& src, const GParams& dst, unsigned p) {
    auto validate = [&](const GParams& g) {
        if (g.k < 1 || g.l < 1) throw std::invalid_argument("poset: k, l must be >= 1");
        if (g.a % p != 0 && !(g.k < g.l))
            throw std::invalid_argument("poset: a != 0 is reserved for k < l");
    };
    validate(src);
    validate(dst);
    bool a0 = src.a % static_cast<long long>(p) == 0;
    bool b0 = dst.a % static_cast<long long>(p) == 0;
    unsigned k = src.k, l = src.l, kp = dst.k, lp = dst.l;
    PosetDecision d;
    long long a_res = ((src.a % static_cast<long long>(p)) + p) % p;
    if (!a0 && !b0) {
        // clause (i)
        if (l >= lp && lp > k && k >= kp && a_res == fp_power_residue(dst.a, k - kp, p)) {
            d.geq = true;
            d.clause = "(i)(a)";
        } else if (l >= lp && k >= lp && lp > kp) {
            d.geq = true;
            d.clause = "(i)(b)";
        } else {
            d.clause = "(i)";
            d.detail = "neither (i)(a) nor (i)(b) holds";
        }
    } else if (!a0 && b0) {
        // clause (ii)
        if (l >= lp && k >= lp && k >= kp) {
            d.geq = true;
            d.clause = "(ii)";
        } else {
            d.clause = "(ii)";
            d.detail = "requires l >= l', k >= l' and k >= k'";
        }
    } else if (a0 && !b0) {
        // clause (iii)
        if (l >= lp && k >= lp && lp > kp) {
            d.geq = true;
            d.clause = "(iii)";
        } else {
            d.clause = "(iii)";
            d.detail = "requires l >= l' and k >= l' > k'";
        }
    } else {
        // clause (iv)
        if (l >= lp && k >= kp) {
            d.geq = true;
            d.clause = "(iv)";
        } else {
            d.clause = "(iv)";
            d.detail = "requires l >= l' and k >= k'";
        }
    }
    return d;
}

/// Direct existence check: since pre-Nichols morphisms restrict to the
/// identity on degree one, the map exists iff the source relations already
/// vanish in the target.
template <ScalarField K>
bool poset_bruteforce(const AlgebraSpec<K>& src, const AlgebraSpec<K>& dst) {
    const auto& tsys = dst.sys();
    for (auto& [g, pr] : src.sys().power_rules()) {
        NCPoly<K> lhs = tsys.normalize_word(Word(pr.n, g));
        // relation is g^n - rhs; map rhs across by identity on letters
        NCPoly<K> rhs;
        for (auto& [m, c] : pr.rhs.terms()) {
            auto q = tsys.normalize_word(m.word());
            for (auto& [mm, cc] : q.terms()) rhs.add_term(mm, c * cc);
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace rjp
