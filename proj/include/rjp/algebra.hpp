#pragma once

#include <memory>
#include <optional>

#include "pbw.hpp"

namespace rjp {

/// A cataloged algebra: rewrite system + grading + Hopf data (generator
/// coproducts and counits) + Yetter-Drinfeld data when braided.
///
/// Braided specs come in two shapes, matching the two module structures
/// that actually occur here:
///   Grouplike  — base element g acts as an algebra automorphism, the
///                coaction of a monomial is g^{codeg} (x) monomial;
///   Primitive  — base element zeta acts as a derivation, the coaction is
///                computed multiplicatively from the generator coactions.
template <ScalarField K>
class AlgebraSpec {
public:
    enum class Base { None, Grouplike, Primitive };

    std::string name;
    std::shared_ptr<const RewriteSystem<K>> rs;
    bool braided = false;
    Base base = Base::None;

    /// image of each generator under the base action (automorphism values
    /// for Grouplike, derivation values for Primitive)
    std::vector<NCPoly<K>> base_action;
    /// Primitive base only: delta(gen) = sum_k zeta^k (x) poly
    std::vector<std::vector<std::pair<unsigned, NCPoly<K>>>> coaction;

    bool has_hopf = false;
    std::vector<Tensor2<K>> cop;
    std::vector<K> counit_vals;

    mutable std::optional<std::vector<NCPoly<K>>> antipode_cache;
    mutable std::map<std::pair<Mono, unsigned>, NCPoly<K>> act_memo;
    mutable std::map<Mono, Tensor2<K>> cop_memo;
    mutable std::map<Mono, NCPoly<K>> antipode_memo;

    const RewriteSystem<K>& sys() const { return *rs; }
    const FieldCfg& field() const { return rs->field(); }
    size_t ngens() const { return rs->ngens(); }
    K scalar(long long n) const { return rs->scalar(n); }

    // --- Yetter-Drinfeld action -----------------------------------------

    /// One application of the base action to a normalized polynomial.
    NCPoly<K> act_once(const NCPoly<K>& p) const {
        NCPoly<K> r;
        for (auto& [m, c] : p.terms()) {
            NCPoly<K> q = act_once_mono(m);
            for (auto& [mm, cc] : q.terms()) r.add_term(mm, c * cc);
        }
        return r;
    }

    NCPoly<K> act_once_mono(const Mono& m) const {
        if (base == Base::Grouplike) {
            // algebra automorphism
            NCPoly<K> r = rs->one();
            for (size_t i = 0; i < m.e.size(); ++i)
                for (unsigned j = 0; j < m.e[i]; ++j) r = rs->mul(r, base_action[i]);
            return r;
        }
        // derivation
        NCPoly<K> r;
        Word w = m.word();
        for (size_t i = 0; i < w.size(); ++i) {
            NCPoly<K> piece = rs->one();
            for (size_t j = 0; j < w.size(); ++j)
                piece = rs->mul(piece, j == i ? base_action[w[j]] : rs->gen(w[j]));
            r += piece;
        }
        return r;
    }

    /// n-fold action power on a monomial, memoized.
    NCPoly<K> act_power_mono(const Mono& m, unsigned n) const {
        if (n == 0) return NCPoly<K>(m, scalar(1));
        auto key = std::make_pair(m, n);
        auto it = act_memo.find(key);
        if (it != act_memo.end()) return it->second;
        NCPoly<K> prev = act_power_mono(m, n - 1);
        NCPoly<K> r = act_once(prev);
        act_memo.emplace(key, r);
        return r;
    }

    NCPoly<K> act_power(const NCPoly<K>& p, unsigned n) const {
        NCPoly<K> r;
        for (auto& [m, c] : p.terms()) {
            NCPoly<K> q = act_power_mono(m, n);
            for (auto& [mm, cc] : q.terms()) r.add_term(mm, c * cc);
        }
        return r;
    }

    /// Coaction of a monomial for the Primitive shape: sum_k zeta^k (x) poly.
    std::map<unsigned, NCPoly<K>> coact_mono(const Mono& m) const {
        std::map<unsigned, NCPoly<K>> r;
        r[0] = rs->one();
        Word w = m.word();
        for (Letter l : w) {
            std::map<unsigned, NCPoly<K>> nx;
            for (auto& [k1, p1] : r)
                for (auto& [k2, p2] : coaction[l]) {
                    NCPoly<K> prod = rs->mul(p1, p2);
                    if (prod.is_zero()) continue;
                    auto& slot = nx[k1 + k2];
                    slot += prod;
                }
            for (auto it = nx.begin(); it != nx.end();)
                it = it->second.is_zero() ? nx.erase(it) : std::next(it);
            r = std::move(nx);
        }
        return r;
    }

    /// Braiding legs of b (x) c, i.e. c(b (x) c) = sum c'_i (x) b'_i.
    /// Grouplike: (g^{codeg b} act c) (x) b. Primitive: via the coaction.
    void braid_apply(const Mono& b, const Mono& c, std::vector<std::pair<NCPoly<K>, Mono>>& out) const {
        if (base == Base::Grouplike) {
            int n = rs->codeg(b);
            if (n < 0) throw std::runtime_error("negative coaction degree unsupported");
            out.emplace_back(act_power_mono(c, static_cast<unsigned>(n)), b);
            return;
        }
        auto co = coact_mono(b);
        for (auto& [k, bpoly] : co) {
            NCPoly<K> acted = act_power_mono(c, k);
            for (auto& [bm, bc] : bpoly.terms()) out.emplace_back(acted * bc, bm);
        }
    }
};

enum class TensorMode { Plain, Braided };

/// (a (x) b)(c (x) d) = a c (x) b d in plain mode; in braided mode b is
/// braided past c via the spec's Yetter-Drinfeld data first.
template <ScalarField K>
Tensor2<K> tensor_mul(const AlgebraSpec<K>& A, const Tensor2<K>& x, const Tensor2<K>& y, TensorMode mode) {
    if (mode == TensorMode::Braided && A.base == AlgebraSpec<K>::Base::None)
        throw std::invalid_argument("braided tensor product requested without Yetter-Drinfeld data");
    const auto& sys = A.sys();
    Tensor2<K> r;
    for (auto& [kx, cx] : x.terms())
        for (auto& [ky, cy] : y.terms()) {
            K c0 = cx * cy;
            const Mono &a = kx[0], &b = kx[1], &c = ky[0], &d = ky[1];
            if (mode == TensorMode::Plain) {
                NCPoly<K> left = sys.mul_mono_mono(a, c);
                NCPoly<K> right = sys.mul_mono_mono(b, d);
                for (auto& [lm, lc] : left.terms())
                    for (auto& [rm, rc] : right.terms()) r.add_term({lm, rm}, c0 * lc * rc);
            } else {
                std::vector<std::pair<NCPoly<K>, Mono>> braided;
                A.braid_apply(b, c, braided);
                for (auto& [cprime, bprime] : braided) {
                    NCPoly<K> left;
                    for (auto& [cm, cc] : cprime.terms()) {
                        NCPoly<K> q = sys.mul_mono_mono(a, cm);
                        for (auto& [qm, qc] : q.terms()) left.add_term(qm, cc * qc);
                    }
                    NCPoly<K> right = sys.mul_mono_mono(bprime, d);
                    for (auto& [lm, lc] : left.terms())
                        for (auto& [rm, rc] : right.terms()) r.add_term({lm, rm}, c0 * lc * rc);
                }
            }
        }
    return r;
}

/// Braiding as a standalone map: c(a (x) b) for normalized polys.
template <ScalarField K>
Tensor2<K> braiding(const AlgebraSpec<K>& A, const NCPoly<K>& a, const NCPoly<K>& b) {
    Tensor2<K> r;
    for (auto& [am, ac] : a.terms())
        for (auto& [bm, bc] : b.terms()) {
            std::vector<std::pair<NCPoly<K>, Mono>> legs;
            A.braid_apply(am, bm, legs);
            for (auto& [bp, ap] : legs)
                for (auto& [m, c] : bp.terms()) r.add_term({m, ap}, ac * bc * c);
        }
    return r;
}

/// Multiplicative extension of the generator coproducts, memoized per
/// monomial; tensor legs stay normalized throughout.
template <ScalarField K>
Tensor2<K> coproduct_mono(const AlgebraSpec<K>& A, const Mono& m) {
    if (!A.has_hopf) throw std::invalid_argument("coproduct: no Hopf data on " + A.name);
    auto it = A.cop_memo.find(m);
    if (it != A.cop_memo.end()) return it->second;
    TensorMode mode = A.braided ? TensorMode::Braided : TensorMode::Plain;
    Tensor2<K> t = Tensor2<K>::unit(A.ngens(), A.field());
    Word w = m.word();
    for (Letter l : w) t = tensor_mul(A, t, A.cop[l], mode);
    A.cop_memo.emplace(m, t);
    return t;
}

template <ScalarField K>
Tensor2<K> coproduct(const AlgebraSpec<K>& A, const NCPoly<K>& p) {
    Tensor2<K> r;
    for (auto& [m, c] : p.terms()) r += coproduct_mono(A, m) * c;
    return r;
}

template <ScalarField K>
K counit_mono(const AlgebraSpec<K>& A, const Mono& m) {
    K r = A.scalar(1);
    for (size_t i = 0; i < m.e.size(); ++i)
        for (unsigned j = 0; j < m.e[i]; ++j) r = r * A.counit_vals[i];
    return r;
}

template <ScalarField K>
K counit(const AlgebraSpec<K>& A, const NCPoly<K>& p) {
    K r = A.scalar(0);
    for (auto& [m, c] : p.terms()) r += c * counit_mono(A, m);
    return r;
}

/// Apply the coproduct to one leg of a rank-2 tensor, giving a rank-3 one.
template <ScalarField K>
Tensor3<K> coproduct_leg(const AlgebraSpec<K>& A, const Tensor2<K>& t, int leg) {
    Tensor3<K> r;
    for (auto& [k, c] : t.terms()) {
        Tensor2<K> d = coproduct_mono(A, k[static_cast<size_t>(leg)]);
        for (auto& [dk, dc] : d.terms()) {
            if (leg == 0)
                r.add_term({dk[0], dk[1], k[1]}, c * dc);
            else
                r.add_term({k[0], dk[0], dk[1]}, c * dc);
        }
    }
    return r;
}

/// Solve the convolution axiom m(S (x) id) Delta(gen) = eps(gen) 1 for the
/// generator antipode values, one generator at a time. Group-likes get
/// their inverses; the rest resolve once the group-likes are known.
template <ScalarField K>
std::vector<NCPoly<K>> derive_antipode(const AlgebraSpec<K>& A) {
    if (A.braided) throw std::invalid_argument("derive_antipode: ordinary Hopf algebras only");
    if (A.antipode_cache) return *A.antipode_cache;
    const auto& sys = A.sys();
    size_t n = A.ngens();
    std::vector<std::optional<NCPoly<K>>> S(n);

    auto mono_resolved = [&](const Mono& m) {
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] && !S[i]) return false;
        return true;
    };
    auto antipode_of_mono = [&](const Mono& m) {
        NCPoly<K> r = sys.one();
        Word w = m.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) r = sys.mul(r, *S[*it]);
        return r;
    };

    for (size_t pass = 0; pass <= n; ++pass) {
        bool progress = false;
        for (Letter g = 0; g < n; ++g) {
            if (S[g]) continue;
            Mono gm(n);
            gm.e[g] = 1;
            const Tensor2<K>& d = A.cop[g];
            // group-like?
            bool grouplike = d.size() == 1 && d.terms().begin()->first[0] == gm && d.terms().begin()->first[1] == gm;
            if (grouplike) {
                std::optional<NCPoly<K>> inv;
                const auto* pr = sys.find_power_rule(g);
                if (pr && pr->rhs == sys.one()) {
                    Mono im(n);
                    im.e[g] = static_cast<uint16_t>(pr->n - 1);
                    inv = NCPoly<K>(im, A.scalar(1));
                } else {
                    for (Letter h = 0; h < n; ++h) {
                        Mono hm(n);
                        hm.e[h] = 1;
                        if (sys.mul_mono_mono(hm, gm) == sys.one() && sys.mul_mono_mono(gm, hm) == sys.one()) {
                            inv = NCPoly<K>(hm, A.scalar(1));
                            break;
                        }
                    }
                }
                if (!inv) throw std::runtime_error("derive_antipode: group-like " + sys.gens()[g].name + " has no inverse");
                S[g] = *inv;
                progress = true;
                continue;
            }
            // need Delta(gen) = gen (x) 1 + sum a_i (x) b_i with all a_i resolved
            bool ready = true;
            K lead = A.scalar(0);
            for (auto& [k, c] : d.terms()) {
                if (k[0] == gm && k[1].is_one()) {
                    lead = c;
                    continue;
                }
                if (!mono_resolved(k[0])) ready = false;
            }
            if (!ready || !(lead == A.scalar(1))) continue;
            NCPoly<K> acc;
            for (auto& [k, c] : d.terms()) {
                if (k[0] == gm && k[1].is_one()) continue;
                NCPoly<K> term = sys.mul(antipode_of_mono(k[0]), NCPoly<K>(k[1], A.scalar(1)));
                acc += term * c;
            }
            NCPoly<K> rhs;
            if (!A.counit_vals[g].is_zero()) rhs = sys.one() * A.counit_vals[g];
            S[g] = rhs - acc;
            progress = true;
        }
        if (!progress) break;
    }
    std::vector<NCPoly<K>> out;
    for (size_t i = 0; i < n; ++i) {
        if (!S[i]) throw std::runtime_error("derive_antipode: could not resolve generator " + sys.gens()[i].name);
        out.push_back(*S[i]);
    }
    A.antipode_cache = out;
    return out;
}

/// Anti-multiplicative extension of the generator antipode values.
template <ScalarField K>
NCPoly<K> antipode_mono(const AlgebraSpec<K>& A, const Mono& m) {
    auto it = A.antipode_memo.find(m);
    if (it != A.antipode_memo.end()) return it->second;
    auto S = derive_antipode(A);
    NCPoly<K> r = A.sys().one();
    Word w = m.word();
    for (auto rit = w.rbegin(); rit != w.rend(); ++rit) r = A.sys().mul(r, S[*rit]);
    A.antipode_memo.emplace(m, r);
    return r;
}

template <ScalarField K>
NCPoly<K> antipode(const AlgebraSpec<K>& A, const NCPoly<K>& p) {
    NCPoly<K> r;
    for (auto& [m, c] : p.terms()) {
        NCPoly<K> q = antipode_mono(A, m);
        for (auto& [mm, cc] : q.terms()) r.add_term(mm, c * cc);
    }
    return r;
}

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& s) {
        ok = false;
        failures.push_back(s);
    }
};

/// Coassociativity, counit and multiplicativity of Delta (braided where
/// applicable), plus the antipode convolution axiom for ordinary specs.
template <ScalarField K>
AxiomReport check_hopf_axioms(const AlgebraSpec<K>& A, const std::vector<Mono>& sample,
                              const std::vector<std::pair<Mono, Mono>>& pair_sample) {
    AxiomReport rep;
    const auto& sys = A.sys();
    auto names = sys.names();
    TensorMode mode = A.braided ? TensorMode::Braided : TensorMode::Plain;

    for (auto& m : sample) {
        Tensor2<K> d = coproduct_mono(A, m);
        if (!(coproduct_leg(A, d, 0) == coproduct_leg(A, d, 1)))
            rep.fail("coassociativity fails on " + NCPoly<K>(m, A.scalar(1)).str(names));
        NCPoly<K> left, right;
        for (auto& [k, c] : d.terms()) {
            left.add_term(k[1], c * counit_mono(A, k[0]));
            right.add_term(k[0], c * counit_mono(A, k[1]));
        }
        NCPoly<K> id(m, A.scalar(1));
        if (!(left == id) || !(right == id))
            rep.fail("counit axiom fails on " + id.str(names));
    }
    for (auto& [a, b] : pair_sample) {
        NCPoly<K> prod = sys.mul_mono_mono(a, b);
        Tensor2<K> dprod = coproduct(A, prod);
        Tensor2<K> dd = tensor_mul(A, coproduct_mono(A, a), coproduct_mono(A, b), mode);
        if (!(dprod == dd))
            rep.fail("Delta not multiplicative on (" + NCPoly<K>(a, A.scalar(1)).str(names) + ", " +
                     NCPoly<K>(b, A.scalar(1)).str(names) + ")");
    }
    if (!A.braided) {
        for (auto& m : sample) {
            Tensor2<K> d = coproduct_mono(A, m);
            NCPoly<K> conv_l, conv_r;
            for (auto& [k, c] : d.terms()) {
                conv_l += sys.mul(antipode_mono(A, k[0]), NCPoly<K>(k[1], A.scalar(1))) * c;
                conv_r += sys.mul(NCPoly<K>(k[0], A.scalar(1)), antipode_mono(A, k[1])) * c;
            }
            NCPoly<K> expect = sys.one() * counit_mono(A, m);
            if (!(conv_l == expect) || !(conv_r == expect))
                rep.fail("antipode axiom fails on " + NCPoly<K>(m, A.scalar(1)).str(names));
        }
    }
    return rep;
}

} // namespace rjp
