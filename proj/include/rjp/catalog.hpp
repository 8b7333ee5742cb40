#pragma once

#include "algebra.hpp"

namespace rjp {

/// Builders for every cataloged algebra. Generator orders follow the PBW
/// bases: x < y < g (< g^{-1}) < zeta < u < v throughout, e < f < h for the
/// enveloping algebras.
namespace catalog {

template <ScalarField K>
struct Builder {
    FieldCfg cfg;
    std::vector<GenSymbol> gens;
    std::shared_ptr<RewriteSystem<K>> rs;

    Builder(FieldCfg c, std::vector<GenSymbol> g) : cfg(c), gens(std::move(g)) {
        rs = std::make_shared<RewriteSystem<K>>(cfg, gens);
    }
    Letter operator[](const std::string& n) const { return rs->letter(n); }
    K k(long long n) const { return rs->scalar(n); }
    K half() const { return rs->half(); }

    Mono mono(std::initializer_list<std::pair<std::string, unsigned>> exps) const {
        Mono m(gens.size());
        for (auto& [n, e] : exps) m.e[(*this)[n]] = static_cast<uint16_t>(e);
        return m;
    }
    NCPoly<K> poly(std::initializer_list<std::pair<Mono, K>> terms) const {
        NCPoly<K> p;
        for (auto& [m, c] : terms) p.add_term(m, c);
        return p;
    }
    void rule(const std::string& b, const std::string& a, const NCPoly<K>& rhs) {
        rs->add_pair_rule((*this)[b], (*this)[a], rhs);
    }
    void power(const std::string& g, unsigned n, const NCPoly<K>& rhs) { rs->add_power_rule((*this)[g], n, rhs); }

    Tensor2<K> grouplike(const std::string& g) const {
        Tensor2<K> t;
        Mono m = mono({{g, 1}});
        t.add_term({m, m}, k(1));
        return t;
    }
    Tensor2<K> primitive(const std::string& g) const {
        Tensor2<K> t;
        Mono m = mono({{g, 1}}), one(gens.size());
        t.add_term({m, one}, k(1));
        t.add_term({one, m}, k(1));
        return t;
    }
    /// Delta(gen) = gen (x) 1 + grp (x) gen, the skew-primitive shape.
    Tensor2<K> skew(const std::string& g, const std::string& grp) const {
        Tensor2<K> t;
        Mono m = mono({{g, 1}}), one(gens.size());
        t.add_term({m, one}, k(1));
        t.add_term({mono({{grp, 1}}), m}, k(1));
        return t;
    }
};

// --- braided family over the group-like base ---------------------------

/// Jordan plane relations; bounds 0 = none, otherwise y^yb -> a x^yb and
/// x^xb -> 0. Covers B(V), Btilde, K(k,a), F(l), G(k,l,a).
template <ScalarField K>
AlgebraSpec<K> jordan_braided(const FieldCfg& cfg, const std::string& name, unsigned xbound, unsigned ybound,
                              long long a_coef) {
    Builder<K> b(cfg, {{"x", xbound, 1, 1}, {"y", ybound, 1, 1}});
    b.rule("y", "x", b.poly({{b.mono({{"x", 1}, {"y", 1}}), b.k(1)}, {b.mono({{"x", 2}}), -b.half()}}));
    if (xbound) b.power("x", xbound, NCPoly<K>::zero());
    if (ybound) {
        // y^yb -> a x^yb, dropped entirely when x^yb already vanishes
        NCPoly<K> rhs;
        if (a_coef != 0 && !(xbound && ybound >= xbound)) {
            Mono m(2);
            m.e[0] = static_cast<uint16_t>(ybound);
            rhs.add_term(m, b.k(a_coef));
        }
        b.power("y", ybound, rhs);
    }
    AlgebraSpec<K> A;
    A.name = name;
    A.rs = b.rs;
    A.braided = true;
    A.base = AlgebraSpec<K>::Base::Grouplike;
    A.base_action = {b.rs->gen("x"), b.rs->gen("x") + b.rs->gen("y")}; // g: x -> x, y -> y + x
    A.has_hopf = true;
    A.cop = {b.primitive("x"), b.primitive("y")};
    A.counit_vals = {b.k(0), b.k(0)};
    return A;
}

template <ScalarField K>
AlgebraSpec<K> bv(const FieldCfg& cfg) {
    return jordan_braided<K>(cfg, "B(V)", cfg.p, cfg.p, 0);
}
template <ScalarField K>
AlgebraSpec<K> btilde(const FieldCfg& cfg) {
    return jordan_braided<K>(cfg, "Btilde", 0, 0, 0);
}
inline unsigned upow(unsigned p, unsigned k) {
    unsigned r = 1;
    while (k--) r *= p;
    return r;
}
template <ScalarField K>
AlgebraSpec<K> kka(const FieldCfg& cfg, unsigned k, long long a) {
    return jordan_braided<K>(cfg, "K(" + std::to_string(k) + "," + std::to_string(a) + ")", 0, upow(cfg.p, k), a);
}
template <ScalarField K>
AlgebraSpec<K> fl(const FieldCfg& cfg, unsigned l) {
    return jordan_braided<K>(cfg, "F(" + std::to_string(l) + ")", upow(cfg.p, l), 0, 0);
}
template <ScalarField K>
AlgebraSpec<K> gkla(const FieldCfg& cfg, unsigned k, unsigned l, long long a) {
    return jordan_braided<K>(cfg, "G(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(a) + ")",
                             upow(cfg.p, l), upow(cfg.p, k), a);
}

// --- braided family over the primitive base -----------------------------

/// The u,v Jordan plane T(W)/(vu - uv - 1/2 u^2) with zeta acting as a
/// derivation; bounds give B(W).
template <ScalarField K>
AlgebraSpec<K> w_braided(const FieldCfg& cfg, const std::string& name, unsigned bound) {
    Builder<K> b(cfg, {{"u", bound, 1, 0}, {"v", bound, 1, 0}});
    b.rule("v", "u", b.poly({{b.mono({{"u", 1}, {"v", 1}}), b.k(1)}, {b.mono({{"u", 2}}), b.half()}}));
    if (bound) {
        b.power("u", bound, NCPoly<K>::zero());
        b.power("v", bound, NCPoly<K>::zero());
    }
    AlgebraSpec<K> A;
    A.name = name;
    A.rs = b.rs;
    A.braided = true;
    A.base = AlgebraSpec<K>::Base::Primitive;
    A.base_action = {b.rs->gen("u"), b.rs->gen("v")}; // zeta acts as u d/du + v d/dv
    A.coaction = {{{0u, b.rs->gen("u")}},             // delta(u) = 1 (x) u
                  {{0u, b.rs->gen("v")}, {1u, b.rs->gen("u")}}}; // delta(v) = 1 (x) v + zeta (x) u
    A.has_hopf = true;
    A.cop = {b.primitive("u"), b.primitive("v")};
    A.counit_vals = {b.k(0), b.k(0)};
    return A;
}

template <ScalarField K>
AlgebraSpec<K> bhat(const FieldCfg& cfg) {
    return w_braided<K>(cfg, "Bhat", 0);
}
template <ScalarField K>
AlgebraSpec<K> bw(const FieldCfg& cfg) {
    return w_braided<K>(cfg, "B(W)", cfg.p);
}

// --- bosonizations and pointed Hopf algebras ----------------------------

/// x, y, g with the smash-product commutation rules; power data as in the
/// braided quotient being bosonized. Covers H, Htilde and the G/K/F
/// bosonizations. Pass gfree to adjoin an explicit inverse letter.
template <ScalarField K>
AlgebraSpec<K> bosonized(const FieldCfg& cfg, const std::string& name, unsigned xbound, unsigned ybound,
                         long long a_coef, bool gfree) {
    std::vector<GenSymbol> gens{{"x", xbound, -1, 0}, {"y", ybound, -1, 0}};
    if (gfree) {
        gens.push_back({"g", 0, 0, 0});
        gens.push_back({"gi", 0, 0, 0});
    } else {
        gens.push_back({"g", cfg.p, 0, 0});
    }
    Builder<K> b(cfg, gens);
    b.rule("y", "x", b.poly({{b.mono({{"x", 1}, {"y", 1}}), b.k(1)}, {b.mono({{"x", 2}}), -b.half()}}));
    b.rule("g", "x", b.poly({{b.mono({{"x", 1}, {"g", 1}}), b.k(1)}}));
    b.rule("g", "y", b.poly({{b.mono({{"y", 1}, {"g", 1}}), b.k(1)}, {b.mono({{"x", 1}, {"g", 1}}), b.k(1)}}));
    if (gfree) {
        b.rule("gi", "x", b.poly({{b.mono({{"x", 1}, {"gi", 1}}), b.k(1)}}));
        b.rule("gi", "y", b.poly({{b.mono({{"y", 1}, {"gi", 1}}), b.k(1)}, {b.mono({{"x", 1}, {"gi", 1}}), -b.k(1)}}));
        b.rule("gi", "g", b.rs->one());
        b.rule("g", "gi", b.rs->one());
    } else {
        b.power("g", cfg.p, b.rs->one());
    }
    if (xbound) b.power("x", xbound, NCPoly<K>::zero());
    if (ybound) {
        NCPoly<K> rhs;
        if (a_coef != 0 && !(xbound && ybound >= xbound)) {
            Mono m(gens.size());
            m.e[0] = static_cast<uint16_t>(ybound);
            rhs.add_term(m, b.k(a_coef));
        }
        b.power("y", ybound, rhs);
    }
    AlgebraSpec<K> A;
    A.name = name;
    A.rs = b.rs;
    A.has_hopf = true;
    A.cop = {b.skew("x", "g"), b.skew("y", "g"), b.grouplike("g")};
    A.counit_vals = {b.k(0), b.k(0), b.k(1)};
    if (gfree) {
        A.cop.push_back(b.grouplike("gi"));
        A.counit_vals.push_back(b.k(1));
    }
    return A;
}

template <ScalarField K>
AlgebraSpec<K> h(const FieldCfg& cfg) {
    return bosonized<K>(cfg, "H", cfg.p, cfg.p, 0, false);
}
template <ScalarField K>
AlgebraSpec<K> htilde(const FieldCfg& cfg) {
    return bosonized<K>(cfg, "Htilde", 0, 0, 0, true);
}
template <ScalarField K>
AlgebraSpec<K> bos_g(const FieldCfg& cfg, unsigned k, unsigned l, long long a) {
    return bosonized<K>(cfg, "G(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(a) + ")#kG",
                        upow(cfg.p, l), upow(cfg.p, k), a, false);
}
template <ScalarField K>
AlgebraSpec<K> bos_k(const FieldCfg& cfg, unsigned k, long long a) {
    return bosonized<K>(cfg, "K(" + std::to_string(k) + "," + std::to_string(a) + ")#kG", 0, upow(cfg.p, k), a, false);
}
template <ScalarField K>
AlgebraSpec<K> bos_f(const FieldCfg& cfg, unsigned l) {
    return bosonized<K>(cfg, "F(" + std::to_string(l) + ")#kG", upow(cfg.p, l), 0, 0, false);
}

// --- the double of the group algebra ------------------------------------

template <ScalarField K>
AlgebraSpec<K> dkgamma(const FieldCfg& cfg) {
    Builder<K> b(cfg, {{"g", cfg.p, 0, 0}, {"zeta", cfg.p, 0, 0}});
    b.rule("zeta", "g", b.poly({{b.mono({{"g", 1}, {"zeta", 1}}), b.k(1)}}));
    b.power("g", cfg.p, b.rs->one());
    b.power("zeta", cfg.p, b.rs->gen("zeta"));
    AlgebraSpec<K> A;
    A.name = "D(kGamma)";
    A.rs = b.rs;
    A.has_hopf = true;
    A.cop = {b.grouplike("g"), b.primitive("zeta")};
    A.counit_vals = {b.k(1), b.k(0)};
    return A;
}

// --- dual side: H^{*op} and Ktilde ---------------------------------------

template <ScalarField K>
AlgebraSpec<K> dual_side(const FieldCfg& cfg, const std::string& name, bool restricted) {
    unsigned bound = restricted ? cfg.p : 0;
    Builder<K> b(cfg, {{"zeta", restricted ? cfg.p : 0, 0, 0}, {"u", bound, 1, 0}, {"v", bound, 1, 0}});
    b.rule("u", "zeta", b.poly({{b.mono({{"zeta", 1}, {"u", 1}}), b.k(1)}, {b.mono({{"u", 1}}), b.k(1)}}));
    b.rule("v", "zeta", b.poly({{b.mono({{"zeta", 1}, {"v", 1}}), b.k(1)}, {b.mono({{"v", 1}}), b.k(1)}}));
    b.rule("v", "u", b.poly({{b.mono({{"u", 1}, {"v", 1}}), b.k(1)}, {b.mono({{"u", 2}}), -b.half()}}));
    if (restricted) {
        b.power("zeta", cfg.p, b.rs->gen("zeta"));
        b.power("u", cfg.p, NCPoly<K>::zero());
        b.power("v", cfg.p, NCPoly<K>::zero());
    }
    AlgebraSpec<K> A;
    A.name = name;
    A.rs = b.rs;
    A.has_hopf = true;
    Tensor2<K> dv = b.primitive("v");
    dv.add_term({b.mono({{"zeta", 1}}), b.mono({{"u", 1}})}, b.k(1));
    A.cop = {b.primitive("zeta"), b.primitive("u"), dv};
    A.counit_vals = {b.k(0), b.k(0), b.k(0)};
    return A;
}

template <ScalarField K>
AlgebraSpec<K> hstarop(const FieldCfg& cfg) {
    return dual_side<K>(cfg, "H*op", true);
}
template <ScalarField K>
AlgebraSpec<K> ktilde(const FieldCfg& cfg) {
    return dual_side<K>(cfg, "Ktilde", false);
}

// --- the doubles ---------------------------------------------------------

/// Shared construction for D(H) (restricted) and Dtilde (free, with an
/// explicit inverse of g).
template <ScalarField K>
AlgebraSpec<K> double_algebra(const FieldCfg& cfg, const std::string& name, bool restricted) {
    unsigned p = cfg.p;
    unsigned nil = restricted ? p : 0;
    std::vector<GenSymbol> gens{{"x", nil, -1, 0}, {"y", nil, -1, 0}};
    if (restricted) {
        gens.push_back({"g", p, 0, 0});
    } else {
        gens.push_back({"g", 0, 0, 0});
        gens.push_back({"gi", 0, 0, 0});
    }
    gens.push_back({"zeta", restricted ? p : 0, 0, 0});
    gens.push_back({"u", nil, 1, 0});
    gens.push_back({"v", nil, 1, 0});
    Builder<K> b(cfg, gens);

    auto one_of = [&](const std::string& n) { return b.mono({{n, 1}}); };
    auto two = [&](const std::string& m, const std::string& n) { return b.mono({{m, 1}, {n, 1}}); };

    // (1.1)-shape
    b.rule("y", "x", b.poly({{two("x", "y"), b.k(1)}, {b.mono({{"x", 2}}), -b.half()}}));
    b.rule("g", "x", b.poly({{two("x", "g"), b.k(1)}}));
    b.rule("g", "y", b.poly({{two("y", "g"), b.k(1)}, {two("x", "g"), b.k(1)}}));
    // (1.4)-shape
    b.rule("zeta", "g", b.poly({{two("g", "zeta"), b.k(1)}}));
    // (1.6)-shape
    b.rule("u", "zeta", b.poly({{two("zeta", "u"), b.k(1)}, {one_of("u"), b.k(1)}}));
    b.rule("v", "zeta", b.poly({{two("zeta", "v"), b.k(1)}, {one_of("v"), b.k(1)}}));
    b.rule("v", "u", b.poly({{two("u", "v"), b.k(1)}, {b.mono({{"u", 2}}), -b.half()}}));
    // (1.9)-shape cross relations
    b.rule("zeta", "x", b.poly({{two("x", "zeta"), b.k(1)}, {one_of("x"), b.k(1)}}));
    b.rule("zeta", "y", b.poly({{two("y", "zeta"), b.k(1)}, {one_of("y"), b.k(1)}}));
    b.rule("u", "x", b.poly({{two("x", "u"), b.k(1)}}));
    b.rule("u", "y", b.poly({{two("y", "u"), b.k(1)}, {Mono(gens.size()), b.k(1)}, {one_of("g"), -b.k(1)}}));
    b.rule("u", "g", b.poly({{two("g", "u"), b.k(1)}}));
    b.rule("v", "x",
           b.poly({{two("x", "v"), b.k(1)}, {Mono(gens.size()), b.k(1)}, {one_of("g"), -b.k(1)}, {two("x", "u"), b.k(1)}}));
    b.rule("v", "y",
           b.poly({{two("y", "v"), b.k(1)}, {two("g", "zeta"), -b.k(1)}, {two("y", "u"), b.k(1)}}));
    b.rule("v", "g", b.poly({{two("g", "v"), b.k(1)}, {two("g", "u"), b.k(1)}}));

    if (restricted) {
        b.power("x", p, NCPoly<K>::zero());
        b.power("y", p, NCPoly<K>::zero());
        b.power("u", p, NCPoly<K>::zero());
        b.power("v", p, NCPoly<K>::zero());
        b.power("g", p, b.rs->one());
        b.power("zeta", p, b.rs->gen("zeta"));
    } else {
        // rules for the inverse letter, conjugation-derived
        b.rule("gi", "x", b.poly({{two("x", "gi"), b.k(1)}}));
        b.rule("gi", "y", b.poly({{two("y", "gi"), b.k(1)}, {two("x", "gi"), -b.k(1)}}));
        b.rule("gi", "g", b.rs->one());
        b.rule("g", "gi", b.rs->one());
        b.rule("zeta", "gi", b.poly({{two("gi", "zeta"), b.k(1)}}));
        b.rule("u", "gi", b.poly({{two("gi", "u"), b.k(1)}}));
        b.rule("v", "gi", b.poly({{two("gi", "v"), b.k(1)}, {two("gi", "u"), -b.k(1)}}));
    }

    AlgebraSpec<K> A;
    A.name = name;
    A.rs = b.rs;
    A.has_hopf = true;
    A.cop.assign(gens.size(), Tensor2<K>());
    A.counit_vals.assign(gens.size(), b.k(0));
    A.cop[b["x"]] = b.skew("x", "g");
    A.cop[b["y"]] = b.skew("y", "g");
    A.cop[b["g"]] = b.grouplike("g");
    A.counit_vals[b["g"]] = b.k(1);
    if (!restricted) {
        A.cop[b["gi"]] = b.grouplike("gi");
        A.counit_vals[b["gi"]] = b.k(1);
    }
    A.cop[b["zeta"]] = b.primitive("zeta");
    A.cop[b["u"]] = b.primitive("u");
    Tensor2<K> dv = b.primitive("v");
    dv.add_term({b.mono({{"zeta", 1}}), b.mono({{"u", 1}})}, b.k(1));
    A.cop[b["v"]] = dv;
    return A;
}

template <ScalarField K>
AlgebraSpec<K> dh(const FieldCfg& cfg) {
    return double_algebra<K>(cfg, "D(H)", true);
}
template <ScalarField K>
AlgebraSpec<K> dtilde(const FieldCfg& cfg) {
    return double_algebra<K>(cfg, "Dtilde", false);
}

// --- enveloping algebras of sl2 ------------------------------------------

/// Cartan normalization as in the quotient maps from the doubles: h is half
/// the usual coroot, so [h,e] = e, [h,f] = -f, [e,f] = 2h. The restriction
/// relations e^p = f^p = 0, h^p = h are unaffected (2^{p-1} = 1 in F_p).
template <ScalarField K>
AlgebraSpec<K> sl2(const FieldCfg& cfg, bool restricted) {
    unsigned bound = restricted ? cfg.p : 0;
    Builder<K> b(cfg, {{"e", bound, -1, 0}, {"f", bound, 1, 0}, {"h", restricted ? cfg.p : 0, 0, 0}});
    b.rule("f", "e", b.poly({{b.mono({{"e", 1}, {"f", 1}}), b.k(1)}, {b.mono({{"h", 1}}), -b.k(2)}}));
    b.rule("h", "e", b.poly({{b.mono({{"e", 1}, {"h", 1}}), b.k(1)}, {b.mono({{"e", 1}}), b.k(1)}}));
    b.rule("h", "f", b.poly({{b.mono({{"f", 1}, {"h", 1}}), b.k(1)}, {b.mono({{"f", 1}}), -b.k(1)}}));
    if (restricted) {
        b.power("e", cfg.p, NCPoly<K>::zero());
        b.power("f", cfg.p, NCPoly<K>::zero());
        b.power("h", cfg.p, b.rs->gen("h"));
    }
    AlgebraSpec<K> A;
    A.name = restricted ? "u(sl2)" : "U(sl2)";
    A.rs = b.rs;
    A.has_hopf = true;
    A.cop = {b.primitive("e"), b.primitive("f"), b.primitive("h")};
    A.counit_vals = {b.k(0), b.k(0), b.k(0)};
    return A;
}

template <ScalarField K>
AlgebraSpec<K> usl2(const FieldCfg& cfg) {
    return sl2<K>(cfg, true);
}
template <ScalarField K>
AlgebraSpec<K> Usl2(const FieldCfg& cfg) {
    return sl2<K>(cfg, false);
}

// --- commutative Hopf subalgebras ----------------------------------------

/// R = k[g,x,u]/(g^p-1, x^p, u^p) and O(G) = k[x,u,g^{pm1}], with
/// Delta(x) = x (x) 1 + g (x) x and u primitive.
template <ScalarField K>
AlgebraSpec<K> normal_sub(const FieldCfg& cfg, const std::string& name, bool restricted) {
    unsigned bound = restricted ? cfg.p : 0;
    std::vector<GenSymbol> gens{{"x", bound, -1, 0}, {"u", bound, 1, 0}};
    if (restricted) {
        gens.push_back({"g", cfg.p, 0, 0});
    } else {
        gens.push_back({"g", 0, 0, 0});
        gens.push_back({"gi", 0, 0, 0});
    }
    Builder<K> b(cfg, gens);
    b.rule("u", "x", b.poly({{b.mono({{"x", 1}, {"u", 1}}), b.k(1)}}));
    b.rule("g", "x", b.poly({{b.mono({{"x", 1}, {"g", 1}}), b.k(1)}}));
    b.rule("g", "u", b.poly({{b.mono({{"u", 1}, {"g", 1}}), b.k(1)}}));
    if (restricted) {
        b.power("x", cfg.p, NCPoly<K>::zero());
        b.power("u", cfg.p, NCPoly<K>::zero());
        b.power("g", cfg.p, b.rs->one());
    } else {
        b.rule("gi", "x", b.poly({{b.mono({{"x", 1}, {"gi", 1}}), b.k(1)}}));
        b.rule("gi", "u", b.poly({{b.mono({{"u", 1}, {"gi", 1}}), b.k(1)}}));
        b.rule("gi", "g", b.rs->one());
        b.rule("g", "gi", b.rs->one());
    }
    AlgebraSpec<K> A;
    A.name = name;
    A.rs = b.rs;
    A.has_hopf = true;
    A.cop = {b.skew("x", "g"), b.primitive("u"), b.grouplike("g")};
    A.counit_vals = {b.k(0), b.k(0), b.k(1)};
    if (!restricted) {
        A.cop.push_back(b.grouplike("gi"));
        A.counit_vals.push_back(b.k(1));
    }
    return A;
}

template <ScalarField K>
AlgebraSpec<K> r_sub(const FieldCfg& cfg) {
    return normal_sub<K>(cfg, "R", true);
}
template <ScalarField K>
AlgebraSpec<K> og(const FieldCfg& cfg) {
    return normal_sub<K>(cfg, "O(G)", false);
}

/// O(B) = Z abstractly: k[T^{pm1}] (x) k[X1..X5] with the Hopf structure of
/// the central subalgebra of Dtilde generated by g^p, x^p, y^p, zeta^(p),
/// u^p, v^p.
template <ScalarField K>
AlgebraSpec<K> ob(const FieldCfg& cfg) {
    Builder<K> b(cfg, {{"X1", 0, 0, 0},
                       {"X2", 0, 0, 0},
                       {"X3", 0, 0, 0},
                       {"X4", 0, 0, 0},
                       {"X5", 0, 0, 0},
                       {"T", 0, 0, 0},
                       {"Ti", 0, 0, 0}});
    std::vector<std::string> names{"X1", "X2", "X3", "X4", "X5", "T", "Ti"};
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            if (names[i] == "Ti" && names[j] == "T") {
                b.rule("Ti", "T", b.rs->one());
                continue;
            }
            b.rule(names[i], names[j], b.poly({{b.mono({{names[j], 1}, {names[i], 1}}), b.k(1)}}));
        }
    b.rule("T", "Ti", b.rs->one());
    AlgebraSpec<K> A;
    A.name = "O(B)";
    A.rs = b.rs;
    A.has_hopf = true;
    A.cop = {b.skew("X1", "T"), b.skew("X2", "T"), b.primitive("X3"), b.primitive("X4"), Tensor2<K>(),
             b.grouplike("T"), b.grouplike("Ti")};
    Tensor2<K> d5 = b.primitive("X5");
    d5.add_term({b.mono({{"X3", 1}}), b.mono({{"X4", 1}})}, b.k(1));
    A.cop[4] = d5;
    A.counit_vals = {b.k(0), b.k(0), b.k(0), b.k(0), b.k(0), b.k(1), b.k(1)};
    return A;
}

/// O(Ga^3): free commutative on three primitive generators.
template <ScalarField K>
AlgebraSpec<K> oga3(const FieldCfg& cfg) {
    Builder<K> b(cfg, {{"A1", 0, 0, 0}, {"A2", 0, 0, 0}, {"A3", 0, 0, 0}});
    std::vector<std::string> names{"A1", "A2", "A3"};
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            b.rule(names[i], names[j], b.poly({{b.mono({{names[j], 1}, {names[i], 1}}), b.k(1)}}));
    AlgebraSpec<K> A;
    A.name = "O(Ga^3)";
    A.rs = b.rs;
    A.has_hopf = true;
    A.cop = {b.primitive("A1"), b.primitive("A2"), b.primitive("A3")};
    A.counit_vals = {b.k(0), b.k(0), b.k(0)};
    return A;
}

} // namespace catalog
} // namespace rjp
