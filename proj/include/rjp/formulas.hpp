#pragma once

#include "combinat.hpp"
#include "catalog.hpp"
#include "report.hpp"

namespace rjp {

/// Small helpers for spelling out closed formulas against an algebra.
template <ScalarField K>
struct FormulaOps {
    const AlgebraSpec<K>& A;
    explicit FormulaOps(const AlgebraSpec<K>& a) : A(a) {}

    bool has(const char* n) const {
        for (auto& g : A.sys().gens())
            if (g.name == n) return true;
        return false;
    }
    Mono m(std::initializer_list<std::pair<const char*, unsigned>> exps) const {
        Mono r(A.ngens());
        for (auto& [n, e] : exps) r.e[A.sys().letter(n)] = static_cast<uint16_t>(e);
        return r;
    }
    Word w(std::initializer_list<std::pair<const char*, unsigned>> runs) const {
        Word r;
        for (auto& [n, e] : runs) r.insert(r.end(), e, A.sys().letter(n));
        return r;
    }
    K k(long long v) const { return A.scalar(v); }
    K half_pow(unsigned i) const { return (k(1) / k(2)).pow(i); }
    K sgn(unsigned i) const { return i % 2 ? k(-1) : k(1); }
    K binom(long n, long kk) const { return binomial<K>(n, kk, A.field()); }
    K raise(long long t, long kk) const { return raising_factorial<K>(k(t), kk, A.field()); }
    K stir(long n, long kk) const { return stirling<K>(n, kk, A.field()); }
    K fact(long n) const { return factorial<K>(n, A.field()); }
    K ipow(long long b, unsigned e) const { return k(b).pow(e); }
};

/// Compare the normal form of `lhs` against the displayed right-hand side.
/// A mismatch is recorded as a discrepancy carrying the machine-computed
/// correction, never silently fixed.
template <ScalarField K>
void check_identity(Report& rep, const AlgebraSpec<K>& A, const std::string& id, const std::string& ref,
                    const std::string& params, const Word& lhs, const NCPoly<K>& rhs_printed) {
    NCPoly<K> lhs_nf = A.sys().normalize_word(lhs);
    if (lhs_nf == rhs_printed) {
        rep.add(id, ref, params, Status::Pass);
    } else {
        NCPoly<K> diff = lhs_nf - rhs_printed;
        rep.add(id, ref, params, Status::Discrepancy,
                "computed: " + lhs_nf.str(A.sys().names()) + " | printed-minus-computed: " +
                    (-diff).str(A.sys().names()));
    }
}

template <ScalarField K>
void check_tensor_identity(Report& rep, const AlgebraSpec<K>& A, const std::string& id, const std::string& ref,
                           const std::string& params, const Mono& arg, const Tensor2<K>& rhs_printed) {
    Tensor2<K> lhs = coproduct_mono(A, arg);
    if (lhs == rhs_printed) {
        rep.add(id, ref, params, Status::Pass);
    } else {
        rep.add(id, ref, params, Status::Discrepancy, "computed: " + lhs.str(A.sys().names()));
    }
}

/// All displayed commutation identities, instantiated for indices <= N.
/// Families whose letters are absent from the algebra are skipped, so the
/// same driver serves Dtilde, H, Htilde and Btilde.
template <ScalarField K>
Report verify_commutation_formulas(const AlgebraSpec<K>& A, unsigned N) {
    Report rep;
    rep.suite = "commutation";
    rep.p = A.field().p;
    FormulaOps<K> F(A);
    auto ps = [&](std::initializer_list<std::pair<const char*, long long>> vals) {
        std::string s;
        for (auto& [n, v] : vals) s += std::string(s.empty() ? "" : " ") + n + "=" + std::to_string(v);
        return s;
    };

    bool zeta = F.has("zeta"), uv = F.has("u"), gg = F.has("g"), xy = F.has("x");

    if (zeta && xy)
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned m = 1; m <= N; ++m) {
                NCPoly<K> rhs1, rhs2;
                for (unsigned l = 0; l <= n; ++l) {
                    K c = F.binom(n, l) * F.ipow(m, n - l);
                    rhs1.add_term(F.m({{"x", m}, {"zeta", l}}), c);
                    rhs2.add_term(F.m({{"y", m}, {"zeta", l}}), c);
                }
                check_identity(rep, A, "comm.zx", "(2.5) zeta^n x^m", ps({{"n", n}, {"m", m}}),
                               F.w({{"zeta", n}, {"x", m}}), rhs1);
                check_identity(rep, A, "comm.zy", "(2.5) zeta^n y^m", ps({{"n", n}, {"m", m}}),
                               F.w({{"zeta", n}, {"y", m}}), rhs2);
            }
    if (zeta && uv)
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned m = 1; m <= N; ++m) {
                NCPoly<K> rhs1, rhs2;
                for (unsigned l = 0; l <= n; ++l) {
                    K c = F.binom(n, l) * F.ipow(m, n - l);
                    rhs1.add_term(F.m({{"zeta", l}, {"v", m}}), c);
                    rhs2.add_term(F.m({{"zeta", l}, {"u", m}}), c);
                }
                check_identity(rep, A, "comm.vz", "(2.5) v^m zeta^n", ps({{"m", m}, {"n", n}}),
                               F.w({{"v", m}, {"zeta", n}}), rhs1);
                check_identity(rep, A, "comm.uz", "(2.5) u^m zeta^n", ps({{"m", m}, {"n", n}}),
                               F.w({{"u", m}, {"zeta", n}}), rhs2);
            }
    if (gg && xy)
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned l = 1; l <= N; ++l) {
                NCPoly<K> rhs;
                for (unsigned kk = 0; kk <= l; ++kk)
                    rhs.add_term(F.m({{"x", kk}, {"y", l - kk}, {"g", n}}),
                                 F.binom(l, kk) * F.sgn(kk) * F.raise(-2 * static_cast<long long>(n), kk) * F.half_pow(kk));
                check_identity(rep, A, "comm.gy", "(1.3)/(2.5) g^n y^l", ps({{"n", n}, {"l", l}}),
                               F.w({{"g", n}, {"y", l}}), rhs);
            }
    if (xy)
        for (unsigned l = 1; l <= N; ++l)
            for (unsigned n = 1; n <= N; ++n) {
                NCPoly<K> rhs;
                for (unsigned kk = 0; kk <= l; ++kk)
                    rhs.add_term(F.m({{"x", n + kk}, {"y", l - kk}}),
                                 F.binom(l, kk) * F.sgn(kk) * F.raise(n, kk) * F.half_pow(kk));
                check_identity(rep, A, "comm.yx", "(1.3)/(2.5) y^l x^n", ps({{"l", l}, {"n", n}}),
                               F.w({{"y", l}, {"x", n}}), rhs);
            }
    if (uv)
        for (unsigned l = 1; l <= N; ++l)
            for (unsigned n = 1; n <= N; ++n) {
                NCPoly<K> rhs;
                for (unsigned kk = 0; kk <= l; ++kk)
                    rhs.add_term(F.m({{"u", n + kk}, {"v", l - kk}}),
                                 F.binom(l, kk) * F.sgn(kk) * F.raise(n, kk) * F.half_pow(kk));
                check_identity(rep, A, "comm.vu", "(2.5) v^l u^n", ps({{"l", l}, {"n", n}}), F.w({{"v", l}, {"u", n}}),
                               rhs);
            }
    if (uv && gg)
        for (unsigned l = 1; l <= N; ++l)
            for (unsigned n = 1; n <= N; ++n) {
                NCPoly<K> rhs;
                for (unsigned kk = 0; kk <= l; ++kk)
                    rhs.add_term(F.m({{"g", n}, {"u", kk}, {"v", l - kk}}),
                                 F.binom(l, kk) * F.sgn(kk) * F.raise(-2 * static_cast<long long>(n), kk) * F.half_pow(kk));
                check_identity(rep, A, "comm.vg", "(2.5) v^l g^n", ps({{"l", l}, {"n", n}}), F.w({{"v", l}, {"g", n}}),
                               rhs);
            }
    if (uv && xy && gg) {
        for (unsigned n = 1; n <= N; ++n) {
            // v x^n = x^n v + n x^{n-1}(1 - g) + n x^n u
            NCPoly<K> rhs;
            rhs.add_term(F.m({{"x", n}, {"v", 1}}), F.k(1));
            rhs.add_term(F.m({{"x", n - 1}}), F.k(n));
            rhs.add_term(F.m({{"x", n - 1}, {"g", 1}}), -F.k(n));
            rhs.add_term(F.m({{"x", n}, {"u", 1}}), F.k(n));
            check_identity(rep, A, "comm.vxn", "(2.5) v x^n", ps({{"n", n}}), F.w({{"v", 1}, {"x", n}}), rhs);
        }
        for (unsigned n = 1; n <= N; ++n) {
            // v^n x as printed
            NCPoly<K> rhs;
            long long nn = n;
            rhs.add_term(F.m({{"x", 1}, {"v", n}}), F.k(1));
            rhs.add_term(F.m({{"x", 1}, {"u", 1}, {"v", n - 1}}), F.k(nn));
            if (n >= 2) rhs.add_term(F.m({{"x", 1}, {"u", 2}, {"v", n - 2}}), F.k(nn * (nn - 1)) / F.k(4));
            rhs.add_term(F.m({{"v", n - 1}}), F.k(nn));
            if (n >= 2) rhs.add_term(F.m({{"u", 1}, {"v", n - 2}}), F.k(nn * (nn - 1)) / F.k(2));
            rhs.add_term(F.m({{"g", 1}, {"v", n - 1}}), -F.k(nn));
            if (n >= 2) rhs.add_term(F.m({{"g", 1}, {"u", 1}, {"v", n - 2}}), -F.k(nn * (nn - 1)));
            if (n >= 3) rhs.add_term(F.m({{"g", 1}, {"u", 2}, {"v", n - 3}}), -F.k(nn * (nn - 1) * (nn - 2)) / F.k(4));
            check_identity(rep, A, "comm.vnx", "(2.5) v^n x", ps({{"n", n}}), F.w({{"v", n}, {"x", 1}}), rhs);
        }
        if (zeta)
            for (unsigned n = 1; n <= N; ++n) {
                // v^n y as printed (the y u v^{n-2} term is the flagged one)
                NCPoly<K> rhs;
                long long nn = n;
                rhs.add_term(F.m({{"y", 1}, {"v", n}}), F.k(1));
                rhs.add_term(F.m({{"y", 1}, {"u", 1}, {"v", n - 1}}), F.k(nn));
                if (n >= 2) rhs.add_term(F.m({{"y", 1}, {"u", 1}, {"v", n - 2}}), -F.k(nn * (nn - 1)) / F.k(4));
                rhs.add_term(F.m({{"g", 1}, {"zeta", 1}, {"v", n - 1}}), -F.k(nn));
                if (n >= 2) rhs.add_term(F.m({{"g", 1}, {"zeta", 1}, {"u", 1}, {"v", n - 2}}), -F.k(nn * (nn - 1)));
                if (n >= 3)
                    rhs.add_term(F.m({{"g", 1}, {"zeta", 1}, {"u", 2}, {"v", n - 3}}),
                                 -F.k(nn * (nn - 1) * (nn - 2)) / F.k(4));
                if (n >= 2) rhs.add_term(F.m({{"g", 1}, {"v", n - 1}}), -F.k(nn * (nn - 1)) / F.k(2));
                if (n >= 2) rhs.add_term(F.m({{"g", 1}, {"u", 1}, {"v", n - 2}}), -F.k(nn * (nn - 1) * (nn - 1)) / F.k(2));
                if (n >= 3)
                    rhs.add_term(F.m({{"g", 1}, {"u", 2}, {"v", n - 3}}),
                                 -F.k(nn * (nn - 1) * (nn - 1) * (nn - 2)) / F.k(8));
                check_identity(rep, A, "comm.vny", "(2.5) v^n y", ps({{"n", n}}), F.w({{"v", n}, {"y", 1}}), rhs);
            }
        for (unsigned n = 1; n <= N; ++n) {
            // u y^n = y^n u + n y^{n-1} - sum_k binom(n,k+1)(k+1)!/2^k y^{n-1-k} x^k g
            NCPoly<K> rhs;
            rhs.add_term(F.m({{"y", n}, {"u", 1}}), F.k(1));
            rhs.add_term(F.m({{"y", n - 1}}), F.k(n));
            for (unsigned kk = 0; kk + 1 <= n; ++kk) {
                K c = F.binom(n, kk + 1) * F.fact(kk + 1) * F.half_pow(kk);
                rhs.add_term(F.m({{"x", kk}, {"y", n - 1 - kk}, {"g", 1}}), -c);
            }
            check_identity(rep, A, "comm.uyn", "(2.5) u y^n", ps({{"n", n}}), F.w({{"u", 1}, {"y", n}}), rhs);
        }
        if (zeta)
            for (unsigned n = 1; n <= N; ++n) {
                // v y^n as printed
                NCPoly<K> rhs;
                long long nn = n;
                rhs.add_term(F.m({{"y", n}, {"v", 1}}), F.k(1));
                rhs.add_term(F.m({{"y", n}, {"u", 1}}), F.k(nn));
                if (n >= 2) rhs.add_term(F.m({{"y", n - 1}}), F.k(nn * (nn - 1)) / F.k(2));
                for (unsigned kk = 0; kk + 1 <= n; ++kk) {
                    K fac = F.fact(kk + 1);
                    K c1 = F.binom(n, kk + 1) * fac * F.half_pow(kk);
                    rhs.add_term(F.m({{"x", kk}, {"y", n - 1 - kk}, {"g", 1}, {"zeta", 1}}), -c1);
                    K c2 = F.binom(n, kk + 1) * F.k(nn - 1) * fac * F.half_pow(kk);
                    rhs.add_term(F.m({{"x", kk}, {"y", n - 1 - kk}, {"g", 1}}), -c2);
                }
                check_identity(rep, A, "comm.vyn", "(2.5) v y^n", ps({{"n", n}}), F.w({{"v", 1}, {"y", n}}), rhs);
            }
        for (unsigned n = 1; n <= N; ++n) {
            // u^n y = y u^n + n(1-g)u^{n-1}
            NCPoly<K> rhs;
            rhs.add_term(F.m({{"y", 1}, {"u", n}}), F.k(1));
            rhs.add_term(F.m({{"u", n - 1}}), F.k(n));
            rhs.add_term(F.m({{"g", 1}, {"u", n - 1}}), -F.k(n));
            check_identity(rep, A, "comm.uny", "(2.5) u^n y", ps({{"n", n}}), F.w({{"u", n}, {"y", 1}}), rhs);
        }
    }
    return rep;
}

/// The action identity g acts on y^n, verified against the Jordan plane's
/// group-like Yetter-Drinfeld action.
template <ScalarField K>
Report verify_action_formula(const AlgebraSpec<K>& bt, unsigned N) {
    Report rep;
    rep.suite = "action";
    rep.p = bt.field().p;
    FormulaOps<K> F(bt);
    for (unsigned n = 1; n <= N; ++n) {
        Mono yn = F.m({{"y", n}});
        NCPoly<K> lhs = bt.act_power_mono(yn, 1);
        NCPoly<K> rhs;
        rhs.add_term(yn, F.k(1));
        rhs.add_term(F.m({{"x", 1}, {"y", n - 1}}), F.k(n));
        if (n >= 2)
            rhs.add_term(F.m({{"x", 2}, {"y", n - 2}}),
                         F.k(static_cast<long long>(n) * n - n) / F.k(4));
        if (lhs == rhs)
            rep.add("act.gyn", "(3.1) g>y^n", "n=" + std::to_string(n), Status::Pass);
        else
            rep.add("act.gyn", "(3.1) g>y^n", "n=" + std::to_string(n), Status::Discrepancy,
                    "computed: " + lhs.str(bt.sys().names()));
    }
    return rep;
}

/// All displayed coproduct and coaction formulas, instantiated up to N.
template <ScalarField K>
Report verify_coproduct_formulas(const AlgebraSpec<K>& dt, const AlgebraSpec<K>& bt, const AlgebraSpec<K>& bh,
                                 unsigned N) {
    Report rep;
    rep.suite = "coproducts";
    rep.p = dt.field().p;
    unsigned p = dt.field().p;

    { // Dtilde side: Delta(x^n), Delta(y^n), (2.7)
        FormulaOps<K> F(dt);
        for (unsigned n = 1; n <= N; ++n) {
            Tensor2<K> rhs;
            for (unsigned kk = 0; kk <= n; ++kk)
                rhs.add_term({F.m({{"x", n - kk}, {"g", kk}}), F.m({{"x", kk}})}, F.binom(n, kk));
            check_tensor_identity(rep, dt, "cop.xn", "(2.5) Delta(x^n)", "n=" + std::to_string(n), F.m({{"x", n}}),
                                  rhs);
        }
        for (unsigned n = 1; n <= N; ++n) {
            Tensor2<K> rhs;
            for (unsigned kk = 0; kk <= n; ++kk)
                for (unsigned i = 0; i <= kk; ++i)
                    rhs.add_term({F.m({{"x", i}, {"y", kk - i}, {"g", n - kk}}), F.m({{"y", n - kk}})},
                                 F.binom(n, kk) * F.binom(kk, i) * F.sgn(i) * F.raise(static_cast<long long>(n) - kk, i) *
                                     F.half_pow(i));
            check_tensor_identity(rep, dt, "cop.yn", "(2.5) Delta(y^n)", "n=" + std::to_string(n), F.m({{"y", n}}),
                                  rhs);
        }
        if (p) {
            Tensor2<K> rhs;
            Mono one(dt.ngens());
            rhs.add_term({F.m({{"v", p}}), one}, F.k(1));
            rhs.add_term({one, F.m({{"v", p}})}, F.k(1));
            rhs.add_term({F.m({{"zeta", p}}), F.m({{"u", p}})}, F.k(1));
            rhs.add_term({F.m({{"zeta", 1}}), F.m({{"u", p}})}, -F.k(1));
            check_tensor_identity(rep, dt, "cop.vp", "(2.7) Delta(v^p)", "", F.m({{"v", p}}), rhs);
        }
    }
    { // Jordan plane side: (3.2), (3.3), (3.4), and the mixed display
        FormulaOps<K> F(bt);
        Mono one(bt.ngens());
        for (unsigned n = 1; n <= N; ++n) {
            Tensor2<K> rhs;
            for (unsigned kk = 0; kk <= n; ++kk) rhs.add_term({F.m({{"x", n - kk}}), F.m({{"x", kk}})}, F.binom(n, kk));
            check_tensor_identity(rep, bt, "cop.b.xn", "(3.2) Delta(x^n)", "n=" + std::to_string(n), F.m({{"x", n}}),
                                  rhs);
        }
        for (unsigned n = 1; n <= N; ++n) {
            Tensor2<K> rhs;
            for (unsigned kk = 0; kk <= n; ++kk)
                for (unsigned i = 0; i <= kk; ++i)
                    rhs.add_term({F.m({{"x", i}, {"y", kk - i}}), F.m({{"y", n - kk}})},
                                 F.binom(n, kk) * F.binom(kk, i) * F.sgn(i) *
                                     F.raise(static_cast<long long>(kk) - n, i) * F.half_pow(i));
            check_tensor_identity(rep, bt, "cop.b.yn", "(3.3) Delta(y^n)", "n=" + std::to_string(n), F.m({{"y", n}}),
                                  rhs);
        }
        if (p)
            for (unsigned l = 1; p * l <= std::max(N, 2 * p); ++l) {
                Tensor2<K> rhs;
                rhs.add_term({F.m({{"y", p * l}}), one}, F.k(1));
                rhs.add_term({one, F.m({{"y", p * l}})}, F.k(1));
                for (unsigned t = 1; t < l; ++t)
                    rhs.add_term({F.m({{"y", p * t}}), F.m({{"y", p * (l - t)}})}, F.binom(l, t));
                check_tensor_identity(rep, bt, "cop.b.ypl", "(3.4) Delta(y^{pl})", "l=" + std::to_string(l),
                                      F.m({{"y", p * l}}), rhs);
            }
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned l = 0; l <= n; ++l) {
                Tensor2<K> rhs;
                for (unsigned kk = 0; kk <= n - l; ++kk)
                    for (unsigned t = 0; t <= l; ++t)
                        for (unsigned i = 0; i <= t; ++i)
                            rhs.add_term({F.m({{"x", n + i - l - kk}, {"y", t - i}}), F.m({{"x", kk}, {"y", l - t}})},
                                         F.binom(n - l, kk) * F.binom(l, t) * F.binom(t, i) * F.sgn(i) * F.half_pow(i) *
                                             F.raise(static_cast<long long>(t) - l - 2 * static_cast<long long>(kk), i));
                check_tensor_identity(rep, bt, "cop.b.mixed", "Delta(x^{n-l} y^l)",
                                      "n=" + std::to_string(n) + " l=" + std::to_string(l), F.m({{"x", n - l}, {"y", l}}),
                                      rhs);
            }
    }
    { // W side: braided Delta(v^n) and the coaction delta(v^n)
        FormulaOps<K> F(bh);
        Mono one(bh.ngens());
        for (unsigned n = 1; n <= N; ++n) {
            Tensor2<K> rhs;
            rhs.add_term({F.m({{"v", n}}), one}, F.k(1));
            rhs.add_term({one, F.m({{"v", n}})}, F.k(1));
            for (unsigned kk = 1; kk < n; ++kk)
                for (unsigned i = 0; i <= kk; ++i)
                    rhs.add_term({F.m({{"v", n - kk}}), F.m({{"u", i}, {"v", kk - i}})},
                                 F.binom(n, kk) * F.binom(kk, i) * F.raise(static_cast<long long>(n) - kk, i) *
                                     F.half_pow(i));
            check_tensor_identity(rep, bh, "cop.w.vn", "Delta_W(v^n)", "n=" + std::to_string(n), F.m({{"v", n}}), rhs);
        }
        for (unsigned n = 1; n <= N; ++n) {
            auto co = bh.coact_mono(F.m({{"v", n}}));
            // printed: 1 (x) v^n + zeta^n (x) u^n + sum_{k=1}^{n-1} sum_{t=k}^{n} ...
            std::map<unsigned, NCPoly<K>> rhs;
            rhs[0].add_term(F.m({{"v", n}}), F.k(1));
            rhs[n].add_term(F.m({{"u", n}}), F.k(1));
            for (unsigned kk = 1; kk < n; ++kk)
                for (unsigned t = kk; t <= n; ++t) {
                    K c = F.binom(n, t) * F.stir(t, kk) * F.half_pow(t - kk);
                    rhs[kk].add_term(F.m({{"u", t}, {"v", n - t}}), c);
                }
            for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
            bool same = co.size() == rhs.size();
            if (same)
                for (auto& [kk, poly] : rhs)
                    if (!co.count(kk) || !(co.at(kk) == poly)) same = false;
            rep.add("coact.w.vn", "delta_W(v^n)", "n=" + std::to_string(n), same ? Status::Pass : Status::Discrepancy,
                    same ? "" : "computed coaction differs");
        }
        if (p) {
            // the two facts behind (2.7): v^p is braided-primitive and its
            // coaction is 1 (x) v^p + (zeta^p - zeta) (x) u^p
            Tensor2<K> prim;
            prim.add_term({F.m({{"v", p}}), one}, F.k(1));
            prim.add_term({one, F.m({{"v", p}})}, F.k(1));
            check_tensor_identity(rep, bh, "cop.w.vp", "Delta_W(v^p) primitive", "", F.m({{"v", p}}), prim);
            auto co = bh.coact_mono(F.m({{"v", p}}));
            bool ok = co.size() == 3 && co.count(0) && co.count(1) && co.count(p);
            if (ok) {
                ok = co.at(0) == NCPoly<K>(F.m({{"v", p}}), F.k(1)) && co.at(p) == NCPoly<K>(F.m({{"u", p}}), F.k(1)) &&
                     co.at(1) == NCPoly<K>(F.m({{"u", p}}), -F.k(1));
            }
            rep.add("coact.w.vp", "delta_W(v^p) = 1(x)v^p + zeta^(p)(x)u^p", "", ok ? Status::Pass : Status::Fail);
        }
    }
    return rep;
}

} // namespace rjp
