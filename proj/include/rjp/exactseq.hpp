#pragma once

#include "catalog.hpp"
#include "linalg.hpp"
#include "morphism.hpp"

namespace rjp {

/// Indexing of the PBW monomials of a (possibly truncated) algebra, with
/// rows of the sparse echelon structure as coordinate vectors.
template <ScalarField K>
struct MonoIndex {
    std::vector<Mono> monos;
    std::map<Mono, size_t> index;

    explicit MonoIndex(std::vector<Mono> ms) : monos(std::move(ms)) {
        for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    }
    size_t size() const { return monos.size(); }

    typename SparseEchelon<K>::Row row(const NCPoly<K>& p, bool* in_range = nullptr) const {
        typename SparseEchelon<K>::Row r;
        if (in_range) *in_range = true;
        for (auto& [m, c] : p.terms()) {
            auto it = index.find(m);
            if (it == index.end()) {
                if (in_range) *in_range = false;
                continue;
            }
            r.emplace(it->second, c);
        }
        return r;
    }
};

struct SequenceReport {
    bool ok = true;
    std::vector<std::string> notes;
    std::vector<std::string> failures;
    void fail(const std::string& s) {
        ok = false;
        failures.push_back(s);
    }
};

/// Check exactness of A -> C -> B on the given monomial window of C:
///   (a) the images of A's basis are linearly independent,
///   (b) pi hits all of B (within the window),
///   (c) the two-sided ideal generated by iota(A+) equals ker pi as a
///       subspace of the window,
///   (d) normality of iota(A) (finite case only).
/// For infinite C the window is the span of PBW monomials of total length
/// <= truncation; products never leave it because normalization never
/// increases length.
template <ScalarField K>
SequenceReport verify_quotient_sequence(const AlgebraSpec<K>& A, const AlgebraSpec<K>& C, const AlgebraSpec<K>& B,
                                        const MorphismSpec<K>& iota, const MorphismSpec<K>& pi,
                                        std::optional<unsigned> truncation = std::nullopt) {
    SequenceReport rep;
    const auto& csys = C.sys();
    bool finite_C = true;
    for (auto& g : csys.gens())
        if (g.bound == 0) finite_C = false;
    if (!finite_C && !truncation) {
        rep.fail("infinite middle term requires a truncation degree");
        return rep;
    }

    MonoIndex<K> cwin(finite_C && !truncation ? enumerate_basis(csys) : enumerate_basis(csys, truncation));
    unsigned cap = truncation ? *truncation : 0;

    // (a) iota images of A's basis window are independent
    std::vector<Mono> abasis;
    {
        bool finite_A = true;
        for (auto& g : A.sys().gens())
            if (g.bound == 0) finite_A = false;
        unsigned acap = truncation ? *truncation : 0;
        if (!finite_A && !acap)
            for (auto& cm : cwin.monos) acap = std::max(acap, cm.length());
        abasis = finite_A && !truncation ? enumerate_basis(A.sys()) : enumerate_basis(A.sys(), acap);
    }
    SparseEchelon<K> iota_span;
    size_t indep = 0, considered = 0;
    for (auto& am : abasis) {
        NCPoly<K> img = iota.apply_mono(am);
        bool in_range = true;
        auto r = cwin.row(img, &in_range);
        if (!in_range) continue; // image leaves the window; skip rather than misjudge
        ++considered;
        if (iota_span.insert(std::move(r))) ++indep;
    }
    if (indep != considered) rep.fail("iota is not injective on the basis window");
    rep.notes.push_back("iota: " + std::to_string(indep) + " independent images of " + std::to_string(considered));

    // (b) pi surjective onto B's window. The image window must hold every
    // pi-image of a C-window monomial, so scale by the longest generator
    // image (an inverse letter can map to a power of another generator).
    bool finite_B = true;
    for (auto& g : B.sys().gens())
        if (g.bound == 0) finite_B = false;
    unsigned img_stretch = 1;
    for (auto& img : pi.images)
        for (auto& [m, c] : img.terms()) img_stretch = std::max(img_stretch, m.length());
    MonoIndex<K> bwin(finite_B ? enumerate_basis(B.sys())
                               : enumerate_basis(B.sys(), truncation ? *truncation * img_stretch : 0u));
    SparseEchelon<K> pi_image;
    for (auto& cm : cwin.monos) {
        NCPoly<K> img = pi.apply_mono(cm);
        pi_image.insert(bwin.row(img));
    }
    // surjectivity is asserted on the part the truncation can see
    size_t expected_hit = 0, hit = 0;
    for (auto& bm : bwin.monos) {
        if (truncation && bm.length() > *truncation) continue;
        ++expected_hit;
        typename SparseEchelon<K>::Row r{{bwin.index.at(bm), B.scalar(1)}};
        if (pi_image.contains(r)) ++hit;
    }
    if (hit != expected_hit) rep.fail("pi is not surjective onto the basis window");
    rep.notes.push_back("pi image covers " + std::to_string(hit) + " of " + std::to_string(expected_hit) +
                        " target monomials");

    // kernel dimension of pi on the window
    size_t ker_dim;
    {
        SparseEchelon<K> image_rows;
        size_t rank = 0;
        for (auto& cm : cwin.monos) {
            NCPoly<K> img = pi.apply_mono(cm);
            if (image_rows.insert(bwin.row(img))) ++rank;
        }
        ker_dim = cwin.size() - rank;
    }

    // (c) ideal generated by iota(A+): start from images of the augmentation
    // ideal of A and close under one-sided multiplication by generators.
    SparseEchelon<K> ideal;
    std::vector<NCPoly<K>> frontier;
    for (auto& am : abasis) {
        NCPoly<K> img = iota.apply_mono(am);
        K eps = counit(A, NCPoly<K>(am, A.scalar(1)));
        NCPoly<K> shifted = img - csys.one() * eps; // iota(a) - eps(a) 1
        if (shifted.is_zero()) continue;
        bool in_range = true;
        auto r = cwin.row(shifted, &in_range);
        if (!in_range) continue;
        if (ideal.insert(r)) frontier.push_back(shifted);
    }
    while (!frontier.empty()) {
        std::vector<NCPoly<K>> next;
        for (auto& v : frontier) {
            for (Letter g = 0; g < csys.ngens(); ++g) {
                for (bool left : {true, false}) {
                    NCPoly<K> prod = left ? csys.mul(csys.gen(g), v) : csys.mul(v, csys.gen(g));
                    if (cap) {
                        // drop products that leave the window; truncating
                        // them instead would poison the span
                        bool inside = true;
                        for (auto& [m, c] : prod.terms())
                            if (m.length() > cap) inside = false;
                        if (!inside) continue;
                    }
                    if (prod.is_zero()) continue;
                    if (ideal.insert(cwin.row(prod))) next.push_back(prod);
                }
            }
        }
        frontier = std::move(next);
    }
    if (ideal.dim() != ker_dim)
        rep.fail("ideal of iota(A+) has dimension " + std::to_string(ideal.dim()) + " but ker pi has " +
                 std::to_string(ker_dim));
    else {
        // containment: every ideal row must be killed by pi
        bool contained = true;
        for (auto& [piv, row] : ideal.rows()) {
            NCPoly<K> elem;
            for (auto& [j, c] : row) elem.add_term(cwin.monos[j], c);
            if (!pi.apply(elem).is_zero()) contained = false;
        }
        if (!contained) rep.fail("ideal of iota(A+) is not contained in ker pi");
    }
    rep.notes.push_back("ideal dimension " + std::to_string(ideal.dim()) + ", ker pi dimension " +
                        std::to_string(ker_dim));

    // (d) normality, finite case: c*iota(a) and iota(a)*c lie in
    // iota(A) C  intersect  C iota(A)
    if (finite_C && !truncation) {
        auto closure = [&](bool right_mult) {
            SparseEchelon<K> span;
            std::vector<NCPoly<K>> work;
            for (auto& am : abasis) {
                NCPoly<K> img = iota.apply_mono(am);
                if (span.insert(cwin.row(img))) work.push_back(img);
            }
            while (!work.empty()) {
                std::vector<NCPoly<K>> next;
                for (auto& v : work)
                    for (Letter g = 0; g < csys.ngens(); ++g) {
                        NCPoly<K> prod = right_mult ? csys.mul(v, csys.gen(g)) : csys.mul(csys.gen(g), v);
                        if (!prod.is_zero() && span.insert(cwin.row(prod))) next.push_back(prod);
                    }
                work = std::move(next);
            }
            return span;
        };
        SparseEchelon<K> iotaA_C = closure(true);
        SparseEchelon<K> C_iotaA = closure(false);
        bool normal = true;
        for (Letter g = 0; g < A.ngens(); ++g)
            for (Letter c = 0; c < csys.ngens(); ++c) {
                NCPoly<K> ia = iota.images[g];
                NCPoly<K> ca = csys.mul(csys.gen(c), ia);
                NCPoly<K> ac = csys.mul(ia, csys.gen(c));
                for (auto* v : {&ca, &ac})
                    if (!iotaA_C.contains(cwin.row(*v)) || !C_iotaA.contains(cwin.row(*v))) normal = false;
            }
        if (!normal) rep.fail("iota(A) is not normal in C");
    }
    return rep;
}

// --- the commutative diagram of quantum Frobenius maps --------------------

/// All nine algebras of the diagram and its twelve arrows, over F_p.
template <ScalarField K>
struct FrobeniusDiagram {
    AlgebraSpec<K> og_top, ob, oga3;     // top row
    AlgebraSpec<K> og_mid, dtilde, Usl2; // middle row
    AlgebraSpec<K> r, dh, usl2;          // bottom row
    std::vector<MorphismSpec<K>> maps;   // maps hold pointers into this object

    FrobeniusDiagram(const FrobeniusDiagram&) = delete;
    FrobeniusDiagram& operator=(const FrobeniusDiagram&) = delete;

    explicit FrobeniusDiagram(const FieldCfg& cfg)
        : og_top(catalog::og<K>(cfg)), ob(catalog::ob<K>(cfg)), oga3(catalog::oga3<K>(cfg)),
          og_mid(catalog::og<K>(cfg)), dtilde(catalog::dtilde<K>(cfg)), Usl2(catalog::Usl2<K>(cfg)),
          r(catalog::r_sub<K>(cfg)), dh(catalog::dh<K>(cfg)), usl2(catalog::usl2<K>(cfg)) {
        unsigned p = cfg.p;
        auto mono = [](const AlgebraSpec<K>& A, std::initializer_list<std::pair<const char*, unsigned>> exps) {
            Mono m(A.ngens());
            for (auto& [n, e] : exps) m.e[A.sys().letter(n)] = static_cast<uint16_t>(e);
            return m;
        };
        auto one = [](const AlgebraSpec<K>& A, const Mono& m) { return NCPoly<K>(m, A.scalar(1)); };
        auto zeta_p = [&](const AlgebraSpec<K>& A) {
            NCPoly<K> r_ = one(A, mono(A, {{"zeta", p}}));
            r_.add_term(mono(A, {{"zeta", 1}}), A.scalar(-1));
            return r_;
        };

        auto add = [&](const std::string& nm, const AlgebraSpec<K>& s, const AlgebraSpec<K>& t,
                       std::map<std::string, NCPoly<K>> imgs) {
            MorphismSpec<K> m;
            m.name = nm;
            m.source = &s;
            m.target = &t;
            for (auto& g : s.sys().gens()) m.images.push_back(imgs.at(g.name));
            maps.push_back(std::move(m));
        };

        // top row: phi: O(G) -> O(B), psi: O(B) -> O(Ga^3)
        add("phi: O(G) -> O(B)", og_top, ob,
            {{"x", one(ob, mono(ob, {{"X1", 1}}))},
             {"u", one(ob, mono(ob, {{"X4", 1}}))},
             {"g", one(ob, mono(ob, {{"T", 1}}))},
             {"gi", one(ob, mono(ob, {{"Ti", 1}}))}});
        K half = K::from_long(1, cfg) / K::from_long(2, cfg);
        add("psi: O(B) -> O(Ga^3)", ob, oga3,
            {{"X1", NCPoly<K>::zero()},
             {"X2", NCPoly<K>(mono(oga3, {{"A3", 1}}), half)},
             {"X3", one(oga3, mono(oga3, {{"A2", 1}}))},
             {"X4", NCPoly<K>::zero()},
             {"X5", one(oga3, mono(oga3, {{"A1", 1}}))},
             {"T", oga3.sys().one()},
             {"Ti", oga3.sys().one()}});
        // middle row
        add("iota: O(G) -> Dtilde", og_mid, dtilde,
            {{"x", one(dtilde, mono(dtilde, {{"x", 1}}))},
             {"u", one(dtilde, mono(dtilde, {{"u", 1}}))},
             {"g", one(dtilde, mono(dtilde, {{"g", 1}}))},
             {"gi", one(dtilde, mono(dtilde, {{"gi", 1}}))}});
        add("pi: Dtilde -> U(sl2)", dtilde, Usl2,
            {{"x", NCPoly<K>::zero()},
             {"y", NCPoly<K>(mono(Usl2, {{"e", 1}}), half)},
             {"g", Usl2.sys().one()},
             {"gi", Usl2.sys().one()},
             {"zeta", one(Usl2, mono(Usl2, {{"h", 1}}))},
             {"u", NCPoly<K>::zero()},
             {"v", one(Usl2, mono(Usl2, {{"f", 1}}))}});
        // bottom row
        add("iota: R -> D(H)", r, dh,
            {{"x", one(dh, mono(dh, {{"x", 1}}))},
             {"u", one(dh, mono(dh, {{"u", 1}}))},
             {"g", one(dh, mono(dh, {{"g", 1}}))}});
        add("pi: D(H) -> u(sl2)", dh, usl2,
            {{"x", NCPoly<K>::zero()},
             {"y", NCPoly<K>(mono(usl2, {{"e", 1}}), half)},
             {"g", usl2.sys().one()},
             {"zeta", one(usl2, mono(usl2, {{"h", 1}}))},
             {"u", NCPoly<K>::zero()},
             {"v", one(usl2, mono(usl2, {{"f", 1}}))}});
        // left column: Frobenius endomorphism and the projection onto R
        add("Fr: O(G) -> O(G)", og_top, og_mid,
            {{"x", one(og_mid, mono(og_mid, {{"x", p}}))},
             {"u", one(og_mid, mono(og_mid, {{"u", p}}))},
             {"g", one(og_mid, mono(og_mid, {{"g", p}}))},
             {"gi", one(og_mid, mono(og_mid, {{"gi", p}}))}});
        add("pr: O(G) -> R", og_mid, r,
            {{"x", one(r, mono(r, {{"x", 1}}))},
             {"u", one(r, mono(r, {{"u", 1}}))},
             {"g", one(r, mono(r, {{"g", 1}}))},
             {"gi", one(r, mono(r, {{"g", p - 1}}))}});
        // middle column: Z = O(B) inside Dtilde, and the covering map
        add("iota: O(B) -> Dtilde", ob, dtilde,
            {{"X1", one(dtilde, mono(dtilde, {{"x", p}}))},
             {"X2", one(dtilde, mono(dtilde, {{"y", p}}))},
             {"X3", zeta_p(dtilde)},
             {"X4", one(dtilde, mono(dtilde, {{"u", p}}))},
             {"X5", one(dtilde, mono(dtilde, {{"v", p}}))},
             {"T", one(dtilde, mono(dtilde, {{"g", p}}))},
             {"Ti", one(dtilde, mono(dtilde, {{"gi", p}}))}});
        add("pr: Dtilde -> D(H)", dtilde, dh,
            {{"x", one(dh, mono(dh, {{"x", 1}}))},
             {"y", one(dh, mono(dh, {{"y", 1}}))},
             {"g", one(dh, mono(dh, {{"g", 1}}))},
             {"gi", one(dh, mono(dh, {{"g", p - 1}}))},
             {"zeta", one(dh, mono(dh, {{"zeta", 1}}))},
             {"u", one(dh, mono(dh, {{"u", 1}}))},
             {"v", one(dh, mono(dh, {{"v", 1}}))}});
        // right column
        add("iota: O(Ga^3) -> U(sl2)", oga3, Usl2,
            {{"A1", one(Usl2, mono(Usl2, {{"f", p}}))},
             {"A2", NCPoly<K>(mono(Usl2, {{"h", p}}), K::from_long(1, cfg)) - one(Usl2, mono(Usl2, {{"h", 1}}))},
             {"A3", one(Usl2, mono(Usl2, {{"e", p}}))}});
        add("pr: U(sl2) -> u(sl2)", Usl2, usl2,
            {{"e", one(usl2, mono(usl2, {{"e", 1}}))},
             {"f", one(usl2, mono(usl2, {{"f", 1}}))},
             {"h", one(usl2, mono(usl2, {{"h", 1}}))}});
    }

    const MorphismSpec<K>& map(const std::string& nm) const {
        for (auto& m : maps)
            if (m.name == nm) return m;
        throw std::invalid_argument("no such map: " + nm);
    }
};

} // namespace rjp
