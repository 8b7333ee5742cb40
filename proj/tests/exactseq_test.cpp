#include <catch2/catch_amalgamated.hpp>

#include "rjp/exactseq.hpp"

using namespace rjp;

static FieldCfg F3 = FieldCfg::prime(3);

TEST_CASE("R -> D(H) -> u(sl2) is exact (finite case)") {
    FrobeniusDiagram<Fp> D(F3);
    auto rep = verify_quotient_sequence(D.r, D.dh, D.usl2, D.map("iota: R -> D(H)"), D.map("pi: D(H) -> u(sl2)"));
    for (auto& f : rep.failures) UNSCOPED_INFO(f);
    for (auto& n : rep.notes) UNSCOPED_INFO(n);
    CHECK(rep.ok);
    // dim D(H)/<iota(R)+> = 729 - 702 = 27 = dim u(sl2)
    bool found = false;
    for (auto& n : rep.notes)
        if (n.find("ideal dimension 702") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("dropping v^p from Z breaks exactness") {
    FrobeniusDiagram<Fp> D(F3);
    // a pruned Z missing its X5 = v^p generator
    auto zsmall = catalog::oga3<Fp>(F3); // three primitive generators A1,A2,A3
    MorphismSpec<Fp> iota;
    iota.source = &zsmall;
    iota.target = &D.dh;
    Mono xp(D.dh.ngens()), up(D.dh.ngens()), gp(D.dh.ngens());
    xp.e[D.dh.sys().letter("x")] = 3;
    up.e[D.dh.sys().letter("u")] = 3;
    iota.images = {NCPoly<Fp>(xp, Fp(1, 3)), NCPoly<Fp>(up, Fp(1, 3)), NCPoly<Fp>::zero()};
    // against pi: D(H) -> u(sl2) the ideal <x^p, u^p, 0> = <0> is far too small
    auto rep = verify_quotient_sequence(zsmall, D.dh, D.usl2, iota, D.map("pi: D(H) -> u(sl2)"));
    REQUIRE(!rep.ok);
}

TEST_CASE("Z -> Dtilde -> D(H) is exact in every degree <= 8") {
    FrobeniusDiagram<Fp> D(F3);
    auto rep = verify_quotient_sequence(D.ob, D.dtilde, D.dh, D.map("iota: O(B) -> Dtilde"),
                                        D.map("pr: Dtilde -> D(H)"), 8u);
    for (auto& f : rep.failures) UNSCOPED_INFO(f);
    for (auto& n : rep.notes) UNSCOPED_INFO(n);
    CHECK(rep.ok);
}

TEST_CASE("O(G) -> Dtilde -> U(sl2) is exact in every degree <= 8") {
    FrobeniusDiagram<Fp> D(F3);
    auto rep = verify_quotient_sequence(D.og_mid, D.dtilde, D.Usl2, D.map("iota: O(G) -> Dtilde"),
                                        D.map("pi: Dtilde -> U(sl2)"), 8u);
    for (auto& f : rep.failures) UNSCOPED_INFO(f);
    for (auto& n : rep.notes) UNSCOPED_INFO(n);
    CHECK(rep.ok);
}

TEST_CASE("all twelve maps of the Frobenius diagram intertwine the Hopf structures") {
    FrobeniusDiagram<Fp> D(F3);
    for (auto& m : D.maps) {
        auto rep = check_morphism(m, true);
        INFO(m.name << ": " << rep.first_failure);
        CHECK(rep.ok);
    }
}

TEST_CASE("diagram squares commute on generators") {
    FrobeniusDiagram<Fp> D(F3);
    auto check_square = [&](const MorphismSpec<Fp>& top, const MorphismSpec<Fp>& right,
                            const MorphismSpec<Fp>& left, const MorphismSpec<Fp>& bottom) {
        // right . top == bottom . left as maps source(top) -> target(right)
        REQUIRE(top.source == left.source);
        REQUIRE(right.target == bottom.target);
        for (Letter g = 0; g < top.source->ngens(); ++g) {
            NCPoly<Fp> via_top = right.apply(top.images[g]);
            NCPoly<Fp> via_left = bottom.apply(left.images[g]);
            INFO(top.source->sys().gens()[g].name);
            REQUIRE(via_top == via_left);
        }
    };
    // upper-left square: O(G) -> O(B) -> Dtilde  vs  O(G) -> O(G) -> Dtilde
    check_square(D.map("phi: O(G) -> O(B)"), D.map("iota: O(B) -> Dtilde"), D.map("Fr: O(G) -> O(G)"),
                 D.map("iota: O(G) -> Dtilde"));
    // upper-right square: O(B) -> O(Ga^3) -> U(sl2)  vs  O(B) -> Dtilde -> U(sl2)
    check_square(D.map("psi: O(B) -> O(Ga^3)"), D.map("iota: O(Ga^3) -> U(sl2)"), D.map("iota: O(B) -> Dtilde"),
                 D.map("pi: Dtilde -> U(sl2)"));
    // lower-left square: O(G) -> Dtilde -> D(H)  vs  O(G) -> R -> D(H)
    check_square(D.map("iota: O(G) -> Dtilde"), D.map("pr: Dtilde -> D(H)"), D.map("pr: O(G) -> R"),
                 D.map("iota: R -> D(H)"));
    // lower-right square: Dtilde -> U(sl2) -> u(sl2)  vs  Dtilde -> D(H) -> u(sl2)
    check_square(D.map("pi: Dtilde -> U(sl2)"), D.map("pr: U(sl2) -> u(sl2)"), D.map("pr: Dtilde -> D(H)"),
                 D.map("pi: D(H) -> u(sl2)"));
}
