#include <catch2/catch_amalgamated.hpp>

#include "rjp/catalog.hpp"

using namespace rjp;

static FieldCfg F3 = FieldCfg::prime(3);
static FieldCfg F5 = FieldCfg::prime(5);

TEST_CASE("every cataloged system passes termination and confluence") {
    for (auto cfg : {F3, F5}) {
        std::vector<AlgebraSpec<Fp>> specs;
        specs.push_back(catalog::bv<Fp>(cfg));
        specs.push_back(catalog::btilde<Fp>(cfg));
        specs.push_back(catalog::bw<Fp>(cfg));
        specs.push_back(catalog::bhat<Fp>(cfg));
        specs.push_back(catalog::h<Fp>(cfg));
        specs.push_back(catalog::htilde<Fp>(cfg));
        specs.push_back(catalog::dkgamma<Fp>(cfg));
        specs.push_back(catalog::hstarop<Fp>(cfg));
        specs.push_back(catalog::ktilde<Fp>(cfg));
        specs.push_back(catalog::dh<Fp>(cfg));
        specs.push_back(catalog::dtilde<Fp>(cfg));
        specs.push_back(catalog::usl2<Fp>(cfg));
        specs.push_back(catalog::Usl2<Fp>(cfg));
        specs.push_back(catalog::r_sub<Fp>(cfg));
        specs.push_back(catalog::og<Fp>(cfg));
        specs.push_back(catalog::ob<Fp>(cfg));
        specs.push_back(catalog::oga3<Fp>(cfg));
        for (unsigned k = 1; k <= 2; ++k)
            for (unsigned l = 1; l <= 2; ++l)
                for (long long a = 0; a < cfg.p; ++a) {
                    specs.push_back(catalog::gkla<Fp>(cfg, k, l, a));
                    specs.push_back(catalog::bos_g<Fp>(cfg, k, l, a));
                }
        for (unsigned k = 1; k <= 2; ++k)
            for (long long a = 0; a < cfg.p; ++a) specs.push_back(catalog::kka<Fp>(cfg, k, a));
        for (unsigned l = 1; l <= 2; ++l) specs.push_back(catalog::fl<Fp>(cfg, l));

        for (auto& A : specs) {
            INFO(A.name << " at p=" << cfg.p);
            auto term = check_termination(A.sys());
            CHECK(term.ok);
            CHECK(check_confluence(A.sys()).empty());
        }
    }
}

TEST_CASE("dimension table") {
    for (auto cfg : {F3, F5}) {
        size_t p = cfg.p;
        CHECK(basis_count(catalog::bv<Fp>(cfg).sys()) == p * p);
        CHECK(basis_count(catalog::h<Fp>(cfg).sys()) == p * p * p);
        CHECK(basis_count(catalog::hstarop<Fp>(cfg).sys()) == p * p * p);
        CHECK(basis_count(catalog::dkgamma<Fp>(cfg).sys()) == p * p);
        CHECK(basis_count(catalog::dh<Fp>(cfg).sys()) == p * p * p * p * p * p);
        CHECK(basis_count(catalog::usl2<Fp>(cfg).sys()) == p * p * p);
        CHECK(basis_count(catalog::r_sub<Fp>(cfg).sys()) == p * p * p);
        CHECK(basis_count(catalog::bw<Fp>(cfg).sys()) == p * p);
        for (unsigned k = 1; k <= 2; ++k)
            for (unsigned l = 1; l <= 2; ++l)
                for (long long a = 0; a < static_cast<long long>(std::min<size_t>(p, 3)); ++a) {
                    size_t expect = 1;
                    for (unsigned i = 0; i < k + l; ++i) expect *= p;
                    CHECK(basis_count(catalog::gkla<Fp>(cfg, k, l, a).sys()) == expect);
                    CHECK(basis_count(catalog::bos_g<Fp>(cfg, k, l, a).sys()) == expect * p);
                }
    }
}

TEST_CASE("triangular decomposition count for D(H)") {
    for (auto cfg : {F3, F5}) {
        size_t p = cfg.p;
        size_t dh = basis_count(catalog::dh<Fp>(cfg).sys());
        size_t bv = basis_count(catalog::bv<Fp>(cfg).sys());
        size_t dk = basis_count(catalog::dkgamma<Fp>(cfg).sys());
        size_t bw = basis_count(catalog::bw<Fp>(cfg).sys());
        CHECK(dh == bv * dk * bw);
        CHECK(dh == p * p * p * p * p * p);
    }
}

TEST_CASE("G(1,1,0) is the restricted Jordan plane") {
    auto g110 = catalog::gkla<Fp>(F3, 1, 1, 0);
    auto bv = catalog::bv<Fp>(F3);
    REQUIRE(g110.sys().ngens() == bv.sys().ngens());
    for (auto& [key, rhs] : bv.sys().pair_rules()) {
        auto* other = g110.sys().find_pair_rule(key.first, key.second);
        REQUIRE(other != nullptr);
        REQUIRE(*other == rhs);
    }
    for (auto& [g, pr] : bv.sys().power_rules()) {
        auto* other = g110.sys().find_power_rule(g);
        REQUIRE(other != nullptr);
        REQUIRE(other->rhs == pr.rhs);
        REQUIRE(other->n == pr.n);
    }
}

TEST_CASE("named ambiguity families from the pre-Nichols presentations") {
    // y^{p^k-1} y x and y x x^{p^l-1} both ways, explicitly
    for (auto cfg : {F3, F5}) {
        unsigned p = cfg.p;
        for (unsigned k = 1; k <= 2; ++k)
            for (long long a = 0; a < 2; ++a) {
                auto A = catalog::gkla<Fp>(cfg, k, 2, a);
                const auto& sys = A.sys();
                unsigned pk = catalog::upow(p, k);
                // (y^{p^k-1} y) x = a x^{p^k+1}; the engine resolves the
                // other association to the same normal form
                Word w(pk, sys.letter("y"));
                w.push_back(sys.letter("x"));
                auto nf = sys.normalize_word(w);
                NCPoly<Fp> want = sys.normalize_word(Word(pk + 1, sys.letter("x"))) * Fp(a, p);
                REQUIRE(nf == want);
                // y (x x^{p^2-1}) = 0 = (y x) x^{p^2-1}
                Word w2{sys.letter("y")};
                w2.insert(w2.end(), catalog::upow(p, 2), sys.letter("x"));
                REQUIRE(sys.normalize_word(w2).is_zero());
            }
    }
}

TEST_CASE("graded dimensions by declared grading") {
    auto bt = catalog::btilde<Fp>(F3);
    // degree-n component of the Jordan plane has dimension n+1
    auto monos = enumerate_basis(bt.sys(), 9u);
    std::map<int, int> by_deg;
    for (auto& m : monos) ++by_deg[bt.sys().degree(m)];
    for (int n = 0; n <= 9; ++n) REQUIRE(by_deg[n] == n + 1);
}
