#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rjp/combinat.hpp"

using namespace rjp;

TEST_CASE("prime field arithmetic is exact and reduced") {
    FieldCfg f5 = FieldCfg::prime(5);
    Fp a(7, 5), b(-3, 5);
    REQUIRE(a.value() == 2);
    REQUIRE(b.value() == 2);
    REQUIRE((a * b).value() == 4);
    REQUIRE((a + b).value() == 4);
    REQUIRE((a - b).is_zero());
    REQUIRE((Fp(2, 5).inv() * Fp(2, 5)).value() == 1);
    REQUIRE_THROWS_AS(Fp(0, 5).inv(), std::domain_error);
    REQUIRE_THROWS_AS(FieldCfg::prime(9), std::invalid_argument);
    REQUIRE_THROWS_AS(FieldCfg::prime(2), std::invalid_argument);
    REQUIRE(Fp::from_mpq(mpq_class(1, 2), f5).value() == 3); // 1/2 = 3 mod 5
}

TEST_CASE("rational arithmetic is exact") {
    Rat a(1, 2), b(1, 3);
    REQUIRE((a + b) == Rat(5, 6));
    REQUIRE((a * b) == Rat(1, 6));
    REQUIRE((a / b) == Rat(3, 2));
    REQUIRE_THROWS_AS(Rat(1, 1) / Rat(0, 1), std::domain_error);
}

TEST_CASE("binomial coefficients reduce into the field") {
    FieldCfg f5 = FieldCfg::prime(5);
    REQUIRE(binomial<Fp>(5, 2, f5).is_zero());        // binom(p,k) = 0 for 1 <= k <= p-1
    REQUIRE(binomial<Fp>(7, 0, f5) == Fp(1, 5));      // boundary
    REQUIRE(binomial<Fp>(4, 2, f5) == Fp(1, 5));      // 6 mod 5
    REQUIRE(binomial<Fp>(4, -1, f5).is_zero());
    REQUIRE(binomial<Fp>(4, 5, f5).is_zero());
    for (long k = 1; k < 5; ++k) REQUIRE(binomial<Fp>(5, k, f5).is_zero());
}

TEST_CASE("raising factorial") {
    FieldCfg f5 = FieldCfg::prime(5);
    REQUIRE(raising_factorial<Fp>(Fp(2, 5), 0, f5) == Fp(1, 5));       // empty product
    REQUIRE(raising_factorial<Fp>(Fp(-2, 5), 1, f5) == Fp(-2, 5));
    REQUIRE(raising_factorial<Fp>(Fp(-2, 5), 3, f5).is_zero());        // factors -2,-1,0
    FieldCfg q = FieldCfg::rationals();
    REQUIRE(raising_factorial<Rat>(Rat(3, 1), 3, q) == Rat(60, 1));    // 3*4*5
}

TEST_CASE("unsigned Stirling numbers") {
    REQUIRE(stirling_unsigned(3, 2) == 3);  // X(X+1)(X+2) = X^3 + 3X^2 + 2X
    REQUIRE(stirling_unsigned(3, 1) == 2);
    for (long n = 0; n <= 12; ++n) REQUIRE(stirling_unsigned(n, n) == 1); // leading coefficient

    SECTION("matches direct polynomial expansion") {
        for (long n = 0; n <= 20; ++n) {
            auto poly = raising_factorial_poly(n);
            for (long k = 0; k <= n; ++k) REQUIRE(stirling_unsigned(n, k) == poly[static_cast<size_t>(k)]);
        }
    }
    SECTION("recurrence s(n+1,k) = s(n,k-1) + n s(n,k)") {
        for (long n = 0; n < 20; ++n)
            for (long k = 0; k <= n + 1; ++k)
                REQUIRE(stirling_unsigned(n + 1, k) == stirling_unsigned(n, k - 1) + mpz_class(n) * stirling_unsigned(n, k));
    }
}

TEST_CASE("Stirling row of the p-th raising factorial mod p") {
    // coefficients of prod_{i=1}^p (X+i-1) = X^p - X mod p
    for (unsigned p : {3u, 5u, 7u}) {
        REQUIRE((stirling_unsigned(p, 1) + 1) % p == 0); // = -1 mod p
        for (unsigned k = 2; k < p; ++k) REQUIRE(stirling_unsigned(p, k) % p == 0);
        REQUIRE(stirling_unsigned(p, p) == 1);
    }
}

TEST_CASE("raising factorial of length p equals t^p - t in F_p") {
    std::mt19937_64 rng(20240901);
    for (unsigned p : {3u, 5u, 7u}) {
        FieldCfg cfg = FieldCfg::prime(p);
        for (int i = 0; i < 20; ++i) {
            Fp t(static_cast<long long>(rng() % p), p);
            REQUIRE(raising_factorial<Fp>(t, p, cfg) == t.pow(p) - t);
        }
    }
}

TEST_CASE("Lucas consistency on random inputs") {
    std::mt19937_64 rng(42);
    for (unsigned p : {3u, 5u, 7u}) {
        FieldCfg cfg = FieldCfg::prime(p);
        for (int i = 0; i < 100; ++i) {
            unsigned long n = rng() % 400, k = rng() % 400;
            mpz_class direct = binomial_z(static_cast<long>(n), static_cast<long>(k)) % p;
            REQUIRE(direct.get_ui() == binomial_lucas(n, k, p));
        }
    }
}
