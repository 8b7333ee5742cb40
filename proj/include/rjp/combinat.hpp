#pragma once

#include <vector>
#include <stdexcept>
#include <gmpxx.h>

#include "fp.hpp"

namespace rjp {

/// Binomial coefficient over the integers; 0 for k < 0 or k > n.
inline mpz_class binomial_z(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

template <ScalarField K>
K binomial(long n, long k, const FieldCfg& cfg) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    mpz_class b = binomial_z(n, k);
    if constexpr (std::is_same_v<K, Fp>) {
        mpz_class r = b % cfg.p;
        return Fp(r.get_si(), cfg.p);
    } else {
        return K(mpq_class(b));
    }
}

/// Raising factorial [t]^{[k]} = t (t+1) ... (t+k-1); empty product for k = 0.
template <ScalarField K>
K raising_factorial(const K& t, long k, const FieldCfg& cfg) {
    if (k < 0) throw std::invalid_argument("raising_factorial: k must be >= 0");
    K r = K::from_long(1, cfg);
    for (long i = 1; i <= k; ++i)
        r = r * (t + K::from_long(i - 1, cfg));
    return r;
}

/// Unsigned Stirling numbers of the first kind, as coefficients of the
/// raising factorial polynomial prod_{i=1}^n (X+i-1) = sum_k s(n,k) X^k.
/// Computed over Z with arbitrary precision.
inline mpz_class stirling_unsigned(long n, long k) {
    if (n < 0) throw std::invalid_argument("stirling_unsigned: n must be >= 0");
    if (k < 0 || k > n) return 0;
    // s(i+1, j) = s(i, j-1) + i * s(i, j)
    std::vector<mpz_class> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j >= 1; --j)
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + mpz_class(i) * row[static_cast<size_t>(j)];
        row[0] *= i;
    }
    return row[static_cast<size_t>(k)];
}

/// Same numbers via direct polynomial expansion; independent cross-check.
inline std::vector<mpz_class> raising_factorial_poly(long n) {
    std::vector<mpz_class> c{1};
    for (long i = 1; i <= n; ++i) {
        std::vector<mpz_class> nx(c.size() + 1, 0);
        for (size_t j = 0; j < c.size(); ++j) {
            nx[j + 1] += c[j];
            nx[j] += mpz_class(i - 1) * c[j];
        }
        c = std::move(nx);
    }
    return c;
}

template <ScalarField K>
K stirling(long n, long k, const FieldCfg& cfg) {
    mpz_class s = stirling_unsigned(n, k);
    if constexpr (std::is_same_v<K, Fp>) {
        mpz_class r = s % cfg.p;
        return Fp(r.get_si(), cfg.p);
    } else {
        return K(mpq_class(s));
    }
}

/// Lucas product: binomial(n, k) mod p equals the digitwise product of
/// base-p digit binomials.
inline unsigned long binomial_lucas(unsigned long n, unsigned long k, unsigned p) {
    unsigned long r = 1;
    while (n || k) {
        unsigned long nd = n % p, kd = k % p;
        mpz_class d = binomial_z(static_cast<long>(nd), static_cast<long>(kd)) % p;
        r = (r * d.get_ui()) % p;
        n /= p;
        k /= p;
    }
    return r;
}

inline mpz_class factorial_z(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

template <ScalarField K>
K factorial(long n, const FieldCfg& cfg) {
    mpz_class f = factorial_z(n);
    if constexpr (std::is_same_v<K, Fp>) {
        mpz_class r = f % cfg.p;
        return Fp(r.get_si(), cfg.p);
    } else {
        return K(mpq_class(f));
    }
}

} // namespace rjp
