#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace rjp {

enum class FieldKind { Prime, Rationals };

/// Coefficient field configuration: F_p for an odd prime p, or the rationals.
struct FieldCfg {
    FieldKind kind = FieldKind::Prime;
    unsigned p = 3;

    static FieldCfg prime(unsigned p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw std::invalid_argument("FieldCfg: p must be an odd prime >= 3, got " + std::to_string(p));
        return FieldCfg{FieldKind::Prime, p};
    }
    static FieldCfg rationals() { return FieldCfg{FieldKind::Rationals, 0}; }

    bool operator==(const FieldCfg&) const = default;

    static bool is_prime(unsigned n) {
        if (n < 2) return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

/// Element of F_p with runtime modulus. Values are kept reduced to [0, p).
/// A default-constructed element is a field-agnostic zero that adopts the
/// modulus of whatever it first meets.
class Fp {
    uint64_t v_ = 0;
    uint32_t p_ = 0;

    static uint32_t join(uint32_t a, uint32_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) throw std::invalid_argument("Fp: mixed moduli");
        return a;
    }

public:
    Fp() = default;
    Fp(long long n, uint32_t p) : p_(p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += p;
        v_ = static_cast<uint64_t>(r);
    }

    static Fp from_long(long long n, const FieldCfg& cfg) { return Fp(n, cfg.p); }
    static Fp from_mpq(const mpq_class& q, const FieldCfg& cfg);

    uint64_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        uint32_t p = join(p_, o.p_);
        if (p == 0) return Fp();
        return Fp(static_cast<long long>(v_ + o.v_), p);
    }
    Fp operator-(const Fp& o) const {
        uint32_t p = join(p_, o.p_);
        if (p == 0) return Fp();
        return Fp(static_cast<long long>(v_ + p - o.v_), p);
    }
    Fp operator*(const Fp& o) const {
        uint32_t p = join(p_, o.p_);
        if (p == 0) return Fp();
        return Fp(static_cast<long long>((v_ * o.v_) % p), p);
    }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(static_cast<long long>(p_ - v_), p_); }

    Fp pow(uint64_t e) const {
        if (p_ == 0) throw std::domain_error("Fp::pow on field-agnostic zero");
        Fp r(1, p_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    Fp inv() const {
        if (is_zero()) throw std::domain_error("Fp: division by zero");
        return pow(p_ - 2);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const {
        if (v_ == 0 && o.v_ == 0) return true;
        return v_ == o.v_ && join(p_, o.p_) != 0;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }
    /// Signed representative in (-p/2, p/2], nicer for printing small negatives.
    long long lifted() const {
        if (p_ == 0) return 0;
        return v_ > p_ / 2 ? static_cast<long long>(v_) - p_ : static_cast<long long>(v_);
    }
};

inline Fp Fp::from_mpq(const mpq_class& q, const FieldCfg& cfg) {
    mpz_class num = q.get_num(), den = q.get_den(), p(cfg.p);
    mpz_class nr = num % p, dr = den % p;
    if (nr < 0) nr += p;
    if (dr < 0) dr += p;
    Fp n(nr.get_si(), cfg.p), d(dr.get_si(), cfg.p);
    return n / d;
}

/// Exact rational scalar. Thin wrapper over mpq_class giving the same
/// interface as Fp so the algebra layers can be written once.
class Rat {
    mpq_class q_;

public:
    Rat() : q_(0) {}
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    Rat(long long num, long long den) : q_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }

    static Rat from_long(long long n, const FieldCfg&) { return Rat(mpq_class(static_cast<long>(n))); }

    const mpq_class& value() const { return q_; }
    bool is_zero() const { return q_ == 0; }

    Rat operator+(const Rat& o) const { return Rat(q_ + o.q_); }
    Rat operator-(const Rat& o) const { return Rat(q_ - o.q_); }
    Rat operator*(const Rat& o) const { return Rat(q_ * o.q_); }
    Rat operator-() const { return Rat(-q_); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(q_ / o.q_);
    }
    Rat inv() const { return Rat(1, 1) / *this; }
    Rat pow(uint64_t e) const {
        Rat r(1, 1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }

    std::string str() const { return q_.get_str(); }
    long long lifted() const { return q_.get_num().get_si(); }
};

template <class K>
concept ScalarField = requires(const K& a, const K& b, const FieldCfg& cfg) {
    { K::from_long(1, cfg) } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

} // namespace rjp
