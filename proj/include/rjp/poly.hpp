#pragma once

#include <map>
#include <sstream>
#include <utility>

#include "fp.hpp"
#include "monomial.hpp"

namespace rjp {

/// Element of the free algebra in PBW-normalized coordinates: a finitely
/// supported coefficient function on ordered monomials. Zero coefficients
/// are never stored.
template <ScalarField K>
class NCPoly {
public:
    using Terms = std::map<Mono, K, MonoLess>;

private:
    Terms t_;

public:
    NCPoly() = default;
    NCPoly(const Mono& m, const K& c) {
        if (!c.is_zero()) t_.emplace(m, c);
    }

    static NCPoly zero() { return NCPoly(); }
    static NCPoly one(size_t ngens, const FieldCfg& cfg) { return NCPoly(Mono(ngens), K::from_long(1, cfg)); }
    static NCPoly gen(size_t ngens, Letter g, const FieldCfg& cfg) {
        Mono m(ngens);
        m.e[g] = 1;
        return NCPoly(m, K::from_long(1, cfg));
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add_term(const Mono& m, const K& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    K coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? K() : it->second;
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    NCPoly operator+(const NCPoly& o) const {
        NCPoly r = *this;
        r += o;
        return r;
    }
    NCPoly operator-(const NCPoly& o) const {
        NCPoly r = *this;
        r -= o;
        return r;
    }
    NCPoly operator*(const K& c) const {
        NCPoly r;
        if (c.is_zero()) return r;
        for (auto& [m, x] : t_) r.add_term(m, x * c);
        return r;
    }
    NCPoly operator-() const {
        NCPoly r;
        for (auto& [m, x] : t_) r.t_.emplace(m, -x);
        return r;
    }
    bool operator==(const NCPoly& o) const { return t_ == o.t_; }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (size_t i = 0; i < m.e.size(); ++i) {
                if (!m.e[i]) continue;
                os << " " << names[i];
                if (m.e[i] > 1) os << "^" << m.e[i];
            }
        }
        return os.str();
    }
};

/// Element of a tensor square or cube with PBW-normalized legs.
template <ScalarField K, size_t R>
class TensorElem {
public:
    using Key = std::array<Mono, R>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            MonoLess less;
            for (size_t i = 0; i < R; ++i) {
                if (less(a[i], b[i])) return true;
                if (less(b[i], a[i])) return false;
            }
            return false;
        }
    };
    using Terms = std::map<Key, K, KeyLess>;

private:
    Terms t_;

public:
    TensorElem() = default;

    static TensorElem unit(size_t ngens, const FieldCfg& cfg) {
        TensorElem r;
        Key k;
        k.fill(Mono(ngens));
        r.t_.emplace(k, K::from_long(1, cfg));
        return r;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add_term(const Key& k, const K& c) {
        if (c.is_zero()) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    TensorElem& operator+=(const TensorElem& o) {
        for (auto& [k, c] : o.t_) add_term(k, c);
        return *this;
    }
    TensorElem& operator-=(const TensorElem& o) {
        for (auto& [k, c] : o.t_) add_term(k, -c);
        return *this;
    }
    TensorElem operator+(const TensorElem& o) const {
        TensorElem r = *this;
        r += o;
        return r;
    }
    TensorElem operator-(const TensorElem& o) const {
        TensorElem r = *this;
        r -= o;
        return r;
    }
    TensorElem operator*(const K& c) const {
        TensorElem r;
        if (c.is_zero()) return r;
        for (auto& [k, x] : t_) r.t_.emplace(k, x * c);
        return r;
    }
    bool operator==(const TensorElem& o) const { return t_ == o.t_; }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (size_t leg = 0; leg < R; ++leg) {
                os << (leg ? " (x) " : " ");
                if (k[leg].is_one()) {
                    os << "1";
                    continue;
                }
                bool inner = false;
                for (size_t i = 0; i < k[leg].e.size(); ++i) {
                    if (!k[leg].e[i]) continue;
                    if (inner) os << " ";
                    inner = true;
                    os << names[i];
                    if (k[leg].e[i] > 1) os << "^" << k[leg].e[i];
                }
            }
        }
        return os.str();
    }
};

template <ScalarField K>
using Tensor2 = TensorElem<K, 2>;
template <ScalarField K>
using Tensor3 = TensorElem<K, 3>;

} // namespace rjp
