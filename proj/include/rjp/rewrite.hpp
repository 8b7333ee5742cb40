#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace rjp {

/// A generator with its exponent domain and grading data.
///   bound == 0      : free exponent (no power rule)
///   bound == N > 0  : exponents live in [0, N) and gen^N rewrites via the
///                     system's power rule for this generator
struct GenSymbol {
    std::string name;
    unsigned bound = 0;
    int degree = 0;  // Z-grading weight
    int codeg = 0;   // coaction degree, for group-like Yetter-Drinfeld data
};

/// The executable form of a presentation: an ordered alphabet, one
/// commutation rule per two-letter word that must reduce (out-of-order
/// pairs, plus inverse-pair annihilations), and at most one power rule per
/// bounded generator. Monomial order is graded-lex.
template <ScalarField K>
class RewriteSystem {
public:
    struct PairRule {
        Letter b, a;       // lhs = word "b a"
        NCPoly<K> rhs;     // PBW-normal right-hand side
    };
    struct PowerRule {
        Letter g;
        unsigned n;        // lhs = g^n
        NCPoly<K> rhs;
    };

private:
    FieldCfg cfg_;
    std::vector<GenSymbol> gens_;
    std::map<std::pair<Letter, Letter>, NCPoly<K>> pair_rules_;
    std::map<Letter, PowerRule> power_rules_;

    mutable std::map<std::pair<Mono, Letter>, NCPoly<K>> memo_;
    mutable std::mutex memo_mtx_;
    mutable unsigned long long steps_ = 0;
    unsigned long long step_budget_ = 10'000'000ULL;

public:
    RewriteSystem(FieldCfg cfg, std::vector<GenSymbol> gens) : cfg_(cfg), gens_(std::move(gens)) {
        if (gens_.size() > 32) throw std::invalid_argument("RewriteSystem: too many generators");
    }
    RewriteSystem(const RewriteSystem& o)
        : cfg_(o.cfg_), gens_(o.gens_), pair_rules_(o.pair_rules_), power_rules_(o.power_rules_),
          step_budget_(o.step_budget_) {}

    const FieldCfg& field() const { return cfg_; }
    const std::vector<GenSymbol>& gens() const { return gens_; }
    size_t ngens() const { return gens_.size(); }
    std::vector<std::string> names() const {
        std::vector<std::string> r;
        for (auto& g : gens_) r.push_back(g.name);
        return r;
    }
    Letter letter(const std::string& name) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return static_cast<Letter>(i);
        throw std::invalid_argument("unknown generator: " + name);
    }

    void set_step_budget(unsigned long long b) { step_budget_ = b; }

    void add_pair_rule(Letter b, Letter a, NCPoly<K> rhs) {
        if (pair_rules_.count({b, a})) throw std::invalid_argument("duplicate pair rule");
        pair_rules_[{b, a}] = std::move(rhs);
    }
    void add_power_rule(Letter g, unsigned n, NCPoly<K> rhs) {
        if (power_rules_.count(g)) throw std::invalid_argument("duplicate power rule");
        if (gens_[g].bound != n) throw std::invalid_argument("power rule bound mismatch");
        power_rules_[g] = PowerRule{g, n, std::move(rhs)};
    }

    const std::map<std::pair<Letter, Letter>, NCPoly<K>>& pair_rules() const { return pair_rules_; }
    const std::map<Letter, PowerRule>& power_rules() const { return power_rules_; }

    const NCPoly<K>* find_pair_rule(Letter b, Letter a) const {
        auto it = pair_rules_.find({b, a});
        return it == pair_rules_.end() ? nullptr : &it->second;
    }
    const PowerRule* find_power_rule(Letter g) const {
        auto it = power_rules_.find(g);
        return it == power_rules_.end() ? nullptr : &it->second;
    }

    NCPoly<K> one() const { return NCPoly<K>::one(ngens(), cfg_); }
    NCPoly<K> gen(Letter g) const { return NCPoly<K>::gen(ngens(), g, cfg_); }
    NCPoly<K> gen(const std::string& name) const { return gen(letter(name)); }
    K scalar(long long n) const { return K::from_long(n, cfg_); }
    K half() const { return scalar(1) / scalar(2); }

    int degree(const Mono& m) const {
        int d = 0;
        for (size_t i = 0; i < m.e.size(); ++i) d += gens_[i].degree * static_cast<int>(m.e[i]);
        return d;
    }
    int codeg(const Mono& m) const {
        int d = 0;
        for (size_t i = 0; i < m.e.size(); ++i) d += gens_[i].codeg * static_cast<int>(m.e[i]);
        return d;
    }

    // --- normalization ------------------------------------------------

    /// Normal form of (ordered monomial m) * (letter l), by collection.
    NCPoly<K> mul_mono_letter(const Mono& m, Letter l) const {
        {
            std::lock_guard<std::mutex> lk(memo_mtx_);
            auto it = memo_.find({m, l});
            if (it != memo_.end()) return it->second;
        }
        NCPoly<K> res = mul_mono_letter_impl(m, l);
        std::lock_guard<std::mutex> lk(memo_mtx_);
        memo_.emplace(std::make_pair(m, l), res);
        return res;
    }

    NCPoly<K> mul_poly_letter(const NCPoly<K>& p, Letter l) const {
        NCPoly<K> r;
        for (auto& [m, c] : p.terms()) {
            NCPoly<K> q = mul_mono_letter(m, l);
            for (auto& [m2, c2] : q.terms()) r.add_term(m2, c * c2);
        }
        return r;
    }

    NCPoly<K> mul_mono_mono(const Mono& m1, const Mono& m2) const {
        NCPoly<K> p(m1, scalar(1));
        for (size_t i = 0; i < m2.e.size(); ++i)
            for (unsigned j = 0; j < m2.e[i]; ++j) p = mul_poly_letter(p, static_cast<Letter>(i));
        return p;
    }

    NCPoly<K> mul(const NCPoly<K>& a, const NCPoly<K>& b) const {
        NCPoly<K> r;
        for (auto& [m1, c1] : a.terms())
            for (auto& [m2, c2] : b.terms()) {
                NCPoly<K> q = mul_mono_mono(m1, m2);
                for (auto& [m, c] : q.terms()) r.add_term(m, c1 * c2 * c);
            }
        return r;
    }

    NCPoly<K> pow(const NCPoly<K>& a, unsigned n) const {
        NCPoly<K> r = one();
        for (unsigned i = 0; i < n; ++i) r = mul(r, a);
        return r;
    }

    /// Normal form of an arbitrary word.
    NCPoly<K> normalize_word(const Word& w) const {
        NCPoly<K> p = one();
        for (Letter l : w) p = mul_poly_letter(p, l);
        return p;
    }

    /// Normal form of a linear combination of words.
    NCPoly<K> normalize_words(const std::vector<std::pair<Word, K>>& ws) const {
        NCPoly<K> r;
        for (auto& [w, c] : ws) {
            NCPoly<K> q = normalize_word(w);
            for (auto& [m, x] : q.terms()) r.add_term(m, c * x);
        }
        return r;
    }

    void reset_steps() const { steps_ = 0; }
    unsigned long long steps() const { return steps_; }

private:
    void bump_steps() const {
        if (++steps_ > step_budget_)
            throw std::runtime_error("rewrite step budget exceeded; rule set is likely non-terminating");
    }

    NCPoly<K> mul_mono_letter_impl(const Mono& m, Letter l) const {
        int last = m.last_letter();
        if (last < 0 || (static_cast<Letter>(last) < l && !find_pair_rule(static_cast<Letter>(last), l))) {
            // plain append; a fresh letter cannot hit its power bound (p >= 3)
            Mono r = m;
            if (r.e.size() <= l) throw std::invalid_argument("letter outside alphabet");
            r.e[l] += 1;
            const PowerRule* pr = find_power_rule(l);
            if (pr && r.e[l] == pr->n) {
                bump_steps();
                r.e[l] = 0;
                return mul_mono_poly(r, pr->rhs);
            }
            return NCPoly<K>(r, scalar(1));
        }
        Letter a = static_cast<Letter>(last);
        if (a == l) {
            Mono r = m;
            r.e[l] += 1;
            const PowerRule* pr = find_power_rule(l);
            if (pr && r.e[l] == pr->n) {
                bump_steps();
                r.e[l] = 0;
                return mul_mono_poly(r, pr->rhs);
            }
            return NCPoly<K>(r, scalar(1));
        }
        // a two-letter rule applies to "a l" (descending pair, or a declared
        // ascending annihilation such as g g^{-1})
        const NCPoly<K>* rule = find_pair_rule(a, l);
        if (!rule) throw std::runtime_error("incomplete rule set: no rule for " + gens_[a].name + " " + gens_[l].name);
        bump_steps();
        Mono pre = m;
        pre.e[a] -= 1;
        return mul_mono_poly(pre, *rule);
    }

    NCPoly<K> mul_mono_poly(const Mono& m, const NCPoly<K>& p) const {
        NCPoly<K> r;
        for (auto& [m2, c] : p.terms()) {
            NCPoly<K> q = mul_mono_mono(m, m2);
            for (auto& [mm, cc] : q.terms()) r.add_term(mm, c * cc);
        }
        return r;
    }
};

} // namespace rjp
