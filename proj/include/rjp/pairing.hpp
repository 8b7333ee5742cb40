#pragma once

#include "catalog.hpp"

namespace rjp {

/// The skew-pairing tau between Htilde and Ktilde, evaluated recursively
/// from its defining axioms:
///   tau(h h~ (x) k)  = tau(h (x) k_(1)) tau(h~ (x) k_(2))
///   tau(h (x) k~ k)  = tau(h_(1) (x) k) tau(h_(2) (x) k~)
///   tau(1 (x) k) = eps(k),  tau(h (x) 1) = eps(h)
/// bottoming out on the generator table. Note the reversed legs in the
/// second axiom: peeling the last letter of k pairs it with h_(1).
template <ScalarField K>
class PairingOracle {
    const AlgebraSpec<K>* H_;
    const AlgebraSpec<K>* Kt_;
    std::map<std::pair<Letter, Letter>, K> table_;
    mutable std::map<std::pair<Mono, Mono>, K> memo_;
    mutable std::map<std::pair<Mono, Mono>, K> alt_memo_;

public:
    PairingOracle(const AlgebraSpec<K>& Ht, const AlgebraSpec<K>& Kt) : H_(&Ht), Kt_(&Kt) {
        auto& hs = Ht.sys();
        auto& ks = Kt.sys();
        auto set = [&](const char* h, const char* k, long long v) {
            table_[{hs.letter(h), ks.letter(k)}] = Ht.scalar(v);
        };
        set("x", "u", 0);
        set("y", "u", 1);
        set("g", "u", 0);
        set("gi", "u", 0);
        set("x", "v", 1);
        set("y", "v", 0);
        set("g", "v", 0);
        set("gi", "v", 0);
        set("x", "zeta", 0);
        set("y", "zeta", 0);
        set("g", "zeta", 1);
        set("gi", "zeta", -1);
    }

    const AlgebraSpec<K>& htilde() const { return *H_; }
    const AlgebraSpec<K>& ktilde() const { return *Kt_; }

    K eval_mono(const Mono& h, const Mono& k) const {
        auto key = std::make_pair(h, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        K r = eval_impl(h, k);
        memo_.emplace(key, r);
        return r;
    }

    K eval(const NCPoly<K>& h, const NCPoly<K>& k) const {
        K r = H_->scalar(0);
        for (auto& [hm, hc] : h.terms())
            for (auto& [km, kc] : k.terms()) r += hc * kc * eval_mono(hm, km);
        return r;
    }

    /// Same value computed by peeling the other end of each word; the two
    /// orders agree exactly when the table extends to a well-defined
    /// skew-pairing.
    K eval_alt(const Mono& h, const Mono& k) const { return eval_alt_impl(h, k); }

    /// Convolution inverse leg: tau^{-1}(h, k) = tau(S(h), k).
    K eval_inverse(const NCPoly<K>& h, const NCPoly<K>& k) const { return eval(antipode(*H_, h), k); }

private:
    K eval_impl(const Mono& h, const Mono& k) const {
        unsigned hl = h.length(), kl = k.length();
        if (hl == 0) return counit_mono(*Kt_, k);
        if (kl == 0) return counit_mono(*H_, h);
        if (hl == 1 && kl == 1) {
            Letter hg = static_cast<Letter>(h.last_letter());
            Letter kg = static_cast<Letter>(k.last_letter());
            return table_.at({hg, kg});
        }
        if (hl > 1) {
            // h = first . rest, pair first with k_(1) and rest with k_(2)
            Word w = h.word();
            Mono first(h.ngens()), rest(h.ngens());
            first.e[w[0]] = 1;
            rest = h;
            rest.e[w[0]] -= 1;
            K r = H_->scalar(0);
            Tensor2<K> dk = coproduct_mono(*Kt_, k);
            for (auto& [legs, c] : dk.terms()) r += c * eval_mono(first, legs[0]) * eval_mono(rest, legs[1]);
            return r;
        }
        // h a single generator, k = prefix . last
        Word w = k.word();
        Letter lastl = w.back();
        Mono last(k.ngens()), prefix = k;
        last.e[lastl] = 1;
        prefix.e[lastl] -= 1;
        K r = H_->scalar(0);
        Tensor2<K> dh = coproduct_mono(*H_, h);
        for (auto& [legs, c] : dh.terms()) r += c * eval_mono(legs[0], last) * eval_mono(legs[1], prefix);
        return r;
    }

    K eval_alt_impl(const Mono& h, const Mono& k) const {
        auto key = std::make_pair(h, k);
        auto memo_it = alt_memo_.find(key);
        if (memo_it != alt_memo_.end()) return memo_it->second;
        K res = eval_alt_core(h, k);
        alt_memo_.emplace(key, res);
        return res;
    }

    K eval_alt_core(const Mono& h, const Mono& k) const {
        unsigned hl = h.length(), kl = k.length();
        if (hl == 0) return counit_mono(*Kt_, k);
        if (kl == 0) return counit_mono(*H_, h);
        if (hl == 1 && kl == 1) {
            return table_.at({static_cast<Letter>(h.last_letter()), static_cast<Letter>(k.last_letter())});
        }
        if (hl > 1) {
            // h = head . last
            Word w = h.word();
            Letter lastl = w.back();
            Mono last(h.ngens()), head = h;
            last.e[lastl] = 1;
            head.e[lastl] -= 1;
            K r = H_->scalar(0);
            Tensor2<K> dk = coproduct_mono(*Kt_, k);
            for (auto& [legs, c] : dk.terms()) r += c * eval_alt_impl(head, legs[0]) * eval_alt_impl(last, legs[1]);
            return r;
        }
        // k = first . rest, with k~ = first: tau(h (x) first rest)
        Word w = k.word();
        Mono first(k.ngens()), rest = k;
        first.e[w[0]] = 1;
        rest.e[w[0]] -= 1;
        K r = H_->scalar(0);
        Tensor2<K> dh = coproduct_mono(*H_, h);
        for (auto& [legs, c] : dh.terms()) r += c * eval_alt_impl(legs[0], rest) * eval_alt_impl(legs[1], first);
        return r;
    }
};

/// The product (1 (x) k)(h (x) 1) in the cocycle twist of Htilde (x) Ktilde,
/// expressed inside the presented double:
///   sum tau(h_(1) (x) k_(1)) tau(S(h_(3)) (x) k_(3)) h_(2) k_(2).
template <ScalarField K>
NCPoly<K> twisted_cross_product(const PairingOracle<K>& tau, const AlgebraSpec<K>& dtilde, const std::string& kgen,
                                const std::string& hgen) {
    const auto& H = tau.htilde();
    const auto& Kt = tau.ktilde();
    const auto& dsys = dtilde.sys();

    Mono hm(H.ngens());
    hm.e[H.sys().letter(hgen)] = 1;
    Mono km(Kt.ngens());
    km.e[Kt.sys().letter(kgen)] = 1;

    Tensor3<K> d2h = coproduct_leg(H, coproduct_mono(H, hm), 0);
    Tensor3<K> d2k = coproduct_leg(Kt, coproduct_mono(Kt, km), 0);

    auto embed = [&](const Mono& m, const AlgebraSpec<K>& src) {
        Word w;
        auto names = src.sys().names();
        for (size_t i = 0; i < m.e.size(); ++i)
            for (unsigned j = 0; j < m.e[i]; ++j) w.push_back(dsys.letter(names[i]));
        return w;
    };

    NCPoly<K> out;
    for (auto& [hk, hc] : d2h.terms())
        for (auto& [kk, kc] : d2k.terms()) {
            K left = tau.eval_mono(hk[0], kk[0]);
            if (left.is_zero()) continue;
            K right = tau.eval_inverse(NCPoly<K>(hk[2], H.scalar(1)), NCPoly<K>(kk[2], H.scalar(1)));
            if (right.is_zero()) continue;
            Word w = embed(hk[1], H);
            Word wk = embed(kk[1], Kt);
            w.insert(w.end(), wk.begin(), wk.end());
            NCPoly<K> mid = dsys.normalize_word(w);
            for (auto& [m, c] : mid.terms()) out.add_term(m, hc * kc * left * right * c);
        }
    return out;
}

} // namespace rjp
