#pragma once

// The polynomial families attached to a tautological rank k: the dual classes
// q_j over W2 and Q_j over W1, the w_1-preimages p_j of P_j = Q_j + q_j, the
// k = 3 sequence r_j, mod-2 multinomial machinery, and the two-power relation
// check. Recursions are the canonical producers; the Giambelli determinant and
// the multinomial closed forms exist as independent oracles.

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ogc/poly.hpp"

namespace ogc {

class ClassContext {
public:
    explicit ClassContext(int k)
        : k_(k), zero_w1_(w1_ring(k)), zero_w2_(w2_ring(k)) {
        if (k < 2)
            throw std::invalid_argument("ClassContext: k must be >= 2");
    }

    int k() const { return k_; }
    VarSet w1() const { return w1_ring(k_); }
    VarSet w2() const { return w2_ring(k_); }

    // q_j in W2: q_0 = 1, q_{<0} = 0, q_j = sum_{l=2..k} w_l q_{j-l}.
    const Poly2& q(int j) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (j < 0)
            return zero_w2_;
        while (int(q_.size()) <= j) {
            int m = int(q_.size());
            if (m == 0) {
                q_.push_back(Poly2::one(w2()));
                continue;
            }
            Poly2 next(w2());
            for (int l = 2; l <= k_ && l <= m; ++l)
                next += Poly2::variable(w2(), l) * q_[std::size_t(m - l)];
            q_.push_back(std::move(next));
        }
        return q_[std::size_t(j)];
    }

    // Q_j in W1: Q_0 = 1, Q_j = sum_{l=1..k} w_l Q_{j-l}.
    const Poly2& Q(int j) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (j < 0)
            return zero_w1_;
        while (int(bigq_.size()) <= j) {
            int m = int(bigq_.size());
            if (m == 0) {
                bigq_.push_back(Poly2::one(w1()));
                continue;
            }
            Poly2 next(w1());
            for (int l = 1; l <= k_ && l <= m; ++l)
                next += Poly2::variable(w1(), l) * bigq_[std::size_t(m - l)];
            bigq_.push_back(std::move(next));
        }
        return bigq_[std::size_t(j)];
    }

    // p_j in W1: the unique preimage of P_j = Q_j + q_j under w_1.
    // p_0 = 0, p_{<0} = 0, p_j = q_{j-1} + sum_{r=1..k} w_r p_{j-r}.
    const Poly2& p(int j) const {
        if (j >= 1)
            q(j - 1); // warm the q cache outside of our own recursion
        std::lock_guard<std::mutex> lock(mu_);
        if (j < 0)
            return zero_w1_;
        while (int(p_.size()) <= j) {
            int m = int(p_.size());
            Poly2 next = (m >= 1 && m - 1 < int(q_.size()))
                             ? q_[std::size_t(m - 1)].into_w1()
                             : Poly2::zero(w1());
            for (int r = 1; r <= k_ && r <= m; ++r)
                next += Poly2::variable(w1(), r) * p_[std::size_t(m - r)];
            p_.push_back(std::move(next));
        }
        return p_[std::size_t(j)];
    }

    Poly2 bigP(int j) const { return Poly2::variable(w1(), 1) * p(j); }

    // r_j (k = 3 only): r_0 = 1, r_{<0} = 0, r_{j+1} = w_2 r_j + w_3^2 r_{j-2}.
    const Poly2& r(int j) const {
        if (k_ != 3)
            throw std::logic_error("ClassContext::r is defined only for k = 3");
        std::lock_guard<std::mutex> lock(mu_);
        if (j < 0)
            return zero_w2_;
        while (int(r_.size()) <= j) {
            int m = int(r_.size());
            if (m == 0) {
                r_.push_back(Poly2::one(w2()));
                continue;
            }
            Poly2 next = Poly2::variable(w2(), 2) * r_[std::size_t(m - 1)];
            if (m - 3 >= 0)
                next += Poly2::variable(w2(), 3, 2) * r_[std::size_t(m - 3)];
            r_.push_back(std::move(next));
        }
        return r_[std::size_t(j)];
    }

private:
    int k_;
    mutable std::mutex mu_;
    mutable std::deque<Poly2> q_, bigq_, p_, r_; // deque: stable references
    Poly2 zero_w1_, zero_w2_;
};

inline Poly2 q_poly(const ClassContext& ctx, int j) { return ctx.q(j); }

// Independent oracle: the j x j Giambelli determinant over W1, expanded by
// cofactor expansion along the first column with memoized minors. The minors
// that appear are the matrices V(m, s): size m, top row (w_s .. w_{s+m-1}),
// rows below it the standard pattern (unit subdiagonal). Expansion gives
//   V(m, s) = w_s * V(m-1, 1) + V(m-1, s+1),  V(1, s) = w_s.
class GiambelliOracle {
public:
    explicit GiambelliOracle(int k) : k_(k) {}

    Poly2 det(int j) {
        if (j == 0)
            return Poly2::one(w1_ring(k_));
        return v(j, 1);
    }

private:
    Poly2 w(int s) {
        return s >= 1 && s <= k_ ? Poly2::variable(w1_ring(k_), s)
                                 : Poly2::zero(w1_ring(k_));
    }

    const Poly2& v(int m, int s) {
        auto key = std::make_pair(m, s);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        Poly2 result(w1_ring(k_));
        if (m == 1)
            result = w(s);
        else
            result = w(s) * v(m - 1, 1) + v(m - 1, s + 1);
        return memo_.emplace(key, std::move(result)).first->second;
    }

    int k_;
    std::map<std::pair<int, int>, Poly2> memo_;
};

inline Poly2 giambelli_Q(int k, int j) {
    GiambelliOracle g(k);
    return g.det(j);
}

// 1 iff the multinomial coefficient binom(|a|; a) is odd, i.e. the base-2
// expansions of the entries are pairwise disjoint.
inline bool multinomial_mod2(const std::vector<long>& a) {
    unsigned long long seen = 0;
    for (long e : a) {
        if (e < 0)
            return false;
        auto u = static_cast<unsigned long long>(e);
        if (seen & u)
            return false;
        seen |= u;
    }
    return true;
}

// All indices l (0-based into a) with a_l >= 1 and binom(|a|-1; a with a_l
// decremented) odd.
inline std::vector<std::size_t> lucas_descents(const std::vector<long>& a) {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < a.size(); ++l) {
        if (a[l] < 1)
            continue;
        std::vector<long> hat = a;
        hat[l] -= 1;
        if (multinomial_mod2(hat))
            out.push_back(l);
    }
    return out;
}

// Independent closed form: q_j = sum over monomials w^a of weighted degree j
// with odd multinomial coefficient binom(|a|; a).
inline Poly2 q_closed_form(int k, int j) {
    VarSet vars = w2_ring(k);
    if (j < 0)
        return Poly2::zero(vars);
    auto slice = mono_basis(vars, j);
    std::vector<Mono> terms;
    for (const auto& m : slice->basis) {
        std::vector<long> a;
        for (int i = 2; i <= k; ++i)
            a.push_back(m.exp(i));
        if (multinomial_mod2(a))
            terms.push_back(m);
    }
    return Poly2::from_terms(vars, std::move(terms));
}

// Independent closed form for the k = 3 sequence:
// r_j = sum_{j = b2 + 3 b3} binom(b2 + b3, b2) w_2^{b2} w_3^{2 b3}.
inline Poly2 r_closed_form(int j) {
    VarSet vars = w2_ring(3);
    if (j < 0)
        return Poly2::zero(vars);
    std::vector<Mono> terms;
    for (int b3 = 0; 3 * b3 <= j; ++b3) {
        int b2 = j - 3 * b3;
        if ((static_cast<unsigned long long>(b2) &
             static_cast<unsigned long long>(b3)) == 0)
            terms.push_back(make_mono(3, {{2, b2}, {3, 2 * b3}}));
    }
    return Poly2::from_terms(vars, std::move(terms));
}

// Even part of the two-power relation: sum_{i even >= 0} w_i q_{n-i} with
// w_0 = 1 (the i = 0 term is q_n itself). Zero iff n is a power of two.
inline Poly2 fundamental_even_sum(const ClassContext& ctx, int n) {
    Poly2 sum = ctx.q(n);
    for (int i = 2; i <= ctx.k() && i <= n; i += 2)
        sum += Poly2::variable(ctx.w2(), i) * ctx.q(n - i);
    return sum;
}

// Odd part: sum_{i odd > 1} w_i q_{n-i}; equals the even part identically.
inline Poly2 fundamental_odd_sum(const ClassContext& ctx, int n) {
    Poly2 sum(ctx.w2());
    for (int i = 3; i <= ctx.k() && i <= n; i += 2)
        sum += Poly2::variable(ctx.w2(), i) * ctx.q(n - i);
    return sum;
}

inline bool check_fundamental(const ClassContext& ctx, int n) {
    if (ctx.k() >= n || n <= 0)
        throw std::invalid_argument("check_fundamental: need 0 < k < n");
    return fundamental_even_sum(ctx, n).is_zero();
}

} // namespace ogc
