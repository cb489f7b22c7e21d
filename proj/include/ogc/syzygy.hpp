#pragma once

// Explicit relation machinery between the window polynomials: the
// descending/ascending coefficient transport for general k, the fundamental
// two-power relation vector, the k = 3 closed-form kernel basis and
// presentation, Koszul-boundary membership, the classes A_n and D_n in W1,
// and the square ideal-membership checks.
//
// Relation vectors store their coefficients in ascending slot order
// (q_{n-k+1}, ..., q_n). The closed formulas are conventionally written
// highest-index-first; relation_highest_first is the single conversion
// site.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ogc/koszul.hpp"
#include "ogc/present.hpp"

namespace ogc {

struct RelationVec {
    int k = 0;
    int level = 0;             // relation among (q_{level-k+1}, ..., q_{level})
    std::vector<Poly2> coeffs; // ascending slot order
    int koszul_degree = 0;
    bool degenerate = false;   // k = 2 fundamental fallback

    // coefficient of q_idx
    const Poly2& coeff_of_q(int idx) const {
        return coeffs.at(std::size_t(idx - (level - k + 1)));
    }
};

namespace detail {

inline int relation_degree(const std::vector<Poly2>& coeffs, int level, int k) {
    for (int s = 0; s < k; ++s)
        if (!coeffs[std::size_t(s)].is_zero())
            return coeffs[std::size_t(s)].degree() + (level - k + 1 + s);
    return 0;
}

} // namespace detail

// Verifies sum_s coeffs_s * q_{level-k+1+s} = 0 and homogeneity.
inline RelationVec make_relation(const ClassContext& ctx, int level,
                                 std::vector<Poly2> coeffs,
                                 bool degenerate = false) {
    int k = ctx.k();
    if (int(coeffs.size()) != k)
        throw std::invalid_argument("make_relation: need k coefficients");
    Poly2 sum(ctx.w2());
    for (int s = 0; s < k; ++s)
        sum += coeffs[std::size_t(s)] * ctx.q(level - k + 1 + s);
    if (!sum.is_zero())
        throw std::invalid_argument("make_relation: not a relation");
    int deg = detail::relation_degree(coeffs, level, k);
    for (int s = 0; s < k; ++s) {
        const Poly2& c = coeffs[std::size_t(s)];
        if (!c.is_zero() &&
            (!c.is_homogeneous() || c.degree() + (level - k + 1 + s) != deg))
            throw std::invalid_argument("make_relation: inhomogeneous relation");
    }
    return RelationVec{k, level, std::move(coeffs), deg, degenerate};
}

// Coefficients given highest-index-first: entry 0 multiplies q_{level}.
inline RelationVec relation_highest_first(const ClassContext& ctx, int level,
                                             std::vector<Poly2> desc,
                                             bool degenerate = false) {
    std::reverse(desc.begin(), desc.end());
    return make_relation(ctx, level, std::move(desc), degenerate);
}

// One descent step: alpha'_j = w_{j+1} alpha_0 + alpha_{j+1} in descending order,
// with w_1 = 0 and alpha_k = 0. The level drops by one, the degree is fixed.
inline RelationVec descend(const ClassContext& ctx, const RelationVec& start,
                           int steps) {
    int k = ctx.k();
    std::vector<Poly2> desc(start.coeffs.rbegin(), start.coeffs.rend());
    for (int step = 0; step < steps; ++step) {
        std::vector<Poly2> next(std::size_t(k), Poly2::zero(ctx.w2()));
        for (int j = 0; j < k; ++j) {
            Poly2 val = j + 1 < k ? desc[std::size_t(j + 1)]
                                  : Poly2::zero(ctx.w2());
            if (j + 1 >= 2) // w_1 acts as zero
                val += Poly2::variable(ctx.w2(), j + 1) * desc[0];
            next[std::size_t(j)] = std::move(val);
        }
        desc = std::move(next);
    }
    return relation_highest_first(ctx, start.level - steps, std::move(desc));
}

// One ascent step: beta'_j = w_j beta_{k-1} + w_k beta_{j-1} in descending order,
// with w_0 = 1, w_1 = 0 and beta_{-1} = 0. The level rises by one, the degree
// by k.
inline RelationVec ascend(const ClassContext& ctx, const RelationVec& start,
                          int steps) {
    int k = ctx.k();
    std::vector<Poly2> desc(start.coeffs.rbegin(), start.coeffs.rend());
    for (int step = 0; step < steps; ++step) {
        std::vector<Poly2> next(std::size_t(k), Poly2::zero(ctx.w2()));
        const Poly2 last = desc[std::size_t(k - 1)];
        for (int j = 0; j < k; ++j) {
            Poly2 val(ctx.w2());
            if (j == 0)
                val = last; // w_0 = 1
            else if (j >= 2)
                val = Poly2::variable(ctx.w2(), j) * last;
            if (j >= 1)
                val += Poly2::variable(ctx.w2(), k) * desc[std::size_t(j - 1)];
            next[std::size_t(j)] = std::move(val);
        }
        desc = std::move(next);
    }
    return relation_highest_first(ctx, start.level + steps, std::move(desc));
}

// The window syzygy of Koszul degree n furnished by the two-power relation at
// n = 2^t. Exactly one parity part fits the window: the odd part
// (w_3, w_5, ..., w_{k-1}) when k is even, the even part (1, w_2, ..., w_{k-1})
// when k is odd. For k = 2 both parts degenerate and the vector falls back to
// the unit coefficient on the q_{n-1} = 0 slot, flagged.
inline RelationVec fundamental_vec(const ClassContext& ctx, int n) {
    int k = ctx.k();
    if (n <= k || (n & (n - 1)) != 0)
        throw std::invalid_argument("fundamental_vec: need n = 2^t > k");
    std::vector<Poly2> desc(std::size_t(k), Poly2::zero(ctx.w2()));
    if (k == 2) {
        desc[1] = Poly2::one(ctx.w2()); // q_{n-1} vanishes for k = 2
        return relation_highest_first(ctx, n, std::move(desc), true);
    }
    if (k % 2 == 0) {
        for (int i = 3; i <= k - 1; i += 2)
            desc[std::size_t(i)] = Poly2::variable(ctx.w2(), i);
    } else {
        desc[0] = Poly2::one(ctx.w2());
        for (int i = 2; i <= k - 1; i += 2)
            desc[std::size_t(i)] = Poly2::variable(ctx.w2(), i);
    }
    return relation_highest_first(ctx, n, std::move(desc));
}

// Zero the coefficients sitting on identically vanishing window entries.
// Both vectors encode the same polynomial relation; membership statements
// about transported relations refer to this normalized representative.
inline RelationVec zero_vanishing_slots(const ClassContext& ctx,
                                        const RelationVec& rel) {
    std::vector<Poly2> coeffs = rel.coeffs;
    for (int s = 0; s < rel.k; ++s)
        if (ctx.q(rel.level - rel.k + 1 + s).is_zero())
            coeffs[std::size_t(s)] = Poly2::zero(ctx.w2());
    return make_relation(ctx, rel.level, std::move(coeffs), rel.degenerate);
}

// t for the k = 3 ascending stretch 2^{t-1} - 1 <= n <= 2^t - 3; the interior
// agrees with CaseIndices::k3, the base point n = 2^{t-1} - 1 does not.
inline int k3_stretch_t(int n) {
    for (int t = 2; t < 30; ++t)
        if ((1 << (t - 1)) - 1 <= n && n <= (1 << t) - 3)
            return t;
    throw std::invalid_argument("k3_stretch_t: n lies between two stretches");
}

// The free basis (u, v) of ker(d_1) for k = 3, 2^{t-1} < n <= 2^t - 4:
// u = (r_j, w_3 r_{j-2}, r_{j-1}) and v = (w_3 q_{i-1}, q_{i+1}, q_i) in
// ascending slot order, of Koszul degrees 3n - 2^t and 2^t - 3.
inline std::pair<RelationVec, RelationVec> k3_kernel_basis(const ClassContext& ctx,
                                                           int n) {
    if (ctx.k() != 3)
        throw std::invalid_argument("k3_kernel_basis: k must be 3");
    CaseIndices ci = CaseIndices::k3(n);
    if (!ci.in_main_range())
        throw std::invalid_argument("k3_kernel_basis: n outside 2^{t-1} < n <= 2^t - 4");
    const Poly2 w3 = Poly2::variable(ctx.w2(), 3);
    RelationVec u = make_relation(
        ctx, n, {ctx.r(ci.j), w3 * ctx.r(ci.j - 2), ctx.r(ci.j - 1)});
    RelationVec v = make_relation(
        ctx, n, {w3 * ctx.q(ci.i - 1), ctx.q(ci.i + 1), ctx.q(ci.i)});
    return {std::move(u), std::move(v)};
}

// The three 2x2 determinant identities tying r and q to the window.
inline bool lemma_linear_eqs(const ClassContext& ctx, int n) {
    if (ctx.k() != 3)
        throw std::invalid_argument("lemma_linear_eqs: k must be 3");
    int t = k3_stretch_t(n);
    int i = (1 << t) - 3 - n;
    int j = n - (1 << (t - 1)) + 1;
    const Poly2 w3 = Poly2::variable(ctx.w2(), 3);
    bool eq1 = w3 * ctx.r(j - 2) * ctx.q(i) + ctx.r(j - 1) * ctx.q(i + 1) ==
               ctx.q(n - 2);
    bool eq2 = ctx.r(j) * ctx.q(i) + w3 * ctx.r(j - 1) * ctx.q(i - 1) ==
               ctx.q(n - 1);
    bool eq3 = ctx.r(j) * ctx.q(i + 1) + w3 * w3 * ctx.r(j - 2) * ctx.q(i - 1) ==
               ctx.q(n);
    return eq1 && eq2 && eq3;
}

// Closed-form presentation of K for k = 3, 2^{t-1} < n <= 2^t - 4: generators
// A (degree 3n - 2^t - 1) and D (degree 2^t - 4) with the three relations
// q_i A + r_{j-1} D, q_{i+1} A + w_3 r_{j-2} D, w_3 q_{i-1} A + r_j D.
inline Presentation k3_closed_presentation(const ClassContext& ctx, int n) {
    if (ctx.k() != 3)
        throw std::invalid_argument("k3_closed_presentation: k must be 3");
    CaseIndices ci = CaseIndices::k3(n);
    if (!ci.in_main_range())
        throw std::invalid_argument(
            "k3_closed_presentation: n outside 2^{t-1} < n <= 2^t - 4");
    const Poly2 w3 = Poly2::variable(ctx.w2(), 3);
    int deg_a = 3 * n - (1 << ci.t) - 1;
    int deg_d = (1 << ci.t) - 4;
    // rows in (A, D) column order
    std::vector<std::vector<Poly2>> rows = {
        {ctx.q(ci.i), ctx.r(ci.j - 1)},
        {ctx.q(ci.i + 1), w3 * ctx.r(ci.j - 2)},
        {w3 * ctx.q(ci.i - 1), ctx.r(ci.j)},
    };
    Presentation p;
    p.ring = RingTag::C;
    if (deg_a <= deg_d) {
        p.generator_degrees = {deg_a, deg_d};
    } else {
        p.generator_degrees = {deg_d, deg_a};
        for (auto& row : rows)
            std::swap(row[0], row[1]);
    }
    for (auto& row : rows) {
        int deg = 2 * n - 4 + int(p.relation_rows.size());
        p.relation_degrees.push_back(deg);
        p.relation_rows.push_back(std::move(row));
    }
    return p;
}

// Is the relation a Koszul boundary? (level must match the complex)
inline bool boundary_membership(const KoszulComplex& kosz,
                                const RelationVec& rel) {
    if (rel.level != kosz.n() || rel.k != kosz.k())
        throw std::invalid_argument("boundary_membership: level mismatch");
    F2Vec v = kosz.encode_level1(rel.coeffs, rel.koszul_degree);
    return solve(kosz.differential(2, rel.koszul_degree), v).has_value();
}

struct ADClasses {
    int n = 0;
    Poly2 A, D; // elements of W1
};

// A_n = r_{j-1} p_n + w_3 r_{j-2} p_{n-1} + r_j p_{n-2} and
// D_n = q_i p_n + q_{i+1} p_{n-1} + w_3 q_{i-1} p_{n-2}, via the boundary
// delta(sum f_l q_l) = sum f_l p_l.
inline ADClasses build_AD(const ClassContext& ctx, int n) {
    if (ctx.k() != 3)
        throw std::invalid_argument("build_AD: k must be 3");
    int t = k3_stretch_t(n);
    int i = (1 << t) - 3 - n;
    int j = n - (1 << (t - 1)) + 1;
    const Poly2 w3 = Poly2::variable(ctx.w1(), 3);
    auto rw1 = [&](int l) { return ctx.r(l).into_w1(); };
    auto qw1 = [&](int l) { return ctx.q(l).into_w1(); };
    ADClasses out;
    out.n = n;
    out.A = rw1(j - 1) * ctx.p(n) + w3 * rw1(j - 2) * ctx.p(n - 1) +
            rw1(j) * ctx.p(n - 2);
    out.D = qw1(i) * ctx.p(n) + qw1(i + 1) * ctx.p(n - 1) +
            w3 * qw1(i - 1) * ctx.p(n - 2);
    return out;
}

// Membership of f in the degree slice of the W1-ideal (Q_{n-2}, Q_{n-1}, Q_n).
inline bool in_w1_window_ideal(const ClassContext& ctx, int n, const Poly2& f) {
    if (f.is_zero())
        return true;
    if (!f.is_homogeneous())
        throw std::invalid_argument("in_w1_window_ideal: inhomogeneous input");
    int d = f.degree();
    auto slice = mono_basis(ctx.w1(), d);
    RowBasis span(slice->dim());
    for (int l = n - 2; l <= n; ++l) {
        const Poly2& Q = ctx.Q(l);
        int mdeg = d - l;
        if (mdeg < 0)
            continue;
        for (const auto& mu : mono_basis(ctx.w1(), mdeg)->basis)
            span.insert(slice->to_vec(Q.times_mono(mu)));
    }
    return span.contains(slice->to_vec(f));
}

enum class ADKind { A, D };

// The squares fall into the window ideal: D for 2^{t-1} < n <= 2^t - 3,
// A for 2^{t-1} <= n < 2^t - 3.
inline bool square_in_ideal(const ClassContext& ctx, int n, ADKind which) {
    int t = k3_stretch_t(n);
    int lo = 1 << (t - 1), hi = (1 << t) - 3;
    if (which == ADKind::D && !(lo < n && n <= hi))
        throw std::invalid_argument("square_in_ideal: n outside the D range");
    if (which == ADKind::A && !(lo <= n && n < hi))
        throw std::invalid_argument("square_in_ideal: n outside the A range");
    ADClasses ad = build_AD(ctx, n);
    const Poly2& x = which == ADKind::A ? ad.A : ad.D;
    return in_w1_window_ideal(ctx, n, x * x);
}

// Coefficient tables of the descended/ascended families started from the
// two-power vanishing, via the closed recursions; cross-checks for descend
// and ascend.
class SyzygyCoeffs {
public:
    enum class Kind { Descend, Ascend };

    SyzygyCoeffs(const ClassContext& ctx, Kind kind)
        : ctx_(ctx), kind_(kind), zero_(ctx.w2()) {}

    // descending-order coefficient alpha_j^i resp. beta_j^i
    Poly2 table(int j, int i) {
        int k = ctx_.k();
        if (kind_ == Kind::Descend) {
            if (j == 0)
                return alpha0(i);
            // alpha_{k-m}^i = sum_{r=0}^{m-1} w_{k-r} alpha_0^{i+r-m}
            int m = k - j;
            Poly2 out(ctx_.w2());
            for (int r = 0; r <= m - 1; ++r) {
                if (k - r < 2)
                    continue;
                out += Poly2::variable(ctx_.w2(), k - r) * alpha0(i + r - m);
            }
            return out;
        }
        // beta_j^{i} = sum_{r=0}^{j} w_{j-r} w_k^r beta_{k-1}^{i-1-r}
        if (j == k - 1)
            return beta_last(i);
        Poly2 out(ctx_.w2());
        for (int r = 0; r <= j; ++r) {
            int wi = j - r;
            Poly2 factor(ctx_.w2());
            if (wi == 0)
                factor = Poly2::one(ctx_.w2());
            else if (wi >= 2)
                factor = Poly2::variable(ctx_.w2(), wi);
            else
                continue; // w_1 = 0
            if (r > 0)
                factor = factor * Poly2::variable(ctx_.w2(), ctx_.k(), r);
            out += factor * beta_last(i - 1 - r);
        }
        return out;
    }

private:
    // alpha_0^i with alpha_0^0 = 1: alpha_0^i = sum_{r=1}^{k-1} w_{k+1-r} alpha_0^{i-1+r-k}
    const Poly2& alpha0(int i) {
        if (i < 0)
            return zero_;
        while (int(alpha0_.size()) <= i) {
            int m = int(alpha0_.size());
            if (m == 0) {
                alpha0_.push_back(Poly2::one(ctx_.w2()));
                continue;
            }
            Poly2 next(ctx_.w2());
            for (int r = 1; r <= ctx_.k() - 1; ++r) {
                int idx = m - 1 + r - ctx_.k();
                int wi = ctx_.k() + 1 - r;
                if (idx >= 0 && wi >= 2)
                    next += Poly2::variable(ctx_.w2(), wi) * alpha0_[std::size_t(idx)];
            }
            alpha0_.push_back(std::move(next));
        }
        return alpha0_[std::size_t(i)];
    }

    // beta_{k-1}^i with beta_{k-1}^0 = 1:
    // beta_{k-1}^{i+1} = sum_{r=0}^{k-1} w_{k-1-r} w_k^r beta_{k-1}^{i-r}
    const Poly2& beta_last(int i) {
        if (i < 0)
            return zero_;
        while (int(beta_.size()) <= i) {
            int m = int(beta_.size());
            if (m == 0) {
                beta_.push_back(Poly2::one(ctx_.w2()));
                continue;
            }
            Poly2 next(ctx_.w2());
            for (int r = 0; r <= ctx_.k() - 1; ++r) {
                int idx = m - 1 - r;
                int wi = ctx_.k() - 1 - r;
                if (idx < 0)
                    continue;
                Poly2 factor(ctx_.w2());
                if (wi == 0)
                    factor = Poly2::one(ctx_.w2());
                else if (wi >= 2)
                    factor = Poly2::variable(ctx_.w2(), wi);
                else
                    continue;
                if (r > 0)
                    factor = factor * Poly2::variable(ctx_.w2(), ctx_.k(), r);
                next += factor * beta_[std::size_t(idx)];
            }
            beta_.push_back(std::move(next));
        }
        return beta_[std::size_t(i)];
    }

    const ClassContext& ctx_;
    Kind kind_;
    std::vector<Poly2> alpha0_, beta_;
    Poly2 zero_;
};

} // namespace ogc
