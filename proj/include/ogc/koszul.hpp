#pragma once

// The Koszul complex of the window (q_{n-k+1}, ..., q_n) over W2 and its
// degreewise homology. H_0 is the characteristic subring C, H_1 (shifted down
// by one) is the anomalous module K, and H_{>1} vanishes.
//
// Chain bases: level-i chains in internal degree d are the direct sum over
// i-subsets S of the window slots of the W2 slices in degree d - shift(S),
// subsets in colex order, monomials in the canonical order. All matrices use
// the row convention x -> x * M.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ogc/classes.hpp"
#include "ogc/f2.hpp"
#include "ogc/poly.hpp"

namespace ogc {

// k = 3 bookkeeping: t is the unique exponent with 2^{t-1} < n <= 2^t,
// i = 2^t - 3 - n and j = n - 2^{t-1} + 1.
struct CaseIndices {
    int k = 3, n = 0, t = 0, i = 0, j = 0;

    static CaseIndices k3(int n) {
        if (n < 2)
            throw std::invalid_argument("CaseIndices: n too small");
        int t = 1;
        while ((1 << t) < n)
            ++t;
        CaseIndices c;
        c.k = 3;
        c.n = n;
        c.t = t;
        c.i = (1 << t) - 3 - n;
        c.j = n - (1 << (t - 1)) + 1;
        return c;
    }

    bool in_main_range() const {
        return (1 << (t - 1)) < n && n <= (1 << t) - 4;
    }
};

// The connecting map into K drops the degree by one: an H_1 class of Koszul
// degree D corresponds to an anomalous class in cohomological degree D - 1.
// This shift is applied at exactly one boundary (H_1 slices -> K data).
constexpr int coh_of_koszul(int koszul_degree) { return koszul_degree - 1; }
constexpr int koszul_of_coh(int coh_degree) { return coh_degree + 1; }

// Quotient coordinates on an H_1 slice: representatives are the rref residues
// of the cycle space relative to the boundary space.
class H1Slice {
public:
    H1Slice(std::size_t ncols, const F2Mat& cycles, const F2Mat& boundaries)
        : boundary_(ncols), reps_(ncols) {
        for (std::size_t r = 0; r < boundaries.nrows(); ++r)
            boundary_.insert(boundaries.row(r));
        for (std::size_t r = 0; r < cycles.nrows(); ++r) {
            F2Vec v = cycles.row(r);
            boundary_.reduce(v);
            reps_.insert(std::move(v));
        }
    }

    std::size_t dim() const { return reps_.rank(); }
    std::size_t boundary_rank() const { return boundary_.rank(); }

    const std::vector<F2Vec>& representatives() const { return reps_.rows(); }

    // Class coordinates of an arbitrary 1-cycle in this degree.
    F2Vec coords(F2Vec v) const {
        boundary_.reduce(v);
        F2Vec out(reps_.rank());
        for (std::size_t i = 0; i < reps_.rows().size(); ++i) {
            if (v.get(reps_.pivots()[i])) {
                v ^= reps_.rows()[i];
                out.set(i, true);
            }
        }
        if (!v.is_zero())
            throw std::logic_error("H1Slice::coords: vector is not a 1-cycle");
        return out;
    }

private:
    RowBasis boundary_;
    RowBasis reps_;
};

class KoszulComplex {
public:
    KoszulComplex(std::shared_ptr<const ClassContext> ctx, int n)
        : ctx_(std::move(ctx)), n_(n) {
        int k = ctx_->k();
        if (!(2 <= k && k < n))
            throw std::invalid_argument("KoszulComplex: need 2 <= k < n");
        for (int s = 0; s < k; ++s)
            qwin_.push_back(ctx_->q(n - k + 1 + s));
        subsets_.resize(std::size_t(k) + 1);
        shifts_.resize(std::size_t(k) + 1);
        for (int lv = 0; lv <= k; ++lv) {
            subsets_[std::size_t(lv)] = subsets_colex(k, lv);
            for (const auto& s : subsets_[std::size_t(lv)]) {
                int shift = 0;
                for (int e : s)
                    shift += slot_degree(e);
                shifts_[std::size_t(lv)].push_back(shift);
            }
        }
        // d o d = 0 spot check in low degrees
        for (int d = min_shift(2); d <= min_shift(2) + 2; ++d)
            if (!is_zero(mat_mul(differential(2, d), differential(1, d))))
                throw std::logic_error("KoszulComplex: d1 o d2 != 0");
    }

    static KoszulComplex build(int k, int n) {
        return KoszulComplex(std::make_shared<ClassContext>(k), n);
    }

    int k() const { return ctx_->k(); }
    int n() const { return n_; }
    int dimension() const { return k() * (n_ - k()); } // N = dim Gr_k(n)
    const ClassContext& ctx() const { return *ctx_; }
    std::shared_ptr<const ClassContext> ctx_ptr() const { return ctx_; }

    // degree of the window polynomial in slot s (0-based)
    int slot_degree(int s) const { return n_ - k() + 1 + s; }
    const Poly2& slot_poly(int s) const { return qwin_[std::size_t(s)]; }

    const std::vector<int>& shifts(int level) const {
        return shifts_[std::size_t(level)];
    }
    int min_shift(int level) const {
        int m = shifts_[std::size_t(level)].empty() ? 0 : shifts_[std::size_t(level)][0];
        for (int s : shifts_[std::size_t(level)])
            m = std::min(m, s);
        return m;
    }

    std::size_t dim_chain(int level, int d) const {
        if (level < 0 || level > k())
            return 0;
        std::size_t dim = 0;
        for (int shift : shifts_[std::size_t(level)])
            dim += std::size_t(hilbert_count(ctx_->w2(), d - shift));
        return dim;
    }

    // offset of subset block `si` inside the level-`level` degree-d chain
    std::size_t block_offset(int level, int d, std::size_t si) const {
        std::size_t off = 0;
        for (std::size_t t = 0; t < si; ++t)
            off += std::size_t(
                hilbert_count(ctx_->w2(), d - shifts_[std::size_t(level)][t]));
        return off;
    }

    // Matrix of d_level restricted to internal degree d (empty slices give
    // empty blocks). Rows = level chains, columns = (level-1) chains.
    F2Mat differential(int level, int d) const {
        if (level < 1 || level > k())
            return F2Mat(0, dim_chain(level - 1, d));
        const auto& src_sub = subsets_[std::size_t(level)];
        F2Mat m(dim_chain(level, d), dim_chain(level - 1, d));
        for (std::size_t si = 0; si < src_sub.size(); ++si) {
            int src_deg = d - shifts_[std::size_t(level)][si];
            if (src_deg < 0 || hilbert_count(ctx_->w2(), src_deg) == 0)
                continue;
            auto src_slice = mono_basis(ctx_->w2(), src_deg);
            std::size_t row0 = block_offset(level, d, si);
            for (int el : src_sub[si]) {
                std::vector<int> target = src_sub[si];
                target.erase(std::find(target.begin(), target.end(), el));
                std::size_t ti = subset_index(level - 1, target);
                int dst_deg = d - shifts_[std::size_t(level - 1)][ti];
                if (dst_deg < 0 || hilbert_count(ctx_->w2(), dst_deg) == 0)
                    continue;
                auto dst_slice = mono_basis(ctx_->w2(), dst_deg);
                if (slot_poly(el).is_zero())
                    continue;
                F2Mat block = mul_matrix(slot_poly(el), *src_slice, *dst_slice);
                std::size_t col0 = block_offset(level - 1, d, ti);
                for (std::size_t r = 0; r < block.nrows(); ++r)
                    for (std::size_t c = 0; c < block.ncols(); ++c)
                        if (block.get(r, c))
                            m.set(row0 + r, col0 + c, true);
            }
        }
        return m;
    }

    // dim of ker(d_level)_d / im(d_{level+1})_d
    std::size_t homology_dim(int level, int d) const {
        if (level < 0 || level > k() || d < 0)
            return 0;
        std::size_t cycles;
        if (level == 0)
            cycles = dim_chain(0, d); // d_0 = 0
        else
            cycles = dim_chain(level, d) - rank(differential(level, d));
        std::size_t bnd = level + 1 <= k() ? rank(differential(level + 1, d)) : 0;
        return cycles - bnd;
    }

    // Cached H_1 slice with chosen representatives and quotient coordinates.
    std::shared_ptr<const H1Slice> h1(int d) const {
        {
            std::lock_guard<std::mutex> lock(h1_mu_);
            auto it = h1_cache_.find(d);
            if (it != h1_cache_.end())
                return it->second;
        }
        F2Mat cycles = left_kernel(differential(1, d));
        F2Mat bnd = differential(2, d);
        auto slice = std::make_shared<H1Slice>(dim_chain(1, d), cycles, bnd);
        std::lock_guard<std::mutex> lock(h1_mu_);
        auto [it, ins] = h1_cache_.emplace(d, slice);
        return it->second;
    }

    // Decode a level-1 chain vector into its k polynomial coefficients.
    std::vector<Poly2> decode_level1(const F2Vec& v, int d) const {
        std::vector<Poly2> out;
        for (int s = 0; s < k(); ++s) {
            int deg = d - slot_degree(s);
            if (deg < 0 || hilbert_count(ctx_->w2(), deg) == 0) {
                out.push_back(Poly2::zero(ctx_->w2()));
                continue;
            }
            auto slice = mono_basis(ctx_->w2(), deg);
            std::size_t off = block_offset(1, d, std::size_t(s));
            out.push_back(slice->from_vec(v.slice(off, off + slice->dim())));
        }
        return out;
    }

    // Encode k polynomial coefficients as a level-1 chain vector of degree d.
    F2Vec encode_level1(const std::vector<Poly2>& coeffs, int d) const {
        F2Vec v(dim_chain(1, d));
        for (int s = 0; s < k(); ++s) {
            const Poly2& c = coeffs[std::size_t(s)];
            if (c.is_zero())
                continue;
            if (!c.is_homogeneous() || c.degree() != d - slot_degree(s))
                throw std::invalid_argument("encode_level1: inhomogeneous input");
            auto slice = mono_basis(ctx_->w2(), c.degree());
            std::size_t off = block_offset(1, d, std::size_t(s));
            F2Vec cv = slice->to_vec(c);
            for (std::size_t i = 0; i < cv.size(); ++i)
                if (cv.get(i))
                    v.set(off + i, true);
        }
        return v;
    }

    static std::vector<std::vector<int>> subsets_colex(int k, int size) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        // colex: recurse on the largest element
        std::function<void(int, int)> rec = [&](int maxel, int need) {
            if (need == 0) {
                std::vector<int> s(cur.rbegin(), cur.rend());
                out.push_back(std::move(s));
                return;
            }
            for (int e = need - 1; e <= maxel; ++e) {
                cur.push_back(e);
                rec(e - 1, need - 1);
                cur.pop_back();
            }
        };
        rec(k - 1, size);
        return out;
    }

    std::size_t subset_index(int level, const std::vector<int>& s) const {
        const auto& list = subsets_[std::size_t(level)];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == s)
                return i;
        throw std::logic_error("KoszulComplex: subset not found");
    }

private:
    std::shared_ptr<const ClassContext> ctx_;
    int n_;
    std::vector<Poly2> qwin_;
    std::vector<std::vector<std::vector<int>>> subsets_;
    std::vector<std::vector<int>> shifts_;
    mutable std::mutex h1_mu_;
    mutable std::map<int, std::shared_ptr<const H1Slice>> h1_cache_;
};

} // namespace ogc
