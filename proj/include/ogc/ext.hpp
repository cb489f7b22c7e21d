#pragma once

// Graded Ext^1_C(K, C) in graded degree 0, from two steps of a minimal free
// resolution of K over the finite-dimensional local algebra C. Hom spaces are
// realized concretely: Hom(C(-b), C)_0 is the slice C_b, so every rank is a
// finite GF(2) computation. The cocycle normal form reduces a basis of
// ker(d_1) modulo im(d_0) with deterministic pivots.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ogc/present.hpp"

namespace ogc {

struct FreeResStep {
    std::vector<int> shifts;                 // generator degrees (cohomological)
    std::vector<std::vector<Poly2>> rows;    // row r = image of generator r
};

struct Resolution {
    int k = 0, n = 0;
    std::vector<int> p0;  // K generator degrees
    FreeResStep p1;       // minimal relations, entries over the p0 slots
    FreeResStep p2;       // minimal second syzygies, entries over the p1 slots
};

namespace detail {

inline std::size_t free_dim_at(CSlices& cs, const std::vector<int>& degs, int d,
                               std::vector<std::size_t>* offsets = nullptr) {
    std::size_t total = 0;
    for (int a : degs) {
        if (offsets)
            offsets->push_back(total);
        total += cs.dimC(d - a);
    }
    return total;
}

} // namespace detail

// Minimal generators of the kernel of the graded map of free C-modules
// (+)_j C(-src_j) -> (+)_i C(-dst_i) whose generator images are `rows`.
// Works degree by degree; the kernel module vanishes above max(src) + top(C).
inline FreeResStep kernel_step(CSlices& cs, const std::vector<int>& src,
                               const std::vector<int>& dst,
                               const std::vector<std::vector<Poly2>>& rows) {
    FreeResStep out;
    if (src.empty())
        return out;
    int top = cs.top_degree();
    int lo = *std::min_element(src.begin(), src.end());
    int hi = *std::max_element(src.begin(), src.end()) + top;
    for (int d = lo + 1; d <= hi; ++d) {
        std::vector<std::size_t> offs;
        std::size_t total = detail::free_dim_at(cs, src, d, &offs);
        if (total == 0)
            continue;
        std::vector<std::size_t> dst_offs;
        std::size_t width = detail::free_dim_at(cs, dst, d, &dst_offs);
        F2Mat phi(total, width);
        for (std::size_t j = 0; j < src.size(); ++j) {
            for (std::size_t c = 0; c < cs.dimC(d - src[j]); ++c) {
                Mono nu = cs.c_basis_mono(d - src[j], c);
                F2Vec& row = phi.row(offs[j] + c);
                for (std::size_t i = 0; i < dst.size(); ++i) {
                    const Poly2& entry = rows[j][i];
                    if (entry.is_zero())
                        continue;
                    F2Vec img = cs.c_coords(cs.nf(entry.times_mono(nu)),
                                            d - dst[i]);
                    for (std::size_t b = 0; b < img.size(); ++b)
                        if (img.get(b))
                            row.set(dst_offs[i] + b, true);
                }
            }
        }
        F2Mat ker = left_kernel(phi);
        RowBasis span(total);
        for (std::size_t g = 0; g < out.shifts.size(); ++g) {
            int cd = d - out.shifts[g];
            for (std::size_t c = 0; c < cs.dimC(cd); ++c) {
                Mono nu = cs.c_basis_mono(cd, c);
                F2Vec row(total);
                for (std::size_t j = 0; j < src.size(); ++j) {
                    const Poly2& entry = out.rows[g][j];
                    if (entry.is_zero())
                        continue;
                    F2Vec coords =
                        cs.c_coords(cs.nf(entry.times_mono(nu)), d - src[j]);
                    for (std::size_t b = 0; b < coords.size(); ++b)
                        if (coords.get(b))
                            row.set(offs[j] + b, true);
                }
                span.insert(std::move(row));
            }
        }
        for (std::size_t r = 0; r < ker.nrows(); ++r) {
            F2Vec v = ker.row(r);
            span.reduce(v);
            if (v.is_zero())
                continue;
            std::vector<Poly2> gen;
            for (std::size_t j = 0; j < src.size(); ++j)
                gen.push_back(cs.c_elem_from_coords(
                    d - src[j], v.slice(offs[j], offs[j] + cs.dimC(d - src[j]))));
            out.shifts.push_back(d);
            out.rows.push_back(std::move(gen));
            span.insert(std::move(v));
        }
        // middle exactness at this degree: the accumulated span is exactly
        // the kernel slice
        if (span.rank() != ker.nrows())
            throw std::logic_error("kernel_step: span does not fill the kernel");
    }
    return out;
}

// Two steps of the minimal free resolution of K over C. Also verifies that
// the relation step really presents K: the cokernel Hilbert function must
// reproduce K's (known from the Poincare pairing) through the syzygy range.
inline Resolution resolve_K(CaseEngine& eng, bool verify = true) {
    KData kd = eng.present_K(true);
    CSlices& cs = eng.cs();
    Resolution res;
    res.k = kd.k;
    res.n = kd.n;
    res.p0 = kd.gen_degrees;
    for (const auto& rel : kd.relations) {
        res.p1.shifts.push_back(rel.degree);
        res.p1.rows.push_back(rel.coeffs);
    }
    if (!res.p1.shifts.empty())
        res.p2 = kernel_step(cs, res.p1.shifts, res.p0, res.p1.rows);
    if (verify && !res.p0.empty()) {
        int hi = res.p1.shifts.empty()
                     ? res.p0.back() + cs.top_degree()
                     : *std::max_element(res.p1.shifts.begin(),
                                         res.p1.shifts.end()) +
                           cs.top_degree();
        auto presented = presentation_hilbert(cs, kd.presentation(),
                                              std::min(hi, eng.dimension()));
        for (auto [d, dim] : presented) {
            auto it = kd.hilbert.find(d);
            if (it == kd.hilbert.end() || it->second != dim)
                throw std::logic_error("resolve_K: presentation does not "
                                       "reproduce K's Hilbert function");
        }
        for (auto [d, dim] : kd.hilbert) {
            if (d > std::min(hi, eng.dimension()))
                continue;
            auto it = presented.find(d);
            if (it == presented.end() || it->second != dim)
                throw std::logic_error("resolve_K: presentation misses part "
                                       "of K");
        }
    }
    return res;
}

struct ExtCocycle {
    std::vector<Poly2> values; // one element of C_{b_j} per relation slot
};

struct ExtReport {
    int k = 0, n = 0;
    int ext1_rank = 0;
    int z1_dim = 0;  // dim Hom(P1, C)_0, the degree-0 cochain space
    int d0_rank = 0; // rank of Hom(P0,C)_0 -> Hom(P1,C)_0
    int d1_rank = 0; // rank of Hom(P1,C)_0 -> Hom(P2,C)_0
    std::vector<int> relation_degrees;
    std::vector<ExtCocycle> cocycles; // normal-form basis of Ext^1
};

// Rank and normal-form cocycle basis of Ext^1_C(K, C) in graded degree 0.
inline ExtReport ext1(CaseEngine& eng) {
    Resolution res = resolve_K(eng);
    CSlices& cs = eng.cs();
    ExtReport rep;
    rep.k = res.k;
    rep.n = res.n;
    rep.relation_degrees = res.p1.shifts;

    // Hom((+)C(-b), C)_0 = (+)_j C_{b_j}
    std::vector<std::size_t> hom1_offs;
    std::size_t hom1 = 0;
    for (int b : res.p1.shifts) {
        hom1_offs.push_back(hom1);
        hom1 += cs.dimC(b);
    }
    rep.z1_dim = int(hom1);
    if (hom1 == 0)
        return rep; // no degree-0 cochains at all: Ext^1 vanishes

    // d0: rows indexed by the Hom(P0, C)_0 basis
    std::size_t hom0 = 0;
    std::vector<std::size_t> hom0_offs;
    for (int a : res.p0) {
        hom0_offs.push_back(hom0);
        hom0 += cs.dimC(a);
    }
    F2Mat d0(hom0, hom1);
    for (std::size_t i = 0; i < res.p0.size(); ++i) {
        for (std::size_t c = 0; c < cs.dimC(res.p0[i]); ++c) {
            Mono mu = cs.c_basis_mono(res.p0[i], c);
            F2Vec& row = d0.row(hom0_offs[i] + c);
            for (std::size_t j = 0; j < res.p1.shifts.size(); ++j) {
                const Poly2& lam = res.p1.rows[j][i];
                if (lam.is_zero())
                    continue;
                F2Vec img = cs.c_coords(cs.nf(lam.times_mono(mu)),
                                        res.p1.shifts[j]);
                for (std::size_t b = 0; b < img.size(); ++b)
                    if (img.get(b))
                        row.set(hom1_offs[j] + b, true);
            }
        }
    }

    // d1: rows indexed by the Hom(P1, C)_0 basis
    std::size_t hom2 = 0;
    std::vector<std::size_t> hom2_offs;
    for (int cdeg : res.p2.shifts) {
        hom2_offs.push_back(hom2);
        hom2 += cs.dimC(cdeg);
    }
    F2Mat d1(hom1, hom2);
    for (std::size_t j = 0; j < res.p1.shifts.size(); ++j) {
        for (std::size_t c = 0; c < cs.dimC(res.p1.shifts[j]); ++c) {
            Mono nu = cs.c_basis_mono(res.p1.shifts[j], c);
            F2Vec& row = d1.row(hom1_offs[j] + c);
            for (std::size_t m = 0; m < res.p2.shifts.size(); ++m) {
                const Poly2& mu2 = res.p2.rows[m][j];
                if (mu2.is_zero())
                    continue;
                F2Vec img = cs.c_coords(cs.nf(mu2.times_mono(nu)),
                                        res.p2.shifts[m]);
                for (std::size_t b = 0; b < img.size(); ++b)
                    if (img.get(b))
                        row.set(hom2_offs[m] + b, true);
            }
        }
    }

    rep.d0_rank = int(rank(d0));
    rep.d1_rank = int(rank(d1));
    rep.ext1_rank = rep.z1_dim - rep.d1_rank - rep.d0_rank;

    // normal-form cocycle basis: reduce ker(d1) modulo im(d0)
    F2Mat cocycles = left_kernel(d1);
    RowBasis bnd(hom1);
    for (std::size_t r = 0; r < d0.nrows(); ++r)
        bnd.insert(d0.row(r));
    RowBasis chosen(hom1);
    for (std::size_t r = 0; r < cocycles.nrows(); ++r) {
        F2Vec v = cocycles.row(r);
        bnd.reduce(v);
        chosen.reduce(v);
        if (v.is_zero())
            continue;
        ExtCocycle cc;
        for (std::size_t j = 0; j < res.p1.shifts.size(); ++j)
            cc.values.push_back(cs.c_elem_from_coords(
                res.p1.shifts[j],
                v.slice(hom1_offs[j], hom1_offs[j] + cs.dimC(res.p1.shifts[j]))));
        rep.cocycles.push_back(std::move(cc));
        chosen.insert(std::move(v));
    }
    if (int(rep.cocycles.size()) != rep.ext1_rank)
        throw std::logic_error("ext1: cocycle basis size disagrees with rank");
    return rep;
}

inline ExtReport ext1(int k, int n, bool reversed_order = false) {
    CaseEngine eng(k, n, reversed_order);
    return ext1(eng);
}

} // namespace ogc
