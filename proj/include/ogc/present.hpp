#pragma once

// Minimal graded presentations extracted degreewise: the characteristic
// subring C = W2/(q_{n-k+1},...,q_n), the kernel of the Koszul d_1 as a
// W2-module, and the anomalous module K = H_1 (shifted) as a C-module;
// characteristic ranks and the structural checks that go with them.
//
// C is a graded local ring of Krull dimension zero (its maximal ideal
// (w_2,...,w_k) is nilpotent), so Nakayama applies: minimal generators of a
// graded module are computed degree by degree as the complement of what lower
// degrees already generate. The Poincare pairing K_d x C_{N-d} -> F2 makes K
// the graded dual of C; the engine predicts K's generator degrees from the
// socle of C and requires the Koszul-side extraction to agree.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogc/koszul.hpp"

namespace ogc {

// Diagnostic aborts (cap too low, falsified bounds): CLI exit code 3.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RingTag { W2, C };

struct Presentation {
    RingTag ring = RingTag::C;
    std::vector<int> generator_degrees;           // sorted ascending
    std::vector<int> relation_degrees;            // sorted ascending
    std::vector<std::vector<Poly2>> relation_rows; // row per relation, column per generator
};

// Degreewise view of C: per degree the rref of the ideal slice and the
// standard-monomial complement. `reversed` flips every coordinate order; used
// by the representation-independence checks.
class CSlices {
public:
    CSlices(std::shared_ptr<const ClassContext> ctx, int n, bool reversed = false)
        : ctx_(std::move(ctx)), n_(n), reversed_(reversed) {
        int k = ctx_->k();
        if (!(2 <= k && k < n))
            throw std::invalid_argument("CSlices: need 2 <= k < n");
        for (int j = n - k + 1; j <= n; ++j)
            if (!ctx_->q(j).is_zero())
                window_.push_back(ctx_->q(j));
    }

    int k() const { return ctx_->k(); }
    int n() const { return n_; }
    int dimension() const { return k() * (n_ - k()); }
    const ClassContext& ctx() const { return *ctx_; }

    struct DegData {
        std::shared_ptr<const GradedSlice> slice;
        RowBasis ideal;
        std::vector<std::size_t> std_cols; // non-pivot columns, ascending
    };

    const DegData& at(int d) {
        auto it = degs_.find(d);
        if (it != degs_.end())
            return it->second;
        DegData data;
        data.slice = mono_basis(ctx_->w2(), std::max(d, -1));
        data.ideal = RowBasis(data.slice->dim());
        if (d >= 0) {
            for (const Poly2& q : window_) {
                int mdeg = d - q.degree();
                if (mdeg < 0)
                    continue;
                auto monos = mono_basis(ctx_->w2(), mdeg);
                for (const auto& mu : monos->basis)
                    data.ideal.insert(to_coords_raw(q.times_mono(mu), *data.slice));
            }
        }
        std::vector<char> is_pivot(data.slice->dim(), 0);
        for (auto p : data.ideal.pivots())
            is_pivot[p] = 1;
        for (std::size_t c = 0; c < data.slice->dim(); ++c)
            if (!is_pivot[c])
                data.std_cols.push_back(c);
        return degs_.emplace(d, std::move(data)).first->second;
    }

    std::size_t dim_w2(int d) const { return std::size_t(hilbert_count(ctx_->w2(), d)); }

    std::size_t dimC(int d) {
        if (d < 0)
            return 0;
        return at(d).std_cols.size();
    }

    // Normal form of a homogeneous polynomial modulo the ideal slice.
    Poly2 nf(const Poly2& f) {
        if (f.is_zero())
            return f;
        if (!f.is_homogeneous())
            throw std::invalid_argument("CSlices::nf: inhomogeneous input");
        const DegData& data = at(f.degree());
        F2Vec v = to_coords_raw(f, *data.slice);
        data.ideal.reduce(v);
        return data.slice->from_vec(unpermute(v));
    }

    bool in_ideal(const Poly2& f) { return nf(f).is_zero(); }

    // Coordinates of f's class in the standard-monomial basis of C_d.
    F2Vec c_coords(const Poly2& f, int d) {
        const DegData& data = at(d);
        F2Vec out(data.std_cols.size());
        if (f.is_zero())
            return out;
        if (!f.is_homogeneous() || f.degree() != d)
            throw std::invalid_argument("CSlices::c_coords: degree mismatch");
        F2Vec v = to_coords_raw(f, *data.slice);
        data.ideal.reduce(v);
        for (std::size_t i = 0; i < data.std_cols.size(); ++i)
            out.set(i, v.get(data.std_cols[i]));
        return out;
    }

    // The standard monomial representing coordinate idx of C_d.
    Mono c_basis_mono(int d, std::size_t idx) {
        const DegData& data = at(d);
        return data.slice->basis[unpermute_index(data.std_cols[idx],
                                                 data.slice->dim())];
    }

    Poly2 c_elem_from_coords(int d, const F2Vec& coords) {
        std::vector<Mono> terms;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords.get(i))
                terms.push_back(c_basis_mono(d, i));
        return Poly2::from_terms(ctx_->w2(), std::move(terms));
    }

    // Largest degree with C_d != 0. C is generated in degrees <= k, so k
    // consecutive zero slices end the algebra for good.
    int top_degree() {
        if (top_.has_value())
            return *top_;
        int zeros = 0, top = 0;
        for (int d = 0;; ++d) {
            if (d > dimension() + 1)
                throw CapError("CSlices: C extends past the dimension bound");
            if (dimC(d) > 0) {
                top = d;
                zeros = 0;
            } else if (++zeros >= k()) {
                break;
            }
        }
        top_ = top;
        return top;
    }

    // Socle degrees of C (ann of the maximal ideal), as a sorted multiset.
    const std::vector<int>& socle_degrees() {
        if (socle_.has_value())
            return *socle_;
        std::vector<int> out;
        int top = top_degree();
        for (int d = 0; d <= top; ++d) {
            std::size_t dim = dimC(d);
            if (dim == 0)
                continue;
            // matrix of C_d -> sum_i C_{d+i}, x -> (w_i x)
            std::size_t width = 0;
            for (int i = 2; i <= k(); ++i)
                width += dimC(d + i);
            F2Mat m(dim, width);
            for (std::size_t r = 0; r < dim; ++r) {
                Poly2 mu = Poly2::from_terms(ctx_->w2(), {c_basis_mono(d, r)});
                std::size_t off = 0;
                for (int i = 2; i <= k(); ++i) {
                    F2Vec img = c_coords(nf(mu * Poly2::variable(ctx_->w2(), i)),
                                         d + i);
                    for (std::size_t c = 0; c < img.size(); ++c)
                        if (img.get(c))
                            m.set(r, off + c, true);
                    off += img.size();
                }
            }
            std::size_t socle_dim = dim - rank(m);
            for (std::size_t s = 0; s < socle_dim; ++s)
                out.push_back(d);
        }
        socle_ = std::move(out);
        return *socle_;
    }

private:
    F2Vec to_coords_raw(const Poly2& f, const GradedSlice& slice) const {
        F2Vec v = slice.to_vec(f);
        if (!reversed_)
            return v;
        F2Vec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.get(i))
                r.set(v.size() - 1 - i, true);
        return r;
    }

    F2Vec unpermute(const F2Vec& v) const {
        if (!reversed_)
            return v;
        F2Vec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.get(i))
                r.set(v.size() - 1 - i, true);
        return r;
    }

    std::size_t unpermute_index(std::size_t i, std::size_t dim) const {
        return reversed_ ? dim - 1 - i : i;
    }

    std::shared_ptr<const ClassContext> ctx_;
    int n_;
    bool reversed_;
    std::vector<Poly2> window_; // nonzero window polynomials
    std::map<int, DegData> degs_;
    std::optional<int> top_;
    std::optional<std::vector<int>> socle_;
};

struct CData {
    int k = 0, n = 0;
    std::vector<Poly2> ideal_min_gens;
    std::map<int, int> hilbert; // nonzero degrees only
    int top_degree = 0;
};

struct GenVec {
    int koszul_degree = 0;
    std::vector<Poly2> coeffs; // level-1 chain written over the window slots
};

struct KRelation {
    int degree = 0;            // cohomological
    std::vector<Poly2> coeffs; // one normal-form entry per generator
};

struct KData {
    int k = 0, n = 0;
    std::vector<int> gen_degrees; // cohomological, ascending
    std::vector<GenVec> generators;
    std::vector<KRelation> relations; // empty when not requested or none
    bool relations_computed = false;
    std::map<int, int> hilbert; // coh degree -> dim, full support (via pairing)
    int top_c = 0;

    Presentation presentation() const {
        Presentation p;
        p.ring = RingTag::C;
        p.generator_degrees = gen_degrees;
        for (const auto& r : relations) {
            p.relation_degrees.push_back(r.degree);
            p.relation_rows.push_back(r.coeffs);
        }
        return p;
    }
};

// All computations attached to one (k, n), sharing one class context, one
// Koszul complex and one slice table. Independent instances are safe to use
// from different threads; a single instance is not synchronized.
class CaseEngine {
public:
    CaseEngine(int k, int n, bool reversed_order = false)
        : ctx_(std::make_shared<ClassContext>(k)),
          kosz_(ctx_, n),
          cs_(ctx_, n, reversed_order) {}

    int k() const { return ctx_->k(); }
    int n() const { return kosz_.n(); }
    int dimension() const { return kosz_.dimension(); }

    const ClassContext& ctx() const { return *ctx_; }
    std::shared_ptr<const ClassContext> ctx_ptr() const { return ctx_; }
    const KoszulComplex& kosz() const { return kosz_; }
    CSlices& cs() { return cs_; }

    CData present_C() {
        CData out;
        out.k = k();
        out.n = n();
        // minimal ideal generators: walk the window in ascending degree,
        // dropping q_j when it lies in the ideal of the other survivors plus
        // the not-yet-visited ones
        std::vector<Poly2> window;
        for (int j = n() - k() + 1; j <= n(); ++j)
            window.push_back(ctx_->q(j));
        std::vector<bool> dropped(window.size(), false);
        for (std::size_t j = 0; j < window.size(); ++j) {
            if (window[j].is_zero()) {
                dropped[j] = true;
                continue;
            }
            std::vector<Poly2> others;
            for (std::size_t l = 0; l < window.size(); ++l)
                if (l != j && !dropped[l] && !window[l].is_zero())
                    others.push_back(window[l]);
            if (member_of_ideal(window[j], others))
                dropped[j] = true;
        }
        for (std::size_t j = 0; j < window.size(); ++j)
            if (!dropped[j])
                out.ideal_min_gens.push_back(window[j]);
        out.top_degree = cs_.top_degree();
        for (int d = 0; d <= out.top_degree; ++d)
            if (cs_.dimC(d) > 0)
                out.hilbert[d] = int(cs_.dimC(d));
        return out;
    }

    // Least e >= 1 with w_v^e in the window ideal; bounded by the radical
    // statement (the maximal ideal is the radical, so e exists).
    int nilpotency_witness(int v) {
        if (v < 2 || v > k())
            throw std::invalid_argument("nilpotency_witness: variable outside W2");
        for (int e = 1; e * v <= dimension() + k(); ++e) {
            if (cs_.in_ideal(Poly2::variable(ctx_->w2(), v, e)))
                return e;
        }
        throw CapError("nilpotency_witness: no power found below the bound");
    }

    // Minimal W2-module generators of ker(d_1), up to Koszul degree cap.
    std::vector<GenVec> min_gens_ker_d1(int cap = -1) {
        if (cap < 0)
            cap = dimension() + k() + 1;
        std::vector<GenVec> gens;
        for (int D = kosz_.min_shift(1); D <= cap; ++D) {
            F2Mat cycles = left_kernel(kosz_.differential(1, D));
            if (cycles.nrows() == 0)
                continue;
            RowBasis span(kosz_.dim_chain(1, D));
            insert_multiples(span, gens, D);
            for (std::size_t r = 0; r < cycles.nrows(); ++r) {
                F2Vec v = cycles.row(r);
                span.reduce(v);
                if (v.is_zero())
                    continue;
                gens.push_back(GenVec{D, kosz_.decode_level1(v, D)});
                span.insert(std::move(v));
            }
        }
        for (const auto& g : gens)
            if (g.koszul_degree > cap - k())
                throw CapError("min_gens_ker_d1: generators at the cap window; "
                               "raise the cap");
        return gens;
    }

    KData present_K(bool want_relations = true) {
        KData out;
        out.k = k();
        out.n = n();
        out.top_c = cs_.top_degree();
        const int N = dimension();

        // K is the graded dual of C (Poincare pairing), so its generator
        // degrees are the reflected socle degrees of C and its Hilbert
        // function is the reflected one of C.
        std::vector<int> predicted;
        for (int s : cs_.socle_degrees())
            predicted.push_back(N - s);
        std::sort(predicted.begin(), predicted.end());
        for (int d = 0; d <= out.top_c; ++d)
            if (cs_.dimC(d) > 0)
                out.hilbert[N - d] = int(cs_.dimC(d));

        // Koszul-route extraction, degree by degree.
        int cap = predicted.empty() ? kosz_.min_shift(1)
                                    : predicted.back() + 1; // Koszul degree
        for (int D = kosz_.min_shift(1); D <= cap; ++D) {
            F2Mat cycles = left_kernel(kosz_.differential(1, D));
            if (cycles.nrows() == 0)
                continue;
            RowBasis span(kosz_.dim_chain(1, D));
            F2Mat bnd = kosz_.differential(2, D);
            for (std::size_t r = 0; r < bnd.nrows(); ++r)
                span.insert(bnd.row(r));
            insert_multiples(span, out.generators, D);
            for (std::size_t r = 0; r < cycles.nrows(); ++r) {
                F2Vec v = cycles.row(r);
                span.reduce(v);
                if (v.is_zero())
                    continue;
                out.generators.push_back(GenVec{D, kosz_.decode_level1(v, D)});
                out.gen_degrees.push_back(coh_of_koszul(D));
                span.insert(std::move(v));
            }
        }
        std::sort(out.gen_degrees.begin(), out.gen_degrees.end());
        if (out.gen_degrees != predicted)
            throw CapError("present_K: Koszul generators disagree with the "
                           "socle reflection of C");

        if (want_relations) {
            out.relations = minimal_relations(out.generators);
            out.relations_computed = true;
        }
        return out;
    }

    // Minimal generators of the kernel of (+) C(-a_i) -> K.
    std::vector<KRelation> minimal_relations(const std::vector<GenVec>& gens) {
        std::vector<KRelation> rels;
        if (gens.empty())
            return rels;
        const int top = cs_.top_degree();
        int amin = gens.front().koszul_degree, amax = amin;
        for (const auto& g : gens) {
            amin = std::min(amin, g.koszul_degree);
            amax = std::max(amax, g.koszul_degree);
        }
        // cohomological generator degrees
        std::vector<int> a;
        for (const auto& g : gens)
            a.push_back(g.koszul_degree - 1);

        for (int d = amin + 1; d <= (amax - 1) + top; ++d) {
            // unknown block layout: generator i contributes dimC(d - a_i)
            std::vector<std::size_t> offs;
            std::size_t total = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                offs.push_back(total);
                total += cs_.dimC(d - a[i]);
            }
            if (total == 0)
                continue;
            auto h1 = kosz_.h1(d + 1);
            F2Mat phi(total, h1->dim());
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int cd = d - a[i];
                for (std::size_t c = 0; c < cs_.dimC(cd); ++c) {
                    Mono mu = cs_.c_basis_mono(cd, c);
                    std::vector<Poly2> prod;
                    for (const Poly2& f : gens[i].coeffs)
                        prod.push_back(f.times_mono(mu));
                    phi.row(offs[i] + c) =
                        h1->coords(kosz_.encode_level1(prod, d + 1));
                }
            }
            F2Mat ker = left_kernel(phi);
            if (ker.nrows() == 0)
                continue;
            // span of C-multiples of the relations found in lower degrees
            RowBasis span(total);
            for (const auto& rel : rels) {
                int cd = d - rel.degree;
                for (std::size_t c = 0; c < cs_.dimC(cd); ++c) {
                    Mono nu = cs_.c_basis_mono(cd, c);
                    F2Vec row(total);
                    for (std::size_t i = 0; i < gens.size(); ++i) {
                        if (rel.coeffs[i].is_zero())
                            continue;
                        F2Vec coords = cs_.c_coords(
                            cs_.nf(rel.coeffs[i].times_mono(nu)), d - a[i]);
                        for (std::size_t b = 0; b < coords.size(); ++b)
                            if (coords.get(b))
                                row.set(offs[i] + b, true);
                    }
                    span.insert(std::move(row));
                }
            }
            for (std::size_t r = 0; r < ker.nrows(); ++r) {
                F2Vec v = ker.row(r);
                span.reduce(v);
                if (v.is_zero())
                    continue;
                KRelation rel;
                rel.degree = d;
                for (std::size_t i = 0; i < gens.size(); ++i)
                    rel.coeffs.push_back(cs_.c_elem_from_coords(
                        d - a[i], v.slice(offs[i], offs[i] + cs_.dimC(d - a[i]))));
                rels.push_back(std::move(rel));
                span.insert(std::move(v));
            }
        }
        return rels;
    }

    // Largest degree through which the cohomology is generated by the
    // Stiefel-Whitney classes: one less than K's lowest generator degree.
    int charrank() {
        const int N = dimension();
        for (int D = kosz_.min_shift(1); D <= N + 1; ++D)
            if (kosz_.homology_dim(1, D) > 0)
                return coh_of_koszul(D) - 1;
        return N; // K = 0: no anomalous class below the top
    }

    // Per-degree Poincare duality c_d = k_{N-d} between C and K, verified
    // from scratch (ranks of d_1 and d_2 in every degree). Also pins the
    // computation cap: H_1 must vanish at Koszul degree N and be a line at
    // N + 1.
    bool check_poincare() {
        const int N = dimension();
        std::vector<std::size_t> rank1(std::size_t(N) + 3, 0),
            rank2(std::size_t(N) + 3, 0);
        for (int d = 0; d <= N + 2; ++d) {
            rank1[std::size_t(d)] = rank(kosz_.differential(1, d));
            rank2[std::size_t(d)] = rank(kosz_.differential(2, d));
        }
        auto cdim = [&](int d) -> std::size_t {
            if (d < 0 || d > N + 1)
                return 0;
            return cs_.dim_w2(d) - rank1[std::size_t(d)];
        };
        auto kdim = [&](int d) -> std::size_t {
            int D = d + 1;
            if (D < 0 || D > N + 2)
                return 0;
            return (kosz_.dim_chain(1, D) - rank1[std::size_t(D)]) -
                   rank2[std::size_t(D)];
        };
        if (kdim(N - 1) != 0 || kdim(N) != 1)
            throw CapError("check_poincare: pairing prediction fails at the cap");
        for (int d = 0; d <= N; ++d)
            if (cdim(d) != kdim(N - d))
                return false;
        return true;
    }

    // A one-generator K must be free (zero relations). The direct route runs
    // the full syzygy sweep; the default route proves freeness by counting:
    // Nakayama gives a degree-preserving surjection C(-a) ->> K, and equal
    // Hilbert functions (K being the reflection of C) force it injective.
    bool check_free_cyclic(bool direct = false) {
        if (direct) {
            KData kd = present_K(true);
            if (kd.gen_degrees.size() != 1)
                return true; // vacuous
            return kd.relations.empty();
        }
        KData kd = present_K(false);
        if (kd.gen_degrees.size() != 1)
            return true; // vacuous
        int a = kd.gen_degrees[0];
        const int N = dimension();
        for (int d = 0; d <= N; ++d)
            if (cs_.dimC(d - a) != cs_.dimC(N - d))
                return false;
        return true;
    }

private:
    bool member_of_ideal(const Poly2& f, const std::vector<Poly2>& gens) {
        int d = f.degree();
        auto slice = mono_basis(ctx_->w2(), d);
        RowBasis span(slice->dim());
        for (const Poly2& g : gens) {
            int mdeg = d - g.degree();
            if (mdeg < 0)
                continue;
            auto monos = mono_basis(ctx_->w2(), mdeg);
            for (const auto& mu : monos->basis)
                span.insert(slice->to_vec(g.times_mono(mu)));
        }
        return span.contains(slice->to_vec(f));
    }

    void insert_multiples(RowBasis& span, const std::vector<GenVec>& gens,
                          int D) {
        for (const auto& g : gens) {
            int mdeg = D - g.koszul_degree;
            if (mdeg < 0)
                continue;
            auto monos = mono_basis(ctx_->w2(), mdeg);
            for (const auto& mu : monos->basis) {
                std::vector<Poly2> prod;
                for (const Poly2& f : g.coeffs)
                    prod.push_back(f.times_mono(mu));
                span.insert(kosz_.encode_level1(prod, D));
            }
        }
    }

    std::shared_ptr<const ClassContext> ctx_;
    KoszulComplex kosz_;
    CSlices cs_;
};

// Minimal generators of the kernel of a graded map of free W2-modules
// (+)_g W2(-src_g) -> (+)_h W2(-dst_h), degree by degree up to cap.
inline std::vector<std::pair<int, std::vector<Poly2>>> w2_syzygy_step(
    VarSet vars, const std::vector<int>& src,
    const std::vector<std::vector<Poly2>>& rows, const std::vector<int>& dst,
    int cap) {
    std::vector<std::pair<int, std::vector<Poly2>>> out;
    if (src.empty())
        return out;
    auto dim_at = [&](const std::vector<int>& degs, int d,
                      std::vector<std::size_t>* offs) {
        std::size_t total = 0;
        for (int a : degs) {
            if (offs)
                offs->push_back(total);
            total += std::size_t(hilbert_count(vars, d - a));
        }
        return total;
    };
    int lo = *std::min_element(src.begin(), src.end());
    for (int d = lo + 2; d <= cap; ++d) {
        std::vector<std::size_t> offs, dst_offs;
        std::size_t total = dim_at(src, d, &offs);
        if (total == 0)
            continue;
        std::size_t width = dim_at(dst, d, &dst_offs);
        auto encode = [&](const std::vector<Poly2>& coeffs) {
            F2Vec v(width);
            for (std::size_t h = 0; h < dst.size(); ++h) {
                const Poly2& f = coeffs[h];
                if (f.is_zero())
                    continue;
                auto slice = mono_basis(vars, d - dst[h]);
                F2Vec part = slice->to_vec(f);
                for (std::size_t b = 0; b < part.size(); ++b)
                    if (part.get(b))
                        v.set(dst_offs[h] + b, true);
            }
            return v;
        };
        F2Mat phi(total, width);
        for (std::size_t g = 0; g < src.size(); ++g) {
            auto monos = mono_basis(vars, d - src[g]);
            for (std::size_t c = 0; c < monos->dim(); ++c) {
                std::vector<Poly2> prod;
                for (const Poly2& f : rows[g])
                    prod.push_back(f.times_mono(monos->basis[c]));
                phi.row(offs[g] + c) = encode(prod);
            }
        }
        F2Mat ker = left_kernel(phi);
        if (ker.nrows() == 0)
            continue;
        RowBasis span(total);
        for (const auto& [bdeg, bvec] : out) {
            auto monos = mono_basis(vars, d - bdeg);
            for (std::size_t c = 0; c < monos->dim(); ++c) {
                F2Vec row(total);
                for (std::size_t g = 0; g < src.size(); ++g) {
                    const Poly2& f = bvec[g];
                    if (f.is_zero())
                        continue;
                    auto slice = mono_basis(vars, d - src[g]);
                    F2Vec part = slice->to_vec(f.times_mono(monos->basis[c]));
                    for (std::size_t b = 0; b < part.size(); ++b)
                        if (part.get(b))
                            row.set(offs[g] + b, true);
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
            for (std::size_t g = 0; g < src.size(); ++g) {
                auto slice = mono_basis(vars, d - src[g]);
                std::size_t dim = slice->dim();
                gen.push_back(slice->from_vec(v.slice(offs[g], offs[g] + dim)));
            }
            out.emplace_back(d, std::move(gen));
            span.insert(std::move(v));
        }
    }
    return out;
}

// Diagnostic: free resolution of ker(d_1) as a W2-module, by iterated
// degreewise syzygy extraction below the cap. Returns the generator-degree
// multiset of each free step, starting with ker(d_1) itself; a free kernel
// reports a single step. Logged, never asserted.
inline std::vector<std::vector<int>> kerd1_free_resolution(CaseEngine& eng,
                                                           int cap = -1) {
    if (cap < 0)
        cap = eng.dimension() + 2 * eng.k() + 2;
    VarSet vars = w2_ring(eng.k());
    std::vector<std::vector<int>> steps;
    auto gens = eng.min_gens_ker_d1();
    std::vector<int> degs;
    std::vector<std::vector<Poly2>> rows;
    for (const auto& g : gens) {
        degs.push_back(g.koszul_degree);
        rows.push_back(g.coeffs);
    }
    std::vector<int> ambient;
    for (int s = 0; s < eng.k(); ++s)
        ambient.push_back(eng.kosz().slot_degree(s));
    steps.push_back(degs);
    for (int guard = 0; guard < eng.k() + 1 && !degs.empty(); ++guard) {
        auto syz = w2_syzygy_step(vars, degs, rows, ambient, cap);
        if (syz.empty())
            break;
        ambient = degs;
        degs.clear();
        rows.clear();
        for (auto& [d, vec] : syz) {
            degs.push_back(d);
            rows.push_back(std::move(vec));
        }
        steps.push_back(degs);
    }
    return steps;
}

// Hilbert function of the module presented by a Presentation over C:
// (+) C(-a_i) modulo the C-span of the relation rows, degree by degree.
inline std::map<int, int> presentation_hilbert(CSlices& cs, const Presentation& p,
                                               int dmax) {
    std::map<int, int> out;
    const auto& a = p.generator_degrees;
    for (int d = 0; d <= dmax; ++d) {
        std::vector<std::size_t> offs;
        std::size_t total = 0;
        for (int ai : a) {
            offs.push_back(total);
            total += cs.dimC(d - ai);
        }
        if (total == 0)
            continue;
        RowBasis span(total);
        for (std::size_t r = 0; r < p.relation_rows.size(); ++r) {
            int cd = d - p.relation_degrees[r];
            for (std::size_t c = 0; c < cs.dimC(cd); ++c) {
                Mono nu = cs.c_basis_mono(cd, c);
                F2Vec row(total);
                for (std::size_t i = 0; i < a.size(); ++i) {
                    const Poly2& entry = p.relation_rows[r][i];
                    if (entry.is_zero())
                        continue;
                    F2Vec coords =
                        cs.c_coords(cs.nf(entry.times_mono(nu)), d - a[i]);
                    for (std::size_t b = 0; b < coords.size(); ++b)
                        if (coords.get(b))
                            row.set(offs[i] + b, true);
                }
                span.insert(std::move(row));
            }
        }
        int dim = int(total - span.rank());
        if (dim > 0)
            out[d] = dim;
    }
    return out;
}

// Convenience entry points; each builds an independent engine.

inline CData present_C(int k, int n) { return CaseEngine(k, n).present_C(); }

inline int nilpotency_witness(int k, int n, int v) {
    return CaseEngine(k, n).nilpotency_witness(v);
}

inline KData present_K(int k, int n, bool want_relations = true) {
    return CaseEngine(k, n).present_K(want_relations);
}

inline int charrank(int k, int n) { return CaseEngine(k, n).charrank(); }

// The conjectured characteristic rank min(2^t-2, k(n-2^{t-1}) + 2^{t-1} - 2).
inline int conjecture_value(int k, int n, int t) {
    if (!(5 <= k && k <= (1 << (t - 1)) && (1 << (t - 1)) < n && n <= (1 << t)))
        throw std::invalid_argument("conjecture_value: (k, n, t) out of range");
    return std::min((1 << t) - 2, k * (n - (1 << (t - 1))) + (1 << (t - 1)) - 2);
}

inline bool check_poincare(int k, int n) { return CaseEngine(k, n).check_poincare(); }

inline bool check_free_cyclic(int k, int n, bool direct = false) {
    return CaseEngine(k, n).check_free_cyclic(direct);
}

} // namespace ogc
