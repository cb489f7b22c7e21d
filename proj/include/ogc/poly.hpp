#pragma once

// Weighted-graded polynomial rings over GF(2): W1 = F2[w_1..w_k] and
// W2 = F2[w_2..w_k] with deg w_i = i. Polynomials are term sets (coefficients
// implicit), monomial bases per degree, multiplication matrices, Hilbert
// counts.
//
// Monomial order: graded by weighted degree, ties broken lexicographically on
// exponent vectors with w_1 > w_2 > ... > w_k (larger exponent on an earlier
// variable comes first). Every basis and every printed polynomial uses this
// one order, so pivots and golden files are byte-stable.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogc/f2.hpp"

namespace ogc {

struct VarSet {
    int k = 2;
    bool includes_w1 = false;

    int first_var() const { return includes_w1 ? 1 : 2; }

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.k == b.k && a.includes_w1 == b.includes_w1;
    }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }
};

inline VarSet w1_ring(int k) { return VarSet{k, true}; }
inline VarSet w2_ring(int k) { return VarSet{k, false}; }

class Mono {
public:
    Mono() = default;
    explicit Mono(int k) : exps_(std::size_t(k) + 1, 0) {}

    int k() const { return int(exps_.size()) - 1; }

    int exp(int var) const { return exps_[std::size_t(var)]; }
    void set_exp(int var, int e) {
        deg_ += (e - exps_[std::size_t(var)]) * var;
        exps_[std::size_t(var)] = std::uint16_t(e);
    }

    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Mono times(const Mono& o) const {
        Mono r(*this);
        for (int i = 1; i <= k(); ++i)
            r.exps_[std::size_t(i)] = std::uint16_t(r.exps_[std::size_t(i)] + o.exps_[std::size_t(i)]);
        r.deg_ += o.deg_;
        return r;
    }

    friend bool operator==(const Mono& a, const Mono& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

private:
    std::vector<std::uint16_t> exps_;
    int deg_ = 0;
};

// Canonical order: "a comes before b".
inline bool mono_before(const Mono& a, const Mono& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = 1; i <= a.k(); ++i)
        if (a.exp(i) != b.exp(i))
            return a.exp(i) > b.exp(i);
    return false;
}

inline Mono make_mono(int k, std::initializer_list<std::pair<int, int>> exps) {
    Mono m(k);
    for (auto [v, e] : exps)
        m.set_exp(v, e);
    return m;
}

inline Mono var_mono(int k, int var, int e = 1) { return make_mono(k, {{var, e}}); }

class Poly2 {
public:
    Poly2() = default;
    explicit Poly2(VarSet vars) : vars_(vars) {}

    static Poly2 zero(VarSet vars) { return Poly2(vars); }
    static Poly2 one(VarSet vars) {
        Poly2 p(vars);
        p.terms_.push_back(Mono(vars.k));
        return p;
    }
    static Poly2 variable(VarSet vars, int var, int e = 1) {
        if (var < vars.first_var() || var > vars.k)
            throw std::invalid_argument("Poly2::variable: index outside VarSet");
        Poly2 p(vars);
        p.terms_.push_back(var_mono(vars.k, var, e));
        return p;
    }
    static Poly2 from_terms(VarSet vars, std::vector<Mono> terms) {
        Poly2 p(vars);
        std::sort(terms.begin(), terms.end(), mono_before);
        // mod-2 cancellation of duplicates
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i])
                ++j;
            if ((j - i) % 2)
                p.terms_.push_back(terms[i]);
            i = j;
        }
        return p;
    }

    VarSet vars() const { return vars_; }
    const std::vector<Mono>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Weighted degree of a homogeneous polynomial; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : terms_.back().degree(); }

    bool is_homogeneous() const {
        return terms_.empty() ||
               terms_.front().degree() == terms_.back().degree();
    }

    friend bool operator==(const Poly2& a, const Poly2& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        if (a.vars_ != b.vars_)
            throw std::invalid_argument("Poly2: VarSet mismatch in add");
        Poly2 r(a.vars_);
        // symmetric difference of sorted term lists
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            if (a.terms_[i] == b.terms_[j]) {
                ++i;
                ++j;
            } else if (mono_before(a.terms_[i], b.terms_[j])) {
                r.terms_.push_back(a.terms_[i++]);
            } else {
                r.terms_.push_back(b.terms_[j++]);
            }
        }
        while (i < a.terms_.size())
            r.terms_.push_back(a.terms_[i++]);
        while (j < b.terms_.size())
            r.terms_.push_back(b.terms_[j++]);
        return r;
    }

    Poly2& operator+=(const Poly2& o) { return *this = *this + o; }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        if (a.vars_ != b.vars_)
            throw std::invalid_argument("Poly2: VarSet mismatch in mul");
        std::vector<Mono> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ma : a.terms_)
            for (const auto& mb : b.terms_)
                prod.push_back(ma.times(mb));
        return from_terms(a.vars_, std::move(prod));
    }

    Poly2 times_mono(const Mono& m) const {
        Poly2 r(vars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back(t.times(m));
        return r; // order preserved: multiplication by a fixed monomial is monotone
    }

    // Reinterpret a W2 polynomial inside W1 (same exponents, w_1 slot zero).
    Poly2 into_w1() const {
        if (vars_.includes_w1)
            return *this;
        Poly2 r(w1_ring(vars_.k));
        r.terms_ = terms_;
        return r;
    }

    // Substitute w_1 = 0 and land in W2.
    Poly2 set_w1_zero() const {
        if (!vars_.includes_w1)
            return *this;
        Poly2 r(w2_ring(vars_.k));
        for (const auto& t : terms_)
            if (t.exp(1) == 0)
                r.terms_.push_back(t);
        return r;
    }

    std::string text() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first_term = true;
        for (const auto& t : terms_) {
            if (!first_term)
                os << "+";
            first_term = false;
            if (t.is_one()) {
                os << "1";
                continue;
            }
            bool first_factor = true;
            for (int i = 1; i <= t.k(); ++i) {
                if (t.exp(i) == 0)
                    continue;
                if (!first_factor)
                    os << "*";
                first_factor = false;
                os << "w_" << i;
                if (t.exp(i) > 1)
                    os << "^" << t.exp(i);
            }
        }
        return os.str();
    }

private:
    VarSet vars_;
    std::vector<Mono> terms_; // sorted by mono_before, no duplicates
};

struct GradedSlice {
    VarSet vars;
    int degree = 0;
    std::vector<Mono> basis; // complete, sorted by mono_before

    std::size_t dim() const { return basis.size(); }

    // Position of m in the basis; throws when m has the wrong degree.
    std::size_t index_of(const Mono& m) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), m, mono_before);
        if (it == basis.end() || !(*it == m))
            throw std::logic_error("GradedSlice::index_of: monomial not in slice");
        return std::size_t(it - basis.begin());
    }

    F2Vec to_vec(const Poly2& p) const {
        F2Vec v(basis.size());
        for (const auto& t : p.terms())
            v.set(index_of(t), true);
        return v;
    }

    Poly2 from_vec(const F2Vec& v) const {
        std::vector<Mono> terms;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v.get(i))
                terms.push_back(basis[i]);
        return Poly2::from_terms(vars, std::move(terms));
    }
};

namespace detail {

inline void enumerate_monos(VarSet vars, int var, int remaining, Mono& scratch,
                            std::vector<Mono>& out) {
    if (var > vars.k) {
        if (remaining == 0)
            out.push_back(scratch);
        return;
    }
    if (var == vars.k) {
        if (remaining % var == 0) {
            scratch.set_exp(var, remaining / var);
            out.push_back(scratch);
            scratch.set_exp(var, 0);
        }
        return;
    }
    // Descending exponent on the earlier variable yields the canonical order.
    for (int e = remaining / var; e >= 0; --e) {
        scratch.set_exp(var, e);
        enumerate_monos(vars, var + 1, remaining - e * var, scratch, out);
    }
    scratch.set_exp(var, 0);
}

} // namespace detail

// Complete monomial basis of the weighted-degree-d slice, canonically ordered.
// Slices are immutable and shared behind a process-wide cache: concurrent
// readers are safe, fills are idempotent.
inline std::shared_ptr<const GradedSlice> mono_basis(VarSet vars, int d) {
    struct Key {
        int k;
        bool w1;
        int d;
        bool operator<(const Key& o) const {
            if (k != o.k)
                return k < o.k;
            if (w1 != o.w1)
                return w1 < o.w1;
            return d < o.d;
        }
    };
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const GradedSlice>> cache;

    Key key{vars.k, vars.includes_w1, d};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    auto slice = std::make_shared<GradedSlice>();
    slice->vars = vars;
    slice->degree = d;
    if (d == 0) {
        slice->basis.push_back(Mono(vars.k));
    } else if (d > 0) {
        Mono scratch(vars.k);
        detail::enumerate_monos(vars, vars.first_var(), d, scratch, slice->basis);
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, slice);
    return it->second;
}

// Matrix of m -> f*m from the degree-src slice to the degree-(src+deg f)
// slice; rows indexed by src basis, columns by dst basis.
inline F2Mat mul_matrix(const Poly2& f, const GradedSlice& src,
                        const GradedSlice& dst) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("mul_matrix: f must be homogeneous");
    if (!f.is_zero() && dst.degree != src.degree + f.degree())
        throw std::invalid_argument("mul_matrix: slice degrees incompatible");
    F2Mat m(src.dim(), dst.dim());
    for (std::size_t r = 0; r < src.dim(); ++r)
        for (const auto& t : f.terms())
            m.row(r).flip(dst.index_of(t.times(src.basis[r])));
    return m;
}

// Number of monomials of weighted degree d in w_{first}..w_k; small DP table.
inline std::uint64_t hilbert_count(VarSet vars, int d) {
    if (d < 0)
        return 0;
    struct Key {
        int k;
        bool w1;
        bool operator<(const Key& o) const {
            return k != o.k ? k < o.k : w1 < o.w1;
        }
    };
    static std::mutex mu;
    static std::map<Key, std::vector<std::uint64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& table = cache[Key{vars.k, vars.includes_w1}];
    if (int(table.size()) <= d) {
        std::size_t old = table.size();
        table.resize(std::size_t(d) + 1, 0);
        // rebuild from scratch; the table is tiny
        std::fill(table.begin(), table.end(), 0);
        table[0] = 1;
        for (int v = vars.first_var(); v <= vars.k; ++v)
            for (int t = v; t <= d; ++t)
                table[std::size_t(t)] += table[std::size_t(t - v)];
        (void)old;
    }
    return table[std::size_t(d)];
}

inline std::uint64_t hilbert_w2(int k, int d) { return hilbert_count(w2_ring(k), d); }

} // namespace ogc
