#pragma once

// Bit-packed exact linear algebra over GF(2). Rows are 64-bit word arrays,
// elimination is XOR. Everything is deterministic: pivot = lowest-index
// nonzero column, first qualifying row.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ogc {

class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    F2Vec& operator^=(const F2Vec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    bool is_zero() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    // Index of the lowest set bit, or -1.
    long lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return long(w * 64 + std::size_t(__builtin_ctzll(words_[w])));
        return -1;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    // Parity of the overlap <a,b>.
    bool dot(const F2Vec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            acc ^= words_[w] & o.words_[w];
        return __builtin_parityll(acc);
    }

    friend bool operator==(const F2Vec& a, const F2Vec& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend bool operator!=(const F2Vec& a, const F2Vec& b) { return !(a == b); }

    // Concatenation, used for augmented systems.
    static F2Vec concat(const F2Vec& a, const F2Vec& b) {
        F2Vec r(a.size() + b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.get(i))
                r.set(i, true);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b.get(i))
                r.set(a.size() + i, true);
        return r;
    }

    F2Vec slice(std::size_t begin, std::size_t end) const {
        F2Vec r(end - begin);
        for (std::size_t i = begin; i < end; ++i)
            if (get(i))
                r.set(i - begin, true);
        return r;
    }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Mat {
public:
    F2Mat() = default;
    F2Mat(std::size_t nrows, std::size_t ncols)
        : ncols_(ncols), rows_(nrows, F2Vec(ncols)) {}

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    F2Vec& row(std::size_t r) { return rows_[r]; }
    const F2Vec& row(std::size_t r) const { return rows_[r]; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    void add_row(F2Vec v) {
        if (v.size() != ncols_)
            throw std::invalid_argument("F2Mat::add_row: length mismatch");
        rows_.push_back(std::move(v));
    }

    void set_ncols(std::size_t n) { ncols_ = n; }

    // x * M with x indexed by rows.
    F2Vec mul_left(const F2Vec& x) const {
        F2Vec out(ncols_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (x.get(r))
                out ^= rows_[r];
        return out;
    }

    F2Mat transposed() const {
        F2Mat t(ncols_, rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < ncols_; ++c)
                if (rows_[r].get(c))
                    t.set(c, r, true);
        return t;
    }

    static F2Mat identity(std::size_t n) {
        F2Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, true);
        return m;
    }

    friend bool operator==(const F2Mat& a, const F2Mat& b) {
        return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ncols_ = 0;
    std::vector<F2Vec> rows_;
};

// a * b with the row convention used throughout: row r of the product is
// row r of a times b.
inline F2Mat mat_mul(const F2Mat& a, const F2Mat& b) {
    if (a.ncols() != b.nrows())
        throw std::invalid_argument("mat_mul: inner dimensions differ");
    F2Mat out(a.nrows(), b.ncols());
    for (std::size_t r = 0; r < a.nrows(); ++r)
        out.row(r) = b.mul_left(a.row(r));
    return out;
}

inline bool is_zero(const F2Mat& m) {
    for (std::size_t r = 0; r < m.nrows(); ++r)
        if (!m.row(r).is_zero())
            return false;
    return true;
}

struct RrefResult {
    F2Mat mat;                       // reduced row echelon form
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

inline RrefResult rref(F2Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.ncols() && next < m.nrows(); ++c) {
        std::size_t sel = next;
        while (sel < m.nrows() && !m.get(sel, c))
            ++sel;
        if (sel == m.nrows())
            continue;
        std::swap(m.row(sel), m.row(next));
        for (std::size_t r = 0; r < m.nrows(); ++r)
            if (r != next && m.get(r, c))
                m.row(r) ^= m.row(next);
        pivots.push_back(c);
        ++next;
    }
    // Zero rows sink below the pivot rows during elimination.
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const F2Mat& m) { return rref(m).pivots.size(); }

// Basis of {x : M * x^T = 0}, one row per free column, rows ordered by free
// column index.
inline F2Mat kernel_basis(const F2Mat& m) {
    RrefResult rr = rref(m);
    std::vector<char> is_pivot(m.ncols(), 0);
    for (auto p : rr.pivots)
        is_pivot[p] = 1;
    F2Mat basis(0, m.ncols());
    basis.set_ncols(m.ncols());
    for (std::size_t f = 0; f < m.ncols(); ++f) {
        if (is_pivot[f])
            continue;
        F2Vec v(m.ncols());
        v.set(f, true);
        for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
            if (rr.mat.get(pr, f))
                v.set(rr.pivots[pr], true);
        basis.add_row(std::move(v));
    }
    return basis;
}

// Basis of {x : x * M = 0} (left kernel; combinations of rows summing to zero).
inline F2Mat left_kernel(const F2Mat& m) { return kernel_basis(m.transposed()); }

// Row-space membership: find x with x * M = b. Absence is a value.
inline std::optional<F2Vec> solve(const F2Mat& m, const F2Vec& b) {
    if (b.size() != m.ncols())
        throw std::invalid_argument("solve: rhs length mismatch");
    const std::size_t n = m.ncols(), r = m.nrows();
    // Augment each row with its combination certificate and eliminate on the
    // first n columns only.
    std::vector<F2Vec> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        F2Vec cert(r);
        cert.set(i, true);
        rows.push_back(F2Vec::concat(m.row(i), cert));
    }
    std::vector<std::pair<std::size_t, std::size_t>> piv; // (col, row idx)
    std::size_t next = 0;
    for (std::size_t c = 0; c < n && next < rows.size(); ++c) {
        std::size_t sel = next;
        while (sel < rows.size() && !rows[sel].get(c))
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[sel], rows[next]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && rows[i].get(c))
                rows[i] ^= rows[next];
        piv.emplace_back(c, next);
        ++next;
    }
    F2Vec acc = F2Vec::concat(b, F2Vec(r));
    for (auto [c, row_idx] : piv)
        if (acc.get(c))
            acc ^= rows[row_idx];
    for (std::size_t c = 0; c < n; ++c)
        if (acc.get(c))
            return std::nullopt;
    return acc.slice(n, n + r);
}

// Incrementally maintained reduced row space; the workhorse for degreewise
// spans (ideal slices, boundary spaces, generated submodules).
class RowBasis {
public:
    explicit RowBasis(std::size_t ncols = 0) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the basis in place; returns the residue's pivot or -1.
    long reduce(F2Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(pivots_[i]))
                v ^= rows_[i];
        return v.lowest_set();
    }

    // Inserts v if independent; returns true when the rank grew.
    bool insert(F2Vec v) {
        long p = reduce(v);
        if (p < 0)
            return false;
        // Keep the basis fully reduced.
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].get(std::size_t(p)))
                rows_[i] ^= v;
        rows_.push_back(std::move(v));
        pivots_.push_back(std::size_t(p));
        return true;
    }

    bool contains(F2Vec v) const { return reduce(v) < 0; }

    const std::vector<F2Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t ncols_;
    std::vector<F2Vec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace ogc
