#include "doctest.h"

#include <random>
#include <set>

#include "ogc/f2.hpp"

using namespace ogc;

namespace {

F2Mat from_bits(std::size_t ncols, std::initializer_list<const char*> rows) {
    F2Mat m(0, ncols);
    m.set_ncols(ncols);
    for (const char* s : rows) {
        F2Vec v(ncols);
        for (std::size_t i = 0; s[i]; ++i)
            if (s[i] == '1')
                v.set(i, true);
        m.add_row(std::move(v));
    }
    return m;
}

// Exhaustive span of the rows, as a set of bit strings. Usable for <= 20 rows.
std::set<std::vector<bool>> brute_span(const F2Mat& m) {
    std::set<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m.nrows()); ++mask) {
        F2Vec acc(m.ncols());
        for (std::size_t r = 0; r < m.nrows(); ++r)
            if ((mask >> r) & 1)
                acc ^= m.row(r);
        std::vector<bool> bits(m.ncols());
        for (std::size_t c = 0; c < m.ncols(); ++c)
            bits[c] = acc.get(c);
        out.insert(bits);
    }
    return out;
}

std::size_t brute_rank(const F2Mat& m) {
    std::size_t n = brute_span(m).size();
    std::size_t r = 0;
    while ((std::size_t(1) << r) < n)
        ++r;
    return r;
}

F2Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    F2Mat m(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng))
                m.set(r, c, true);
    return m;
}

} // namespace

TEST_CASE("rref basic cases") {
    auto id = F2Mat::identity(3);
    auto rr = rref(id);
    CHECK(rr.mat == id);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});

    F2Mat zero(2, 3);
    auto rz = rref(zero);
    CHECK(rz.mat == zero);
    CHECK(rz.pivots.empty());

    auto m = from_bits(3, {"110", "011", "101"});
    auto rm = rref(m);
    CHECK(rm.pivots == std::vector<std::size_t>{0, 1});
    CHECK(brute_rank(m) == 2); // row3 = row1 + row2
    CHECK(rank(m) == 2);
}

TEST_CASE("kernel_basis basic cases") {
    CHECK(kernel_basis(F2Mat::identity(3)).nrows() == 0);

    auto m = from_bits(3, {"111"});
    auto ker = kernel_basis(m);
    REQUIRE(ker.nrows() == 2);
    for (std::size_t r = 0; r < ker.nrows(); ++r)
        CHECK_FALSE(ker.row(r).dot(m.row(0)));
    // exhaustive oracle: the kernel of (1 1 1) is exactly the even-weight set
    std::set<std::vector<bool>> expected;
    for (unsigned x = 0; x < 8; ++x) {
        if (__builtin_popcount(x) % 2 == 0) {
            std::vector<bool> bits = {bool(x & 1), bool(x & 2), bool(x & 4)};
            expected.insert(bits);
        }
    }
    CHECK(brute_span(ker) == expected);

    auto z = kernel_basis(F2Mat(2, 4));
    CHECK(z.nrows() == 4);
    CHECK(brute_span(z).size() == 16);
}

TEST_CASE("solve row-space membership") {
    auto id = F2Mat::identity(4);
    F2Vec b(4);
    b.set(1, true);
    b.set(3, true);
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto single = from_bits(3, {"101"});
    F2Vec b2(3);
    b2.set(0, true);
    b2.set(2, true);
    auto x2 = solve(single, b2);
    REQUIRE(x2.has_value());
    CHECK(x2->get(0));

    auto m = from_bits(3, {"110", "011"});
    F2Vec b3(3);
    b3.set(0, true);
    b3.set(1, true);
    b3.set(2, true);
    CHECK_FALSE(solve(m, b3).has_value()); // all 4 combinations miss 111
}

TEST_CASE("random properties: rank, kernel, solve") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    for (int iter = 0; iter < 1000; ++iter) {
        std::size_t rows = dim(rng), cols = dim(rng);
        F2Mat m = random_matrix(rng, rows, cols);

        auto rr = rref(m);
        CHECK(rank(rr.mat) == rr.pivots.size());
        for (std::size_t i = 0; i + 1 < rr.pivots.size(); ++i)
            CHECK(rr.pivots[i] < rr.pivots[i + 1]);

        F2Mat ker = kernel_basis(m);
        CHECK(ker.nrows() + rr.pivots.size() == cols);
        for (std::size_t r = 0; r < ker.nrows(); ++r)
            for (std::size_t i = 0; i < rows; ++i)
                CHECK_FALSE(m.row(i).dot(ker.row(r)));

        // b in the row space by construction: solve must verify exactly
        F2Vec coeff(rows);
        std::bernoulli_distribution coin(0.5);
        for (std::size_t i = 0; i < rows; ++i)
            if (coin(rng))
                coeff.set(i, true);
        F2Vec b = m.mul_left(coeff);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.mul_left(*x) == b);
    }
}

TEST_CASE("rref determinism") {
    std::mt19937 rng(7);
    F2Mat m = random_matrix(rng, 40, 40);
    auto a = rref(m);
    auto b = rref(m);
    CHECK(a.mat == b.mat);
    CHECK(a.pivots == b.pivots);
}

TEST_CASE("RowBasis incremental span") {
    std::mt19937 rng(99);
    F2Mat m = random_matrix(rng, 30, 25);
    RowBasis rb(25);
    for (std::size_t r = 0; r < m.nrows(); ++r)
        rb.insert(m.row(r));
    CHECK(rb.rank() == rank(m));
    for (std::size_t r = 0; r < m.nrows(); ++r)
        CHECK(rb.contains(m.row(r)));
}
