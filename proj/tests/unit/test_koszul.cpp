#include "doctest.h"

#include <algorithm>
#include <random>

#include "ogc/koszul.hpp"

using namespace ogc;

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("CaseIndices for k = 3") {
    auto c = CaseIndices::k3(12);
    CHECK(c.t == 4);
    CHECK(c.i == 1);
    CHECK(c.j == 5);
    CHECK(c.in_main_range());
    CHECK_FALSE(CaseIndices::k3(13).in_main_range());
    CHECK_FALSE(CaseIndices::k3(8).in_main_range());
}

TEST_CASE("shift multisets") {
    auto k312 = KoszulComplex::build(3, 12);
    CHECK(sorted_copy(k312.shifts(1)) == std::vector<int>{10, 11, 12});

    auto k418 = KoszulComplex::build(4, 18);
    CHECK(sorted_copy(k418.shifts(2)) == std::vector<int>{31, 32, 33, 33, 34, 35});

    auto k23 = KoszulComplex::build(2, 3);
    CHECK(sorted_copy(k23.shifts(1)) == std::vector<int>{2, 3});
}

TEST_CASE("differential shapes and the k = 2 example") {
    auto k23 = KoszulComplex::build(2, 3);
    // below every shift the chain groups are empty
    auto d = k23.differential(1, 1);
    CHECK(d.nrows() == 0);
    CHECK(d.ncols() == 0);

    // level 2 for (2,3): x -> (q_3 x, q_2 x) = (0, w_2 x); q_3 = 0 for k = 2
    CHECK(k23.slot_poly(1).is_zero());
    for (int d2deg = 5; d2deg <= 9; ++d2deg) {
        F2Mat m = k23.differential(2, d2deg);
        if (m.nrows() == 0)
            continue;
        for (std::size_t r = 0; r < m.nrows(); ++r) {
            auto coeffs = k23.decode_level1(m.row(r), d2deg);
            CHECK(coeffs[0].is_zero()); // the q_3 slot never receives anything
        }
    }
}

TEST_CASE("d o d vanishes in every degree for sampled (k, n)") {
    struct Sample {
        int k, n, cap;
    };
    for (auto [k, n, cap] : {Sample{2, 3, 8}, Sample{2, 5, 12}, Sample{3, 8, 22},
                             Sample{3, 12, 28}, Sample{4, 10, 26}, Sample{6, 8, 16},
                             Sample{5, 11, 24}}) {
        auto kc = KoszulComplex::build(k, n);
        for (int lv = 1; lv < k; ++lv)
            for (int d = 0; d <= cap; ++d) {
                CAPTURE(k);
                CAPTURE(n);
                CAPTURE(lv);
                CAPTURE(d);
                CHECK(is_zero(mat_mul(kc.differential(lv + 1, d),
                                      kc.differential(lv, d))));
            }
    }
}

TEST_CASE("Hilbert bookkeeping for ker(d_1)") {
    auto kc = KoszulComplex::build(3, 12);
    for (int d = 0; d <= 30; ++d) {
        F2Mat d1 = kc.differential(1, d);
        std::size_t expected = kc.dim_chain(1, d) - rank(d1);
        CHECK(left_kernel(d1).nrows() == expected);
    }
}

TEST_CASE("homology of (2,3): the sphere S^2") {
    auto kc = KoszulComplex::build(2, 3);
    std::size_t h0 = 0, h1 = 0;
    for (int d = 0; d <= kc.dimension() + 1; ++d) {
        h0 += kc.homology_dim(0, d);
        h1 += kc.homology_dim(1, d);
    }
    CHECK(h0 == 1);
    CHECK(h1 == 1);
    CHECK(kc.homology_dim(1, 3) == 1); // the anomalous class, Koszul degree 3
}

TEST_CASE("total dims of H_0 and H_1 agree") {
    auto kc = KoszulComplex::build(3, 12);
    std::size_t h0 = 0, h1 = 0;
    for (int d = 0; d <= kc.dimension() + 1; ++d) {
        h0 += kc.homology_dim(0, d);
        h1 += kc.homology_dim(1, d);
    }
    CHECK(h0 == h1);
}

TEST_CASE("H_i vanishes for i > 1") {
    for (auto [k, n] : {std::pair{2, 3}, {2, 6}, {3, 8}, {3, 12}, {4, 10}}) {
        auto kc = KoszulComplex::build(k, n);
        int cap = std::min(kc.dimension() + 1, 30);
        for (int lv = 2; lv <= k; ++lv)
            for (int d = 0; d <= cap; ++d) {
                CAPTURE(k);
                CAPTURE(n);
                CAPTURE(lv);
                CAPTURE(d);
                CHECK(kc.homology_dim(lv, d) == 0);
            }
    }
}

TEST_CASE("Poincare pairing between H_0 and H_1") {
    for (auto [k, n] : {std::pair{2, 3}, {2, 5}, {3, 8}, {3, 12}}) {
        auto kc = KoszulComplex::build(k, n);
        int N = kc.dimension();
        for (int d = 0; d <= N; ++d) {
            CAPTURE(k);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(kc.homology_dim(0, d) == kc.homology_dim(1, N - d + 1));
        }
        // H_1 vanishes above Koszul degree N + 1
        for (int d = N + 2; d <= N + 6; ++d)
            CHECK(kc.homology_dim(1, d) == 0);
    }
}

TEST_CASE("h1 slice representatives and quotient coordinates") {
    auto kc = KoszulComplex::build(3, 12);

    CHECK(kc.h1(5)->dim() == 0); // far below the first syzygy degree

    auto slice13 = kc.h1(13);
    CHECK(slice13->dim() == 1); // the descended generator, Koszul degree 13

    // well-definedness: coords(v + d_2 w) = coords(v)
    std::mt19937 rng(4242);
    for (int d : {13, 20, 21}) {
        auto h = kc.h1(d);
        F2Mat cycles = left_kernel(kc.differential(1, d));
        F2Mat bnd = kc.differential(2, d);
        if (cycles.nrows() == 0)
            continue;
        std::bernoulli_distribution coin(0.5);
        for (int iter = 0; iter < 20; ++iter) {
            F2Vec v(kc.dim_chain(1, d));
            for (std::size_t r = 0; r < cycles.nrows(); ++r)
                if (coin(rng))
                    v ^= cycles.row(r);
            F2Vec w = v;
            for (std::size_t r = 0; r < bnd.nrows(); ++r)
                if (coin(rng))
                    w ^= bnd.row(r);
            CHECK(h->coords(v) == h->coords(w));
        }
    }
}
