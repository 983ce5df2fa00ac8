#include "doctest.h"

#include <random>

#include "polyspec/intmat.hpp"

using namespace polyspec;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

// Independent determinant oracle: cofactor expansion along the first row.
Int det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        Int term = m(0, j) * det_cofactor(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

TEST_CASE("det: pinned examples") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix{{1, 0}, {-1, 3}}) == 3);
    CHECK(det(IntMatrix{{0, 1, 0}, {0, 0, 1}, {-2, -2, -3}}) == -2);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), dimension_error);
}

TEST_CASE("det: agrees with cofactor expansion and is multiplicative") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + iter % 5;
        IntMatrix a = random_matrix(rng, n);
        IntMatrix b = random_matrix(rng, n);
        CHECK(det(a) == det_cofactor(a));
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("solve_rational: pinned examples") {
    IntVec b{7, -2, 5};
    RatVec x = solve_rational(IntMatrix::identity(3), b);
    for (std::size_t i = 0; i < 3; ++i) CHECK(x[i] == Rat(b[i]));

    IntMatrix m{{1, -1}, {0, 3}};
    RatVec y = solve_rational(m, IntVec{0, 1});
    CHECK(y[0] == Rat(1, 3));
    CHECK(y[1] == Rat(1, 3));
    RatVec z = solve_rational(m, IntVec{0, 3});
    CHECK(z[0] == 1);
    CHECK(z[1] == 1);

    CHECK_THROWS_AS(solve_rational(IntMatrix{{1, 2}, {2, 4}}, IntVec{1, 1}),
                    singular_matrix_error);
}

TEST_CASE("solve_rational: m * x = b on random nonsingular systems") {
    std::mt19937 rng(999);
    int done = 0;
    while (done < 100) {
        std::size_t n = 1 + done % 4;
        IntMatrix m = random_matrix(rng, n);
        if (det(m) == 0) continue;
        std::uniform_int_distribution<int> dist(-9, 9);
        IntVec b(n);
        for (auto& x : b) x = dist(rng);
        RatVec x = solve_rational(m, b);
        for (std::size_t i = 0; i < n; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += Rat(m(i, j)) * x[j];
            CHECK(acc == Rat(b[i]));
        }
        ++done;
    }
}

namespace {

void check_snf_contract(const IntMatrix& m) {
    SmithNormalForm s = snf(m);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    CHECK(s.u * m * s.v == s.d);
    const std::size_t t = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < t; ++i) {
        CHECK(s.d(i, i) >= 0);
        if (s.d(i + 1, i + 1) != 0) {
            REQUIRE(s.d(i, i) != 0);
            CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
    }
}

}  // namespace

TEST_CASE("snf: pinned examples") {
    {
        SmithNormalForm s = snf(IntMatrix{{2, 0}, {0, 3}});
        CHECK(s.d(0, 0) == 1);
        CHECK(s.d(1, 1) == 6);
        check_snf_contract(IntMatrix{{2, 0}, {0, 3}});
    }
    {
        SmithNormalForm s = snf(IntMatrix::identity(3));
        CHECK(s.d == IntMatrix::identity(3));
    }
    {
        SmithNormalForm s = snf(IntMatrix{{1, -1}, {0, 3}});
        CHECK(s.d(0, 0) == 1);
        CHECK(s.d(1, 1) == 3);
    }
}

TEST_CASE("snf: contract on random matrices, including non-square and singular") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 150; ++iter) {
        std::size_t r = 1 + iter % 4, c = 1 + (iter / 4) % 4;
        check_snf_contract(random_matrix(rng, std::max(r, c)));
        IntMatrix m(r, c);
        std::uniform_int_distribution<int> dist(-5, 5);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
        check_snf_contract(m);
    }
    check_snf_contract(IntMatrix(3, 3));  // zero matrix
}

TEST_CASE("unimodular_completion: pinned examples") {
    {
        IntMatrix u = unimodular_completion(IntVec{1});
        CHECK(u(0, 0) == 1);
    }
    {
        IntMatrix u = unimodular_completion(IntVec{1, 1, 3});
        IntVec img = u * IntVec{1, 1, 3};
        CHECK(img == IntVec{0, 0, 1});
        CHECK(abs(det(u)) == 1);
    }
    {
        IntMatrix u = unimodular_completion(IntVec{0, 1});
        CHECK(u * IntVec{0, 1} == IntVec{0, 1});
        CHECK(abs(det(u)) == 1);
    }
    CHECK_THROWS_AS(unimodular_completion(IntVec{2, 4}), gcd_error);
}

TEST_CASE("unimodular_completion: contract on random primitive vectors") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dist(-20, 20);
    int done = 0;
    while (done < 100) {
        std::size_t n = 1 + done % 6;
        IntVec q(n);
        for (auto& x : q) x = dist(rng);
        if (vec_gcd(q) != 1) continue;
        IntMatrix u = unimodular_completion(q);
        IntVec want(n, Int(0));
        want[n - 1] = 1;
        CHECK(u * q == want);
        CHECK(abs(det(u)) == 1);
        ++done;
    }
}

TEST_CASE("hermite_row_transform: triangularizes with unimodular transform") {
    std::mt19937 rng(31337);
    int done = 0;
    while (done < 80) {
        std::size_t n = 1 + done % 4;
        IntMatrix b = random_matrix(rng, n);
        if (det(b) == 0) continue;
        IntMatrix t = hermite_row_transform(b);
        CHECK(abs(det(t)) == 1);
        IntMatrix h = t * b;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(h(i, i) > 0);
            for (std::size_t j = 0; j < i; ++j) CHECK(h(i, j) == 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h(k, i) >= 0);
                CHECK(h(k, i) < h(i, i));
            }
        }
        ++done;
    }
}
