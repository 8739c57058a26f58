#include <doctest.h>

#include <numeric>
#include <sstream>

#include "test_support.hpp"
#include "toricflip/errors.hpp"
#include "toricflip/lattice.hpp"

using namespace toricflip;
using testing_support::grading;

namespace {

// Cofactor expansion; only for tiny matrices.
Integer cofactor_det(const std::vector<IntVector>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return Integer(static_cast<long>(m[0][0]));
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<IntVector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Integer term = Integer(static_cast<long>(m[0][c])) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

// gcd of the maximal minors of the basis matrix; 1 exactly when the basis spans a saturated lattice.
Integer minor_gcd(const std::vector<IntVector>& basis, std::size_t n) {
    const std::size_t k = basis.size();
    Integer g = 0;
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
        std::vector<IntVector> sq(k, IntVector(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sq[r][c] = basis[r][cols[c]];
        Integer d = cofactor_det(sq);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g;
}

}  // namespace

TEST_CASE("grading validation") {
    CHECK_NOTHROW(grading({{1, 3, 7}}));
    CHECK_NOTHROW(grading({{1, 1, 1, 1, 1}, {0, 1, 3, 4, 6}}));
    try {
        grading({{1, -1}});
        FAIL("expected NotPointed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPointed);
    }
    try {
        grading({{1, 2, 3}, {2, 4, 6}});
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RankDeficient);
    }
    auto A = grading({{2, 1, 0, 1, 0, 0}, {0, 1, 2, 0, 1, 0}, {0, 0, 0, 1, 1, 2}});
    for (auto w : A.positive_weight()) CHECK(w > 0);
    CHECK(A.weight_of_degree({2, 0, 0}).has_value());
}

TEST_CASE("positive weight is a positive row-space vector") {
    auto A = grading({{3, 4, 5, 13, 14}});
    const auto& w = A.positive_weight();
    // A single row: the weight is a positive multiple of the row itself.
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] * A.entries()(0, 0) == w[0] * A.entries()(0, i));
}

TEST_CASE("kernel lattice is a saturated basis of the kernel") {
    const std::vector<std::vector<IntVector>> cases = {
        {{1, 3, 7}},
        {{1, 3, 4}},
        {{3, 4, 5, 13, 14}},
        {{1, 2, 3, 7, 8, 9}},
        {{1, 1, 1, 1, 1}, {0, 1, 6, 7, 9}},
        {{2, 1, 0, 1, 0, 0}, {0, 1, 2, 0, 1, 0}, {0, 0, 0, 1, 1, 2}},
    };
    for (const auto& rows : cases) {
        auto A = grading(rows);
        auto basis = kernel_lattice(A).vectors;
        REQUIRE(basis.size() == A.n() - A.d());
        for (const auto& v : basis)
            for (std::size_t r = 0; r < A.d(); ++r) {
                int64_t s = 0;
                for (std::size_t c = 0; c < A.n(); ++c) s += A.entries()(r, c) * v[c];
                CHECK(s == 0);
            }
        CHECK(minor_gcd(basis, A.n()) == 1);
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::vector<std::vector<IntVector>> cases = {
        {{2, 1}, {7, 4}},
        {{0, 1, 2}, {3, 0, 5}, {1, 1, 1}},
        {{1, 2, 3, 4}, {0, 5, 6, 7}, {8, 9, 0, 1}, {2, 3, 4, 6}},
        {{1, 2}, {2, 4}},
        {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
    };
    for (const auto& m : cases) CHECK(determinant(m) == cofactor_det(m));
}

TEST_CASE("rank and kernel line") {
    std::vector<RationalVector> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(rows) == 2);
    auto line = kernel_line(rows, 3);
    REQUIRE(line.has_value());
    for (const auto& r : rows) {
        Rational s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += r[i] * (*line)[i];
        CHECK(s == 0);
    }
    CHECK_FALSE(kernel_line({{1, 0, 0}}, 3).has_value());
}

TEST_CASE("exact feasibility") {
    // w1 - w2 >= 1 and w2 - w1 >= 1 is infeasible.
    CHECK_FALSE(lp_strict_feasible({{1, -1}, {-1, 1}}, 2).feasible);
    auto r = lp_strict_feasible({{1, -1}, {0, 1}, {1, 1}}, 2);
    REQUIRE(r.feasible);
    CHECK(r.witness[0] - r.witness[1] >= 1);
    CHECK(r.witness[1] >= 1);
    // Mixed right-hand sides, including nonpositive ones.
    auto s = lp_feasible({{1, 0}, {-1, 0}, {0, 1}}, {Rational(1, 2), Rational(-3), Rational(0)}, 2);
    REQUIRE(s.feasible);
    CHECK(s.witness[0] >= Rational(1, 2));
    CHECK(s.witness[0] <= 3);
    CHECK(lp_strict_feasible({}, 3).feasible);
    CHECK_FALSE(lp_feasible({{1, 1}, {-1, -1}}, {Rational(2), Rational(-1)}, 2).feasible);
}

TEST_CASE("matrix file parsing") {
    std::istringstream in("# comment\n2 3\n1 1 1 # row one\n0 1 2\n");
    auto m = parse_matrix(in);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == 2);
    std::istringstream bad("2 3\n1 1\n");
    CHECK_THROWS_AS(parse_matrix(bad), Error);
    std::istringstream round(format_matrix(m));
    CHECK(parse_matrix(round) == m);
}
