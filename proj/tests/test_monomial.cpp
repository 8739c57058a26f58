#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "toricflip/kpolynomial.hpp"
#include "toricflip/monomial.hpp"

using namespace toricflip;
using testing_support::box;
using testing_support::grading;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<Exponent> gens) { return MonomialIdeal::minimalize(n, std::move(gens)); }

bool member_by_scan(const std::vector<Exponent>& gens, const Exponent& u) {
    for (const auto& g : gens)
        if (divides(g, u)) return true;
    return false;
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, std::size_t k, int hi) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < k; ++i) {
        Exponent g(n);
        for (auto& x : g) x = static_cast<int32_t>(rng() % (hi + 1));
        if (!is_one(g)) gens.push_back(g);
    }
    return ideal(n, gens);
}

}  // namespace

TEST_CASE("term order comparisons") {
    TermOrder lex(IntVector{0, 0, 0});
    CHECK(lex.greater(Exponent{1, 0, 0}, Exponent{0, 5, 5}));
    TermOrder w(IntVector{1, 1, 1});
    CHECK(w.greater(Exponent{0, 2, 0}, Exponent{1, 0, 0}));
    CHECK(w.greater(Exponent{1, 1, 0}, Exponent{0, 2, 0}));
    TermOrder pri(IntVector{0, 0, 0}, {2, 1, 0});
    CHECK(pri.greater(Exponent{0, 0, 1}, Exponent{3, 0, 0}));
    CHECK(compare(Exponent{1, 2}, Exponent{1, 2}, lex) == std::strong_ordering::equal);
}

TEST_CASE("minimal generators and membership") {
    auto M = ideal(3, {{2, 0, 0}, {1, 1, 0}, {2, 1, 0}, {0, 0, 3}, {1, 1, 0}});
    CHECK(M.size() == 3);
    CHECK(M.contains(Exponent{3, 0, 1}));
    CHECK_FALSE(M.contains(Exponent{1, 0, 2}));
    CHECK(M.is_minimal_generator(Exponent{1, 1, 0}));
    CHECK_FALSE(M.is_minimal_generator(Exponent{2, 1, 0}));
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto N = random_ideal(rng, 4, 6, 3);
        auto gens = N.generators();
        for (const auto& u : box(4, 3)) CHECK(N.contains(u) == member_by_scan(gens, u));
    }
}

TEST_CASE("colon, radical, intersection and sum agree with membership") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        auto M = random_ideal(rng, 3, 5, 3);
        auto N = random_ideal(rng, 3, 4, 3);
        Exponent m{static_cast<int32_t>(rng() % 3), static_cast<int32_t>(rng() % 3), static_cast<int32_t>(rng() % 3)};
        auto Q = colon(M, m), R = radical(M), I = intersect(M, N), S = sum(M, N);
        for (const auto& u : box(3, 5)) {
            CHECK(Q.contains(u) == M.contains(add(u, m)));
            CHECK(I.contains(u) == (M.contains(u) && N.contains(u)));
            CHECK(S.contains(u) == (M.contains(u) || N.contains(u)));
            Exponent big(u);
            for (auto& x : big) x *= 6;
            CHECK(R.contains(u) == M.contains(big));
        }
    }
}

TEST_CASE("fibers match a box scan") {
    auto A = grading({{1, 1, 1, 1}, {0, 1, 2, 5}});
    for (int64_t s = 0; s <= 4; ++s)
        for (int64_t t = 0; t <= 12; ++t) {
            auto f = fiber(A, {s, t});
            std::vector<Exponent> scan;
            for (const auto& u : box(4, 4))
                if (A.degree(u) == DegreeVector{s, t}) scan.push_back(u);
            CHECK(f == scan);
        }
    CHECK(fiber(A, {1, -1}).empty());
}

TEST_CASE("K-polynomial reproduces standard monomial counts") {
    std::mt19937 rng(3);
    auto A = grading({{1, 1, 1, 1}, {0, 1, 3, 4}});
    for (int t = 0; t < 25; ++t) {
        auto M = random_ideal(rng, 4, 5, 2);
        auto N = k_polynomial(M, A);
        CHECK(N == k_polynomial(M, A, PivotRule::First));
        CHECK(N == k_polynomial(M, A, PivotRule::Last));
        for (int64_t s = 0; s <= 4; ++s)
            for (int64_t d = 0; d <= 4 * s; ++d) {
                int64_t count = 0;
                for (const auto& u : fiber(A, {s, d}))
                    if (!M.contains(u)) ++count;
                CHECK(hilbert_value(N, A, {s, d}) == count);
            }
    }
    CHECK(k_polynomial(MonomialIdeal(4), A) == KPolynomial::one(2));
    CHECK(k_polynomial(ideal(4, {{0, 0, 0, 0}}), A).size() == 0);
}
