#include <doctest.h>

#include "test_support.hpp"
#include "toricflip/fixtures.hpp"
#include "toricflip/triangulation.hpp"

using namespace toricflip;
using testing_support::grading;

TEST_CASE("complexes of radicals") {
    auto D = complex_of_radical(MonomialIdeal::minimalize(2, {{1, 1}}));
    CHECK(D.facets() == std::vector<Face>{{0}, {1}});
    CHECK(complex_of_radical(MonomialIdeal::minimalize(2, {{2, 0}})).facets() == std::vector<Face>{{1}});
    CHECK(complex_of_radical(MonomialIdeal::minimalize(2, {{0, 1}})).facets() == std::vector<Face>{{0}});
    auto E = complex_of_radical(MonomialIdeal::minimalize(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(E.facets() == std::vector<Face>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(E.has_face({0}));
    CHECK_FALSE(E.has_face({0, 2}));
    CHECK(E.link({0}) == std::vector<Face>{{1}, {3}});
}

TEST_CASE("triangulation checks") {
    auto A = grading({{1, 2}});
    CHECK(is_triangulation(SimplicialComplex(2, {{0}}), A));
    CHECK(is_triangulation(SimplicialComplex(2, {{1}}), A));
    CHECK_FALSE(is_triangulation(SimplicialComplex(2, {{0}, {1}}), A));

    // Square: points (1,0,0),(1,1,0),(1,0,1),(1,1,1).
    auto B = grading({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(is_triangulation(SimplicialComplex(4, {{0, 1, 3}, {0, 2, 3}}), B));
    CHECK(is_triangulation(SimplicialComplex(4, {{0, 1, 2}, {1, 2, 3}}), B));
    CHECK_FALSE(is_triangulation(SimplicialComplex(4, {{0, 1, 3}}), B));
    CHECK_FALSE(is_triangulation(SimplicialComplex(4, {{0, 1, 3}, {0, 1, 2}}), B));
    CHECK(sliced_volume(placing_triangulation(B), B) == sliced_volume(SimplicialComplex(4, {{0, 1, 3}, {0, 2, 3}}), B));
}

TEST_CASE("bistellar flips") {
    auto A = grading({{1, 2}});
    auto c = is_circuit(A, Binomial::pure({2, 0}, {0, 1}));
    REQUIRE(c);
    auto spec = circuit_flip_spec(*c);
    auto D = SimplicialComplex(2, {{1}});
    auto E = bistellar_flip(D, spec);
    REQUIRE(E);
    CHECK(E->facets() == std::vector<Face>{{0}});
    std::swap(spec.c_plus, spec.c_minus);
    CHECK(bistellar_flip(*E, spec) == D);

    auto B = grading({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    auto sq = is_circuit(B, Binomial::pure({1, 0, 0, 1}, {0, 1, 1, 0}));
    REQUIRE(sq);
    auto s2 = circuit_flip_spec(*sq);
    auto T1 = SimplicialComplex(4, {{0, 1, 2}, {1, 2, 3}});
    auto T2 = bistellar_flip(T1, s2);
    if (!T2) {
        std::swap(s2.c_plus, s2.c_minus);
        T2 = bistellar_flip(T1, s2);
    }
    REQUIRE(T2);
    CHECK(*T2 == SimplicialComplex(4, {{0, 1, 3}, {0, 2, 3}}));
    std::swap(s2.c_plus, s2.c_minus);
    CHECK(bistellar_flip(*T2, s2) == T1);
}

TEST_CASE("every vertex gives a triangulation and every edge obeys the radical dichotomy") {
    std::vector<std::vector<IntVector>> cases = {
        {{1, 2}},
        {{2, 1, 0, 1, 0, 0}, {0, 1, 2, 0, 1, 0}, {0, 0, 0, 1, 1, 2}},
        {{1, 1, 1, 1, 1}, {0, 1, 6, 7, 9}},
        {{3, 6, 8, 10, 15}},
        {{1, 1, 1, 1, 1}, {0, 1, 3, 5, 6}},
    };
    for (const auto& rows : cases) {
        AGradedContext ctx(grading(rows));
        auto G = explore(ctx, ctx.reference_ideal());
        for (const auto& v : G.vertices) CHECK(is_triangulation(complex_of_radical(v.ideal), ctx.A()));
        std::size_t bistellar = 0, violations = 0;
        for (const auto& e : G.edges) {
            auto r = flip(G.vertices[e.u].ideal, e.label, ctx);
            REQUIRE(r.move);
            auto verdict = check_flip_edge(*r.move, ctx);
            if (verdict.verdict == EdgeVerdict::Violation) {
                ++violations;
                MESSAGE(verdict.detail);
            }
            if (verdict.verdict == EdgeVerdict::Bistellar) {
                ++bistellar;
                CHECK(is_circuit(ctx.A(), e.label).has_value());
            }
        }
        CHECK(violations == 0);
        auto image = baues_image(G, ctx);
        CHECK(image.connected());
        CHECK(image.complexes.size() <= G.vertices.size());
        if (image.complexes.size() > 1) CHECK(bistellar > 0);
    }
}

TEST_CASE("homogenization") {
    auto A = IntMatrix::from_rows({{1, 3, 7}});
    auto H = homogenize(A);
    CHECK(H.rows() == 2);
    CHECK(H.row(1) == IntVector{1, 1, 1});
    auto B = IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}});
    CHECK(homogenize(B) == B);
}
