#include <doctest.h>

#include "test_support.hpp"
#include "toricflip/errors.hpp"
#include "toricflip/fixtures.hpp"
#include "toricflip/flipgraph.hpp"

using namespace toricflip;
using testing_support::grading;

TEST_CASE("two-vertex graph and its exports") {
    AGradedContext ctx(grading({{1, 2}}));
    auto G = explore(ctx, ctx.reference_ideal());
    CHECK(G.vertices.size() == 2);
    REQUIRE(G.edges.size() == 1);
    auto dot = export_dot(G);
    CHECK(dot.find("label=\"x1^2 - x2\"") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    auto back = import_json(export_json(G));
    CHECK(export_json(back) == export_json(G));
    CHECK(back.edges == G.edges);
    CHECK_THROWS_AS(import_json("{\"nvars\": 2}"), Error);
    CHECK_THROWS_AS(explore(ctx, MonomialIdeal::minimalize(2, {{1, 0}})), Error);
}

TEST_CASE("flip graph invariants on fixtures") {
    struct Case {
        std::vector<IntVector> rows;
        std::size_t vertices;
    };
    // Vertex counts frozen from the brute-force enumeration.
    std::vector<Case> cases = {
        {{{1, 3, 7}}, 7},
        {{{1, 3, 4}}, 7},
        {{{2, 1, 0, 1, 0, 0}, {0, 1, 2, 0, 1, 0}, {0, 0, 0, 1, 1, 2}}, 29},
        {{{3, 6, 8, 10, 15}}, 250},
        {{{1, 1, 1, 1, 1}, {0, 1, 6, 7, 9}}, 0},
    };
    for (const auto& c : cases) {
        AGradedContext ctx(grading(c.rows));
        auto G = explore(ctx, ctx.reference_ideal());
        auto all = brute_force_enumerate(ctx);
        if (c.vertices) CHECK(G.vertices.size() == c.vertices);
        CHECK(G.vertices.size() == all.size());
        for (std::size_t i = 0; i < all.size(); ++i) CHECK(G.vertices[i].ideal == all[i]);

        std::vector<std::size_t> degree(G.vertices.size(), 0);
        for (const auto& e : G.edges) {
            ++degree[e.u];
            ++degree[e.v];
            // Edge symmetry: the same label flips each endpoint into the other.
            auto f = flip(G.vertices[e.u].ideal, e.label, ctx);
            auto b = flip(G.vertices[e.v].ideal, e.label, ctx);
            REQUIRE(f.status == FlipStatus::Flipped);
            REQUIRE(b.status == FlipStatus::Flipped);
            CHECK(f.move->target == G.vertices[e.v].ideal);
            CHECK(b.move->target == G.vertices[e.u].ideal);
            // The wall construction and the Graver construction agree.
            CHECK(graver_flip_ideal(G.vertices[e.u].ideal, f.move->binomial.lead, f.move->binomial.trail, ctx) ==
                  f.move->target);
        }
        const std::size_t corank = ctx.n() - ctx.A().d();
        for (std::size_t i = 0; i < G.vertices.size(); ++i) {
            CHECK(degree[i] == G.vertices[i].valency);
            if (G.vertices[i].coherent) CHECK(G.vertices[i].valency >= corank);
        }
        auto labels = classify_labels(G, ctx, all.size());
        for (const auto& u : labels.ugb)
            CHECK(std::find(labels.flips.begin(), labels.flips.end(), u) != labels.flips.end());
        CHECK(labels.flips.size() <= labels.graver.size());
        auto cs = census(G, ctx, all.size());
        CHECK(cs.connected == true);
        for (auto v : cs.flip_deficient) CHECK_FALSE(G.vertices[v].coherent);
        CHECK_THROWS_AS(classify_labels(G, ctx, all.size() + 1), Error);
    }
}

TEST_CASE("parallel exploration matches serial exploration") {
    AGradedContext ctx(grading({{3, 6, 8, 10, 15}}));
    auto serial = explore(ctx, ctx.reference_ideal());
    ExploreOptions opt;
    opt.workers = 4;
    auto parallel = explore(ctx, ctx.reference_ideal(), opt);
    CHECK(export_json(serial) == export_json(parallel));
    CHECK(export_dot(serial) == export_dot(parallel));
    // Starting elsewhere in the same component gives the same canonical graph.
    auto other = explore(ctx, serial.vertices.back().ideal);
    CHECK(export_dot(other) == export_dot(serial));
    ExploreOptions guard;
    guard.max_vertices = 10;
    CHECK_THROWS_AS(explore(ctx, ctx.reference_ideal(), guard), Error);
}

TEST_CASE("flip deficiency in corank four") {
    auto fx = load_fixture("corank4-deficiency");
    AGradedContext ctx(fixture_matrix(fx));
    auto M = fixture_ideal(fx["ideal"], 5);
    auto G = explore(ctx, ctx.reference_ideal());
    auto id = G.find(M);
    REQUIRE(id.has_value());
    CHECK(G.vertices[*id].valency == 3);
    auto cs = census(G, ctx);
    CHECK(std::find(cs.flip_deficient.begin(), cs.flip_deficient.end(), *id) != cs.flip_deficient.end());
    CHECK(cs.corank == 4);
}
