#pragma once

// Breadth-first exploration of the flip graph and its census.

#include <optional>
#include <string>
#include <vector>

#include "toricflip/agraded.hpp"
#include "toricflip/io.hpp"

namespace toricflip {

struct FlipVertex {
    MonomialIdeal ideal;
    bool coherent = false;
    std::size_t valency = 0;
};

/// Labels are Graver elements in canonical orientation; u < v.
struct FlipEdge {
    std::size_t u = 0, v = 0;
    Binomial label;
    friend bool operator==(const FlipEdge&, const FlipEdge&) = default;
};

/// Vertices numbered by sorted ideal; edges sorted by (u, v, label).
struct FlipGraph {
    std::size_t nvars = 0;
    std::vector<FlipVertex> vertices;
    std::vector<FlipEdge> edges;
    std::size_t start = 0;

    std::optional<std::size_t> find(const MonomialIdeal& M) const;
};

struct ExploreOptions {
    unsigned workers = 1;
    /// Zero means unlimited; otherwise Error{GuardExceeded} past this many vertices.
    std::size_t max_vertices = 0;
    bool coherence = true;
};

/// Throws Error{PreconditionViolated} unless `start` is A-graded.
FlipGraph explore(const AGradedContext& ctx, const MonomialIdeal& start, const ExploreOptions& options = {});

struct LabelClasses {
    std::vector<Binomial> ugb;
    std::vector<Binomial> flips;
    std::vector<Binomial> graver;
};

/// Flips are edge labels, UGB the labels of edges between coherent vertices.
/// Throws Error{IncompleteGraph} when `expected_vertices` disagrees.
LabelClasses classify_labels(const FlipGraph& G, const AGradedContext& ctx,
                             std::optional<std::size_t> expected_vertices = std::nullopt);

struct Census {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t coherent = 0;
    std::size_t max_valency = 0;
    std::size_t min_valency = 0;
    std::size_t corank = 0;
    /// Vertices with valency below n - d.
    std::vector<std::size_t> flip_deficient;
    /// Set when an independent count of all ideals is available.
    std::optional<std::size_t> total_ideals;
    std::optional<bool> connected;
};

Census census(const FlipGraph& G, const AGradedContext& ctx, std::optional<std::size_t> total_ideals = std::nullopt);

std::string export_dot(const FlipGraph& G);
std::string export_json(const FlipGraph& G);
/// Inverse of export_json. Throws Error{Parse}.
FlipGraph import_json(const std::string& text);

}  // namespace toricflip
