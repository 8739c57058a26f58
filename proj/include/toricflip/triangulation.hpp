#pragma once

// Stanley-Reisner complexes of radicals as triangulations of the cone over
// the columns, and bistellar flips along circuits.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricflip/flipgraph.hpp"

namespace toricflip {

using Face = std::vector<std::size_t>;  // sorted column indices, 0-based

/// Facets kept sorted and pairwise incomparable.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;
    SimplicialComplex(std::size_t n, std::vector<Face> facets);

    std::size_t n() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool has_face(const Face& f) const;
    /// Facets of the link of f; {{}} when f is itself a facet, empty when f is not a face.
    std::vector<Face> link(const Face& f) const;
    std::string to_string() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
    friend auto operator<=>(const SimplicialComplex&, const SimplicialComplex&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<Face> facets_;
};

/// Minimal non-faces are the supports of the generators of rad(M).
SimplicialComplex complex_of_radical(const MonomialIdeal& M);

/// Full-rank facets whose cones have disjoint interiors and whose volumes
/// (on the slice cut out by the positive weight) add up to that of the cone.
bool is_triangulation(const SimplicialComplex& D, const GradingMatrix& A);

/// Placing triangulation of the cone (columns in index order after a first basis).
SimplicialComplex placing_triangulation(const GradingMatrix& A);

/// Sum over facets of |det A_s| / prod_{i in s} w_i with w the positive weight.
Rational sliced_volume(const SimplicialComplex& D, const GradingMatrix& A);

struct CircuitFlipSpec {
    Circuit circuit;
    std::vector<Face> c_plus;   // T \ {i} for i in T+
    std::vector<Face> c_minus;  // T \ {i} for i in T-
};

CircuitFlipSpec circuit_flip_spec(const Circuit& c);

/// Replaces l * C+ by l * C- when C+ lies in D and its maximal simplices share
/// one link; nullopt otherwise.
std::optional<SimplicialComplex> bistellar_flip(const SimplicialComplex& D, const CircuitFlipSpec& spec);

enum class EdgeVerdict { SameRadical, Bistellar, Violation };

struct EdgeCheck {
    EdgeVerdict verdict = EdgeVerdict::Violation;
    std::string detail;
};

/// Either both radicals agree (and x^b lies in the source radical), or the
/// label is a circuit and the complexes differ by the bistellar flip on it.
EdgeCheck check_flip_edge(const FlipMove& move, const AGradedContext& ctx);

const char* to_string(EdgeVerdict v);

struct BauesImage {
    std::vector<SimplicialComplex> complexes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// complexes index for each flip-graph vertex
    std::vector<std::size_t> vertex_map;
    bool connected() const;
};

BauesImage baues_image(const FlipGraph& G, const AGradedContext& ctx);

/// Appends a row of ones unless it is already in the row space.
IntMatrix homogenize(const IntMatrix& A);

}  // namespace toricflip
