#pragma once

// Graver bases of toric ideals and circuit detection.

#include <optional>
#include <vector>

#include "toricflip/groebner.hpp"

namespace toricflip {

/// x^u - x^v with disjoint supports, lexicographically larger side as lead.
Binomial canonical_pair(ExponentView u, ExponentView v);

/// Elements sorted by certificate weight, then lead, then trail.
struct GraverBasis {
    std::vector<Binomial> elements;

    std::size_t size() const { return elements.size(); }
    /// Membership of the unordered pair {u, v}.
    bool contains(ExponentView u, ExponentView v) const;
    friend bool operator==(const GraverBasis&, const GraverBasis&) = default;
};

/// Reduced Groebner basis of the toric ideal of the Lawrence lifting
/// [[A, 0], [I, I]], projected back to the first block.
GraverBasis graver_basis(const GradingMatrix& A);

/// Conformally minimal kernel vectors whose sides have positive-weight value
/// at most `bound`, found by scanning fibers in increasing weight.
GraverBasis graver_oracle(const GradingMatrix& A, int64_t bound);

/// Weight of an element under the grading's positive weight vector.
int64_t certificate_weight(const GradingMatrix& A, const Binomial& f);

struct Circuit {
    IntVector t;
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
};

/// Circuit data when the columns on support(lead - trail) are minimally dependent.
std::optional<Circuit> is_circuit(const GradingMatrix& A, const Binomial& f);

}  // namespace toricflip
