#pragma once

// Monomials as exponent vectors, term orders and monomial ideals.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toricflip/lattice.hpp"

namespace toricflip {

using Exponent = std::vector<int32_t>;
using ExponentView = std::span<const int32_t>;

Exponent add(ExponentView a, ExponentView b);
/// a - b; caller guarantees b <= a.
Exponent subtract(ExponentView a, ExponentView b);
Exponent lcm(ExponentView a, ExponentView b);
Exponent support(ExponentView a);
int64_t total_degree(ExponentView a);
bool is_one(ExponentView a);
bool divides(ExponentView a, ExponentView b);
bool coprime(ExponentView a, ExponentView b);
/// Componentwise u <= v with u != v.
bool strictly_below(ExponentView u, ExponentView v);

/// Weight vectors compared in turn, ties broken lexicographically with
/// x1 > x2 > ... > xn (or a caller-supplied priority sequence).
class TermOrder {
  public:
    TermOrder() = default;
    explicit TermOrder(IntVector weight, std::vector<std::size_t> priority = {});
    TermOrder(std::vector<IntVector> weights, std::vector<std::size_t> priority);

    std::strong_ordering compare(ExponentView u, ExponentView v) const;
    bool greater(ExponentView u, ExponentView v) const { return compare(u, v) > 0; }

    const std::vector<IntVector>& weights() const { return weights_; }
    const std::vector<std::size_t>& priority() const { return priority_; }

  private:
    std::vector<IntVector> weights_;
    std::vector<std::size_t> priority_;  // empty means 0, 1, ..., n-1
};

std::strong_ordering compare(ExponentView u, ExponentView v, const TermOrder& order);

/// Monomial ideal kept as its minimal generators in ascending lexicographic
/// order, stored contiguously. Two ideals are equal iff their buffers are.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t nvars) : n_(nvars) {}

    /// Drops non-minimal generators and sorts.
    static MonomialIdeal minimalize(std::size_t nvars, std::vector<Exponent> gens);

    std::size_t nvars() const { return n_; }
    std::size_t size() const { return n_ ? data_.size() / n_ : 0; }
    bool is_zero() const { return data_.empty(); }
    bool is_unit() const;
    ExponentView generator(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::vector<Exponent> generators() const;
    const std::vector<int32_t>& buffer() const { return data_; }

    bool contains(ExponentView u) const;
    bool is_minimal_generator(ExponentView u) const;
    std::size_t hash() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }
    friend std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

  private:
    std::size_t n_ = 0;
    std::vector<int32_t> data_;
};

struct MonomialIdealHash {
    std::size_t operator()(const MonomialIdeal& m) const { return m.hash(); }
};

MonomialIdeal colon(const MonomialIdeal& M, ExponentView m);
MonomialIdeal radical(const MonomialIdeal& M);
MonomialIdeal intersect(const MonomialIdeal& M, const MonomialIdeal& N);
MonomialIdeal sum(const MonomialIdeal& M, const MonomialIdeal& N);
MonomialIdeal with_generator(const MonomialIdeal& M, ExponentView g);
MonomialIdeal without_generator(const MonomialIdeal& M, ExponentView g);
bool is_subset(const MonomialIdeal& M, const MonomialIdeal& N);

/// All u >= 0 with A u = b in ascending lexicographic order; empty when b is
/// not a degree. Entries are bounded through the positive weight of A.
std::vector<Exponent> fiber(const GradingMatrix& A, const DegreeVector& b);

}  // namespace toricflip
