#pragma once

// Numerators of Z^d-graded Hilbert series over prod_i (1 - t^{a_i}).

#include <cstdint>
#include <string>
#include <vector>

#include "toricflip/monomial.hpp"

namespace toricflip {

/// Finite map from Z^d to nonzero integers, terms sorted by degree.
/// Coefficient arithmetic is checked; overflow throws instead of wrapping.
class KPolynomial {
  public:
    KPolynomial() = default;
    explicit KPolynomial(std::size_t d) : d_(d) {}
    static KPolynomial one(std::size_t d);

    std::size_t dim() const { return d_; }
    std::size_t size() const { return coeffs_.size(); }
    DegreeVector degree(std::size_t i) const;
    int64_t coefficient(std::size_t i) const { return coeffs_[i]; }
    int64_t coefficient_at(const DegreeVector& b) const;

    /// this - t^shift * other
    KPolynomial minus_shifted(const KPolynomial& other, const DegreeVector& shift) const;
    KPolynomial operator*(const KPolynomial& other) const;

    std::string to_string() const;

    friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

  private:
    void push(const int64_t* key, int64_t c);

    std::size_t d_ = 0;
    std::vector<int64_t> keys_;  // d_ entries per term
    std::vector<int64_t> coeffs_;
};

enum class PivotRule { LargestDegree, First, Last };

/// Numerator of the Hilbert series of S/M, via
/// N(<G, m>) = N(<G>) - t^{A m} N(<G> : m), memoized per thread.
KPolynomial k_polynomial(const MonomialIdeal& M, const GradingMatrix& A,
                         PivotRule rule = PivotRule::LargestDegree);

/// Hilbert-function value at b from N(M) / prod (1 - t^{a_i}) by expanding
/// the series up to b; used by tests as a cross-check against fiber counts.
int64_t hilbert_value(const KPolynomial& numerator, const GradingMatrix& A, const DegreeVector& b);

}  // namespace toricflip
