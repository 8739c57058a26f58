#pragma once

// Grading matrices, integer kernels and exact rational feasibility.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toricflip {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<int64_t>;
using RationalVector = std::vector<Rational>;
using DegreeVector = std::vector<int64_t>;

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<int64_t> data_;
};

/// A d x n integer matrix of rank d whose kernel meets the nonnegative
/// orthant only in zero. Construct through validate_grading().
class GradingMatrix {
  public:
    std::size_t d() const { return entries_.rows(); }
    std::size_t n() const { return entries_.cols(); }
    const IntMatrix& entries() const { return entries_; }
    IntVector column(std::size_t i) const { return entries_.column(i); }

    /// c with (c^T A)_i >= 1 for every column.
    const RationalVector& positive_certificate() const { return certificate_; }
    /// Positive integer multiple of c^T A; a strictly positive vector in the row space.
    const IntVector& positive_weight() const { return weight_; }

    DegreeVector degree(std::span<const int32_t> exponent) const;
    /// The value positive_weight . u shared by every u with A u = b, if b can be a degree.
    std::optional<int64_t> weight_of_degree(const DegreeVector& b) const;

    friend bool operator==(const GradingMatrix& a, const GradingMatrix& b) {
        return a.entries_ == b.entries_;
    }

  private:
    friend GradingMatrix validate_grading(const IntMatrix& entries);
    IntMatrix entries_;
    RationalVector certificate_;
    IntVector weight_;
    Integer weight_scale_;  // weight_ = weight_scale_ * c^T A
};

/// Throws Error{RankDeficient} or Error{NotPointed}.
GradingMatrix validate_grading(const IntMatrix& entries);

struct KernelBasis {
    std::vector<IntVector> vectors;
};

/// Z-basis of ker(A) cap Z^n, size-reduced.
KernelBasis kernel_lattice(const GradingMatrix& A);

struct LpResult {
    bool feasible = false;
    RationalVector witness;
};

/// Decides whether some w in Q^n has row . w >= rhs for all rows (exact simplex).
LpResult lp_feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs, std::size_t n);

/// rows . w >= 1 for every row; the empty system is feasible with w = 0.
LpResult lp_strict_feasible(const std::vector<RationalVector>& rows, std::size_t n);

std::size_t rank(std::vector<RationalVector> rows);
Integer determinant(const std::vector<IntVector>& square);
/// A vector spanning the kernel of `rows` when that kernel is one-dimensional.
std::optional<RationalVector> kernel_line(const std::vector<RationalVector>& rows, std::size_t n);

/// "d n" header then d rows; '#' starts a comment.
IntMatrix parse_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const IntMatrix& m);

}  // namespace toricflip
