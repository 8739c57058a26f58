#pragma once

// Monomial A-graded ideals: the Hilbert test, flips, coherence and enumeration.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "toricflip/graver.hpp"
#include "toricflip/kpolynomial.hpp"

namespace toricflip {

/// Grading data shared by every test on one matrix. Immutable once built.
class AGradedContext {
  public:
    explicit AGradedContext(GradingMatrix A);
    AGradedContext(GradingMatrix A, GraverBasis graver);

    const GradingMatrix& A() const { return A_; }
    std::size_t n() const { return A_.n(); }
    const GraverBasis& graver() const { return graver_; }
    const std::vector<Binomial>& toric_generators() const { return toric_; }
    /// Positive row-space weight, refined lexicographically.
    const IntVector& reference_weight() const { return A_.positive_weight(); }
    const MonomialIdeal& reference_ideal() const { return reference_ideal_; }
    const KPolynomial& reference_numerator() const { return reference_numerator_; }

    /// When set, every flip is also rebuilt from the Graver basis and compared.
    bool cross_check = false;

  private:
    GradingMatrix A_;
    GraverBasis graver_;
    std::vector<Binomial> toric_;
    MonomialIdeal reference_ideal_;
    KPolynomial reference_numerator_;
};

bool is_agraded(const MonomialIdeal& M, const AGradedContext& ctx);
/// Every Graver binomial has a side in M.
bool is_weakly_agraded(const MonomialIdeal& M, const AGradedContext& ctx);

/// A flip from `source` along `binomial`, oriented so that x^lead is a
/// minimal generator of the source and x^trail is standard.
struct FlipMove {
    MonomialIdeal source;
    Binomial binomial;
    MonomialIdeal target;
};

enum class FlipStatus { Flipped, NotApplicable, NotFlippable };

struct FlipResult {
    FlipStatus status = FlipStatus::NotApplicable;
    std::optional<FlipMove> move;
};

/// The wall test: flippable iff the initial ideal of the wall ideal with
/// x^a leading gives back M; the target is the one with x^b leading.
FlipResult flip(const MonomialIdeal& M, const Binomial& g, const AGradedContext& ctx);

/// <x^c : x^c - x^d Graver, x^c in M, x^d not in M, c != a> + <x^b>.
MonomialIdeal graver_flip_ideal(const MonomialIdeal& M, ExponentView a, ExponentView b, const AGradedContext& ctx);

/// All flips over the Graver basis, in Graver order.
std::vector<FlipMove> neighbors(const MonomialIdeal& M, const AGradedContext& ctx);

struct CoherenceResult {
    bool coherent = false;
    /// Some w with w . (u - v) >= 1 for each Graver element with x^u in M, x^v not in M.
    RationalVector witness;
};

CoherenceResult is_coherent(const MonomialIdeal& M, const AGradedContext& ctx);

/// Integer multiple of a rational weight.
IntVector integral_weight(const RationalVector& w);

struct SpecialIdeals {
    MonomialIdeal S;  // intersection of every monomial A-graded ideal
    MonomialIdeal P;  // <x^u x^v : x^u - x^v Graver>
};

/// Throws Error{IncompleteInput} when `expected_count` is given and differs
/// from the size of `all_ideals`.
SpecialIdeals special_ideals(const AGradedContext& ctx, const std::vector<MonomialIdeal>& all_ideals,
                             std::optional<std::size_t> expected_count = std::nullopt);

struct EnumerationOptions {
    /// Largest Graver basis the search accepts.
    std::size_t max_graver = 4096;
    /// Search-node budget; zero means unlimited.
    std::uint64_t max_nodes = 0;
    unsigned workers = 1;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t rejected_leaves = 0;
};

/// Every monomial A-graded ideal, sorted. Search over Graver binomials in
/// increasing weight: an element with no side in the current ideal branches
/// on which side joins it; the branch that takes x^v records x^u as standard.
/// Throws Error{GuardExceeded}.
std::vector<MonomialIdeal> brute_force_enumerate(const AGradedContext& ctx, const EnumerationOptions& options = {},
                                                 EnumerationStats* stats = nullptr);

/// Minimal generators that are not a side of a Graver element with a standard other side.
std::vector<Exponent> unexplained_generators(const MonomialIdeal& M, const AGradedContext& ctx);

/// The two-row matrices A(j) = [[1,1,1,1,1],[0,1,3+3j,4+3j,6+3j]] and the
/// closed-form binomial families attached to their weight (1,1,2,0,2).
struct AjFamily {
    int j = 0;
    GradingMatrix A;
    IntVector weight;
    std::vector<Binomial> P, Q, R, S;

    /// P + Q + R + S as monomial ideal of leads.
    MonomialIdeal initial() const;
};

AjFamily aj_family(int j);

/// Generators of P_j + Q_j + <a^{5+3t} c^{j-t} - mu_t b^{6+3t} e^{j-1-t}> + S_j.
/// Throws Error{BadLength} unless mu has j entries.
std::vector<Binomial> build_ij_family(int j, const std::vector<Rational>& mu);

}  // namespace toricflip
