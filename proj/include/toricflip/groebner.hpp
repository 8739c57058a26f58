#pragma once

// Buchberger completion for ideals generated by monomials and binomials.

#include <vector>

#include "toricflip/lattice.hpp"
#include "toricflip/monomial.hpp"

namespace toricflip {

/// x^lead - coeff * x^trail. A zero coefficient encodes the monomial x^lead
/// and leaves `trail` empty.
struct Binomial {
    Exponent lead;
    Exponent trail;
    Rational coeff = 1;

    static Binomial monomial(Exponent e) { return Binomial{std::move(e), {}, 0}; }
    static Binomial pure(Exponent lead, Exponent trail) { return Binomial{std::move(lead), std::move(trail), 1}; }

    bool is_monomial() const { return coeff == 0; }
    bool is_homogeneous(const GradingMatrix& A) const;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Reduced Groebner basis: pure binomials with their marked leads plus the
/// monomial part. No lead divides another lead or any trail.
struct MarkedGB {
    std::vector<Binomial> binomials;
    MonomialIdeal monomials;
    TermOrder order;

    MonomialIdeal initial_ideal() const;
    std::size_t size() const { return binomials.size() + monomials.size(); }
};

struct BuchbergerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
};

/// Throws Error{NonHomogeneousInput}. Pairs are processed by increasing
/// A-degree (through the positive weight) and then by the term order, so the
/// output is a deterministic function of the input.
MarkedGB buchberger(const std::vector<Binomial>& gens, const TermOrder& order, const GradingMatrix& A,
                    BuchbergerStats* stats = nullptr);

/// Normal form of x^u modulo a marked basis: either zero (x^u lies in the
/// ideal's initial monomials after rewriting) or a scalar multiple of a
/// standard monomial.
struct NormalForm {
    bool zero = false;
    Exponent monomial;
    Rational coeff = 1;
};
NormalForm normal_form(const MarkedGB& gb, ExponentView u);

/// Generators of the toric ideal I_A: kernel-lattice binomials saturated one
/// variable at a time.
std::vector<Binomial> toric_ideal(const GradingMatrix& A);

/// in_w(I_A), with ties broken lexicographically (x1 > ... > xn).
MonomialIdeal initial_ideal(const GradingMatrix& A, const IntVector& weight);
MonomialIdeal initial_ideal(const GradingMatrix& A, const std::vector<Binomial>& toric_gens,
                            const IntVector& weight);

enum class WallDirection { ALeads, BLeads };

/// Initial ideal of W = <minimal generators of I except x^a> + <x^a - x^b>
/// with the stated side of the binomial marked as leading. Only S-pairs of a
/// monomial with the binomial occur, so the closure is a monomial rewrite.
/// Throws Error{PreconditionViolated} unless x^a is a minimal generator of I
/// and x^b is not in I.
MonomialIdeal wall_initial(const MonomialIdeal& I, ExponentView a, ExponentView b, WallDirection dir);

}  // namespace toricflip
