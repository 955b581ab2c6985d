#pragma once

#include "evenlat/matrix.hpp"

#include <optional>

namespace evenlat {

struct HermiteForm {
    IntMat H; ///< row Hermite normal form of the input
    IntMat U; ///< unimodular transform with U * A = H
    std::size_t rank = 0;
};

/// Row HNF: echelon, positive pivots, entries above a pivot reduced into [0, pivot).
HermiteForm hnf(const IntMat& a);

struct SmithForm {
    IntMat D; ///< diagonal, d1 | d2 | ... , nonnegative
    IntMat S; ///< unimodular, S * A * T = D
    IntMat T; ///< unimodular
    /// Diagonal entries, min(rows, cols) of them.
    IntVec invariant_factors() const;
};

/// Integer Smith normal form. The pivot is the smallest nonzero entry (in
/// absolute value) of the remaining block.
SmithForm snf(const IntMat& a);

struct RationalSmithForm {
    RatMat D; ///< diagonal, non-increasing, each entry an integer multiple of the next
    IntMat S;
    IntMat T;
    RatVec diagonal() const;
};

/// Smith form of a nonsingular rational matrix: clears the lcm L of all
/// denominators, runs integer SNF on L*A and divides back. The diagonal is
/// returned in non-increasing order (d1 >= d2 >= ... > 0), e.g.
/// diag(1, 1, 1/2, 1/2, 1/4, 1/4).
RationalSmithForm snf_rational(const RatMat& a);

struct Signature {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix by exact congruence diagonalization.
Signature signature(const IntMat& g);
Signature signature(const RatMat& g);

struct RationalSolution {
    RatVec x;      ///< one solution of A x = b
    RatMat kernel; ///< rows span {y : A y = 0} over Q; empty when A has full column rank
};

/// Solves A x = b over Q; nullopt when inconsistent.
std::optional<RationalSolution> solve_rational(const RatMat& a, const RatVec& b);
std::optional<RationalSolution> solve_rational(const IntMat& a, const RatVec& b);

/// Integer coefficients c with sum_i c_i * gens.row(i) = target, or nullopt.
std::optional<IntVec> solve_integer(const IntMat& gens, const IntVec& target);

/// Z-basis (rows, in HNF) of the saturated kernel {x in Z^n : A x = 0}.
IntMat kernel_saturated(const IntMat& a);

/// Z-basis (rows, in HNF) of (row span over Q) ∩ Z^n.
IntMat saturate_rows(const IntMat& gens);

/// Nonzero rows of the HNF of a rational generator matrix; rows span the
/// same Z-module as the input rows.
RatMat rational_row_basis(const RatMat& gens);

} // namespace evenlat
