#pragma once

#include "evenlat/lattice.hpp"

#include <optional>
#include <vector>

namespace evenlat {

/// Exponent vector (e_1, ..., e_k) with 0 <= e_i < d_i.
using GroupElement = std::vector<long>;

/// A finite abelian group Z_{d_1} + ... + Z_{d_k} with a quadratic form
/// q: A -> Q/2Z and its bilinear form b: A x A -> Q/Z, presented by the
/// values on generators.
class FiniteQuadraticModule {
public:
    FiniteQuadraticModule() = default;
    /// table(i, i) is q(g_i) (taken mod 2), table(i, j) is b(g_i, g_j)
    /// (taken mod 1). Throws PreconditionError when the values are not
    /// compatible with the orders.
    FiniteQuadraticModule(std::vector<long> orders, const RatMat& table);

    const std::vector<long>& orders() const { return orders_; }
    std::size_t num_generators() const { return orders_.size(); }
    long order() const;
    const Rational& q_gen(std::size_t i) const { return q_[i]; }
    const Rational& b_gen(std::size_t i, std::size_t j) const { return b_(i, j); }

    Rational q_value(const GroupElement& x) const;
    Rational b_value(const GroupElement& x, const GroupElement& y) const;

    GroupElement zero() const { return GroupElement(orders_.size(), 0); }
    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement neg(const GroupElement& x) const;
    GroupElement scale(long n, const GroupElement& x) const;
    GroupElement generator(std::size_t i) const;
    long element_order(const GroupElement& x) const;
    GroupElement reduce(const GroupElement& x) const;

    /// All elements in lexicographic exponent order.
    std::vector<GroupElement> elements() const;
    std::size_t index_of(const GroupElement& x) const;

    /// q on the diagonal (mod 2), b off the diagonal (mod 1).
    RatMat form_matrix(const std::vector<GroupElement>& basis) const;

    /// Lifts of the generators in host coordinates, when built from a lattice.
    const std::vector<RatVec>& lifts() const { return lifts_; }
    const std::optional<Lattice>& source() const { return source_; }
    /// Host-coordinate lift of an element (requires a source lattice).
    RatVec lift(const GroupElement& x) const;

    friend FiniteQuadraticModule negate(const FiniteQuadraticModule& m);
    friend FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b);
    friend FiniteQuadraticModule from_lifts(const Lattice& l, const std::vector<RatVec>& lifts,
                                            const std::vector<long>& orders);

private:
    std::vector<long> orders_;
    std::vector<Rational> q_;
    RatMat b_;
    std::vector<RatVec> lifts_;
    std::optional<Lattice> source_;
};

/// Discriminant form of an even lattice, generators from discriminant_group().
FiniteQuadraticModule from_lattice(const Lattice& l);

/// Discriminant form on caller-chosen dual vectors. Throws PreconditionError
/// unless the lifts lie in L*, have the stated orders modulo L, and present
/// A_L as the direct sum of their cyclic groups.
FiniteQuadraticModule from_lifts(const Lattice& l, const std::vector<RatVec>& lifts, const std::vector<long>& orders);

FiniteQuadraticModule negate(const FiniteQuadraticModule& m);
FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b);

/// Nonzero x with q(x) = 0, lexicographic order.
std::vector<GroupElement> isotropic_elements(const FiniteQuadraticModule& m);

struct IsotropicSubgroup {
    std::vector<GroupElement> generators; ///< greedy lexicographic generating set
    std::vector<GroupElement> elements;   ///< sorted lexicographically
    long order() const { return static_cast<long>(elements.size()); }
};

/// Subgroups on which q vanishes identically, including the trivial one.
/// Sorted by order, then by element list.
std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticModule& m);

/// Subgroup generated by the given elements (sorted element list).
std::vector<GroupElement> generated_subgroup(const FiniteQuadraticModule& m, const std::vector<GroupElement>& gens);

struct OverlatticeData {
    RatMat basis; ///< rows in coordinates of the original lattice
    Lattice lattice;
};

/// Even overlattice L + lifts(H). Throws PreconditionError when H is not
/// isotropic or m has no source lattice.
OverlatticeData overlattice(const FiniteQuadraticModule& m, const IsotropicSubgroup& h);

struct Isomorphism {
    std::vector<GroupElement> images; ///< image of each generator of the first module
};

/// 1024 unless EVENLAT_GUARD_ORDER is set.
long isomorphism_guard_order();

/// Backtracking search for a q-preserving group isomorphism. Throws
/// GuardExceeded when either module is larger than the guard.
std::optional<Isomorphism> are_isomorphic(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b);

bool is_isometry(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b, const Isomorphism& f);

} // namespace evenlat
