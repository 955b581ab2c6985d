#pragma once

#include "evenlat/exactlinalg.hpp"

#include <optional>
#include <string>

namespace evenlat {

/// An integral lattice given by a symmetric Gram matrix. Invariants are
/// computed once at construction.
class Lattice {
public:
    /// Throws PreconditionError on an asymmetric or (unless allowed) degenerate Gram.
    explicit Lattice(IntMat gram, std::string name = {}, bool allow_degenerate = false);

    const IntMat& gram() const { return gram_; }
    const std::string& name() const { return name_; }
    std::size_t rank() const { return gram_.rows(); }
    const Integer& det() const { return det_; }
    const Signature& signature() const { return sig_; }
    bool is_even() const { return even_; }
    bool is_degenerate() const { return det_ == 0; }
    bool is_unimodular() const { return det_ == 1 || det_ == -1; }
    bool is_definite() const { return sig_.n_plus == 0 || sig_.n_minus == 0; }

    /// x . y for vectors in host-basis coordinates.
    Rational pair(const RatVec& x, const RatVec& y) const { return bilinear(gram_, x, y); }

private:
    IntMat gram_;
    std::string name_;
    Integer det_;
    Signature sig_;
    bool even_ = true;
};

/// Standard lattices: "U", "U(m)", "E8", "A1", "<n>" or "<n1,n2,...>",
/// "Nikulin", "M_Z2_3". E8 and A1 are negative definite.
Lattice make_named(const std::string& name);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice rescale(const Lattice& l, const Integer& m);

/// A Z-basis (rows, host coordinates) of the Z-span of rational generators
/// inside host (x) Q, together with the induced Gram. Throws when the
/// induced form is not integral.
struct SpanData {
    RatMat basis;
    Lattice lattice;
};
SpanData span_lattice(const Lattice& host, const RatMat& gens, const std::string& name = {});

/// Discriminant group A_L = L*/L. Lifts are in host-basis coordinates.
struct DiscGroupData {
    IntVec invariant_factors; ///< d_1 | d_2 | ... , all > 1
    std::vector<RatVec> generator_lifts;
    Integer order;
    std::size_t length() const { return invariant_factors.size(); }
};

/// Generators come from the rational Smith form S * G^-1 * T = D: the lifts
/// are the rows of S * G^-1 whose diagonal entry in D is not an integer.
DiscGroupData discriminant_group(const Lattice& l);

/// Smallest number of generators of A_L.
std::size_t disc_length(const Lattice& l);

/// gcd of all Gram entries.
Integer scale_gcd(const Lattice& l);
/// gcd of {g_ii} and {2 g_ij}: the largest d dividing every x^2.
Integer norm_gcd(const Lattice& l);

struct SublatticeData {
    IntMat basis_coords; ///< rows are generators in host coordinates
    IntMat induced_gram;
    bool degenerate = false;
    Lattice lattice() const { return Lattice(induced_gram, {}, degenerate); }
};

/// Throws PreconditionError when the generators are dependent.
SublatticeData sublattice(const Lattice& host, const IntMat& gens);
bool is_primitive(const Lattice& host, const IntMat& gens);
IntMat saturation(const Lattice& host, const IntMat& gens);
/// Saturated kernel of gens * gram. Degenerate results carry degenerate = true.
SublatticeData orthogonal_complement(const Lattice& host, const IntMat& gens);

/// v in L, i.e. all coordinates integral.
bool contains(const Lattice& l, const RatVec& v);
/// v in L*, i.e. gram * v integral.
bool in_dual(const Lattice& l, const RatVec& v);

/// Uniqueness criterion: even, indefinite, rank >= 2 + l(A_L).
bool nikulin_unique(const Lattice& l);
/// E8 splitting criterion: t+ >= 1, t- >= 8, rank >= 9 + l(A_L).
bool splits_E8(const Lattice& l);
/// U splitting criterion: t+ >= 1, t- >= 1, rank >= 3 + l(A_L).
bool splits_U(const Lattice& l);

struct TwoElementaryInvariants {
    Signature sig;
    std::size_t length = 0;
    int delta = 0; ///< 0 iff every discriminant q-value is integral
};
/// nullopt when A_L is not 2-elementary. Throws on odd lattices.
std::optional<TwoElementaryInvariants> two_elem_invariants(const Lattice& l);

} // namespace evenlat
