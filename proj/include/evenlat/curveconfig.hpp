#pragma once

#include "evenlat/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace evenlat {

/// Smooth rational curves with self-intersections and pairwise intersection
/// multiplicities.
class CurveConfig {
public:
    CurveConfig() = default;
    /// mult must be symmetric, nonnegative, with zero diagonal.
    CurveConfig(std::vector<std::string> labels, IntVec self_int, IntMat mult);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const IntVec& self_int() const { return self_; }
    const IntMat& mult() const { return mult_; }
    /// Throws PreconditionError for unknown labels.
    std::size_t index_of(const std::string& label) const;
    bool has_label(const std::string& label) const;

    /// Intersection matrix: self-intersections on the diagonal.
    IntMat gram() const;

    friend bool operator==(const CurveConfig&, const CurveConfig&) = default;

private:
    std::vector<std::string> labels_;
    IntVec self_;
    IntMat mult_;
};

/// Six (-1)-curves meeting cyclically, labelled L0..L5.
CurveConfig hexagon();

/// A permutation of the curves (0-based).
struct InvolutionAction {
    std::vector<std::size_t> perm;
    /// From 1-based images, as printed for iota.(1, ..., n).
    static InvolutionAction from_one_based(const std::vector<int>& images);
    InvolutionAction compose(const InvolutionAction& other) const; ///< this after other
};

/// Nonempty message when act is not an order <= 2 isometry of the configuration.
std::string involution_defect(const CurveConfig& c, const InvolutionAction& act);

/// How the quotient map behaves near the curves.
struct FixedPointData {
    std::size_t count = 8;
    bool avoids_curves = true;
};

struct QuotientData {
    CurveConfig config;
    std::vector<std::vector<std::size_t>> orbits; ///< by smallest member
};

/// Quotient of a configuration by a free action on the curves. Orbit images
/// are named by `names` when given, else "{a,b}". Throws PreconditionError
/// when act is not an isometry, fixes a curve, or has fixed points on the
/// curves.
QuotientData quotient_by_involution(const CurveConfig& c, const InvolutionAction& act, const FixedPointData& fixed,
                                    const std::vector<std::string>& names = {});

/// One double cover step. Curves of the configuration are never branch
/// curves; each is either disjoint from the branch locus or meets it
/// transversally in branch_points[label] points (0 or 2). Intersection points
/// between configuration curves lie off the branch locus. For a point p on
/// two split curves C, D, the parity says whether C' meets D' (0) or D'' (1)
/// over p; pairs without parity data are left open.
struct CoverStep {
    std::map<std::string, int> branch_points;
    std::map<std::pair<std::string, std::string>, std::vector<int>> sheet_parity;
};

struct PullbackResult {
    CurveConfig config;
    std::map<std::string, std::vector<std::string>> preimages;
};

/// Every configuration consistent with the step; a single entry when the
/// incidence data decides all intersections. Split curves C become C' and
/// C'', irreducible preimages become C~. Throws PreconditionError on odd or
/// unsupported branch point counts, GuardExceeded when the number of open
/// distributions exceeds max_results.
std::vector<PullbackResult> double_cover_pullback(const CurveConfig& c, const CoverStep& step,
                                                  std::size_t max_results = 4096);

/// A lattice spanned over Q by curve classes: rows of `basis` are rational
/// combinations of the curves and form a Z-basis. Curve vectors are tested
/// against the configuration Gram, so relations among curves are respected.
class CurveLattice {
public:
    CurveLattice(CurveConfig config, RatMat basis, std::vector<std::string> basis_names = {});

    const CurveConfig& config() const { return config_; }
    const RatMat& basis() const { return basis_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const IntMat& basis_gram() const { return gram_; }
    Lattice lattice() const { return Lattice(gram_); }

    /// Pairing of two curve-coordinate vectors.
    Rational pair(const RatVec& x, const RatVec& y) const;
    /// Coordinates in the basis of the class of a curve-coordinate vector;
    /// nullopt when the vector does not lie in the Q-span of the basis.
    std::optional<RatVec> coords(const RatVec& v) const;
    bool contains(const RatVec& v) const;
    /// v represents the zero class (pairs to zero with every curve).
    bool is_zero_class(const RatVec& v) const;
    /// Curve-coordinate vector of a basis-coordinate vector.
    RatVec to_curves(const RatVec& coords) const;

private:
    CurveConfig config_;
    RatMat basis_;
    std::vector<std::string> names_;
    IntMat gram_;
    RatMat gram_inv_;
};

/// A set of curves whose half-sum is known to lie in the lattice.
struct EvenRelation {
    std::string name;
    IntVec coeffs; ///< curve coordinates; coeffs / 2 lies in the lattice
};

/// Integer relation lhs = rhs between curve classes, turned into the
/// 2-divisible vector lhs + rhs. Throws PreconditionError unless lhs - rhs
/// pairs to zero with every curve.
EvenRelation relation_from_equality(const CurveLattice& l, const std::string& name, const IntVec& lhs, const IntVec& rhs);
/// Half-sum of the given curves, required to be a lattice member.
EvenRelation relation_from_member(const CurveLattice& l, const std::string& name, const IntVec& coeffs);

using CurveSet = std::uint64_t; ///< bit i set iff curve i is in the set (at most 64 curves)

CurveSet curve_set(const std::vector<std::size_t>& idx);
std::vector<std::size_t> curve_indices(CurveSet s);
std::string format_set(const CurveConfig& c, CurveSet s);
CurveSet support_mod2(const IntVec& coeffs);

struct CertificateStep {
    std::size_t relation;  ///< index into the relation list
    CurveSet after;        ///< half-set after adding the relation
};

/// A chain of moves turning the half-sum of `start` into the half-sum of
/// four pairwise disjoint curves, each move adding a known 2-divisible vector.
struct EvenFourCertificate {
    CurveSet start = 0;
    std::vector<CertificateStep> steps;
    CurveSet target = 0;
};

/// Breadth-first search of the coset start + span(relations) over GF(2) for a
/// weight-4 set of pairwise disjoint curves; the certificate uses as few
/// relations as possible. Throws PreconditionError when some relation's
/// half-sum is not in the lattice.
std::optional<EvenFourCertificate> find_even_four_certificate(const CurveLattice& l, CurveSet start,
                                                             const std::vector<EvenRelation>& relations);

/// Replays a certificate over Z: every move differs from its predecessor by a
/// lattice vector and the chain ends on half the sum of four pairwise
/// disjoint curves.
bool replay_certificate(const CurveLattice& l, const EvenFourCertificate& cert,
                        const std::vector<EvenRelation>& relations);

/// Half-set T with v - T/2 an integer combination of curves, when v (curve
/// coordinates) has only integer and half-integer entries.
std::optional<CurveSet> half_set_of(const RatVec& v);

} // namespace evenlat
