#pragma once

#include "evenlat/curveconfig.hpp"

#include <array>
#include <vector>

namespace evenlat {

struct ReconstructOptions {
    /// 1: involutions, groups of four, hexagon degrees, II* fibre plus
    ///    section on the S curves. 2: additionally the Q Gram matrix.
    /// The search escalates to tier 2 only when tier 1 is not unique.
    int max_tier = 2;
    /// Entries are searched up to this bound; solutions using the largest
    /// value when it exceeds 2 are counted as anomalies, not solutions.
    int max_mult = 3;
};

struct Reconstruction24 {
    int tier = 0;                         ///< tier whose census is reported
    long tier1_count = 0;                 ///< Gram matrices meeting tier 1
    long tier1_classes = 0;               ///< up to the residual symmetry
    long tier2_count = -1;                ///< -1 when tier 2 was not needed
    long anomalies = 0;                   ///< solutions needing multiplicity >= 3
    std::size_t residual_symmetry_tier1 = 1;
    std::size_t residual_symmetry_tier2 = 1;
    std::vector<CurveConfig> solutions;   ///< census at the reported tier
    std::vector<std::array<int, 6>> hexagons; ///< cyclic group order per solution
};

/// Labels R1..R24.
std::vector<std::string> r_labels();

/// Exhaustive search for the 24-curve configuration.
Reconstruction24 reconstruct_24(const ReconstructOptions& opt = {});

/// Reasons a 24-curve configuration violates the tier 1 constraints
/// (empty when it satisfies them). Used to validate supplied configurations.
std::vector<std::string> tier1_defects(const CurveConfig& c);

/// Gram-level identities lhs = rhs tested against every curve.
bool is_curve_identity(const CurveConfig& c, const std::vector<int>& lhs, const std::vector<int>& rhs);

/// C1..C12 from the quotient by iota_011 and eight exceptional curves
/// N1..N8: pairwise disjoint (-2)-curves that miss every C (the fixed points
/// of the involution avoid the 24 curves).
CurveConfig reconstruct_xprime(const CurveConfig& base24);

/// Number of incidence vectors x in {0,1,2}^12 (one N against C1..C12) that
/// are compatible with the printed relations among the C curves, i.e. pair
/// to zero with every relation vector. Reported next to the chosen
/// incidences.
long xprime_incidence_census(const CurveConfig& xprime);

} // namespace evenlat
