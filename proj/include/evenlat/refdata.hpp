#pragma once

// Reference data for the K3 surface X (an iterated double cover of the plane):
// permutations, bases, Gram matrices, relations and expected answers. All
// curve indices are 1-based, as printed.

#include "evenlat/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace evenlat::ref {

/// iota.(1, ..., 24) for the three involutions used by the configuration.
const std::vector<int>& iota001();
const std::vector<int>& iota010();
const std::vector<int>& iota011();

/// Curves over the six (-1)-curves: group g holds R_{4g+1} .. R_{4g+4}.
constexpr int kGroups = 6;
constexpr int kCurves = 24;

/// Z-basis of S (curve indices); all but the section lie in a II* fibre.
const std::vector<int>& s_basis();
constexpr int kSection = 3;

/// Z-basis of Q as integer combinations of R_1..R_24, and its Gram matrix.
const std::vector<IntVec>& q_basis();
const IntMat& q_gram();

/// Generators of A_Q in coordinates of the Q basis, named v1, v2, w1, w2.
const std::vector<RatVec>& aq_generators();
const std::vector<long>& aq_orders();
const RatMat& aq_pairing_table();
/// Printed M_1 B^-1 for Q (6 x 6).
const RatMat& q_m1_binv();
/// Nonzero isotropic classes as exponent vectors over (v1, v2, w1, w2).
const std::vector<std::pair<std::string, std::vector<long>>>& aq_isotropic();

/// Curve relations used to exclude the isotropic classes: name, lhs, rhs.
struct CurveRelation {
    std::string name;
    std::vector<int> lhs;
    std::vector<int> rhs;
};
const std::vector<CurveRelation>& ns_relations();
/// Printed reductions to four disjoint curves for the classes of A_Q.
const std::vector<std::pair<std::string, std::vector<int>>>& aq_printed_fours();

/// Change of basis of A_{NS(X)} (rows over v1, v2, w1, w2) and the form it gives.
const std::vector<std::vector<long>>& tx_basis_change();
const RatMat& tx_block_form();

/// Candidate transcendental lattices.
const std::vector<std::string>& tx_candidate();       ///< U + U(2) + <-4>^2
const std::vector<std::string>& txprime_candidate();  ///< U(2)^2 + <-4>^2

/// Primitive embedding data: ambient parts, generator rows, expected Gram.
struct EmbeddingCase {
    std::string name;
    std::vector<std::string> ambient;
    IntMat gens;
    IntMat gram;
};
const EmbeddingCase& km_embedding();
const EmbeddingCase& u2_m8_embedding();

// Curves on the quotient surface: C1..C12 then N1..N8 (0-based 0..19).
const std::vector<std::vector<int>>& xprime_orbits(); ///< {R_a, R_b} per C_i
const std::vector<std::string>& xprime_labels();
/// Half-sum generators as coefficient vectors on C1..C12, N1..N8.
const IntVec& nikulin_sum();  ///< N1 + ... + N8
const IntVec& lambda1_sum();
const IntVec& lambda2_sum();
/// Basis of M: names and rational curve coordinates.
const std::vector<std::string>& m_basis_names();
const RatMat& m_basis();
/// Printed expressions of the omitted curves in the M basis: curve label and
/// coordinates over m_basis_names().
const std::vector<std::pair<std::string, IntVec>>& m_omitted_curves();
/// Last six rows of the printed M_1 B^-1: v1..v4, w1, w2 in M-basis coordinates.
const RatMat& m_generators();
const std::vector<long>& am_orders();
/// Basis {v1, v2, v4 + 2w2, v3 + v4, w1, w2} as exponent rows and the printed form.
const std::vector<std::vector<long>>& m_basis_change();
const RatMat& m_block_form();
/// Relations among the C curves, as printed (label lists on C1..C12).
const std::vector<CurveRelation>& xprime_relations();
/// Printed isotropic half-sums (curve labels).
const std::vector<std::vector<std::string>>& xprime_printed_isotropic();
/// The worked reduction: start set and the four disjoint curves it reaches.
const std::vector<std::string>& worked_example_start();
const std::vector<std::string>& worked_example_end();

/// Witnesses used by the z23 obstruction check.
const std::vector<std::string>& omega23_perp();  ///< U(2)^3 + <-4>^2
const std::vector<std::string>& mz23_perp();     ///< <2>^2 + U(2) + <-2>^4
const RatVec& square_two_vector();               ///< in the T_X candidate

} // namespace evenlat::ref
