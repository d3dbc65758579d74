#pragma once

#include <optional>
#include <utility>

#include "latcheck/operator.hpp"
#include "latcheck/verdict.hpp"

namespace latcheck {

// Exact decision procedures. Matrix operators act between coordinate
// lattices, where:
//   DP     <=> the columns have pairwise disjoint supports,
//   (β)    <=> every row has at most one nonzero entry,
//   (β₊)   <=> no row mixes strictly positive and strictly negative entries.
// These characterizations are checked against the support-pattern oracles
// in oracle.hpp. (β₀) is decided by its own support-pattern analysis.

Verdict decide_dp_matrix(const MatrixOperator &t);
Verdict decide_beta_matrix(const MatrixOperator &t);
Verdict decide_beta_plus_matrix(const MatrixOperator &t);
Verdict decide_beta0_matrix(const MatrixOperator &t);

/// Bijective, DP, and with a DP inverse.
Verdict decide_d_isomorphism_matrix(const MatrixOperator &t);

/// DP for Q^k -> PL: pairwise disjoint columns (any k).
Verdict decide_dp_pl_rank(const PLRankOperator &t);

// (β), (β₀), (β₊) for Q^k -> PL with k <= 2 and independent columns. On
// every segment of the merged breakpoint grid the coefficient vectors whose
// image vanishes identically form a subspace; width relations between
// images only depend on which segments an image vanishes on, so finitely
// many coefficient directions (the unit vectors, one direction per
// proportional segment, one generic direction of each sign) decide the
// property. Throws std::invalid_argument for k > 2 or dependent columns.
Verdict decide_beta_pl_rank(const PLRankOperator &t);
Verdict decide_beta0_pl_rank(const PLRankOperator &t);
Verdict decide_beta_plus_pl_rank(const PLRankOperator &t);

/// Nonzero coefficient vectors a, b with Ta ⊥ Tb, if any (k <= 2).
std::optional<std::pair<CoordVector, CoordVector>> image_disjoint_pair(const PLRankOperator &t);

/// Re-checks a `fails` certificate by direct evaluation.
bool verify_certificate(const Operator &op, Property p, const Witness &w);

/// Witness builders shared by the deciders and the searches; they set the
/// image entries by applying the operator.
Witness dp_witness(const Operator &op, Element x, Element y);
Witness width_witness(const Operator &op, Property p, Element a, Element b);

} // namespace latcheck
