#pragma once

#include <cstddef>
#include <cstdint>

#include "latcheck/operator.hpp"
#include "latcheck/verdict.hpp"

namespace latcheck {

/// Budget for the support-pattern oracles: exhaustive up to
/// `exhaustive_max_cols` domain coordinates, `samples` random pattern pairs
/// beyond that.
struct OracleBudget {
	std::size_t exhaustive_max_cols = 8;
	std::uint64_t samples = 10000;
	std::uint64_t seed = 0;
};

// Ground truth for the matrix deciders that never uses their row/column
// characterizations. A violation of each property is witnessed by a single
// codomain row r and a pair of support patterns, and each half of the pair
// is a one-equation feasibility question:
//   DP:  S1 ∩ S2 = ∅, ∃x supp S1 with (Tx)_r ≠ 0, ∃y supp S2 with (Ty)_r ≠ 0
//   β:   Sa ⊆ Sb,     ∃a supp ⊆ Sa with (Ta)_r ≠ 0, ∃b supp = Sb with (Tb)_r = 0
//   β₊:  as β with a ≥ 0 and b > 0 on Sb
//   β₀:  Sa = Sb = S
// Exhausting the patterns yields holds; a sampled run without a witness
// yields unknown.
Verdict oracle_dp(const MatrixOperator &t, const OracleBudget &budget = {});
Verdict oracle_beta(const MatrixOperator &t, const OracleBudget &budget = {});
Verdict oracle_beta_plus(const MatrixOperator &t, const OracleBudget &budget = {});
Verdict oracle_beta0(const MatrixOperator &t, const OracleBudget &budget = {});

} // namespace latcheck
