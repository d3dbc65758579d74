#pragma once

#include <cstdint>

#include "latcheck/operator.hpp"
#include "latcheck/verdict.hpp"

namespace latcheck {

struct SearchBudget {
	/// Random trials after the structured pass.
	std::uint64_t trials = 10000;
	std::uint64_t seed = 0;
};

/// Semi-decision for any operator: a structured pass over hand-picked
/// elements (unit vectors, balanced cancellations, bumps, components,
/// germ tails near the cut) followed by `budget.trials` seeded random
/// pairs. A witness is returned only after verify_certificate accepts it;
/// otherwise the verdict is `unknown`, never `holds`.
Verdict refute_search(const Operator &op, Property p, const SearchBudget &budget = {});

} // namespace latcheck
