#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcheck/operator.hpp"

namespace latcheck {

/// Named matrix corpora:
///   ternary3x3  every matrix with entries in {-1,0,1}, all shapes 1x1..3x3
///   quinary2x2  every 2x2 matrix with entries in {-2..2}
///   exhaustive  both of the above
std::vector<MatrixOperator> corpus(std::string_view name);

/// `count` seeded invertible rational matrices of size 1..max_n: a mix of
/// monomial matrices, perturbed monomial matrices and dense matrices.
std::vector<MatrixOperator> random_invertible(std::size_t count, std::size_t max_n, std::uint64_t seed);

struct TheoremReport {
	std::string theorem;
	std::uint64_t seed = 0;
	std::size_t instances = 0;  ///< corpus matrices examined
	std::size_t applicable = 0; ///< instances meeting the hypothesis
	std::size_t checks = 0;     ///< individual implications evaluated
	std::size_t violations = 0;
	std::optional<MatrixOperator> counterexample;
	std::string detail;
};

/// Known names: cor2.3, kernel_ideal, thm2.4, thm2.7, thm3.2, prop3.3,
/// thm3.4, prop3.6, thm4.2, beta_implies_beta0, beta_implies_beta_plus.
const std::vector<std::string> &theorem_names();

/// Evaluates both sides of the named statement on every matrix with
/// independent procedures. `samples` bounds the random elements drawn per
/// instance by the sampled statements. Throws std::invalid_argument for an
/// unknown name.
TheoremReport check_theorem(std::string_view name, const std::vector<MatrixOperator> &matrices,
                            std::uint64_t seed, std::size_t samples = 100);

struct AuditReport {
	std::size_t instances = 0;
	std::size_t comparisons = 0;
	std::size_t disagreements = 0;
	std::optional<MatrixOperator> first_disagreement;
	std::string detail;
};

/// Runs every matrix decider against its support-pattern oracle and checks
/// that every `fails` certificate from either side re-verifies.
AuditReport oracle_audit(const std::vector<MatrixOperator> &matrices);

} // namespace latcheck
