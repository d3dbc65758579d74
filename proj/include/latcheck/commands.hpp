#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcheck/operator.hpp"
#include "latcheck/search.hpp"
#include "latcheck/verdict.hpp"

namespace latcheck {

// Exit codes shared by every command.
inline constexpr int exit_decisive = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_unknown = 2;
inline constexpr int exit_violation = 3;

enum class Format { text, json };

struct CommandResult {
	int exit_code = exit_decisive;
	std::string output;
};

/// LATCHECK_DEFAULT_BUDGET when set to a non-negative integer, else 10000.
/// Throws std::invalid_argument for a malformed value.
std::uint64_t default_budget();

/// Runs one property on any operator: the exact procedure where one exists
/// (matrices; PL-rank with k <= 2), refute_search otherwise. Every `fails`
/// verdict is re-verified before it is returned.
Verdict run_property(const Operator &op, Property p, const SearchBudget &budget);

struct CheckConfig {
	std::string source;    ///< file name for diagnostics
	std::string text;      ///< operator spec JSON
	std::vector<Property> properties;
	std::uint64_t seed = 0;
	std::optional<std::uint64_t> budget;
	Format format = Format::text;
};

struct GalleryConfig {
	std::string name;
	GalleryParams params;
	std::uint64_t seed = 0;
	std::optional<std::uint64_t> budget;
	Format format = Format::text;
};

struct FuzzConfig {
	std::string theorem;               ///< a theorem name or "all"
	std::optional<std::string> corpus; ///< named corpus; random invertible matrices when unset
	std::size_t trials = 1000;         ///< random matrices when no corpus is given
	std::size_t max_n = 6;
	std::size_t samples = 100;         ///< sampled elements per instance
	std::uint64_t seed = 0;
	Format format = Format::text;
};

struct AuditConfig {
	std::string corpus = "exhaustive";
	Format format = Format::text;
};

CommandResult cmd_check(const CheckConfig &cfg);
CommandResult cmd_gallery(const GalleryConfig &cfg);
CommandResult cmd_fuzz(const FuzzConfig &cfg);
CommandResult cmd_oracle_audit(const AuditConfig &cfg);

} // namespace latcheck
