#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latcheck/element.hpp"

namespace latcheck {

enum class Status { holds, fails, unknown };

enum class Property { dp, beta, beta0, beta_plus, d_isomorphism };

std::string_view to_string(Status s);
std::string_view to_string(Property p);
/// Accepts dp, beta, beta0, beta_plus, d_isomorphism.
Property parse_property(std::string_view name);
/// Human-readable label used in text reports.
std::string_view describe(Property p);

/// Named witness elements plus the relation they violate or exhibit.
struct Witness {
	std::string relation;
	std::vector<std::pair<std::string, Element>> elements;

	const Element &at(std::string_view name) const;
};

struct SearchReport {
	std::uint64_t trials = 0;
	std::uint64_t seed = 0;
	bool exhausted_patterns = false;
};

/// Outcome of a property check. A `fails` verdict always carries a witness
/// that re-verifies by direct evaluation; a `holds` verdict names the
/// procedure that decided it; bounded searches never return `holds`.
struct Verdict {
	std::string property;
	Status status = Status::unknown;
	std::optional<Witness> witness;
	std::optional<std::string> lemma;
	SearchReport search_report;

	static Verdict holds(std::string property, std::string lemma, SearchReport report = {});
	static Verdict fails(std::string property, Witness w, SearchReport report = {});
	static Verdict unknown(std::string property, SearchReport report);
};

} // namespace latcheck
