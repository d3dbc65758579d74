#include "latcheck/verdict.hpp"

#include <stdexcept>

namespace latcheck {

std::string_view to_string(Status s)
{
	switch (s) {
	case Status::holds:
		return "holds";
	case Status::fails:
		return "fails";
	case Status::unknown:
		return "unknown";
	}
	return "unknown";
}

std::string_view to_string(Property p)
{
	switch (p) {
	case Property::dp:
		return "dp";
	case Property::beta:
		return "beta";
	case Property::beta0:
		return "beta0";
	case Property::beta_plus:
		return "beta_plus";
	case Property::d_isomorphism:
		return "d_isomorphism";
	}
	return "?";
}

Property parse_property(std::string_view name)
{
	for (auto p : {Property::dp, Property::beta, Property::beta0, Property::beta_plus, Property::d_isomorphism})
		if (to_string(p) == name)
			return p;
	throw std::invalid_argument("unknown property \"" + std::string(name) + "\"");
}

std::string_view describe(Property p)
{
	switch (p) {
	case Property::dp:
		return "disjointness preserving";
	case Property::beta:
		return "(β): a ⊲ b ⇒ Ta ⊲ Tb";
	case Property::beta0:
		return "(β₀): same width ⇒ same width";
	case Property::beta_plus:
		return "(β₊): (β) on positive elements";
	case Property::d_isomorphism:
		return "d-isomorphism: bijective, T and T⁻¹ disjointness preserving";
	}
	return "?";
}

const Element &Witness::at(std::string_view name) const
{
	for (const auto &[n, e] : elements)
		if (n == name)
			return e;
	throw std::out_of_range("witness has no element \"" + std::string(name) + "\"");
}

Verdict Verdict::holds(std::string property, std::string lemma, SearchReport report)
{
	Verdict v;
	v.property = std::move(property);
	v.status = Status::holds;
	v.lemma = std::move(lemma);
	v.search_report = report;
	return v;
}

Verdict Verdict::fails(std::string property, Witness w, SearchReport report)
{
	Verdict v;
	v.property = std::move(property);
	v.status = Status::fails;
	v.witness = std::move(w);
	v.search_report = report;
	return v;
}

Verdict Verdict::unknown(std::string property, SearchReport report)
{
	Verdict v;
	v.property = std::move(property);
	v.status = Status::unknown;
	v.search_report = report;
	return v;
}

} // namespace latcheck
