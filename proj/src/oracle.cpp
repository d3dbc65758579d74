#include "latcheck/oracle.hpp"

#include <optional>
#include <random>
#include <utility>

#include "latcheck/decide.hpp"
#include "latcheck/feasibility.hpp"

namespace latcheck {

namespace {

using Pattern = std::vector<unsigned char>;
using Pair = std::pair<CoordVector, CoordVector>;

CoordVector row_of(const MatrixOperator &t, std::size_t r)
{
	CoordVector v;
	for (std::size_t c = 0; c < t.cols(); ++c)
		v.push_back(t.at(r, c));
	return v;
}

std::vector<std::size_t> columns_with(const Pattern &p, std::initializer_list<unsigned char> labels)
{
	std::vector<std::size_t> s;
	for (std::size_t i = 0; i < p.size(); ++i)
		for (auto l : labels)
			if (p[i] == l)
				s.push_back(i);
	return s;
}

// Runs `check(pattern, row)` over every labelling of the columns with
// labels 0..radix-1 (or a random sample of them) and every row.
template <typename Check>
Verdict enumerate(const MatrixOperator &t, const OracleBudget &budget, unsigned radix, const std::string &prop,
                  Check check, auto make_witness)
{
	std::vector<CoordVector> rows;
	for (std::size_t r = 0; r < t.rows(); ++r)
		rows.push_back(row_of(t, r));
	const std::size_t n = t.cols();
	SearchReport report;
	report.seed = budget.seed;

	auto visit = [&](const Pattern &p) -> std::optional<Verdict> {
		for (const auto &row : rows) {
			++report.trials;
			if (auto w = check(p, row))
				return Verdict::fails(prop, make_witness(std::move(w->first), std::move(w->second)), report);
		}
		return std::nullopt;
	};

	if (n <= budget.exhaustive_max_cols) {
		Pattern p(n, 0);
		while (true) {
			if (auto v = visit(p))
				return *v;
			std::size_t i = 0;
			while (i < n && p[i] == radix - 1)
				p[i++] = 0;
			if (i == n)
				break;
			++p[i];
		}
		report.exhausted_patterns = true;
		return Verdict::holds(prop, "support-pattern exhaustion", report);
	}

	std::mt19937_64 rng(budget.seed);
	Pattern p(n);
	for (std::uint64_t s = 0; s < budget.samples; ++s) {
		for (auto &x : p)
			x = static_cast<unsigned char>(rng() % radix);
		if (auto v = visit(p))
			return *v;
	}
	return Verdict::unknown(prop, report);
}

} // namespace

Verdict oracle_dp(const MatrixOperator &t, const OracleBudget &budget)
{
	// Labels: 1 -> S1, 2 -> S2.
	auto check = [](const Pattern &p, const CoordVector &row) -> std::optional<Pair> {
		auto s1 = columns_with(p, {1});
		auto s2 = columns_with(p, {2});
		if (s1.empty() || s2.empty())
			return std::nullopt;
		auto x = nonzero_on_support(row, s1);
		auto y = x ? nonzero_on_support(row, s2) : std::nullopt;
		if (!x || !y)
			return std::nullopt;
		return Pair{std::move(*x), std::move(*y)};
	};
	return enumerate(t, budget, 3, "dp", check,
	                 [&](CoordVector x, CoordVector y) { return dp_witness(t, std::move(x), std::move(y)); });
}

Verdict oracle_beta(const MatrixOperator &t, const OracleBudget &budget)
{
	// Labels: 1 -> Sa (and Sb), 2 -> Sb only.
	auto check = [](const Pattern &p, const CoordVector &row) -> std::optional<Pair> {
		auto sa = columns_with(p, {1});
		if (sa.empty())
			return std::nullopt;
		std::optional<std::size_t> hit;
		for (auto i : sa)
			if (!row[i].is_zero()) {
				hit = i;
				break;
			}
		if (!hit)
			return std::nullopt;
		auto b = zero_on_support(row, columns_with(p, {1, 2}));
		if (!b)
			return std::nullopt;
		return Pair{unit_vector(row.size(), *hit), std::move(*b)};
	};
	return enumerate(t, budget, 3, "beta", check, [&](CoordVector a, CoordVector b) {
		return width_witness(t, Property::beta, std::move(a), std::move(b));
	});
}

Verdict oracle_beta_plus(const MatrixOperator &t, const OracleBudget &budget)
{
	auto check = [](const Pattern &p, const CoordVector &row) -> std::optional<Pair> {
		auto sa = columns_with(p, {1});
		std::optional<std::size_t> hit;
		for (auto i : sa)
			if (!row[i].is_zero()) {
				hit = i;
				break;
			}
		if (!hit)
			return std::nullopt;
		auto b = positive_zero_on_support(row, columns_with(p, {1, 2}));
		if (!b)
			return std::nullopt;
		return Pair{unit_vector(row.size(), *hit), std::move(*b)};
	};
	return enumerate(t, budget, 3, "beta_plus", check, [&](CoordVector a, CoordVector b) {
		return width_witness(t, Property::beta_plus, std::move(a), std::move(b));
	});
}

Verdict oracle_beta0(const MatrixOperator &t, const OracleBudget &budget)
{
	auto check = [](const Pattern &p, const CoordVector &row) -> std::optional<Pair> {
		auto s = columns_with(p, {1});
		if (s.empty())
			return std::nullopt;
		auto a = nonzero_on_support(row, s);
		auto b = a ? zero_on_support(row, s) : std::nullopt;
		if (!a || !b)
			return std::nullopt;
		return Pair{std::move(*a), std::move(*b)};
	};
	return enumerate(t, budget, 2, "beta0", check, [&](CoordVector a, CoordVector b) {
		return width_witness(t, Property::beta0, std::move(a), std::move(b));
	});
}

} // namespace latcheck
