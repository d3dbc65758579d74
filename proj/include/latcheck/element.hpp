#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latcheck/germ_sum.hpp"
#include "latcheck/pl_function.hpp"
#include "latcheck/rational.hpp"

namespace latcheck {

using CoordVector = std::vector<Rational>;

/// A vector-lattice element in one of the concrete models.
using Element = std::variant<CoordVector, PLFunction, GermSum>;

enum class Model {
	coord,          ///< Q^n with the coordinatewise order
	pl,             ///< continuous piecewise-linear functions on [lo, hi]
	germ_pointwise, ///< germ-sum triples ordered as functions on [0,2]
	germ_direct,    ///< germ-sum triples ordered as the direct sum X1 (+) X2 (+) Q
};

/// One concrete lattice instance. The same element type can belong to
/// differently ordered spaces (the two germ-sum models), so every lattice
/// operation takes the space explicitly.
class Space {
public:
	static Space coord(std::size_t n);
	static Space pl(const Rational &lo, const Rational &hi);
	static Space germ_pointwise() { return Space(Model::germ_pointwise); }
	static Space germ_direct() { return Space(Model::germ_direct); }

	Model model() const { return model_; }
	std::size_t dimension() const { return dim_; }
	/// Domain of a PL space.
	const Interval &domain() const { return *domain_; }

	/// Structural membership: right alternative, dimension and domain.
	bool admits(const Element &x) const;
	Element zero() const;
	std::string name() const;

	friend bool operator==(const Space &, const Space &) = default;

private:
	explicit Space(Model m) : model_(m) {}

	Model model_;
	std::size_t dim_ = 0;
	std::optional<Interval> domain_;
};

bool is_zero(const Element &x);
std::ostream &operator<<(std::ostream &os, const Element &x);

} // namespace latcheck
