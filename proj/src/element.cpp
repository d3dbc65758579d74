#include "latcheck/element.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace latcheck {

Space Space::coord(std::size_t n)
{
	if (n == 0)
		throw std::invalid_argument("coordinate lattice needs a positive dimension");
	Space s(Model::coord);
	s.dim_ = n;
	return s;
}

Space Space::pl(const Rational &lo, const Rational &hi)
{
	if (!(lo < hi))
		throw std::invalid_argument("PL lattice needs lo < hi");
	Space s(Model::pl);
	s.domain_ = Interval::closed(lo, hi);
	return s;
}

bool Space::admits(const Element &x) const
{
	switch (model_) {
	case Model::coord:
		return std::holds_alternative<CoordVector>(x) && std::get<CoordVector>(x).size() == dim_;
	case Model::pl:
		return std::holds_alternative<PLFunction>(x) && std::get<PLFunction>(x).domain() == *domain_;
	case Model::germ_pointwise:
	case Model::germ_direct:
		return std::holds_alternative<GermSum>(x);
	}
	return false;
}

Element Space::zero() const
{
	switch (model_) {
	case Model::coord:
		return CoordVector(dim_, Rational(0));
	case Model::pl:
		return PLFunction::zero(domain_->lo, domain_->hi);
	case Model::germ_pointwise:
	case Model::germ_direct:
		return GermSum::zero();
	}
	throw std::logic_error("unknown model");
}

std::string Space::name() const
{
	std::ostringstream os;
	switch (model_) {
	case Model::coord:
		os << "Q^" << dim_;
		break;
	case Model::pl:
		os << "PL" << *domain_;
		break;
	case Model::germ_pointwise:
		os << "germ-sum (pointwise order)";
		break;
	case Model::germ_direct:
		os << "germ-sum (direct-sum order)";
		break;
	}
	return os.str();
}

bool is_zero(const Element &x)
{
	return std::visit(
		[](const auto &v) {
			using T = std::decay_t<decltype(v)>;
			if constexpr (std::is_same_v<T, CoordVector>) {
				for (const auto &c : v)
					if (!c.is_zero())
						return false;
				return true;
			} else {
				return v.is_zero();
			}
		},
		x);
}

std::ostream &operator<<(std::ostream &os, const Element &x)
{
	std::visit(
		[&](const auto &v) {
			using T = std::decay_t<decltype(v)>;
			if constexpr (std::is_same_v<T, CoordVector>) {
				os << '(';
				for (std::size_t i = 0; i < v.size(); ++i)
					os << (i ? "," : "") << v[i];
				os << ')';
			} else {
				os << v;
			}
		},
		x);
	return os;
}

} // namespace latcheck
