#include "latcheck/operator.hpp"

#include <algorithm>
#include <utility>

namespace latcheck {

MatrixOperator::MatrixOperator(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
: rows_(rows), cols_(cols), a_(std::move(row_major))
{
	if (rows == 0 || cols == 0)
		throw std::invalid_argument("matrix operator needs positive dimensions");
	if (a_.size() != rows * cols)
		throw std::invalid_argument("matrix entry count does not match its shape");
}

MatrixOperator MatrixOperator::from_rows(const std::vector<std::vector<Rational>> &rows)
{
	if (rows.empty() || rows[0].empty())
		throw std::invalid_argument("matrix operator needs positive dimensions");
	std::vector<Rational> flat;
	for (const auto &r : rows) {
		if (r.size() != rows[0].size())
			throw std::invalid_argument("ragged matrix rows");
		flat.insert(flat.end(), r.begin(), r.end());
	}
	return MatrixOperator(rows.size(), rows[0].size(), std::move(flat));
}

MatrixOperator MatrixOperator::identity(std::size_t n)
{
	std::vector<Rational> a(n * n, Rational(0));
	for (std::size_t i = 0; i < n; ++i)
		a[i * n + i] = 1;
	return MatrixOperator(n, n, std::move(a));
}

MatrixOperator MatrixOperator::zero(std::size_t rows, std::size_t cols)
{
	return MatrixOperator(rows, cols, std::vector<Rational>(rows * cols, Rational(0)));
}

CoordVector MatrixOperator::apply(const CoordVector &x) const
{
	if (x.size() != cols_)
		throw std::invalid_argument("vector length does not match the operator's domain");
	CoordVector y(rows_, Rational(0));
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (!at(r, c).is_zero() && !x[c].is_zero())
				y[r] += at(r, c) * x[c];
	return y;
}

CoordVector MatrixOperator::column(std::size_t c) const
{
	CoordVector v;
	v.reserve(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v.push_back(at(r, c));
	return v;
}

MatrixOperator operator*(const MatrixOperator &a, const MatrixOperator &b)
{
	if (a.cols_ != b.rows_)
		throw std::invalid_argument("matrix product shape mismatch");
	std::vector<Rational> out(a.rows_ * b.cols_, Rational(0));
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k) {
			if (a.at(i, k).is_zero())
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				out[i * b.cols_ + j] += a.at(i, k) * b.at(k, j);
		}
	return MatrixOperator(a.rows_, b.cols_, std::move(out));
}

SingularMatrix::SingularMatrix(std::size_t rank, std::size_t n)
: std::domain_error("singular matrix: rank " + std::to_string(rank) + " < " + std::to_string(n)), rank_(rank)
{
}

namespace {

struct Echelon {
	std::vector<std::vector<Rational>> m; // reduced row echelon form
	std::vector<std::size_t> pivots;      // pivot column of each nonzero row
};

Echelon rref(const MatrixOperator &t)
{
	Echelon e;
	e.m.assign(t.rows(), {});
	for (std::size_t r = 0; r < t.rows(); ++r)
		for (std::size_t c = 0; c < t.cols(); ++c)
			e.m[r].push_back(t.at(r, c));
	std::size_t row = 0;
	for (std::size_t col = 0; col < t.cols() && row < t.rows(); ++col) {
		std::size_t p = row;
		while (p < t.rows() && e.m[p][col].is_zero())
			++p;
		if (p == t.rows())
			continue;
		std::swap(e.m[p], e.m[row]);
		Rational inv = e.m[row][col].inverse();
		for (auto &v : e.m[row])
			v *= inv;
		for (std::size_t r = 0; r < t.rows(); ++r) {
			if (r == row || e.m[r][col].is_zero())
				continue;
			Rational f = e.m[r][col];
			for (std::size_t c = col; c < t.cols(); ++c)
				e.m[r][c] -= f * e.m[row][c];
		}
		e.pivots.push_back(col);
		++row;
	}
	return e;
}

mpz_class row_denominator_lcm(const MatrixOperator &t, std::size_t r)
{
	mpz_class l = 1;
	for (std::size_t c = 0; c < t.cols(); ++c)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.at(r, c).den().get_mpz_t());
	return l;
}

} // namespace

std::size_t rank(const MatrixOperator &t)
{
	return rref(t).pivots.size();
}

MatrixOperator invert(const MatrixOperator &t)
{
	const std::size_t n = t.rows();
	if (t.cols() != n)
		throw std::invalid_argument("only square matrices can be inverted");

	// Integer augmented matrix [s_r * A | s_r * I], s_r clearing row r's denominators.
	std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(2 * n));
	for (std::size_t r = 0; r < n; ++r) {
		mpz_class s = row_denominator_lcm(t, r);
		for (std::size_t c = 0; c < n; ++c) {
			mpq_class v = t.at(r, c).raw() * s;
			m[r][c] = v.get_num();
		}
		m[r][n + r] = s;
	}

	mpz_class prev = 1;
	for (std::size_t k = 0; k < n; ++k) {
		std::size_t p = k;
		while (p < n && m[p][k] == 0)
			++p;
		if (p == n)
			throw SingularMatrix(rank(t), n);
		std::swap(m[p], m[k]);
		for (std::size_t i = k + 1; i < n; ++i) {
			for (std::size_t j = k + 1; j < 2 * n; ++j) {
				mpz_class v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
				mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
			}
			m[i][k] = 0;
		}
		prev = m[k][k];
	}

	// Back substitution on the upper-triangular system.
	std::vector<Rational> inv(n * n, Rational(0));
	for (std::size_t col = 0; col < n; ++col) {
		for (std::size_t ii = n; ii-- > 0;) {
			mpq_class acc(m[ii][n + col]);
			for (std::size_t j = ii + 1; j < n; ++j)
				acc -= mpq_class(m[ii][j]) * inv[j * n + col].raw();
			acc /= mpq_class(m[ii][ii]);
			inv[ii * n + col] = Rational(acc);
		}
	}
	return MatrixOperator(n, n, std::move(inv));
}

std::vector<CoordVector> kernel_basis(const MatrixOperator &t)
{
	auto e = rref(t);
	std::vector<char> is_pivot(t.cols(), 0);
	for (auto p : e.pivots)
		is_pivot[p] = 1;
	std::vector<CoordVector> basis;
	for (std::size_t f = 0; f < t.cols(); ++f) {
		if (is_pivot[f])
			continue;
		CoordVector v(t.cols(), Rational(0));
		v[f] = 1;
		for (std::size_t r = 0; r < e.pivots.size(); ++r)
			v[e.pivots[r]] = -e.m[r][f];
		basis.push_back(std::move(v));
	}
	return basis;
}

MatrixOperator select_rows(const MatrixOperator &t, const std::vector<std::size_t> &keep)
{
	std::vector<Rational> a;
	for (auto r : keep)
		for (std::size_t c = 0; c < t.cols(); ++c)
			a.push_back(t.at(r, c));
	return MatrixOperator(keep.size(), t.cols(), std::move(a));
}

PLRankOperator::PLRankOperator(std::vector<PLFunction> cols) : columns(std::move(cols))
{
	if (columns.empty())
		throw std::invalid_argument("PL-rank operator needs at least one column");
	for (const auto &c : columns)
		if (!c.same_domain(columns[0]))
			throw std::invalid_argument("PL-rank operator columns live on different domains");
}

PLFunction PLRankOperator::apply(const CoordVector &a) const
{
	if (a.size() != columns.size())
		throw std::invalid_argument("coefficient count does not match the operator's columns");
	PLFunction out = PLFunction::zero(columns[0].lo(), columns[0].hi());
	for (std::size_t i = 0; i < a.size(); ++i)
		if (!a[i].is_zero())
			out = out + a[i] * columns[i];
	return out;
}

bool PLRankOperator::columns_independent() const
{
	std::vector<Rational> grid = columns[0].breakpoints();
	for (const auto &c : columns) {
		std::vector<Rational> merged;
		std::set_union(grid.begin(), grid.end(), c.breakpoints().begin(), c.breakpoints().end(),
		               std::back_inserter(merged));
		grid = std::move(merged);
	}
	std::vector<Rational> a;
	for (const auto &t : grid)
		for (const auto &c : columns)
			a.push_back(c(t));
	return rank(MatrixOperator(grid.size(), columns.size(), std::move(a))) == columns.size();
}

Space domain_space(const Operator &op)
{
	return std::visit(
		[](const auto &t) -> Space {
			using T = std::decay_t<decltype(t)>;
			if constexpr (std::is_same_v<T, MatrixOperator>)
				return Space::coord(t.cols());
			else if constexpr (std::is_same_v<T, PLRankOperator>)
				return Space::coord(t.columns.size());
			else
				return Space::germ_pointwise();
		},
		op);
}

Space codomain_space(const Operator &op)
{
	return std::visit(
		[](const auto &t) -> Space {
			using T = std::decay_t<decltype(t)>;
			if constexpr (std::is_same_v<T, MatrixOperator>)
				return Space::coord(t.rows());
			else if constexpr (std::is_same_v<T, PLRankOperator>)
				return Space::pl(t.columns[0].lo(), t.columns[0].hi());
			else
				return Space::germ_direct();
		},
		op);
}

Element evaluate(const Operator &op, const Element &x)
{
	if (!domain_space(op).admits(x))
		throw std::invalid_argument("element is not in the operator's domain");
	return std::visit(
		[&](const auto &t) -> Element {
			using T = std::decay_t<decltype(t)>;
			if constexpr (std::is_same_v<T, GermSumOperator>)
				return t.apply(std::get<GermSum>(x));
			else
				return t.apply(std::get<CoordVector>(x));
		},
		op);
}

std::string_view kind_name(const Operator &op)
{
	switch (op.index()) {
	case 0:
		return "matrix";
	case 1:
		return "pl_rank";
	default:
		return "germ_sum";
	}
}

MatrixOperator fold_operator(std::size_t n)
{
	if (n == 0)
		throw std::invalid_argument("fold grid size must be positive");
	// Column c < n is t = -(n - c); column c >= n is t = c - n + 1.
	const std::size_t d = 2 * n;
	std::vector<Rational> a(d * d, Rational(0));
	for (std::size_t j = 1; j <= n; ++j) {
		std::size_t pos = n + j - 1;
		std::size_t neg = n - j;
		a[pos * d + pos] = 1;
		a[pos * d + neg] = 1;
	}
	return MatrixOperator(d, d, std::move(a));
}

GalleryInstance gallery(std::string_view name, const GalleryParams &params)
{
	if (name == "ex2.5") {
		PLRankOperator t({PLFunction::constant(0, 1, 1), PLFunction::identity(0, 1)});
		return {"ex2.5", t,
		        {{Property::beta, Status::holds, "every nonzero image has full support"},
		         {Property::dp, Status::fails, "the construction is not disjointness preserving"}}};
	}
	if (name == "ex2.6") {
		if (!(Rational(0) < params.resolution && params.resolution < Rational(1)))
			throw std::invalid_argument("ex2.6 resolution must lie in (0,1)");
		return {"ex2.6", GermSumOperator{params.resolution},
		        {{Property::beta, Status::fails, "T(1) = (0, 0, 1)"},
		         {Property::dp, Status::holds, "claimed: x' ⊥ x'' only when both scalars vanish"}}};
	}
	if (name == "ex4.4") {
		return {"ex4.4", fold_operator(params.n),
		        {{Property::beta_plus, Status::holds, "(β) restricted to positive elements holds"},
		         {Property::beta, Status::fails, "the odd function e lies in the kernel, |e| does not"}}};
	}
	throw std::invalid_argument("unknown gallery entry \"" + std::string(name) + "\"");
}

} // namespace latcheck
