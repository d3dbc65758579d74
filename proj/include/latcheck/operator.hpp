#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "latcheck/element.hpp"
#include "latcheck/verdict.hpp"

namespace latcheck {

/// Dense rational matrix acting between coordinate lattices Q^cols -> Q^rows.
class MatrixOperator {
public:
	MatrixOperator(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);
	static MatrixOperator from_rows(const std::vector<std::vector<Rational>> &rows);
	static MatrixOperator identity(std::size_t n);
	static MatrixOperator zero(std::size_t rows, std::size_t cols);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	const Rational &at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

	CoordVector apply(const CoordVector &x) const;
	CoordVector column(std::size_t c) const;

	friend MatrixOperator operator*(const MatrixOperator &a, const MatrixOperator &b);
	friend bool operator==(const MatrixOperator &, const MatrixOperator &) = default;

private:
	std::size_t rows_, cols_;
	std::vector<Rational> a_;
};

class SingularMatrix : public std::domain_error {
public:
	SingularMatrix(std::size_t rank, std::size_t n);
	std::size_t rank() const { return rank_; }

private:
	std::size_t rank_;
};

std::size_t rank(const MatrixOperator &t);

/// Exact inverse by fraction-free (Bareiss) elimination followed by
/// rational back substitution. Throws SingularMatrix (carrying the rank)
/// when t is singular, std::invalid_argument when it is not square.
MatrixOperator invert(const MatrixOperator &t);

/// Basis of the null space from the reduced row echelon form: one vector
/// per free column, with a 1 in that column.
std::vector<CoordVector> kernel_basis(const MatrixOperator &t);

/// Rows of t listed in `keep`, in that order.
MatrixOperator select_rows(const MatrixOperator &t, const std::vector<std::size_t> &keep);

/// Finite-rank operator Q^k -> PL[lo,hi], a -> sum a_i * columns[i].
struct PLRankOperator {
	std::vector<PLFunction> columns;

	explicit PLRankOperator(std::vector<PLFunction> columns);
	PLFunction apply(const CoordVector &a) const;
	std::size_t rank_dimension() const { return columns.size(); }
	/// Linear independence of the columns (exact, on the merged grid).
	bool columns_independent() const;
};

/// The map x1 + x2 + lambda*1 -> (x1, x2, lambda) from the germ-sum lattice
/// with its pointwise order to the same triples with the direct-sum order.
/// `resolution` is the point p < 1 used by the search generators for the
/// neighbourhood of the cut.
struct GermSumOperator {
	Rational resolution{3, 4};

	GermSum apply(const GermSum &x) const { return x; }
};

using Operator = std::variant<MatrixOperator, PLRankOperator, GermSumOperator>;

Space domain_space(const Operator &op);
Space codomain_space(const Operator &op);
Element evaluate(const Operator &op, const Element &x);
std::string_view kind_name(const Operator &op);

/// Fold operator on the symmetric grid {-n..-1, 1..n} (columns in that
/// order): (Tx)(t) = 0 for t < 0 and x(t) + x(-t) for t > 0.
MatrixOperator fold_operator(std::size_t n);

struct GalleryParams {
	std::size_t n = 2;
	Rational resolution{3, 4};
};

/// A property the source construction asserts about its operator.
struct Claim {
	Property property;
	Status expected;
	std::string source;
};

struct GalleryInstance {
	std::string name;
	Operator op;
	std::vector<Claim> claims;
};

/// Known names: "ex2.5", "ex2.6", "ex4.4".
GalleryInstance gallery(std::string_view name, const GalleryParams &params = {});

} // namespace latcheck
