#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/matrix.hpp"

namespace spantree {

using BigInt = boost::multiprecision::cpp_int;
using ExactMatrix = Matrix<BigInt>;
using IntVector = std::vector<BigInt>;

/// a / b; throws ExactnessError when b does not divide a, and
/// std::domain_error when b is zero.
BigInt exact_divide(const BigInt& a, const BigInt& b);

/// L(i,i) = deg(v_i), L(i,j) = -1 on edges, 0 otherwise, rows in vertex order.
ExactMatrix laplacian(const Graph& g);

/// Laplacian with row/column k corresponding to vertex order[k].
ExactMatrix laplacian(const Graph& g, const std::vector<Vertex>& order);

ExactMatrix rank_one_update(const ExactMatrix& m, const IntVector& a, const IntVector& b);

/// Exact determinant by fraction-free elimination. The 0x0 determinant is 1.
BigInt determinant(const ExactMatrix& m);

/// Determinant of m with (0-based) row `row` and column `col` deleted. The
/// caller applies the cofactor sign.
BigInt minor_determinant(const ExactMatrix& m, std::size_t row, std::size_t col);

bool is_upper_triangular(const ExactMatrix& m);

BigInt sum(const IntVector& v);

IntVector indicator(const std::vector<Vertex>& order, const VertexSet& s);

} // namespace spantree
