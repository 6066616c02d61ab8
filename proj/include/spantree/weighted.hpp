#pragma once

#include <vector>

#include "spantree/graph.hpp"
#include "spantree/matrix.hpp"
#include "spantree/multipoly.hpp"
#include "spantree/recognition.hpp"
#include "spantree/tree_count.hpp"

namespace spantree {

// Edge weights are ω(i,j) = x_i x_j with one indeterminate per vertex: x_v
// belongs to vertex v whatever order the matrix rows are in.

using PolyMatrix = Matrix<MultiPoly>;
using PolyVector = std::vector<MultiPoly>;
using WeightedLaplacian = PolyMatrix;

MultiPoly weighted_degree(const Graph& g, Vertex v);

WeightedLaplacian weighted_laplacian(const Graph& g);
WeightedLaplacian weighted_laplacian(const Graph& g, const std::vector<Vertex>& order);

bool is_upper_triangular(const PolyMatrix& m);

/// Diagonal product for triangular matrices, Bareiss elimination otherwise.
MultiPoly determinant(const PolyMatrix& m, int nvars);

/// Cofactor expansion; exponential, for cross-checks.
MultiPoly expansion_determinant(const PolyMatrix& m, int nvars);

PolyMatrix rank_one_update(const PolyMatrix& m, const PolyVector& a, const PolyVector& b);

/// Σ over spanning trees of the product of edge weights.
MultiPoly weighted_oracle(const Graph& g, const OracleOptions& opts = {});

/// Weighted Matrix-Tree cofactor.
MultiPoly weighted_matrix_tree(const Graph& g);

/// det(L(G;ω) + a b^T) / (Σa · Σb), vectors indexed by vertex.
MultiPoly weighted_perturbation_count(const Graph& g, const PolyVector& a, const PolyVector& b);

struct WeightedPerturbation {
  std::vector<Vertex> order;
  PolyVector a;
  PolyVector b;
  PolyMatrix matrix;

  MultiPoly diagonal_product() const;
  MultiPoly count() const;
};

/// a_k = x_v if v = order[k] is U-dominating, b_k = x_v if v ∈ U. Throws
/// ExactnessError if the perturbed matrix is not upper triangular.
WeightedPerturbation weighted_build_perturbation(const Graph& g, const ConstructionOrder& co);

/// (Π x_k)(Σ x_k)^(n-2).
MultiPoly weighted_cayley_prufer(int n);

MultiPoly weighted_count_threshold(const Graph& g, const ConstructionOrder& co);

/// Rows and columns keep their vertex ids as variable indices.
MultiPoly weighted_count_ferrers(const FerrersStructure& fs);

/// Throws std::invalid_argument when D or U is empty.
MultiPoly weighted_count_special_2threshold(const Graph& g, const ConstructionOrder& co);

} // namespace spantree
