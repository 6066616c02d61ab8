#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spantree/exact_linalg.hpp"
#include "spantree/graph.hpp"
#include "spantree/recognition.hpp"

namespace spantree {

struct OracleOptions {
  /// Enumeration covers C(m, n-1) edge subsets; refuse graphs with more edges.
  std::size_t max_edges = 24;
  unsigned jobs = 1;
};

/// Counts spanning trees by testing every (n-1)-edge subset with union-find.
/// Throws CapabilityExceeded beyond opts.max_edges.
BigInt oracle_count(const Graph& g, const OracleOptions& opts = {});

/// The spanning trees themselves, each as a sorted edge list.
std::vector<std::vector<Edge>> oracle_trees(const Graph& g, const OracleOptions& opts = {});

/// Cofactor (1,1) of the Laplacian; 1 for a single vertex.
BigInt matrix_tree_count(const Graph& g);

/// det(L + a b^T) / (Σa · Σb) with vectors indexed by vertex (a[0] is v_1).
BigInt perturbation_count(const Graph& g, const IntVector& a, const IntVector& b);

struct Perturbation {
  std::vector<Vertex> order;
  IntVector a;
  IntVector b;
  ExactMatrix matrix; // L + a b^T in `order`
  /// Σa and Σb are both nonzero, so the determinant identity yields τ.
  bool lemma_applicable = false;

  BigInt diagonal_product() const;
  BigInt count() const;
};

/// Reorders by the construction order, takes a = indicator of the
/// U-dominating vertices and b = indicator of U, and asserts L + a b^T is
/// upper triangular (ExactnessError otherwise).
Perturbation build_perturbation(const Graph& g, const ConstructionOrder& co);

/// Brute force over vertex orderings: finds an ordering whose lower-triangular
/// Laplacian pattern is rank one, independent of any recognition routine.
/// Throws CapabilityExceeded for graphs with more than max_vertices vertices.
std::optional<Perturbation> search_triangular_perturbation(const Graph& g, int max_vertices = 8);

BigInt count_complete(int n);
BigInt count_bipartite(int m, int n);
BigInt count_multipartite(const std::vector<int>& sizes);

/// Π_D (deg + 1) · Π_I deg / n for a threshold construction order (U = V).
BigInt count_threshold(const Graph& g, const ConstructionOrder& co);

/// Π deg(r_i) · Π deg(c_j) / (m · n).
BigInt count_ferrers(const FerrersStructure& fs);

/// Π_{D ∩ U} (deg + 1) · Π_{V \ (D ∩ U)} deg / (|D| · |U|). Throws
/// std::invalid_argument when D or U is empty (edgeless graphs).
BigInt count_special_2threshold(const Graph& g, const ConstructionOrder& co);

} // namespace spantree
