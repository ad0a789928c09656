#pragma once

#include <cstddef>
#include <vector>

#include "linemg/graph.hpp"

namespace linemg {

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight{0};
};

/// Simple graph with one weight per edge; edge ids are list positions.
struct WeightedGraph {
  std::size_t num_vertices = 0;
  std::vector<WeightedEdge> edges;
};

/// Edge ids (ascending) of a matching and its total weight.
struct Matching {
  std::vector<EdgeId> edges;
  Weight weight{0};
};

/// One surviving edge per endpoint pair of a multigraph.
struct WeightedReduction {
  WeightedGraph simple;
  std::vector<EdgeId> survivor;  // simple edge -> original edge id
};

/// Keeps the heaviest edge of every parallel class (smallest id on ties).
/// Simple edges appear in order of their endpoint pair's first edge id.
WeightedReduction reduce_multigraph(const Multigraph& g);

/// Exact maximum-weight matching (primal-dual blossom algorithm, O(n^3)).
/// Zero-weight edges are never returned. Throws on parallel edges, loops or
/// negative weights.
Matching max_weight_matching(const WeightedGraph& g);

inline constexpr std::size_t kBruteForceMwmMaxEdges = 24;
inline constexpr std::size_t kBruteForceMwisMaxVertices = 25;

/// Exhaustive maximum-weight matching; lexicographically smallest edge set
/// among the optima. Throws std::length_error above 24 edges.
Matching brute_force_mwm(const WeightedGraph& g);

struct IndependentSet {
  std::vector<VertexId> vertices;
  Weight weight{0};
};

/// Exhaustive maximum-weight independent set using g's vertex weights (1 if
/// none). Zero-weight vertices are left out; among optima the
/// lexicographically smallest vertex list is returned. Throws
/// std::length_error above 25 vertices.
IndependentSet brute_force_mwis(const SimpleGraph& g);

bool is_matching(const WeightedGraph& g, const std::vector<EdgeId>& edges);
bool is_independent(const SimpleGraph& g, const std::vector<VertexId>& vertices);

}  // namespace linemg
