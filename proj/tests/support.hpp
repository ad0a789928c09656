#pragma once

// Test-only oracles and generators. Everything here is deliberately naive
// and shares no code with the library algorithms it checks.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "linemg/graph.hpp"

namespace linemg::test {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// G(n, p) simple graph.
SimpleGraph random_graph(Rng& rng, std::size_t n, double p);
/// Loop-free multigraph with `m` edges on `n` >= 2 vertices; each edge
/// repeats an earlier one with probability `parallel`.
Multigraph random_multigraph(Rng& rng, std::size_t n, std::size_t m, double parallel = 0.3);
/// Same vertex set, vertices relabelled by a random permutation.
SimpleGraph shuffled(Rng& rng, const SimpleGraph& g, std::vector<VertexId>* perm = nullptr);

/// Adjacency matrix view built straight from the edge list.
std::vector<std::vector<bool>> adjacency_matrix(const SimpleGraph& g);

/// All-pairs BFS distances; -1 for unreachable.
std::vector<std::vector<int>> distances(const SimpleGraph& g);

/// Isomorphism by trying every permutation (n <= 8).
bool isomorphic_by_permutation(const SimpleGraph& a, const SimpleGraph& b);

/// Lexicographically first injective map pattern -> host that is an induced
/// embedding, by enumerating all injective maps in order.
std::optional<std::vector<VertexId>> first_induced_by_enumeration(const SimpleGraph& host,
                                                                  const SimpleGraph& pattern);

/// Line graph computed from its definition with an adjacency matrix.
std::vector<std::vector<bool>> line_adjacency(const Multigraph& g);

/// Searches for a root of g with exactly |V(g)| edges on at most
/// |V(g)| + 1 vertices such that root edge i corresponds to vertex i.
/// `allow_parallel` selects multigraph roots. Intended for connected g with
/// at most 6 vertices.
bool has_root_by_search(const SimpleGraph& g, bool allow_parallel);

/// Maximum matching weight by enumerating all edge subsets (m <= 20).
std::int64_t mwm_by_subsets(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                            const std::vector<std::int64_t>& weights);

/// Maximum independent set weight by enumerating all vertex subsets (n <= 20).
std::int64_t mwis_by_subsets(const SimpleGraph& g, const std::vector<std::int64_t>& weights);

}  // namespace linemg::test
