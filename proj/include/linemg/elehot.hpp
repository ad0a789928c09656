#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linemg/graph.hpp"
#include "linemg/linegraph.hpp"

namespace linemg {

/// Result of merging every true-twin class of a graph into one vertex.
struct TwinPartition {
  Partition classes;                 // classes[i] collapses to vertex i of h
  SimpleGraph h;                     // twin-free; vertex weights = class sizes
  std::vector<std::size_t> weights;  // class sizes
  std::vector<VertexId> class_map;   // original vertex -> vertex of h
};

TwinPartition contract_twins(const SimpleGraph& gc);

/// A root multigraph of gc together with the gc-vertex <-> root-edge map.
struct RootResult {
  Multigraph root;
  VertexEdgeMap map;
};

/// Replicates the root edge of every h vertex u to multiplicity
/// tp.weights[u]; replica k is assigned the k-th smallest member of u's class.
RootResult expand_root(const Multigraph& h_root, const VertexEdgeMap& map_h, const TwinPartition& tp);

/// True iff L(rr.root), relabelled through rr.map, equals gc edge for edge.
bool verify_root(const SimpleGraph& gc, const RootResult& rr);

struct ElehotOptions {
  /// Shrink failures to a minimal forbidden induced subgraph of gc. Costs
  /// one recognition per vertex of gc.
  bool minimal_witness = true;
};

struct ElehotOutcome {
  std::optional<RootResult> root;
  TwinPartition twins;
  /// Beineke graph found in h, lifted to gc by picking one member per class.
  Witness lifted;
  /// Minimal forbidden induced subgraph of gc, named after the multigraph7
  /// entry it matches. Empty when minimal_witness is off.
  Witness forbidden;

  explicit operator bool() const { return root.has_value(); }
};

/// Decides whether gc is the line graph of a loop-free multigraph and, if
/// so, returns a verified root.
ElehotOutcome elehot(const SimpleGraph& gc, const ElehotOptions& options = {});

/// Decision only: contraction plus simple line-graph recognition.
bool is_line_multigraph(const SimpleGraph& gc);

}  // namespace linemg
