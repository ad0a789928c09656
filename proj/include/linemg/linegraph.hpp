#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linemg/graph.hpp"

namespace linemg {

/// Bijection between the vertices of a line graph and the edges of its root.
class VertexEdgeMap {
public:
  VertexEdgeMap() = default;
  /// `edge_of_vertex[v]` is the root edge of line-graph vertex v. Throws
  /// unless the vector is a permutation of 0..n-1.
  explicit VertexEdgeMap(std::vector<EdgeId> edge_of_vertex);
  static VertexEdgeMap identity(std::size_t n);

  std::size_t size() const { return edge_of_.size(); }
  EdgeId edge_of(VertexId v) const { return edge_of_.at(v); }
  VertexId vertex_of(EdgeId e) const { return vertex_of_.at(e); }
  const std::vector<EdgeId>& edges_by_vertex() const { return edge_of_; }

  friend bool operator==(const VertexEdgeMap&, const VertexEdgeMap&) = default;

private:
  std::vector<EdgeId> edge_of_;
  std::vector<VertexId> vertex_of_;
};

struct LineGraphResult {
  SimpleGraph graph;
  VertexEdgeMap map;  // line-graph vertex <-> root (or network) edge
};

/// L(g): one vertex per edge, adjacent iff the edges share an endpoint.
/// Parallel edges become adjacent vertices. Vertex i corresponds to edge i.
LineGraphResult line_graph(const Multigraph& g);

/// g^t: u ~ v iff 1 <= d(u, v) <= t.
SimpleGraph graph_power(const SimpleGraph& g, std::size_t t);

/// Minimum endpoint distance between two edges of g; nullopt if they lie in
/// different components. Throws if either pair is not an edge of g.
std::optional<std::size_t> edge_distance(const SimpleGraph& g, std::pair<VertexId, VertexId> e1,
                                         std::pair<VertexId, VertexId> e2);

/// Conflict graph under the M-hop interference model: [L(network)]^M.
LineGraphResult conflict_graph(const Multigraph& network, std::size_t hops);

/// Every simple root found for one connected component of a line graph.
/// `candidates[k][i]` holds the (local) root endpoints of `vertices[i]`;
/// candidate 0 is the preferred one. Only K3 components have two.
struct ComponentRoots {
  std::vector<VertexId> vertices;
  std::vector<std::vector<std::pair<VertexId, VertexId>>> candidates;
};

/// Builds a root from per-component candidate choices. Root edge i is the
/// edge of line-graph vertex i; root vertices are numbered by first use.
std::pair<Multigraph, VertexEdgeMap> assemble_root(std::size_t line_vertices, const std::vector<ComponentRoots>& comps,
                                                   const std::vector<std::size_t>& choice);

/// Obstruction certificate. When `pattern` is non-empty, `embedding` maps
/// the named catalog graph into the input as an induced subgraph.
/// Otherwise `vertices` lists a minimal failing vertex set.
struct Witness {
  std::string pattern;
  Embedding embedding;
  std::vector<VertexId> vertices;
};

struct SimpleRoot {
  Multigraph root;  // multiplicity 1 everywhere
  VertexEdgeMap map;
  std::vector<ComponentRoots> components;

  /// Components that admit more than one root (K3: triangle or claw).
  std::vector<std::size_t> ambiguous_components() const;
};

/// Outcome of recognition: either a root or a witness.
template <typename Root>
class Recognition {
public:
  static Recognition success(Root r) {
    Recognition out;
    out.root_ = std::move(r);
    return out;
  }
  static Recognition failure(Witness w) {
    Recognition out;
    out.witness_ = std::move(w);
    return out;
  }

  explicit operator bool() const { return root_.has_value(); }
  bool ok() const { return root_.has_value(); }
  const Root& root() const { return root_.value(); }
  Root& root() { return root_.value(); }
  const Witness& witness() const { return witness_; }

private:
  std::optional<Root> root_;
  Witness witness_;
};

/// Decides whether h is the line graph of a simple graph. On success the
/// returned root satisfies L(root) == h through the map (checked before
/// returning). On failure the witness is an induced Beineke graph.
Recognition<SimpleRoot> recognize_line_graph(const SimpleGraph& h);

/// Same decision without building a witness.
bool is_line_graph(const SimpleGraph& h);

/// Induced subgraph of L(root) relabelled through `map`, i.e. the graph on
/// line vertices where v ~ w iff their root edges share an endpoint.
SimpleGraph line_graph_through(const Multigraph& root, const VertexEdgeMap& map);

}  // namespace linemg
