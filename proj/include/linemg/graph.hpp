#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linemg/weight.hpp"

namespace linemg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised for malformed input documents. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight{1};

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected loop-free multigraph. Edge ids are positions in `edges()`;
/// parallel edges are repeated endpoint pairs.
class Multigraph {
public:
  Multigraph() = default;
  explicit Multigraph(std::size_t n_vertices) : n_(n_vertices) {}

  EdgeId add_edge(VertexId u, VertexId v, Weight w = Weight{1});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }

  /// Number of edges joining u and v.
  std::size_t multiplicity(VertexId u, VertexId v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Loop-free graph without parallel edges. Adjacency lists are kept sorted.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}
  SimpleGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

  /// Adds uv; returns false if it was already present. Loops are rejected.
  bool add_edge(VertexId u, VertexId v);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;
  bool has_edge(VertexId u, VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }

  /// Edge list with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  bool has_vertex_weights() const { return !weights_.empty(); }
  const std::vector<Weight>& vertex_weights() const { return weights_; }
  void set_vertex_weights(std::vector<Weight> w);
  /// Weight of v, 1 when no weights are attached.
  Weight vertex_weight(VertexId v) const { return weights_.empty() ? Weight{1} : weights_.at(v); }

  /// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
  SimpleGraph induced(std::span<const VertexId> vertices) const;

  /// Simple graph with vertex v removed; higher ids shift down by one.
  SimpleGraph without_vertex(VertexId v) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Weight> weights_;
};

/// Equal vertex counts and edge sets; vertex weights are ignored.
bool same_adjacency(const SimpleGraph& a, const SimpleGraph& b);

/// Injective pattern -> host vertex map: mapping[p] is the host image of p.
struct Embedding {
  std::vector<VertexId> mapping;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// A partition of the vertex set; classes and their members are sorted.
using Partition = std::vector<std::vector<VertexId>>;

// ---- construction helpers -------------------------------------------------

SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph star_graph(std::size_t leaves);

/// Simple underlying graph of a multigraph (parallel edges collapsed).
SimpleGraph simple_part(const Multigraph& g);
/// Multigraph with one unit-weight edge per simple edge, in edge_list() order.
Multigraph to_multigraph(const SimpleGraph& g);

// ---- edge-list text format ------------------------------------------------

/// Parses `# comment`, `v <n>`, `e <u> <v> [weight]` lines.
Multigraph parse_graph(std::string_view text);
/// Inverse of parse_graph; weights equal to 1 are omitted.
std::string serialize_graph(const Multigraph& g);

/// Parses an edge-list document as a simple graph. Parallel edges are rejected.
SimpleGraph parse_simple_graph(std::string_view text);
std::string serialize_simple_graph(const SimpleGraph& g);

Multigraph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

// ---- structure ------------------------------------------------------------

Partition connected_components(const SimpleGraph& g);

/// Classes of mutually true twins (adjacent with equal closed
/// neighbourhoods). Classes ordered by smallest member.
Partition true_twin_classes(const SimpleGraph& g);
bool are_true_twins(const SimpleGraph& g, VertexId u, VertexId v);

/// Bijection g1 -> g2 preserving adjacency, if one exists. Exhaustive with
/// degree pruning; intended for small graphs.
std::optional<Embedding> is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2);

/// Lexicographically first induced embedding of `pattern` in `host`.
std::optional<Embedding> find_induced(const SimpleGraph& host, const SimpleGraph& pattern);

/// True iff `e` maps pattern adjacency and non-adjacency exactly onto host.
bool is_induced_embedding(const SimpleGraph& host, const SimpleGraph& pattern, const Embedding& e);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Unit-disk graph: u ~ v iff |p_u - p_v| <= radius.
SimpleGraph geometric_graph(std::span<const Point> points, double radius);

}  // namespace linemg
