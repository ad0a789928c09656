#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linemg/graph.hpp"

namespace linemg {

struct CatalogEntry {
  std::string name;
  SimpleGraph graph;
};

/// Named list of forbidden induced subgraphs.
struct Catalog {
  std::string name;
  std::string provenance;  // "figure" or "derived"
  std::vector<CatalogEntry> entries;
};

/// Built-in catalogs: "beineke9" (minimal non-line graphs) and
/// "multigraph7" (minimal non-line-multigraphs). Throws std::invalid_argument
/// for unknown names and ParseError for malformed data.
const Catalog& load_catalog(std::string_view name);

/// Parses a catalog document: edge-list blocks each preceded by
/// `# name: <entry>`. Entries must be connected and pairwise non-isomorphic;
/// when `expected_entries` is given the count must match.
Catalog parse_catalog(std::string_view text, std::string name, std::string provenance,
                      std::optional<std::size_t> expected_entries = std::nullopt);
std::string serialize_catalog(const Catalog& c);

struct ScanHit {
  std::string name;
  Embedding embedding;
};

/// Every catalog entry present in g as an induced subgraph, one witness each,
/// in catalog order.
std::vector<ScanHit> scan(const SimpleGraph& g, const Catalog& c);

/// Cliques covering every edge with each vertex in at most two cliques.
struct CliqueCover {
  std::vector<std::vector<VertexId>> cliques;
};

bool is_valid_clique_cover(const SimpleGraph& g, const CliqueCover& cover);

inline constexpr std::size_t kKrauszMaxVertices = 12;

/// Exhaustive clique-cover search. Throws std::length_error above
/// kKrauszMaxVertices vertices.
std::optional<CliqueCover> find_clique_cover(const SimpleGraph& g);

/// True iff g is the line graph of a loop-free multigraph.
bool krausz_oracle(const SimpleGraph& g);

// ---- small-graph enumeration ----------------------------------------------

/// Canonical adjacency bitstring (upper triangle, row-major), maximised over
/// all vertex orders that list vertices by non-increasing degree. Two graphs
/// on the same number of vertices are isomorphic iff their forms are equal.
/// Supports n <= 11.
std::uint64_t canonical_form(const SimpleGraph& g);
SimpleGraph from_canonical_form(std::size_t n, std::uint64_t form);

/// All graphs on exactly n vertices up to isomorphism, sorted by canonical
/// form. n <= 7.
std::vector<SimpleGraph> enumerate_all(std::size_t n);

inline constexpr std::size_t kEnumerateMax = 7;

/// One representative per isomorphism class of connected graphs on
/// 1..max_n vertices, ordered by vertex count then canonical form.
std::vector<SimpleGraph> enumerate_connected(std::size_t max_n);

using Membership = std::function<bool(const SimpleGraph&)>;

/// Connected graphs on <= max_n vertices that fail `member` while every
/// proper induced subgraph passes. Entries named F1, F2, ... with the claw
/// first, then twin-free graphs before graphs with twins, then by size.
Catalog derive_minimal_forbidden(std::size_t max_n, const Membership& member, std::string_view prefix = "F");

/// derive_minimal_forbidden with the clique-cover membership test.
Catalog derive_minimal_forbidden(std::size_t max_n);

/// Catalog entry isomorphic to g, if any.
std::optional<std::size_t> find_isomorphic_entry(const Catalog& c, const SimpleGraph& g);

/// Number of worker threads for internal parallel loops: hardware
/// concurrency capped by LINEMG_THREADS when set.
std::size_t worker_threads();

}  // namespace linemg
