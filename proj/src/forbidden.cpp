#include "linemg/forbidden.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "catalog_data.hpp"
#include "parallel.hpp"

namespace linemg {

std::size_t worker_threads() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LINEMG_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

// ---- catalogs -------------------------------------------------------------

namespace {

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool only_comments(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view t = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (!t.empty() && t.front() != '#') return false;
  }
  return true;
}

}  // namespace

Catalog parse_catalog(std::string_view text, std::string name, std::string provenance,
                      std::optional<std::size_t> expected_entries) {
  Catalog cat{std::move(name), std::move(provenance), {}};
  std::string current_name;
  std::string block;
  std::size_t block_start = 0;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (current_name.empty()) {
      if (!only_comments(block)) throw ParseError(block_start, "graph data before the first '# name:' header");
      return;
    }
    try {
      cat.entries.push_back({current_name, parse_simple_graph(block)});
    } catch (const ParseError& ex) {
      throw ParseError(block_start, "entry '" + current_name + "': " + ex.what());
    }
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    std::string_view t = trim(line);
    if (t.starts_with("# name:")) {
      flush();
      current_name = std::string(trim(t.substr(7)));
      if (current_name.empty()) throw ParseError(line_no, "empty catalog entry name");
      block.clear();
      block_start = line_no;
      continue;
    }
    block.append(line);
    block.push_back('\n');
  }
  flush();

  if (expected_entries && cat.entries.size() != *expected_entries) {
    throw ParseError(0, "catalog '" + cat.name + "' has " + std::to_string(cat.entries.size()) + " entries, expected " +
                            std::to_string(*expected_entries));
  }
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    if (!is_connected(cat.entries[i].graph)) {
      throw ParseError(0, "catalog entry '" + cat.entries[i].name + "' is not connected");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (is_isomorphic(cat.entries[i].graph, cat.entries[j].graph)) {
        throw ParseError(0, "catalog entries '" + cat.entries[j].name + "' and '" + cat.entries[i].name +
                                "' are isomorphic");
      }
    }
  }
  return cat;
}

std::string serialize_catalog(const Catalog& c) {
  std::ostringstream os;
  os << "# catalog: " << c.name << " (" << c.provenance << "), " << c.entries.size() << " entries\n";
  for (const auto& e : c.entries) {
    os << "# name: " << e.name << '\n' << serialize_simple_graph(e.graph);
  }
  return os.str();
}

const Catalog& load_catalog(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, Catalog, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;

  std::optional<std::size_t> expected;
  if (name == "beineke9") {
    expected = 9;
  } else if (name == "multigraph7") {
    expected = 7;
  } else {
    throw std::invalid_argument("unknown catalog '" + std::string(name) + "' (expected beineke9 or multigraph7)");
  }
  Catalog cat = parse_catalog(detail::builtin_catalog_text(name), std::string(name), "derived", expected);
  if (name == "multigraph7") {
    for (const auto& e : cat.entries) {
      for (const auto& cls : true_twin_classes(e.graph)) {
        if (cls.size() > 1) throw ParseError(0, "multigraph7 entry '" + e.name + "' has true twins");
      }
    }
  }
  return cache.emplace(std::string(name), std::move(cat)).first->second;
}

std::vector<ScanHit> scan(const SimpleGraph& g, const Catalog& c) {
  std::vector<ScanHit> hits;
  for (const auto& entry : c.entries) {
    if (auto emb = find_induced(g, entry.graph)) hits.push_back({entry.name, std::move(*emb)});
  }
  return hits;
}

std::optional<std::size_t> find_isomorphic_entry(const Catalog& c, const SimpleGraph& g) {
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (is_isomorphic(c.entries[i].graph, g)) return i;
  }
  return std::nullopt;
}

// ---- clique cover ---------------------------------------------------------

bool is_valid_clique_cover(const SimpleGraph& g, const CliqueCover& cover) {
  const std::size_t n = g.num_vertices();
  std::vector<int> count(n, 0);
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  for (const auto& c : cover.cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) return false;
      if (++count[c[i]] > 2) return false;
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[i] == c[j] || !g.has_edge(c[i], c[j])) return false;
        covered[c[i]][c[j]] = covered[c[j]][c[i]] = true;
      }
    }
  }
  for (auto [u, v] : g.edge_list()) {
    if (!covered[u][v]) return false;
  }
  return true;
}

namespace {

// Backtracking over cliques: the lexicographically first uncovered edge must
// lie in some clique of the cover, so branch on every clique containing it
// whose members still have spare capacity.
class CoverSearch {
public:
  explicit CoverSearch(const SimpleGraph& g) : n_(g.num_vertices()), adj_(n_, 0), covered_(n_, 0), count_(n_, 0) {
    for (auto [u, v] : g.edge_list()) {
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
  }

  std::optional<CliqueCover> run() {
    if (solve()) return CliqueCover{chosen_};
    return std::nullopt;
  }

private:
  using Mask = std::uint32_t;

  bool solve() {
    for (VertexId u = 0; u < n_; ++u) {
      Mask open = adj_[u] & ~covered_[u];
      if (open == 0) continue;
      VertexId v = static_cast<VertexId>(std::countr_zero(open));
      if (count_[u] >= 2 || count_[v] >= 2) return false;
      Mask spare = 0;
      for (VertexId w = 0; w < n_; ++w) {
        if (count_[w] < 2) spare |= 1u << w;
      }
      Mask pool = adj_[u] & adj_[v] & spare;
      return extend((1u << u) | (1u << v), pool);
    }
    return true;
  }

  // Enumerates cliques clique ⊇ {u, v} drawn from pool, larger ones first.
  bool extend(Mask clique, Mask pool) {
    if (pool != 0) {
      VertexId w = static_cast<VertexId>(std::countr_zero(pool));
      Mask rest = pool & ~(1u << w);
      if (extend(clique | (1u << w), rest & adj_[w])) return true;
      return extend(clique, rest);
    }
    return place(clique);
  }

  bool place(Mask clique) {
    std::vector<Mask> saved = covered_;
    std::vector<VertexId> members;
    for (Mask m = clique; m; m &= m - 1) members.push_back(static_cast<VertexId>(std::countr_zero(m)));
    for (VertexId a : members) {
      ++count_[a];
      covered_[a] |= clique & ~(1u << a);
    }
    bool feasible = true;
    for (VertexId a : members) {
      if (count_[a] == 2 && (adj_[a] & ~covered_[a]) != 0) feasible = false;
    }
    if (feasible) {
      chosen_.push_back(members);
      if (solve()) return true;
      chosen_.pop_back();
    }
    for (VertexId a : members) --count_[a];
    covered_ = std::move(saved);
    return false;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<Mask> covered_;
  std::vector<int> count_;
  std::vector<std::vector<VertexId>> chosen_;
};

}  // namespace

std::optional<CliqueCover> find_clique_cover(const SimpleGraph& g) {
  if (g.num_vertices() > kKrauszMaxVertices) {
    throw std::length_error("clique-cover oracle limited to " + std::to_string(kKrauszMaxVertices) + " vertices");
  }
  return CoverSearch(g).run();
}

bool krausz_oracle(const SimpleGraph& g) { return find_clique_cover(g).has_value(); }

// ---- enumeration ----------------------------------------------------------

namespace {

constexpr std::size_t kCanonicalMax = 11;

// Degree plus sorted neighbour degrees: an isomorphism invariant used to fix
// the block order of the canonical labelling.
std::vector<std::vector<VertexId>> invariant_classes(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::pair<std::vector<std::size_t>, VertexId>> keyed;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<std::size_t> key{g.degree(v)};
    std::vector<std::size_t> nd;
    for (VertexId w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.rbegin(), nd.rend());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::vector<VertexId>> classes;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) classes.emplace_back();
    classes.back().push_back(keyed[i].second);
  }
  return classes;
}

std::uint64_t encode(const SimpleGraph& g, const std::vector<VertexId>& order) {
  std::uint64_t bits = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bits = (bits << 1) | (g.has_edge(order[i], order[j]) ? 1u : 0u);
    }
  }
  return bits;
}

}  // namespace

std::uint64_t canonical_form(const SimpleGraph& g) {
  if (g.num_vertices() > kCanonicalMax) throw std::length_error("canonical_form supports at most 11 vertices");
  auto classes = invariant_classes(g);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::uint64_t best = 0;
  bool first = true;
  // Odometer over the permutations of every class.
  while (true) {
    std::vector<VertexId> order;
    for (const auto& c : classes) order.insert(order.end(), c.begin(), c.end());
    std::uint64_t code = encode(g, order);
    if (first || code > best) best = code;
    first = false;
    std::size_t k = 0;
    while (k < classes.size() && !std::next_permutation(classes[k].begin(), classes[k].end())) ++k;
    if (k == classes.size()) break;
  }
  return best;
}

SimpleGraph from_canonical_form(std::size_t n, std::uint64_t form) {
  SimpleGraph g(n);
  std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t bit = pairs;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      --bit;
      if ((form >> bit) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<SimpleGraph> enumerate_all(std::size_t n) {
  if (n > kEnumerateMax) throw std::length_error("graph enumeration limited to 7 vertices");
  if (n == 0) return {SimpleGraph(0)};
  if (n == 1) return {SimpleGraph(1)};
  // Every graph on n vertices is some graph on n-1 vertices plus a vertex.
  auto smaller = enumerate_all(n - 1);
  std::vector<std::uint64_t> forms;
  const std::uint32_t subsets = 1u << (n - 1);
  std::vector<std::vector<std::uint64_t>> per_base(smaller.size());
  detail::parallel_for(smaller.size(), [&](std::size_t i) {
    for (std::uint32_t s = 0; s < subsets; ++s) {
      SimpleGraph g(n);
      for (auto [a, b] : smaller[i].edge_list()) g.add_edge(a, b);
      for (VertexId v = 0; v + 1 < n; ++v) {
        if ((s >> v) & 1u) g.add_edge(v, static_cast<VertexId>(n - 1));
      }
      per_base[i].push_back(canonical_form(g));
    }
  });
  for (auto& f : per_base) forms.insert(forms.end(), f.begin(), f.end());
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<SimpleGraph> out;
  out.reserve(forms.size());
  for (auto f : forms) out.push_back(from_canonical_form(n, f));
  return out;
}

std::vector<SimpleGraph> enumerate_connected(std::size_t max_n) {
  if (max_n == 0 || max_n > kEnumerateMax) throw std::length_error("enumerate_connected requires 1 <= max_n <= 7");
  std::vector<SimpleGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& g : enumerate_all(n)) {
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

// ---- derivation -----------------------------------------------------------

namespace {

bool has_true_twins(const SimpleGraph& g) {
  for (const auto& c : true_twin_classes(g)) {
    if (c.size() > 1) return true;
  }
  return false;
}

bool proper_subgraphs_pass(const SimpleGraph& g, const Membership& member) {
  const std::size_t n = g.num_vertices();
  const std::uint32_t full = (1u << n) - 1;
  // Smaller subsets first: most non-minimal graphs fail on a 4-vertex claw.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < full; ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (auto m : masks) {
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < n; ++v) {
      if ((m >> v) & 1u) vs.push_back(v);
    }
    if (!member(g.induced(vs))) return false;
  }
  return true;
}

}  // namespace

Catalog derive_minimal_forbidden(std::size_t max_n, const Membership& member, std::string_view prefix) {
  auto graphs = enumerate_connected(max_n);
  std::vector<char> minimal(graphs.size(), 0);
  detail::parallel_for(graphs.size(), [&](std::size_t i) {
    minimal[i] = !member(graphs[i]) && proper_subgraphs_pass(graphs[i], member);
  });

  struct Found {
    bool claw;
    bool twins;
    std::size_t n, m;
    std::uint64_t form;
    SimpleGraph g;
  };
  std::vector<Found> found;
  const SimpleGraph claw = star_graph(3);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!minimal[i]) continue;
    const auto& g = graphs[i];
    found.push_back({is_isomorphic(g, claw).has_value(), has_true_twins(g), g.num_vertices(), g.num_edges(),
                     canonical_form(g), g});
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return std::tie(b.claw, a.twins, a.n, a.m, a.form) < std::tie(a.claw, b.twins, b.n, b.m, b.form);
  });

  Catalog cat{"minimal-forbidden-" + std::to_string(max_n), "derived", {}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    cat.entries.push_back({std::string(prefix) + std::to_string(i + 1), std::move(found[i].g)});
  }
  return cat;
}

Catalog derive_minimal_forbidden(std::size_t max_n) {
  return derive_minimal_forbidden(max_n, [](const SimpleGraph& g) { return krausz_oracle(g); });
}

}  // namespace linemg
