#include "linemg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace linemg {

EdgeId Multigraph::add_edge(VertexId u, VertexId v, Weight w) {
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (w.is_negative()) throw std::invalid_argument("negative edge weight");
  edges_.push_back(Edge{u, v, w});
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::size_t Multigraph::multiplicity(VertexId u, VertexId v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  }));
}

SimpleGraph::SimpleGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) : adj_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool SimpleGraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("edge endpoint out of range");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  return true;
}

std::size_t SimpleGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& au = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(au.begin(), au.end(), other);
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void SimpleGraph::set_vertex_weights(std::vector<Weight> w) {
  if (!w.empty() && w.size() != adj_.size()) throw std::invalid_argument("vertex weight count mismatch");
  for (const auto& x : w) {
    if (x.is_negative()) throw std::invalid_argument("negative vertex weight");
  }
  weights_ = std::move(w);
}

SimpleGraph SimpleGraph::induced(std::span<const VertexId> vertices) const {
  std::vector<std::int64_t> index(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (index.at(vertices[i]) != -1) throw std::invalid_argument("duplicate vertex in induced subgraph");
    index[vertices[i]] = static_cast<std::int64_t>(i);
  }
  SimpleGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : adj_[vertices[i]]) {
      if (index[w] > static_cast<std::int64_t>(i)) out.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(index[w]));
    }
  }
  if (!weights_.empty()) {
    std::vector<Weight> w;
    w.reserve(vertices.size());
    for (VertexId v : vertices) w.push_back(weights_[v]);
    out.weights_ = std::move(w);
  }
  return out;
}

SimpleGraph SimpleGraph::without_vertex(VertexId v) const {
  std::vector<VertexId> keep;
  keep.reserve(adj_.size());
  for (VertexId u = 0; u < adj_.size(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

bool same_adjacency(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    auto x = a.neighbors(v);
    auto y = b.neighbors(v);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g(n);
  for (VertexId u = 0; u < n && n >= 3; ++u) g.add_edge(u, static_cast<VertexId>((u + 1) % n));
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (VertexId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

SimpleGraph star_graph(std::size_t leaves) {
  SimpleGraph g(leaves + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph simple_part(const Multigraph& g) {
  SimpleGraph s(g.num_vertices());
  for (const auto& e : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

Multigraph to_multigraph(const SimpleGraph& g) {
  Multigraph m(g.num_vertices());
  for (auto [u, v] : g.edge_list()) m.add_edge(u, v);
  return m;
}

// ---- text format ----------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_index(std::string_view tok, std::size_t line_no) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  if (tok.size() > 9) throw ParseError(line_no, "index too large: " + std::string(tok));
  return std::stoull(std::string(tok));
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<Multigraph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "v") {
      if (g) throw ParseError(line_no, "duplicate 'v' line");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'v <n>'");
      g.emplace(parse_index(toks[1], line_no));
    } else if (toks[0] == "e") {
      if (!g) throw ParseError(line_no, "'e' line before 'v' line");
      if (toks.size() != 3 && toks.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> [weight]'");
      auto u = parse_index(toks[1], line_no);
      auto v = parse_index(toks[2], line_no);
      if (u >= g->num_vertices() || v >= g->num_vertices()) {
        throw ParseError(line_no, "endpoint out of range (n = " + std::to_string(g->num_vertices()) + ")");
      }
      if (u == v) throw ParseError(line_no, "loop declared at vertex " + std::to_string(u));
      Weight w{1};
      if (toks.size() == 4) {
        try {
          w = Weight::parse(toks[3]);
        } catch (const std::exception& ex) {
          throw ParseError(line_no, ex.what());
        }
        if (w.is_negative()) throw ParseError(line_no, "negative weight");
      }
      g->add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), w);
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(toks[0]) + "'");
    }
  }
  if (!g) throw ParseError(0, "missing 'v <n>' line");
  return std::move(*g);
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream os;
  os << "v " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) {
    os << "e " << e.u << ' ' << e.v;
    if (e.weight != Weight{1}) os << ' ' << e.weight;
    os << '\n';
  }
  return os.str();
}

SimpleGraph parse_simple_graph(std::string_view text) {
  Multigraph m = parse_graph(text);
  SimpleGraph g(m.num_vertices());
  for (const auto& e : m.edges()) {
    if (!g.add_edge(e.u, e.v)) {
      throw ParseError(0, "parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in a simple graph");
    }
  }
  return g;
}

std::string serialize_simple_graph(const SimpleGraph& g) { return serialize_graph(to_multigraph(g)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Multigraph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

// ---- structure ------------------------------------------------------------

Partition connected_components(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  Partition out;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

std::vector<VertexId> closed_neighbourhood(const SimpleGraph& g, VertexId v) {
  std::vector<VertexId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
  nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
  return nb;
}

}  // namespace

bool are_true_twins(const SimpleGraph& g, VertexId u, VertexId v) {
  return u != v && g.has_edge(u, v) && closed_neighbourhood(g, u) == closed_neighbourhood(g, v);
}

Partition true_twin_classes(const SimpleGraph& g) {
  // Equal closed neighbourhoods imply adjacency, so grouping by N[v] suffices.
  std::map<std::vector<VertexId>, std::size_t> index;
  Partition out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto [it, inserted] = index.try_emplace(closed_neighbourhood(g, v), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

// ---- isomorphism ----------------------------------------------------------

namespace {

class IsoSearch {
public:
  IsoSearch(const SimpleGraph& a, const SimpleGraph& b) : a_(a), b_(b), map_(a.num_vertices()), used_(b.num_vertices()) {
    // Assign high-degree vertices first, then prefer vertices adjacent to
    // already-ordered ones so adjacency checks prune early.
    const std::size_t n = a.num_vertices();
    std::vector<bool> placed(n, false);
    while (order_.size() < n) {
      VertexId best = 0;
      long best_key = -1;
      for (VertexId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        long links = 0;
        for (VertexId w : a.neighbors(v)) links += placed[w] ? 1 : 0;
        long key = links * 1000 + static_cast<long>(a.degree(v));
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  std::optional<Embedding> run() {
    if (extend(0)) return Embedding{map_};
    return std::nullopt;
  }

private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    VertexId v = order_[depth];
    for (VertexId w = 0; w < b_.num_vertices(); ++w) {
      if (used_[w] || b_.degree(w) != a_.degree(v)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        VertexId u = order_[i];
        ok = a_.has_edge(u, v) == b_.has_edge(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const SimpleGraph& g) {
  std::vector<std::size_t> d(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

class InducedSearch {
public:
  InducedSearch(const SimpleGraph& host, const SimpleGraph& pattern)
      : host_(host), pat_(pattern), map_(pattern.num_vertices()), used_(host.num_vertices()) {}

  std::optional<Embedding> run() {
    if (extend(0)) return Embedding{map_};
    return std::nullopt;
  }

private:
  bool try_vertex(VertexId p, VertexId h) {
    if (used_[h] || host_.degree(h) < pat_.degree(p)) return false;
    for (VertexId q = 0; q < p; ++q) {
      if (pat_.has_edge(p, q) != host_.has_edge(h, map_[q])) return false;
    }
    return true;
  }

  // Pattern vertices are placed in id order, host candidates in ascending
  // order, so the first complete embedding is lexicographically smallest.
  bool extend(VertexId p) {
    if (p == pat_.num_vertices()) return true;
    std::optional<VertexId> anchor;
    for (VertexId q : pat_.neighbors(p)) {
      if (q < p) {
        anchor = q;
        break;
      }
    }
    auto attempt = [&](VertexId h) {
      if (!try_vertex(p, h)) return false;
      map_[p] = h;
      used_[h] = true;
      if (extend(p + 1)) return true;
      used_[h] = false;
      return false;
    };
    if (anchor) {
      for (VertexId h : host_.neighbors(map_[*anchor])) {
        if (attempt(h)) return true;
      }
    } else {
      for (VertexId h = 0; h < host_.num_vertices(); ++h) {
        if (attempt(h)) return true;
      }
    }
    return false;
  }

  const SimpleGraph& host_;
  const SimpleGraph& pat_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Embedding> is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2) {
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return std::nullopt;
  if (degree_sequence(g1) != degree_sequence(g2)) return std::nullopt;
  return IsoSearch(g1, g2).run();
}

std::optional<Embedding> find_induced(const SimpleGraph& host, const SimpleGraph& pattern) {
  if (pattern.num_vertices() > host.num_vertices()) return std::nullopt;
  return InducedSearch(host, pattern).run();
}

bool is_induced_embedding(const SimpleGraph& host, const SimpleGraph& pattern, const Embedding& e) {
  if (e.mapping.size() != pattern.num_vertices()) return false;
  std::vector<VertexId> sorted = e.mapping;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (VertexId h : e.mapping) {
    if (h >= host.num_vertices()) return false;
  }
  for (VertexId p = 0; p < pattern.num_vertices(); ++p) {
    for (VertexId q = p + 1; q < pattern.num_vertices(); ++q) {
      if (pattern.has_edge(p, q) != host.has_edge(e.mapping[p], e.mapping[q])) return false;
    }
  }
  return true;
}

SimpleGraph geometric_graph(std::span<const Point> points, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  SimpleGraph g(points.size());
  for (VertexId i = 0; i < points.size(); ++i) {
    for (VertexId j = i + 1; j < points.size(); ++j) {
      double d = std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
      if (d == 0.0) {
        throw std::invalid_argument("duplicate coordinates for points " + std::to_string(i) + " and " + std::to_string(j));
      }
      if (d <= radius) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace linemg
