#include "linemg/linegraph.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "linemg/forbidden.hpp"

namespace linemg {

VertexEdgeMap::VertexEdgeMap(std::vector<EdgeId> edge_of_vertex) : edge_of_(std::move(edge_of_vertex)) {
  vertex_of_.assign(edge_of_.size(), std::numeric_limits<VertexId>::max());
  for (VertexId v = 0; v < edge_of_.size(); ++v) {
    EdgeId e = edge_of_[v];
    if (e >= edge_of_.size() || vertex_of_[e] != std::numeric_limits<VertexId>::max()) {
      throw std::invalid_argument("vertex-edge map is not a bijection");
    }
    vertex_of_[e] = v;
  }
}

VertexEdgeMap VertexEdgeMap::identity(std::size_t n) {
  std::vector<EdgeId> ids(n);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  return VertexEdgeMap(std::move(ids));
}

SimpleGraph line_graph_through(const Multigraph& root, const VertexEdgeMap& map) {
  if (map.size() != root.num_edges()) throw std::invalid_argument("map size differs from root edge count");
  std::vector<std::vector<EdgeId>> incident(root.num_vertices());
  for (EdgeId e = 0; e < root.num_edges(); ++e) {
    incident[root.edge(e).u].push_back(e);
    incident[root.edge(e).v].push_back(e);
  }
  SimpleGraph out(root.num_edges());
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        out.add_edge(map.vertex_of(inc[i]), map.vertex_of(inc[j]));
      }
    }
  }
  return out;
}

LineGraphResult line_graph(const Multigraph& g) {
  auto map = VertexEdgeMap::identity(g.num_edges());
  return {line_graph_through(g, map), std::move(map)};
}

SimpleGraph graph_power(const SimpleGraph& g, std::size_t t) {
  if (t == 0) throw std::invalid_argument("graph power exponent must be >= 1");
  if (t == 1) return g;
  const std::size_t n = g.num_vertices();
  SimpleGraph out(n);
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      VertexId u = queue[i];
      if (dist[u] == t) continue;
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (VertexId v : queue) {
      if (v > s) out.add_edge(s, v);
      dist[v] = std::numeric_limits<std::size_t>::max();
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, VertexId s) {
  std::vector<std::size_t> dist(g.num_vertices(), std::numeric_limits<std::size_t>::max());
  std::vector<VertexId> queue{s};
  dist[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (VertexId w : g.neighbors(queue[i])) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> edge_distance(const SimpleGraph& g, std::pair<VertexId, VertexId> e1,
                                         std::pair<VertexId, VertexId> e2) {
  if (!g.has_edge(e1.first, e1.second) || !g.has_edge(e2.first, e2.second)) {
    throw std::invalid_argument("edge_distance: endpoints do not form an edge");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId a : {e1.first, e1.second}) {
    auto dist = bfs_distances(g, a);
    best = std::min({best, dist[e2.first], dist[e2.second]});
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

LineGraphResult conflict_graph(const Multigraph& network, std::size_t hops) {
  if (hops == 0) throw std::invalid_argument("interference range M must be >= 1");
  auto lg = line_graph(network);
  lg.graph = graph_power(lg.graph, hops);
  return lg;
}

// ---- recognition ----------------------------------------------------------

namespace {

using Ends = std::array<std::uint32_t, 2>;

// A root under construction for a prefix of the BFS order. Line vertices are
// identified by their position in the order.
struct Partial {
  std::vector<Ends> ends;
  std::vector<std::vector<std::uint32_t>> star;  // root vertex -> incident line vertices
};

std::vector<std::vector<std::uint32_t>> star_family(const Partial& p) {
  auto fam = p.star;
  for (auto& s : fam) std::sort(s.begin(), s.end());
  std::sort(fam.begin(), fam.end());
  return fam;
}

struct Extension {
  std::size_t candidate;
  std::uint32_t p;
  std::optional<std::uint32_t> q;  // nullopt: new root vertex
};

void apply(Partial& c, const Extension& ext, std::uint32_t line_vertex) {
  std::uint32_t q;
  if (ext.q) {
    q = *ext.q;
  } else {
    q = static_cast<std::uint32_t>(c.star.size());
    c.star.emplace_back();
  }
  c.ends.push_back({ext.p, q});
  c.star[ext.p].push_back(line_vertex);
  c.star[q].push_back(line_vertex);
}

struct GrowOutcome {
  std::vector<Partial> roots;  // empty on failure
  std::size_t failed_at = 0;   // prefix length that has no root
};

// Extends candidate roots one line vertex at a time. The new edge must
// touch exactly the earlier edges in `earlier`, which pins its endpoints to
// at most a few options per candidate; duplicates are merged by star family.
GrowOutcome grow_roots(const SimpleGraph& h, const std::vector<VertexId>& order) {
  const std::size_t k = order.size();
  std::vector<std::int64_t> pos(h.num_vertices(), -1);
  for (std::size_t i = 0; i < k; ++i) pos[order[i]] = static_cast<std::int64_t>(i);

  GrowOutcome out;
  Partial first;
  first.ends.push_back({0, 1});
  first.star = {{0}, {0}};
  std::vector<Partial> cands{std::move(first)};

  std::vector<std::uint32_t> stamp(k, 0);
  std::vector<std::uint32_t> earlier;
  for (std::uint32_t x = 1; x < k; ++x) {
    earlier.clear();
    for (VertexId w : h.neighbors(order[x])) {
      if (pos[w] >= 0 && pos[w] < x) earlier.push_back(static_cast<std::uint32_t>(pos[w]));
    }
    if (earlier.empty()) throw std::logic_error("recognition order is not connected");
    for (auto e : earlier) stamp[e] = x;
    auto in_earlier = [&](std::uint32_t e) { return stamp[e] == x; };

    std::vector<Extension> exts;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      const Partial& c = cands[ci];
      const std::uint32_t s = earlier.front();
      for (std::uint32_t p : c.ends[s]) {
        const auto& sp = c.star[p];
        if (!std::all_of(sp.begin(), sp.end(), in_earlier)) continue;
        if (sp.size() == earlier.size()) {
          exts.push_back({ci, p, std::nullopt});
          continue;
        }
        auto t = std::find_if(earlier.begin(), earlier.end(),
                              [&](std::uint32_t e) { return c.ends[e][0] != p && c.ends[e][1] != p; });
        for (std::uint32_t q : c.ends[*t]) {
          const auto& sq = c.star[q];
          if (sp.size() + sq.size() != earlier.size()) continue;
          bool ok = std::all_of(sq.begin(), sq.end(), [&](std::uint32_t e) {
            return in_earlier(e) && c.ends[e][0] != p && c.ends[e][1] != p;
          });
          if (ok) exts.push_back({ci, p, q});
        }
      }
    }

    if (exts.empty()) {
      out.failed_at = x + 1;
      return out;
    }
    if (exts.size() == 1) {
      Partial next = std::move(cands[exts[0].candidate]);
      apply(next, exts[0], x);
      cands.assign(1, std::move(next));
      continue;
    }
    std::map<std::vector<std::vector<std::uint32_t>>, Partial> unique;
    for (const auto& ext : exts) {
      Partial next = cands[ext.candidate];
      apply(next, ext, x);
      auto key = star_family(next);
      unique.try_emplace(std::move(key), std::move(next));
    }
    cands.clear();
    for (auto& [key, part] : unique) cands.push_back(std::move(part));
  }
  out.roots = std::move(cands);
  return out;
}

std::vector<VertexId> bfs_order(const SimpleGraph& h, const std::vector<VertexId>& component) {
  std::vector<VertexId> order{component.front()};
  std::vector<bool> seen(h.num_vertices(), false);
  seen[component.front()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId w : h.neighbors(order[i])) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  return order;
}

// Renumbers root vertices by first appearance when scanning the component's
// vertices in ascending order.
std::vector<std::pair<VertexId, VertexId>> normalise(const Partial& p, const std::vector<VertexId>& order,
                                                     const std::vector<VertexId>& sorted_component) {
  std::map<VertexId, std::uint32_t> position;
  for (std::uint32_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::vector<std::int64_t> relabel(p.star.size(), -1);
  VertexId next = 0;
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(sorted_component.size());
  for (VertexId v : sorted_component) {
    const Ends& e = p.ends[position.at(v)];
    for (auto r : e) {
      if (relabel[r] < 0) relabel[r] = next++;
    }
    out.emplace_back(static_cast<VertexId>(relabel[e[0]]), static_cast<VertexId>(relabel[e[1]]));
  }
  return out;
}

bool is_triangle(const SimpleGraph& h, const std::vector<VertexId>& comp) {
  return comp.size() == 3 && h.has_edge(comp[0], comp[1]) && h.has_edge(comp[1], comp[2]) &&
         h.has_edge(comp[0], comp[2]);
}

std::size_t distinct_endpoints(const std::vector<std::pair<VertexId, VertexId>>& ends) {
  VertexId hi = 0;
  for (auto [a, b] : ends) hi = std::max({hi, a, b});
  return ends.empty() ? 0 : hi + 1;
}

std::optional<std::vector<VertexId>> recognize_component(const SimpleGraph& h, const std::vector<VertexId>& comp,
                                                         ComponentRoots* roots) {
  auto order = bfs_order(h, comp);
  auto grown = grow_roots(h, order);
  if (grown.roots.empty()) {
    return std::vector<VertexId>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(grown.failed_at));
  }
  if (roots) {
    roots->vertices = comp;
    for (const auto& p : grown.roots) roots->candidates.push_back(normalise(p, order, comp));
    // K3: prefer the claw root (four root vertices) over the triangle.
    if (is_triangle(h, comp)) {
      std::stable_sort(roots->candidates.begin(), roots->candidates.end(), [](const auto& a, const auto& b) {
        return distinct_endpoints(a) > distinct_endpoints(b);
      });
    }
  }
  return std::nullopt;
}

std::vector<VertexId> minimise_obstruction(const SimpleGraph& h, std::vector<VertexId> failing) {
  std::sort(failing.begin(), failing.end());
  for (std::size_t i = 0; i < failing.size();) {
    std::vector<VertexId> trial = failing;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_line_graph(h.induced(trial))) {
      failing = std::move(trial);
    } else {
      ++i;
    }
  }
  return failing;
}

}  // namespace

std::vector<std::size_t> SimpleRoot::ambiguous_components() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].candidates.size() > 1) out.push_back(i);
  }
  return out;
}

std::pair<Multigraph, VertexEdgeMap> assemble_root(std::size_t line_vertices, const std::vector<ComponentRoots>& comps,
                                                   const std::vector<std::size_t>& choice) {
  if (choice.size() != comps.size()) throw std::invalid_argument("one root choice per component required");
  std::vector<std::pair<VertexId, VertexId>> ends(line_vertices);
  std::vector<bool> covered(line_vertices, false);
  VertexId offset = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& cand = comps[c].candidates.at(choice[c]);
    for (std::size_t i = 0; i < comps[c].vertices.size(); ++i) {
      VertexId v = comps[c].vertices[i];
      ends.at(v) = {cand[i].first + offset, cand[i].second + offset};
      covered[v] = true;
    }
    offset += static_cast<VertexId>(distinct_endpoints(cand));
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("components do not cover every line-graph vertex");
  }
  // Root vertices renumbered by first use in line-vertex order.
  std::vector<std::int64_t> relabel(offset, -1);
  VertexId next = 0;
  for (auto& [a, b] : ends) {
    for (VertexId* r : {&a, &b}) {
      if (relabel[*r] < 0) relabel[*r] = next++;
      *r = static_cast<VertexId>(relabel[*r]);
    }
  }
  Multigraph root(next);
  for (auto [a, b] : ends) root.add_edge(a, b);
  return {std::move(root), VertexEdgeMap::identity(line_vertices)};
}

bool is_line_graph(const SimpleGraph& h) {
  for (const auto& comp : connected_components(h)) {
    if (recognize_component(h, comp, nullptr)) return false;
  }
  return true;
}

Recognition<SimpleRoot> recognize_line_graph(const SimpleGraph& h) {
  SimpleRoot result;
  for (const auto& comp : connected_components(h)) {
    ComponentRoots roots;
    if (auto failing = recognize_component(h, comp, &roots)) {
      auto minimal = minimise_obstruction(h, std::move(*failing));
      SimpleGraph core = h.induced(minimal);
      const Catalog& beineke = load_catalog("beineke9");
      if (auto idx = find_isomorphic_entry(beineke, core)) {
        const auto& entry = beineke.entries[*idx];
        auto iso = is_isomorphic(entry.graph, core);
        Embedding emb;
        for (VertexId p : iso->mapping) emb.mapping.push_back(minimal[p]);
        return Recognition<SimpleRoot>::failure(Witness{entry.name, std::move(emb), minimal});
      }
      return Recognition<SimpleRoot>::failure(Witness{"", {}, std::move(minimal)});
    }
    result.components.push_back(std::move(roots));
  }
  std::tie(result.root, result.map) =
      assemble_root(h.num_vertices(), result.components, std::vector<std::size_t>(result.components.size(), 0));
  if (!same_adjacency(line_graph_through(result.root, result.map), h)) {
    throw std::logic_error("line-graph recognition produced a root that does not reproduce the input");
  }
  return Recognition<SimpleRoot>::success(std::move(result));
}

}  // namespace linemg
