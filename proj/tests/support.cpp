#include "support.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace linemg::test {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

SimpleGraph random_graph(Rng& rng, std::size_t n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Multigraph random_multigraph(Rng& rng, std::size_t n, std::size_t m, double parallel) {
  if (n < 2) throw std::invalid_argument("need two vertices");
  Multigraph g(n);
  std::bernoulli_distribution repeat(parallel);
  for (std::size_t i = 0; i < m; ++i) {
    if (g.num_edges() > 0 && repeat(rng)) {
      const Edge& e = g.edge(static_cast<EdgeId>(uniform(rng, 0, static_cast<std::int64_t>(g.num_edges()) - 1)));
      g.add_edge(e.u, e.v);
      continue;
    }
    auto u = static_cast<VertexId>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto v = static_cast<VertexId>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

SimpleGraph shuffled(Rng& rng, const SimpleGraph& g, std::vector<VertexId>* perm) {
  std::vector<VertexId> p(g.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  SimpleGraph out(g.num_vertices());
  for (auto [u, v] : g.edge_list()) out.add_edge(p[u], p[v]);
  if (perm) *perm = p;
  return out;
}

std::vector<std::vector<bool>> adjacency_matrix(const SimpleGraph& g) {
  std::vector<std::vector<bool>> a(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
  for (auto [u, v] : g.edge_list()) a[u][v] = a[v][u] = true;
  return a;
}

std::vector<std::vector<int>> distances(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  auto a = adjacency_matrix(g);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      for (std::size_t y = 0; y < n; ++y) {
        if (a[x][y] && d[s][y] < 0) {
          d[s][y] = d[s][x] + 1;
          q.push_back(y);
        }
      }
    }
  }
  return d;
}

bool isomorphic_by_permutation(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const std::size_t n = a.num_vertices();
  auto ma = adjacency_matrix(a);
  auto mb = adjacency_matrix(b);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      for (std::size_t v = u + 1; v < n && ok; ++v) ok = ma[u][v] == mb[p[u]][p[v]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::optional<std::vector<VertexId>> first_induced_by_enumeration(const SimpleGraph& host,
                                                                  const SimpleGraph& pattern) {
  const std::size_t k = pattern.num_vertices();
  const std::size_t n = host.num_vertices();
  if (k > n) return std::nullopt;
  auto mh = adjacency_matrix(host);
  auto mp = adjacency_matrix(pattern);
  std::vector<VertexId> map(k, 0);
  // Odometer over all k-tuples in lexicographic order.
  while (true) {
    bool injective = true;
    for (std::size_t i = 0; i < k && injective; ++i) {
      for (std::size_t j = i + 1; j < k && injective; ++j) injective = map[i] != map[j];
    }
    if (injective) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        for (std::size_t j = i + 1; j < k && ok; ++j) ok = mp[i][j] == mh[map[i]][map[j]];
      }
      if (ok) return map;
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++map[pos] < n) break;
      map[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (k == 0) return map;
  }
}

std::vector<std::vector<bool>> line_adjacency(const Multigraph& g) {
  const std::size_t m = g.num_edges();
  std::vector<std::vector<bool>> a(m, std::vector<bool>(m, false));
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = 0; j < m; ++j) {
      if (i == j) continue;
      const Edge& x = g.edge(i);
      const Edge& y = g.edge(j);
      a[i][j] = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
    }
  }
  return a;
}

namespace {

struct RootSearch {
  std::vector<std::vector<bool>> adj;
  std::size_t n = 0;
  std::size_t max_vertices = 0;
  bool allow_parallel = false;
  std::vector<std::pair<VertexId, VertexId>> ends;

  bool shares(std::pair<VertexId, VertexId> a, std::pair<VertexId, VertexId> b) const {
    return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
  }

  bool extend(std::size_t i, VertexId used) {
    if (i == n) return true;
    // New root vertices are introduced in order (used, used+1) to break
    // relabelling symmetry.
    for (VertexId a = 0; a <= used && a < max_vertices; ++a) {
      const VertexId b_max = a == used ? used + 1 : used;
      for (VertexId b = a + 1; b <= b_max && b < max_vertices; ++b) {
        std::pair<VertexId, VertexId> e{a, b};
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (!allow_parallel && ends[j] == e) ok = false;
          if (ok && shares(ends[j], e) != static_cast<bool>(adj[i][j])) ok = false;
        }
        if (!ok) continue;
        ends[i] = e;
        VertexId next_used = std::max<VertexId>(used, b + 1);
        if (extend(i + 1, next_used)) return true;
      }
    }
    return false;
  }
};

}  // namespace

bool has_root_by_search(const SimpleGraph& g, bool allow_parallel) {
  RootSearch s;
  s.adj = adjacency_matrix(g);
  s.n = g.num_vertices();
  s.max_vertices = s.n + 1;
  s.allow_parallel = allow_parallel;
  s.ends.resize(s.n);
  if (s.n == 0) return true;
  return s.extend(0, 0);
}

std::int64_t mwm_by_subsets(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                            const std::vector<std::int64_t>& weights) {
  const std::size_t m = edges.size();
  if (m > 20) throw std::length_error("too many edges");
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<bool> used(n, false);
    std::int64_t w = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      auto [u, v] = edges[i];
      if (used[u] || used[v]) ok = false;
      used[u] = used[v] = true;
      w += weights[i];
    }
    if (ok) best = std::max(best, w);
  }
  return best;
}

std::int64_t mwis_by_subsets(const SimpleGraph& g, const std::vector<std::int64_t>& weights) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw std::length_error("too many vertices");
  auto a = adjacency_matrix(g);
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t w = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((mask >> j & 1u) && a[i][j]) ok = false;
      }
      w += weights[i];
    }
    if (ok) best = std::max(best, w);
  }
  return best;
}

}  // namespace linemg::test
