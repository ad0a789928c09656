#include "linemg/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace linemg {

WeightedReduction reduce_multigraph(const Multigraph& g) {
  WeightedReduction red;
  red.simple.num_vertices = g.num_vertices();
  std::map<std::pair<VertexId, VertexId>, std::size_t> slot;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = slot.try_emplace({key.first, key.second}, red.survivor.size());
    if (inserted) {
      red.simple.edges.push_back({key.first, key.second, e.weight});
      red.survivor.push_back(id);
    } else if (e.weight > red.simple.edges[it->second].weight) {
      red.simple.edges[it->second].weight = e.weight;
      red.survivor[it->second] = id;
    }
  }
  return red;
}

bool is_matching(const WeightedGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<bool> used(g.num_vertices, false);
  for (EdgeId k : edges) {
    if (k >= g.edges.size()) return false;
    const auto& e = g.edges[k];
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

bool is_independent(const SimpleGraph& g, const std::vector<VertexId>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

void validate(const WeightedGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : g.edges) {
    if (e.u == e.v) throw std::invalid_argument("matching input has a loop");
    if (e.u >= g.num_vertices || e.v >= g.num_vertices) throw std::out_of_range("matching edge endpoint out of range");
    if (e.weight.is_negative()) throw std::invalid_argument("matching weights must be non-negative");
    seen.push_back(std::minmax(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("matching input has parallel edges; reduce it first");
  }
}

// Common-denominator integer weights, doubled so every dual stays integral.
std::vector<std::int64_t> integer_weights(const WeightedGraph& g) {
  std::int64_t lcm = 1;
  for (const auto& e : g.edges) {
    lcm = std::lcm(lcm, e.weight.den());
    if (lcm > (std::int64_t{1} << 40)) throw std::overflow_error("weight denominators too large for exact matching");
  }
  std::vector<std::int64_t> w;
  w.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    __int128 scaled = static_cast<__int128>(e.weight.num()) * (lcm / e.weight.den()) * 2;
    if (scaled > (static_cast<__int128>(1) << 60)) throw std::overflow_error("edge weight too large for exact matching");
    w.push_back(static_cast<std::int64_t>(scaled));
  }
  return w;
}

// Edmonds' primal-dual weighted matching with blossom shrinking, following
// the well-known O(n^3) formulation by Galil. Vertices 0..n-1, blossoms
// n..2n-1. Endpoint p of edge k is 2k (first end) or 2k+1 (second end).
class Blossom {
public:
  Blossom(std::size_t n, std::vector<std::pair<int, int>> ends, std::vector<std::int64_t> weight)
      : n_(static_cast<int>(n)), m_(static_cast<int>(ends.size())), ends_(std::move(ends)), w_(std::move(weight)) {}

  /// mate_edge[v] = matched edge of v or -1.
  std::vector<int> solve() {
    endpoint_.resize(2 * m_);
    for (int k = 0; k < m_; ++k) {
      endpoint_[2 * k] = ends_[k].first;
      endpoint_[2 * k + 1] = ends_[k].second;
    }
    neighbend_.assign(n_, {});
    for (int k = 0; k < m_; ++k) {
      neighbend_[ends_[k].first].push_back(2 * k + 1);
      neighbend_[ends_[k].second].push_back(2 * k);
    }
    std::int64_t maxw = 0;
    for (auto x : w_) maxw = std::max(maxw, x);

    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    std::iota(inblossom_.begin(), inblossom_.end(), 0);
    parent_.assign(2 * n_, -1);
    childs_.assign(2 * n_, {});
    base_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) base_[v] = v;
    endps_.assign(2 * n_, {});
    bestedge_.assign(2 * n_, -1);
    bestedges_.assign(2 * n_, {});
    has_bestedges_.assign(2 * n_, false);
    unused_.clear();
    for (int b = n_; b < 2 * n_; ++b) unused_.push_back(b);
    dual_.assign(2 * n_, 0);
    for (int v = 0; v < n_; ++v) dual_[v] = maxw / 2;
    allow_.assign(m_, false);

    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) {
        bestedges_[b].clear();
        has_bestedges_[b] = false;
      }
      std::fill(allow_.begin(), allow_.end(), false);
      queue_.clear();
      for (int v = 0; v < n_; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
      }
      if (!run_stage()) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) expand(b, true);
      }
    }
    std::vector<int> out(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) out[v] = mate_[v] / 2;
    }
    return out;
  }

private:
  std::int64_t slack(int k) const { return dual_[ends_[k].first] + dual_[ends_[k].second] - w_[k]; }

  template <typename Fn>
  void leaves(int b, Fn&& fn) const {
    if (b < n_) {
      fn(b);
      return;
    }
    for (int c : childs_[b]) leaves(c, fn);
  }

  std::vector<int> leaf_list(int b) const {
    std::vector<int> out;
    leaves(b, [&](int v) { out.push_back(v); });
    return out;
  }

  static int wrap(int j, int len) { return ((j % len) + len) % len; }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves(b, [&](int v) { queue_.push_back(v); });
    } else {
      int base = base_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = base_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = ends_[k].first, w = ends_[k].second;
    int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
    int b = unused_.back();
    unused_.pop_back();
    base_[b] = base;
    parent_[b] = -1;
    parent_[bb] = b;
    std::vector<int> path, endps;
    while (bv != bb) {
      parent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      parent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    childs_[b] = path;
    endps_[b] = endps;
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dual_[b] = 0;
    leaves(b, [&](int x) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    });

    std::vector<int> bestto(2 * n_, -1);
    for (int sub : path) {
      std::vector<std::vector<int>> lists;
      if (!has_bestedges_[sub]) {
        leaves(sub, [&](int x) {
          std::vector<int> ks;
          for (int p : neighbend_[x]) ks.push_back(p / 2);
          lists.push_back(std::move(ks));
        });
      } else {
        lists.push_back(bestedges_[sub]);
      }
      for (const auto& list : lists) {
        for (int kk : list) {
          int i = ends_[kk].first, j = ends_[kk].second;
          if (inblossom_[j] == b) std::swap(i, j);
          int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 && (bestto[bj] == -1 || slack(kk) < slack(bestto[bj]))) bestto[bj] = kk;
        }
      }
      bestedges_[sub].clear();
      has_bestedges_[sub] = false;
      bestedge_[sub] = -1;
    }
    bestedges_[b].clear();
    for (int kk : bestto) {
      if (kk != -1) bestedges_[b].push_back(kk);
    }
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int kk : bestedges_[b]) {
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
    }
  }

  void expand(int b, bool endstage) {
    for (int s : childs_[b]) {
      parent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dual_[s] == 0) {
        expand(s, endstage);
      } else {
        leaves(s, [&](int v) { inblossom_[v] = s; });
      }
    }
    if (!endstage && label_[b] == 2) {
      auto& ch = childs_[b];
      auto& ep = endps_[b];
      const int len = static_cast<int>(ch.size());
      int entry = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entry) - ch.begin());
      int jstep, trick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        trick = 0;
      } else {
        jstep = -1;
        trick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[ep[wrap(j - trick, len)] ^ trick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allow_[ep[wrap(j - trick, len)] / 2] = true;
        j += jstep;
        p = ep[wrap(j - trick, len)] ^ trick;
        allow_[p / 2] = true;
        j += jstep;
      }
      int bv = ch[wrap(j, len)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (ch[wrap(j, len)] != entry) {
        bv = ch[wrap(j, len)];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int v : leaf_list(bv)) {
          found = v;
          if (label_[v] != 0) break;
        }
        if (found != -1 && label_[found] != 0) {
          label_[found] = 0;
          label_[endpoint_[mate_[base_[bv]]]] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    childs_[b].clear();
    endps_[b].clear();
    base_[b] = -1;
    bestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (parent_[t] != b) t = parent_[t];
    if (t >= n_) augment_blossom(t, v);
    auto& ch = childs_[b];
    auto& ep = endps_[b];
    const int len = static_cast<int>(ch.size());
    int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep, trick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      trick = 0;
    } else {
      jstep = -1;
      trick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = ch[wrap(j, len)];
      int p = ep[wrap(j - trick, len)] ^ trick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = ch[wrap(j, len)];
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    base_[b] = base_[ch[0]];
  }

  void augment_matching(int k) {
    for (auto [s, p] : {std::pair{ends_[k].first, 2 * k + 1}, std::pair{ends_[k].second, 2 * k}}) {
      while (true) {
        int bs = inblossom_[s];
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  // One augmentation attempt; returns false when no augmenting path exists.
  bool run_stage() {
    while (true) {
      while (!queue_.empty()) {
        int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          int k = p / 2;
          int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allow_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allow_[k] = true;
          }
          if (allow_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                return true;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }

      int type = 1;
      std::int64_t delta = std::numeric_limits<std::int64_t>::max();
      int delta_edge = -1, delta_blossom = -1;
      for (int v = 0; v < n_; ++v) delta = std::min(delta, dual_[v]);
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          std::int64_t d = slack(bestedge_[v]);
          if (d < delta) {
            delta = d;
            type = 2;
            delta_edge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          std::int64_t ks = slack(bestedge_[b]);
          if (ks % 2 != 0) throw std::logic_error("odd slack between S-blossoms");
          std::int64_t d = ks / 2;
          if (d < delta) {
            delta = d;
            type = 3;
            delta_edge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 && dual_[b] < delta) {
          delta = dual_[b];
          type = 4;
          delta_blossom = b;
        }
      }
      if (n_ == 0) delta = 0;

      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dual_[v] -= delta;
        } else if (label_[inblossom_[v]] == 2) {
          dual_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }

      if (type == 1) return false;
      if (type == 2) {
        allow_[delta_edge] = true;
        int i = ends_[delta_edge].first, j = ends_[delta_edge].second;
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        queue_.push_back(i);
      } else if (type == 3) {
        allow_[delta_edge] = true;
        queue_.push_back(ends_[delta_edge].first);
      } else {
        expand(delta_blossom, false);
      }
    }
  }

  int n_, m_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::int64_t> w_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, parent_, base_, bestedge_;
  std::vector<std::vector<int>> childs_, endps_, bestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<bool> allow_;
  std::vector<int> queue_;
};

}  // namespace

Matching max_weight_matching(const WeightedGraph& g) {
  validate(g);
  auto w = integer_weights(g);
  std::vector<std::pair<int, int>> ends;
  std::vector<std::int64_t> kept_w;
  std::vector<EdgeId> kept_id;
  for (EdgeId k = 0; k < g.edges.size(); ++k) {
    if (w[k] == 0) continue;
    ends.emplace_back(static_cast<int>(g.edges[k].u), static_cast<int>(g.edges[k].v));
    kept_w.push_back(w[k]);
    kept_id.push_back(k);
  }
  auto mate = Blossom(g.num_vertices, std::move(ends), std::move(kept_w)).solve();
  Matching out;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] < 0) continue;
    EdgeId k = kept_id[static_cast<std::size_t>(mate[v])];
    if (g.edges[k].u == v) out.edges.push_back(k);
  }
  std::sort(out.edges.begin(), out.edges.end());
  for (EdgeId k : out.edges) out.weight += g.edges[k].weight;
  if (!is_matching(g, out.edges)) throw std::logic_error("blossom matching violated the matching property");
  return out;
}

Matching brute_force_mwm(const WeightedGraph& g) {
  if (g.edges.size() > kBruteForceMwmMaxEdges) throw std::length_error("brute_force_mwm limited to " + std::to_string(kBruteForceMwmMaxEdges) + " edges");
  validate(g);
  std::vector<EdgeId> positive;
  for (EdgeId k = 0; k < g.edges.size(); ++k) {
    if (!g.edges[k].weight.is_zero()) positive.push_back(k);
  }
  std::vector<Weight> suffix(positive.size() + 1, Weight{0});
  for (std::size_t i = positive.size(); i-- > 0;) suffix[i] = suffix[i + 1] + g.edges[positive[i]].weight;

  Matching best;
  std::vector<EdgeId> current;
  std::vector<bool> used(g.num_vertices, false);
  // Include-first DFS visits optimal sets in lexicographic order, so the
  // first strict improvement wins ties.
  auto dfs = [&](auto&& self, std::size_t i, const Weight& w) -> void {
    if (w > best.weight) {
      best.weight = w;
      best.edges = current;
    }
    if (i == positive.size() || w + suffix[i] <= best.weight) return;
    const auto& e = g.edges[positive[i]];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      current.push_back(positive[i]);
      self(self, i + 1, w + e.weight);
      current.pop_back();
      used[e.u] = used[e.v] = false;
    }
    self(self, i + 1, w);
  };
  dfs(dfs, 0, Weight{0});
  return best;
}

IndependentSet brute_force_mwis(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kBruteForceMwisMaxVertices) throw std::length_error("brute_force_mwis limited to " + std::to_string(kBruteForceMwisMaxVertices) + " vertices");
  std::vector<VertexId> positive;
  for (VertexId v = 0; v < n; ++v) {
    if (!g.vertex_weight(v).is_zero()) positive.push_back(v);
  }
  std::vector<Weight> suffix(positive.size() + 1, Weight{0});
  for (std::size_t i = positive.size(); i-- > 0;) suffix[i] = suffix[i + 1] + g.vertex_weight(positive[i]);

  IndependentSet best;
  std::vector<VertexId> current;
  std::vector<int> blocked(n, 0);
  auto dfs = [&](auto&& self, std::size_t i, const Weight& w) -> void {
    if (w > best.weight) {
      best.weight = w;
      best.vertices = current;
    }
    if (i == positive.size() || w + suffix[i] <= best.weight) return;
    VertexId v = positive[i];
    if (blocked[v] == 0) {
      for (VertexId x : g.neighbors(v)) ++blocked[x];
      current.push_back(v);
      self(self, i + 1, w + g.vertex_weight(v));
      current.pop_back();
      for (VertexId x : g.neighbors(v)) --blocked[x];
    }
    self(self, i + 1, w);
  };
  dfs(dfs, 0, Weight{0});
  return best;
}

}  // namespace linemg
