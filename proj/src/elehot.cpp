#include "linemg/elehot.hpp"

#include <algorithm>
#include <stdexcept>

#include "linemg/forbidden.hpp"

namespace linemg {

TwinPartition contract_twins(const SimpleGraph& gc) {
  TwinPartition tp;
  tp.classes = true_twin_classes(gc);
  tp.class_map.assign(gc.num_vertices(), 0);
  for (VertexId c = 0; c < tp.classes.size(); ++c) {
    for (VertexId v : tp.classes[c]) tp.class_map[v] = c;
    tp.weights.push_back(tp.classes[c].size());
  }
  // Twins share neighbourhoods, so the representative's edges suffice.
  tp.h = SimpleGraph(tp.classes.size());
  for (VertexId c = 0; c < tp.classes.size(); ++c) {
    for (VertexId w : gc.neighbors(tp.classes[c].front())) {
      VertexId d = tp.class_map[w];
      if (d != c) tp.h.add_edge(c, d);
    }
  }
  std::vector<Weight> w;
  for (auto s : tp.weights) w.emplace_back(static_cast<std::int64_t>(s));
  tp.h.set_vertex_weights(std::move(w));
  return tp;
}

RootResult expand_root(const Multigraph& h_root, const VertexEdgeMap& map_h, const TwinPartition& tp) {
  if (map_h.size() != tp.classes.size()) throw std::invalid_argument("h root does not match the twin partition");
  Multigraph root(h_root.num_vertices());
  std::vector<EdgeId> edge_of(tp.class_map.size());
  for (VertexId u = 0; u < tp.classes.size(); ++u) {
    const Edge& e = h_root.edge(map_h.edge_of(u));
    for (VertexId member : tp.classes[u]) edge_of[member] = root.add_edge(e.u, e.v);
  }
  return {std::move(root), VertexEdgeMap(std::move(edge_of))};
}

bool verify_root(const SimpleGraph& gc, const RootResult& rr) {
  if (rr.root.num_edges() != gc.num_vertices() || rr.map.size() != gc.num_vertices()) return false;
  return same_adjacency(line_graph_through(rr.root, rr.map), gc);
}

bool is_line_multigraph(const SimpleGraph& gc) { return is_line_graph(contract_twins(gc).h); }

namespace {

Witness minimal_forbidden(const SimpleGraph& gc, const Witness& lifted) {
  std::vector<VertexId> keep;
  if (!lifted.embedding.mapping.empty() && !is_line_multigraph(gc.induced(lifted.embedding.mapping))) {
    keep = lifted.embedding.mapping;
  } else {
    keep.resize(gc.num_vertices());
    for (VertexId v = 0; v < gc.num_vertices(); ++v) keep[v] = v;
  }
  std::sort(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size();) {
    auto trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_line_multigraph(gc.induced(trial))) {
      keep = std::move(trial);
    } else {
      ++i;
    }
  }
  SimpleGraph core = gc.induced(keep);
  const Catalog& seven = load_catalog("multigraph7");
  if (auto idx = find_isomorphic_entry(seven, core)) {
    auto iso = is_isomorphic(seven.entries[*idx].graph, core);
    Embedding emb;
    for (VertexId p : iso->mapping) emb.mapping.push_back(keep[p]);
    return Witness{seven.entries[*idx].name, std::move(emb), keep};
  }
  return Witness{"", {}, keep};
}

}  // namespace

ElehotOutcome elehot(const SimpleGraph& gc, const ElehotOptions& options) {
  ElehotOutcome out;
  out.twins = contract_twins(gc);
  const TwinPartition& tp = out.twins;

  auto rec = recognize_line_graph(tp.h);
  if (!rec) {
    const Witness& hw = rec.witness();
    out.lifted.pattern = hw.pattern;
    for (VertexId v : hw.embedding.mapping) out.lifted.embedding.mapping.push_back(tp.classes[v].front());
    for (VertexId v : hw.vertices) out.lifted.vertices.push_back(tp.classes[v].front());
    std::sort(out.lifted.vertices.begin(), out.lifted.vertices.end());
    if (options.minimal_witness) out.forbidden = minimal_forbidden(gc, out.lifted);
    return out;
  }

  const SimpleRoot& hr = rec.root();
  auto attempt = [&](const std::vector<std::size_t>& choice) -> std::optional<RootResult> {
    auto [h_root, map_h] = assemble_root(tp.h.num_vertices(), hr.components, choice);
    RootResult rr = expand_root(h_root, map_h, tp);
    if (verify_root(gc, rr)) return rr;
    return std::nullopt;
  };

  std::vector<std::size_t> choice(hr.components.size(), 0);
  if (auto rr = attempt(choice)) {
    out.root = std::move(rr);
    return out;
  }
  // Alternative roots exist only for K3 components; try every combination.
  auto ambiguous = hr.ambiguous_components();
  if (ambiguous.size() > 16) throw std::logic_error("too many ambiguous components");
  for (std::uint32_t mask = 1; mask < (1u << ambiguous.size()); ++mask) {
    for (std::size_t i = 0; i < ambiguous.size(); ++i) choice[ambiguous[i]] = (mask >> i) & 1u;
    if (auto rr = attempt(choice)) {
      out.root = std::move(rr);
      return out;
    }
  }
  throw std::logic_error("no expansion of the contracted root reproduces the input graph");
}

}  // namespace linemg
