#include "linemg/scheduler.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "linemg/matching.hpp"

namespace linemg {

std::string_view to_string(ScheduleMode mode) {
  switch (mode) {
    case ScheduleMode::RootMwm: return "ROOT_MWM";
    case ScheduleMode::ExactMwis: return "EXACT_MWIS";
    case ScheduleMode::Greedy: return "GREEDY";
  }
  return "?";
}

Policy parse_policy(std::string_view text) {
  if (text == "auto") return Policy::Auto;
  if (text == "exact") return Policy::Exact;
  if (text == "greedy") return Policy::Greedy;
  throw std::invalid_argument("unknown policy '" + std::string(text) + "' (auto, exact, greedy)");
}

Pipeline build_pipeline(const Multigraph& network, std::size_t hops, Policy policy, const PipelineOptions& options) {
  Pipeline p;
  p.network = network;
  p.hops = hops;
  p.conflict = conflict_graph(network, hops);
  const std::size_t n = p.conflict.graph.num_vertices();

  switch (policy) {
    case Policy::Greedy:
      p.mode = ScheduleMode::Greedy;
      return p;
    case Policy::Exact:
      if (n > std::min(options.exact_limit, kBruteForceMwisMaxVertices)) {
        throw std::length_error("conflict graph too large for exact MWIS (" + std::to_string(n) + " vertices)");
      }
      p.mode = ScheduleMode::ExactMwis;
      return p;
    case Policy::Auto:
      break;
  }
  auto outcome = elehot(p.conflict.graph, ElehotOptions{.minimal_witness = n <= 64});
  if (outcome) {
    p.mode = ScheduleMode::RootMwm;
    p.root = std::move(outcome.root);
    return p;
  }
  p.witness = outcome.forbidden.pattern.empty() ? outcome.lifted : outcome.forbidden;
  p.mode = n <= std::min(options.exact_limit, kBruteForceMwisMaxVertices) ? ScheduleMode::ExactMwis
                                                                          : ScheduleMode::Greedy;
  return p;
}

std::vector<VertexId> greedy_mwis(const SimpleGraph& gc, std::span<const Weight> weights) {
  if (weights.size() != gc.num_vertices()) throw std::invalid_argument("one weight per vertex required");
  std::vector<bool> alive(gc.num_vertices(), true);
  std::vector<VertexId> out;
  while (true) {
    std::optional<VertexId> best;
    for (VertexId v = 0; v < gc.num_vertices(); ++v) {
      if (alive[v] && !weights[v].is_zero() && (!best || weights[v] > weights[*best])) best = v;
    }
    if (!best) break;
    out.push_back(*best);
    alive[*best] = false;
    for (VertexId w : gc.neighbors(*best)) alive[w] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> schedule_slot(const Pipeline& p, std::span<const Weight> queues) {
  const auto& gc = p.conflict;
  if (queues.size() != p.network.num_edges()) {
    throw std::invalid_argument("expected " + std::to_string(p.network.num_edges()) + " queue values, got " +
                                std::to_string(queues.size()));
  }
  std::vector<Weight> vertex_weight(gc.graph.num_vertices());
  for (VertexId v = 0; v < vertex_weight.size(); ++v) vertex_weight[v] = queues[gc.map.edge_of(v)];

  std::vector<VertexId> chosen;
  switch (p.mode) {
    case ScheduleMode::RootMwm: {
      // Queue of link -> weight of its root edge; MWM on the heaviest
      // representative of every parallel class.
      const RootResult& rr = *p.root;
      Multigraph weighted(rr.root.num_vertices());
      for (EdgeId e = 0; e < rr.root.num_edges(); ++e) {
        weighted.add_edge(rr.root.edge(e).u, rr.root.edge(e).v, vertex_weight[rr.map.vertex_of(e)]);
      }
      auto red = reduce_multigraph(weighted);
      auto m = max_weight_matching(red.simple);
      for (EdgeId k : m.edges) chosen.push_back(rr.map.vertex_of(red.survivor[k]));
      break;
    }
    case ScheduleMode::ExactMwis: {
      SimpleGraph g = gc.graph;
      g.set_vertex_weights(vertex_weight);
      chosen = brute_force_mwis(g).vertices;
      break;
    }
    case ScheduleMode::Greedy:
      chosen = greedy_mwis(gc.graph, vertex_weight);
      break;
  }
  std::vector<EdgeId> links;
  links.reserve(chosen.size());
  for (VertexId v : chosen) links.push_back(gc.map.edge_of(v));
  std::sort(links.begin(), links.end());
  return links;
}

SlotLog simulate(const Pipeline& p, std::span<const double> rates, std::size_t slots, std::uint64_t seed) {
  const std::size_t links = p.network.num_edges();
  if (rates.size() != links) throw std::invalid_argument("one arrival rate per link required");
  for (double r : rates) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("arrival rates must lie in [0, 1]");
  }
  if (slots == 0) throw std::invalid_argument("simulation needs at least one slot");

  SlotLog log;
  log.slots.reserve(slots);
  log.served_per_link.assign(links, 0);
  log.arrivals_per_link.assign(links, 0);
  std::vector<std::int64_t> queue(links, 0);
  std::vector<Weight> weights(links, Weight{0});
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::int64_t total = 0;
  double accumulated = 0.0;

  for (std::size_t t = 0; t < slots; ++t) {
    SlotRecord rec;
    for (std::size_t l = 0; l < links; ++l) weights[l] = Weight{queue[l]};
    rec.scheduled = schedule_slot(p, weights);
    for (std::size_t i = 0; i < rec.scheduled.size(); ++i) {
      for (std::size_t j = i + 1; j < rec.scheduled.size(); ++j) {
        if (p.conflict.graph.has_edge(p.conflict.map.vertex_of(rec.scheduled[i]),
                                      p.conflict.map.vertex_of(rec.scheduled[j]))) {
          throw std::logic_error("scheduled links interfere");
        }
      }
    }
    for (EdgeId l : rec.scheduled) {
      if (queue[l] > 0) {
        --queue[l];
        --total;
        ++rec.served;
        ++log.served_per_link[l];
      }
    }
    for (EdgeId l = 0; l < links; ++l) {
      // One uniform draw per link per slot keeps the stream aligned across
      // rate vectors.
      if (unit(rng) < rates[l]) {
        ++queue[l];
        ++total;
        ++log.arrivals_per_link[l];
        rec.arrivals.push_back(l);
      }
    }
    rec.total_queue = total;
    accumulated += static_cast<double>(total);
    log.slots.push_back(std::move(rec));
  }
  log.final_queues = queue;
  log.final_total_queue = total;
  log.mean_total_queue = accumulated / static_cast<double>(slots);
  return log;
}

// ---- CSV ------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Returns the value column indexed by link id.
std::vector<std::string> parse_link_csv(std::string_view text, std::size_t links, std::string_view key) {
  std::vector<std::string> values(links);
  std::vector<bool> seen(links, false);
  std::size_t line_no = 0;
  bool header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError(line_no, "expected '" + std::string(key) + ",value'");
    std::string_view id_text = trim(line.substr(0, comma));
    std::string_view value = trim(line.substr(comma + 1));
    if (!header) {
      if (id_text != key || value != "value") throw ParseError(line_no, "missing header '" + std::string(key) + ",value'");
      header = true;
      continue;
    }
    std::size_t id = 0;
    auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc() || ptr != id_text.data() + id_text.size()) {
      throw ParseError(line_no, "bad link id '" + std::string(id_text) + "'");
    }
    if (id >= links) throw ParseError(line_no, "unknown id " + std::to_string(id));
    if (seen[id]) throw ParseError(line_no, "duplicate id " + std::to_string(id));
    seen[id] = true;
    values[id] = std::string(value);
  }
  if (!header) throw ParseError(0, "missing header '" + std::string(key) + ",value'");
  for (std::size_t l = 0; l < links; ++l) {
    if (!seen[l]) throw ParseError(0, "no value for id " + std::to_string(l));
  }
  return values;
}

}  // namespace

std::vector<Weight> parse_queue_csv(std::string_view text, std::size_t links, std::string_view key) {
  auto raw = parse_link_csv(text, links, key);
  std::vector<Weight> out;
  for (std::size_t l = 0; l < raw.size(); ++l) {
    Weight w = Weight::parse(raw[l]);
    if (w.is_negative()) throw ParseError(0, "negative value for id " + std::to_string(l));
    out.push_back(w);
  }
  return out;
}

std::vector<double> parse_rate_csv(std::string_view text, std::size_t links) {
  auto raw = parse_link_csv(text, links, "link_id");
  std::vector<double> out;
  for (std::size_t l = 0; l < raw.size(); ++l) {
    std::size_t used = 0;
    double r = 0.0;
    try {
      r = std::stod(raw[l], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != raw[l].size() || !(r >= 0.0 && r <= 1.0)) {
      throw ParseError(0, "rate for link " + std::to_string(l) + " must be a number in [0, 1]");
    }
    out.push_back(r);
  }
  return out;
}

std::string slot_totals_csv(const SlotLog& log) {
  std::ostringstream os;
  os << "slot,arrivals,served,total_queue\n";
  for (std::size_t t = 0; t < log.slots.size(); ++t) {
    const auto& s = log.slots[t];
    os << t << ',' << s.arrivals.size() << ',' << s.served << ',' << s.total_queue << '\n';
  }
  return os.str();
}

std::string summary_csv(const SlotLog& log, std::span<const double> rates) {
  std::ostringstream os;
  os << "link_id,arrival_rate,arrivals,served,throughput,final_queue\n";
  const double slots = static_cast<double>(std::max<std::size_t>(1, log.slots.size()));
  for (std::size_t l = 0; l < log.final_queues.size(); ++l) {
    os << l << ',' << rates[l] << ',' << log.arrivals_per_link[l] << ',' << log.served_per_link[l] << ','
       << static_cast<double>(log.served_per_link[l]) / slots << ',' << log.final_queues[l] << '\n';
  }
  return os.str();
}

std::string slot_log_jsonl(const SlotLog& log) {
  std::ostringstream os;
  for (std::size_t t = 0; t < log.slots.size(); ++t) {
    const auto& s = log.slots[t];
    nlohmann::json j = {{"slot", t},
                        {"scheduled", s.scheduled},
                        {"arrivals", s.arrivals},
                        {"served", s.served},
                        {"total_queue", s.total_queue}};
    os << j.dump() << '\n';
  }
  return os.str();
}

}  // namespace linemg
