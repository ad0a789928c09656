#include "cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "linemg/elehot.hpp"
#include "linemg/forbidden.hpp"
#include "linemg/graph.hpp"
#include "linemg/linegraph.hpp"
#include "linemg/matching.hpp"
#include "linemg/scheduler.hpp"

namespace linemg::cli {
namespace {

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

SimpleGraph read_simple(const std::string& path) { return parse_simple_graph(read_text_file(path)); }

std::string map_csv(std::string_view header, const VertexEdgeMap& map) {
  std::ostringstream os;
  os << header << '\n';
  for (VertexId v = 0; v < map.size(); ++v) os << v << ',' << map.edge_of(v) << '\n';
  return os.str();
}

std::string root_summary(const Multigraph& root) {
  std::map<std::pair<VertexId, VertexId>, std::size_t> pairs;
  for (const Edge& e : root.edges()) ++pairs[std::minmax(e.u, e.v)];
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& [pair, count] : pairs) ++histogram[count];
  std::ostringstream os;
  os << "root: " << root.num_vertices() << " vertices, " << root.num_edges() << " edges\n";
  os << "multiplicity histogram:";
  for (const auto& [mult, count] : histogram) os << ' ' << mult << 'x' << count;
  os << '\n';
  return os.str();
}

std::string describe(const Witness& w) {
  if (!w.pattern.empty()) return w.pattern + " at vertices " + join(w.embedding.mapping);
  return "minimal failing vertex set " + join(w.vertices);
}

/// Writes `content` to `path`, or to `out` when `path` is empty.
void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty()) {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

struct Options {
  std::string input;
  std::string mode = "multi";
  std::string out_path;
  std::string map_path;
  std::size_t hops = 1;
  std::string catalog = "multigraph7";
  std::size_t max_n = 7;
  std::string membership = "multi";
  std::string weights_path;
  std::string method = "exact";
  std::string queues_path;
  std::string rates_path;
  std::size_t slots = 1000;
  std::uint64_t seed = 1;
  std::string policy = "auto";
  std::string summary_path;
  std::string log_path;
  std::size_t exact_limit = 25;
};

int cmd_recognize(const Options& o, std::ostream& out, std::ostream&) {
  SimpleGraph g = read_simple(o.input);
  if (o.mode == "simple") {
    auto rec = recognize_line_graph(g);
    if (!rec) {
      out << "NO\nwitness: " << describe(rec.witness()) << '\n';
      return kNo;
    }
    out << "YES\n" << root_summary(rec.root().root);
    return kYes;
  }
  auto outcome = elehot(g);
  if (!outcome) {
    const Witness& w = outcome.forbidden.pattern.empty() ? outcome.lifted : outcome.forbidden;
    out << "NO\nwitness: " << describe(w) << '\n';
    return kNo;
  }
  out << "YES\n" << root_summary(outcome.root->root);
  return kYes;
}

int cmd_root(const Options& o, std::ostream& out, std::ostream& err) {
  SimpleGraph g = read_simple(o.input);
  auto outcome = elehot(g);
  if (!outcome) {
    const Witness& w = outcome.forbidden.pattern.empty() ? outcome.lifted : outcome.forbidden;
    err << "not a line multigraph; witness: " << describe(w) << '\n';
    return kNo;
  }
  emit(out, o.out_path, serialize_graph(outcome.root->root));
  std::string map_path = o.map_path.empty() && !o.out_path.empty() ? o.out_path + ".map.csv" : o.map_path;
  if (!map_path.empty()) write_text_file(map_path, map_csv("gc_vertex,root_edge", outcome.root->map));
  return kYes;
}

int write_line_graph(const Options& o, const LineGraphResult& lg, std::string_view header, std::ostream& out) {
  emit(out, o.out_path, serialize_simple_graph(lg.graph));
  std::string map_path = o.map_path.empty() && !o.out_path.empty() ? o.out_path + ".map.csv" : o.map_path;
  if (!map_path.empty()) write_text_file(map_path, map_csv(header, lg.map));
  return kYes;
}

int cmd_linegraph(const Options& o, std::ostream& out, std::ostream&) {
  return write_line_graph(o, line_graph(read_graph_file(o.input)), "line_vertex,edge_id", out);
}

int cmd_conflict(const Options& o, std::ostream& out, std::ostream&) {
  return write_line_graph(o, conflict_graph(read_graph_file(o.input), o.hops), "gc_vertex,link_id", out);
}

int cmd_forbidden(const Options& o, std::ostream& out, std::ostream&) {
  SimpleGraph g = read_simple(o.input);
  const Catalog& c = load_catalog(o.catalog);
  auto hits = scan(g, c);
  for (const auto& h : hits) out << h.name << ": " << join(h.embedding.mapping) << '\n';
  out << "hits: " << hits.size() << '\n';
  return hits.empty() ? kYes : kNo;
}

int cmd_derive(const Options& o, std::ostream& out, std::ostream&) {
  Catalog c = o.membership == "simple" ? derive_minimal_forbidden(o.max_n, is_line_graph, "G")
                                       : derive_minimal_forbidden(o.max_n);
  if (o.out_path.empty()) {
    out << serialize_catalog(c);
  } else {
    write_text_file(o.out_path, serialize_catalog(c));
  }
  out << "count: " << c.entries.size() << '\n';
  return kYes;
}

int cmd_mwm(const Options& o, std::ostream& out, std::ostream&) {
  Multigraph g = read_graph_file(o.input);
  auto red = reduce_multigraph(g);
  auto m = max_weight_matching(red.simple);
  std::vector<EdgeId> edges;
  for (EdgeId k : m.edges) edges.push_back(red.survivor[k]);
  std::sort(edges.begin(), edges.end());
  out << "edges: " << join(edges) << "\nweight: " << m.weight << '\n';
  return kYes;
}

int cmd_mwis(const Options& o, std::ostream& out, std::ostream&) {
  SimpleGraph g = read_simple(o.input);
  std::vector<Weight> w(g.num_vertices(), Weight{1});
  if (!o.weights_path.empty()) w = parse_queue_csv(read_text_file(o.weights_path), g.num_vertices(), "vertex_id");
  std::vector<VertexId> chosen;
  if (o.method == "greedy") {
    chosen = greedy_mwis(g, w);
  } else {
    g.set_vertex_weights(w);
    chosen = brute_force_mwis(g).vertices;
  }
  Weight total{0};
  for (VertexId v : chosen) total += w[v];
  out << "vertices: " << join(chosen) << "\nweight: " << total << '\n';
  return kYes;
}

Pipeline pipeline_for(const Options& o, std::ostream& err) {
  PipelineOptions po;
  po.exact_limit = o.exact_limit;
  Pipeline p = build_pipeline(read_graph_file(o.input), o.hops, parse_policy(o.policy), po);
  if (p.mode != ScheduleMode::RootMwm && !p.witness.vertices.empty()) {
    err << "conflict graph is not a line multigraph (" << describe(p.witness) << "); using " << to_string(p.mode)
        << '\n';
  }
  return p;
}

int cmd_schedule(const Options& o, std::ostream& out, std::ostream& err) {
  Pipeline p = pipeline_for(o, err);
  auto queues = parse_queue_csv(read_text_file(o.queues_path), p.network.num_edges());
  auto links = schedule_slot(p, queues);
  Weight total{0};
  for (EdgeId l : links) total += queues[l];
  out << "mode: " << to_string(p.mode) << "\nlinks: " << join(links) << "\nweight: " << total << '\n';
  return kYes;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  Pipeline p = pipeline_for(o, err);
  auto rates = parse_rate_csv(read_text_file(o.rates_path), p.network.num_edges());
  SlotLog log = simulate(p, rates, o.slots, o.seed);
  if (!o.out_path.empty()) write_text_file(o.out_path, slot_totals_csv(log));
  if (!o.summary_path.empty()) write_text_file(o.summary_path, summary_csv(log, rates));
  if (!o.log_path.empty()) write_text_file(o.log_path, slot_log_jsonl(log));
  std::vector<std::string> throughput;
  for (auto served : log.served_per_link) {
    std::ostringstream os;
    os << static_cast<double>(served) / static_cast<double>(o.slots);
    throughput.push_back(os.str());
  }
  out << "mode " << to_string(p.mode) << " slots " << o.slots << " seed " << o.seed << " mean_total_queue "
      << log.mean_total_queue << " final_total_queue " << log.final_total_queue << " throughput "
      << join(throughput) << '\n';
  return kYes;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line multigraph recognition, root reconstruction and MaxWeight link scheduling", "linemg"};
  app.require_subcommand(1);
  Options o;
  using Handler = int (*)(const Options&, std::ostream&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("graph", o.input, what)->required()->check(CLI::ExistingFile);
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out,-o", o.out_path, "output file (default stdout)"); };
  auto map_opt = [&](CLI::App* sub) { sub->add_option("--map", o.map_path, "map CSV (default <out>.map.csv)"); };
  auto hops_opt = [&](CLI::App* sub) { sub->add_option("--hops,-M", o.hops, "interference radius M")->required(); };
  auto policy_opts = [&](CLI::App* sub) {
    sub->add_option("--policy", o.policy, "auto, exact or greedy")->check(CLI::IsMember({"auto", "exact", "greedy"}));
    sub->add_option("--exact-limit", o.exact_limit, "largest conflict graph for exact MWIS fallback");
  };

  auto* recognize = app.add_subcommand("recognize", "decide whether a graph is a line (multi)graph");
  input(recognize, "edge-list file of the graph");
  recognize->add_option("--mode", o.mode, "simple or multi")->check(CLI::IsMember({"simple", "multi"}));
  commands.emplace_back(recognize, cmd_recognize);

  auto* root = app.add_subcommand("root", "write a root multigraph and the vertex/edge map");
  input(root, "edge-list file of the conflict graph");
  out_opt(root);
  map_opt(root);
  commands.emplace_back(root, cmd_root);

  auto* lg = app.add_subcommand("linegraph", "line graph of a multigraph");
  input(lg, "edge-list file of the multigraph");
  out_opt(lg);
  map_opt(lg);
  commands.emplace_back(lg, cmd_linegraph);

  auto* conflict = app.add_subcommand("conflict", "M-hop conflict graph of a network");
  input(conflict, "edge-list file of the network");
  hops_opt(conflict);
  out_opt(conflict);
  map_opt(conflict);
  commands.emplace_back(conflict, cmd_conflict);

  auto* forbidden = app.add_subcommand("forbidden", "scan a graph for catalog subgraphs");
  input(forbidden, "edge-list file of the graph");
  forbidden->add_option("--catalog", o.catalog, "beineke9 or multigraph7");
  commands.emplace_back(forbidden, cmd_forbidden);

  auto* derive = app.add_subcommand("derive", "derive the minimal forbidden induced subgraphs");
  derive->add_option("--max-n", o.max_n, "largest vertex count (1..7)")->check(CLI::Range(1, 7));
  derive->add_option("--membership", o.membership, "multi (line multigraphs) or simple (line graphs)")
      ->check(CLI::IsMember({"simple", "multi"}));
  out_opt(derive);
  commands.emplace_back(derive, cmd_derive);

  auto* mwm = app.add_subcommand("mwm", "maximum-weight matching of a weighted multigraph");
  input(mwm, "edge-list file with edge weights");
  commands.emplace_back(mwm, cmd_mwm);

  auto* mwis = app.add_subcommand("mwis", "maximum-weight independent set");
  input(mwis, "edge-list file of the graph");
  mwis->add_option("--weights", o.weights_path, "CSV vertex_id,value (default all 1)")->check(CLI::ExistingFile);
  mwis->add_option("--method", o.method, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
  commands.emplace_back(mwis, cmd_mwis);

  auto* schedule = app.add_subcommand("schedule", "MaxWeight schedule for one slot");
  input(schedule, "edge-list file of the network");
  hops_opt(schedule);
  schedule->add_option("--queues", o.queues_path, "CSV link_id,value")->required()->check(CLI::ExistingFile);
  policy_opts(schedule);
  commands.emplace_back(schedule, cmd_schedule);

  auto* sim = app.add_subcommand("simulate", "slotted MaxWeight queueing simulation");
  input(sim, "edge-list file of the network");
  hops_opt(sim);
  sim->add_option("--rates", o.rates_path, "CSV link_id,value")->required()->check(CLI::ExistingFile);
  sim->add_option("--slots", o.slots, "number of slots")->check(CLI::PositiveNumber);
  sim->add_option("--seed", o.seed, "RNG seed");
  sim->add_option("--out,-o", o.out_path, "per-slot totals CSV");
  sim->add_option("--summary", o.summary_path, "per-link summary CSV");
  sim->add_option("--log", o.log_path, "full slot log as JSON lines");
  policy_opts(sim);
  commands.emplace_back(sim, cmd_simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(o, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"linemg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace linemg::cli
