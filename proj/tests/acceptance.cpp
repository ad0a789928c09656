// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// non-zero when any hard criterion fails; criterion 9 is a soft timing check
// and is reported without affecting the exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "linemg/elehot.hpp"
#include "linemg/forbidden.hpp"
#include "linemg/linegraph.hpp"
#include "linemg/matching.hpp"
#include "linemg/scheduler.hpp"
#include "support.hpp"

using namespace linemg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool has_twins(const SimpleGraph& g) {
  for (const auto& c : true_twin_classes(g)) {
    if (c.size() > 1) return true;
  }
  return false;
}

std::string fmt(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Outcome forbidden_set() {
  auto t0 = Clock::now();
  Catalog derived = derive_minimal_forbidden(7);
  double secs = seconds_since(t0);
  const Catalog& shipped = load_catalog("multigraph7");
  bool twin_free = std::none_of(derived.entries.begin(), derived.entries.end(),
                                [](const CatalogEntry& e) { return has_twins(e.graph); });
  bool claw = std::any_of(derived.entries.begin(), derived.entries.end(),
                          [](const CatalogEntry& e) { return is_isomorphic(e.graph, star_graph(3)).has_value(); });
  std::set<std::size_t> matched;
  for (const auto& e : derived.entries) {
    if (auto idx = find_isomorphic_entry(shipped, e.graph)) matched.insert(*idx);
  }
  bool ok = derived.entries.size() == 7 && twin_free && claw && matched.size() == 7 && secs < 600;
  return {ok, std::to_string(derived.entries.size()) + " graphs over " + std::to_string(enumerate_connected(7).size()) +
                  " connected graphs, twin-free=" + (twin_free ? "yes" : "no") + ", claw=" + (claw ? "yes" : "no") +
                  ", matched catalog " + std::to_string(matched.size()) + "/7, " + fmt(secs) + " s"};
}

Outcome recognition_equivalence() {
  const Catalog& seven = load_catalog("multigraph7");
  auto graphs = enumerate_connected(6);
  std::size_t disagree = 0;
  std::size_t yes = 0;
  for (const auto& g : graphs) {
    bool a = static_cast<bool>(elehot(g));
    bool b = krausz_oracle(g);
    bool c = scan(g, seven).empty();
    disagree += !(a == b && b == c);
    yes += a;
  }
  return {graphs.size() == 143 && disagree == 0, std::to_string(graphs.size()) + " graphs, " + std::to_string(yes) +
                                                     " line multigraphs, " + std::to_string(disagree) + " disagreements"};
}

Outcome beineke_agreement() {
  const Catalog& nine = load_catalog("beineke9");
  auto graphs = enumerate_connected(6);
  std::size_t disagree = 0;
  std::size_t yes = 0;
  for (const auto& g : graphs) {
    bool a = recognize_line_graph(g).ok();
    disagree += a != scan(g, nine).empty();
    yes += a;
  }
  return {graphs.size() == 143 && disagree == 0,
          std::to_string(graphs.size()) + " graphs, " + std::to_string(yes) + " line graphs, " +
              std::to_string(disagree) + " disagreements"};
}

Outcome root_correctness() {
  test::Rng rng(2024);
  auto t0 = Clock::now();
  std::size_t failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Multigraph r = test::random_multigraph(rng, static_cast<std::size_t>(test::uniform(rng, 2, 12)),
                                           static_cast<std::size_t>(test::uniform(rng, 1, 30)));
    SimpleGraph gc = test::shuffled(rng, line_graph(r).graph);
    auto out = elehot(gc);
    if (!out || !verify_root(gc, *out.root)) ++failures;
  }
  double secs = seconds_since(t0);
  return {failures == 0 && secs < 60, "1000 random roots, " + std::to_string(failures) + " failures, " + fmt(secs) + " s"};
}

Outcome twin_lemma() {
  test::Rng rng(7);
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto n = static_cast<std::size_t>(test::uniform(rng, 1, 16));
    SimpleGraph g = test::random_graph(rng, n, test::uniform(rng, 2, 9) / 10.0);
    auto tp = contract_twins(g);
    auto again = contract_twins(tp.h);
    bool idempotent = again.classes.size() == tp.h.num_vertices() && same_adjacency(again.h, tp.h);
    if (has_twins(tp.h) || !idempotent) ++bad;
  }
  return {bad == 0, "1000 random graphs, " + std::to_string(bad) + " violations"};
}

Outcome mwm_exactness() {
  test::Rng rng(11);
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  auto check = [&](const SimpleGraph& g) {
    WeightedGraph w{g.num_vertices(), {}};
    for (auto [u, v] : g.edge_list()) w.edges.push_back({u, v, Weight{test::uniform(rng, 0, 100)}});
    auto fast = max_weight_matching(w);
    mismatches += fast.weight != brute_force_mwm(w).weight || !is_matching(w, fast.edges);
    ++checked;
  };
  for (const auto& g : enumerate_connected(7)) {
    for (int draw = 0; draw < 3; ++draw) check(g);
  }
  std::size_t random = 0;
  while (random < 500) {
    SimpleGraph g = test::random_graph(rng, static_cast<std::size_t>(test::uniform(rng, 2, 16)),
                                       test::uniform(rng, 1, 5) / 10.0);
    if (g.num_edges() > 20) continue;
    check(g);
    ++random;
  }
  return {mismatches == 0, std::to_string(checked) + " weighted graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome scheduling_equivalence() {
  test::Rng rng(13);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Multigraph r = test::random_multigraph(rng, static_cast<std::size_t>(test::uniform(rng, 2, 10)),
                                           static_cast<std::size_t>(test::uniform(rng, 1, 20)));
    Pipeline p = build_pipeline(r, 1);
    if (p.mode != ScheduleMode::RootMwm) {
      ++mismatches;
      continue;
    }
    std::vector<Weight> q;
    for (std::size_t l = 0; l < r.num_edges(); ++l) q.emplace_back(test::uniform(rng, 0, 50));
    auto links = schedule_slot(p, q);
    Weight got{0};
    for (EdgeId l : links) got += q[l];
    SimpleGraph gc = p.conflict.graph;
    std::vector<Weight> vw(gc.num_vertices());
    for (VertexId v = 0; v < vw.size(); ++v) vw[v] = q[p.conflict.map.edge_of(v)];
    gc.set_vertex_weights(vw);
    mismatches += got != brute_force_mwis(gc).weight;
  }
  return {mismatches == 0, "300 conflict graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome simulator_stability() {
  Pipeline star = build_pipeline(to_multigraph(star_graph(3)), 1);
  std::vector<double> light(3, 0.25);
  std::vector<double> heavy(3, 0.4);
  auto t0 = Clock::now();
  SlotLog a = simulate(star, light, 100000, 7);
  double ta = seconds_since(t0);
  t0 = Clock::now();
  SlotLog b = simulate(star, heavy, 100000, 7);
  double tb = seconds_since(t0);
  bool ok = a.mean_total_queue < 50.0 && b.final_total_queue >= 10000 && ta < 30 && tb < 30;
  return {ok, "mean total queue at 0.25 = " + fmt(a.mean_total_queue) + " (< 50), final total queue at 0.4 = " +
                  std::to_string(b.final_total_queue) + " (>= 10000), " + fmt(ta) + " s / " + fmt(tb) + " s"};
}

Outcome complexity_smoke() {
  test::Rng rng(17);
  std::vector<std::size_t> sizes{50, 100, 200, 400};
  std::vector<double> times;
  for (std::size_t n : sizes) {
    std::vector<double> samples;
    for (int rep = 0; rep < 5; ++rep) {
      Multigraph r = test::random_multigraph(rng, std::max<std::size_t>(4, n / 3), n);
      SimpleGraph gc = test::shuffled(rng, line_graph(r).graph);
      auto t0 = Clock::now();
      int runs = 0;
      do {
        if (!elehot(gc)) return {false, "elehot rejected a line multigraph"};
        ++runs;
      } while (seconds_since(t0) < 0.02);
      samples.push_back(seconds_since(t0) / runs);
    }
    std::sort(samples.begin(), samples.end());
    times.push_back(samples[samples.size() / 2]);
  }
  double ratio = times.back() / times.front();
  std::string detail = "median seconds";
  for (std::size_t i = 0; i < sizes.size(); ++i) detail += " n=" + std::to_string(sizes[i]) + ":" + fmt(times[i], 5);
  detail += ", ratio(400/50) = " + fmt(ratio, 1) + " (limit 1024)";
  return {ratio <= 2.0 * 512.0, detail};
}

Outcome cli_round_trip() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "linemg-acceptance";
  fs::create_directories(dir);
  test::Rng rng(19);
  std::size_t passed = 0;
  std::size_t rejected = 0;
  std::size_t bad = 0;
  std::ostringstream sink;
  auto run = [&](const std::vector<std::string>& args) { return cli::run(args, sink, sink); };
  const std::string net = (dir / "net.txt").string();
  const std::string gc_path = (dir / "gc.txt").string();
  const std::string root_path = (dir / "root.txt").string();
  const std::string map_path = (dir / "map.csv").string();
  while (passed < 20 && bad == 0) {
    Multigraph g = test::random_multigraph(rng, static_cast<std::size_t>(test::uniform(rng, 2, 9)),
                                           static_cast<std::size_t>(test::uniform(rng, 1, 12)));
    write_text_file(net, serialize_graph(g));
    std::string hops = (passed + rejected) % 2 ? "2" : "1";
    if (run({"conflict", net, "--hops", hops, "--out", gc_path}) != 0) {
      ++bad;
      break;
    }
    SimpleGraph gc = parse_simple_graph(read_text_file(gc_path));
    int code = run({"root", gc_path, "--out", root_path, "--map", map_path});
    if (code == 1) {
      // Only 2-hop conflict graphs may fail, and then the decision must match.
      if (hops != "2" || is_line_multigraph(gc)) ++bad;
      ++rejected;
      continue;
    }
    if (code != 0) {
      ++bad;
      break;
    }
    Multigraph root = read_graph_file(root_path);
    std::vector<EdgeId> edge_of(gc.num_vertices());
    std::istringstream map(read_text_file(map_path));
    std::string line;
    std::getline(map, line);
    while (std::getline(map, line)) {
      auto comma = line.find(',');
      edge_of.at(std::stoul(line.substr(0, comma))) = static_cast<EdgeId>(std::stoul(line.substr(comma + 1)));
    }
    if (same_adjacency(line_graph_through(root, VertexEdgeMap(edge_of)), gc)) {
      ++passed;
    } else {
      ++bad;
    }
  }
  fs::remove_all(dir);
  return {passed == 20 && bad == 0, std::to_string(passed) + " round trips equal, " + std::to_string(rejected) +
                                        " 2-hop networks correctly rejected, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool soft;
  };
  std::vector<Criterion> criteria{
      {1, "forbidden-set reproduction", forbidden_set, false},
      {2, "recognition equivalence", recognition_equivalence, false},
      {3, "Beineke agreement", beineke_agreement, false},
      {4, "root correctness", root_correctness, false},
      {5, "twin lemma", twin_lemma, false},
      {6, "MWM exactness", mwm_exactness, false},
      {7, "scheduling equivalence", scheduling_equivalence, false},
      {8, "simulator stability", simulator_stability, false},
      {9, "complexity smoke", complexity_smoke, true},
      {10, "CLI round trip", cli_round_trip, false},
  };
  int hard_failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %2d %-28s %s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                c.soft && !o.pass ? " [soft]" : "");
    std::fflush(stdout);
    if (!o.pass && !c.soft) ++hard_failures;
  }
  return hard_failures == 0 ? 0 : 1;
}
