#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "linemg/elehot.hpp"
#include "linemg/forbidden.hpp"
#include "linemg/linegraph.hpp"
#include "support.hpp"

using namespace linemg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("linemg-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    auto p = (path / name).string();
    write_text_file(p, content);
    return p;
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const char* kClaw = "v 4\ne 0 1\ne 0 2\ne 0 3\n";
const char* kK3 = "v 3\ne 0 1\ne 1 2\ne 0 2\n";
const char* kDiamond = "v 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\n";
const char* kC6 = "v 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 0 5\n";
const char* kP4 = "v 4\ne 0 1\ne 1 2\ne 2 3\n";

}  // namespace

TEST_CASE("cli recognize") {
  TempDir dir;
  auto claw = run({"recognize", dir.file("claw.txt", kClaw), "--mode", "multi"});
  CHECK(claw.code == 1);
  CHECK(claw.out.find("NO") == 0);
  CHECK(claw.out.find("F1") != std::string::npos);
  auto k3 = run({"recognize", dir.file("k3.txt", kK3), "--mode", "multi"});
  CHECK(k3.code == 0);
  CHECK(k3.out.find("YES") == 0);
  CHECK(k3.out.find("root: 2 vertices, 3 edges") != std::string::npos);
  CHECK(k3.out.find("3x1") != std::string::npos);
  auto simple = run({"recognize", dir / "claw.txt", "--mode", "simple"});
  CHECK(simple.code == 1);
  CHECK(simple.out.find("G1") != std::string::npos);
  CHECK(run({"recognize", dir / "missing.txt"}).code == 2);
  CHECK(run({"recognize", dir.file("bad.txt", "v 2\ne 0 0\n")}).code == 2);
  CHECK(run({"recognize", dir / "k3.txt", "--mode", "other"}).code == 2);
}

TEST_CASE("cli root") {
  TempDir dir;
  auto d = run({"root", dir.file("diamond.txt", kDiamond), "--out", dir / "diamond.root"});
  REQUIRE(d.code == 0);
  Multigraph root = read_graph_file(dir / "diamond.root");
  CHECK(root.num_edges() == 4);
  std::size_t doubled = 0;
  for (const Edge& e : root.edges()) doubled += root.multiplicity(e.u, e.v) == 2;
  CHECK(doubled == 2);
  CHECK(fs::exists(dir / "diamond.root.map.csv"));
  CHECK(read_text_file(dir / "diamond.root.map.csv").rfind("gc_vertex,root_edge\n", 0) == 0);

  auto c6 = run({"root", dir.file("c6.txt", kC6)});
  REQUIRE(c6.code == 0);
  CHECK(is_isomorphic(simple_part(parse_graph(c6.out)), cycle_graph(6)).has_value());

  auto claw = run({"root", dir.file("claw.txt", kClaw), "--out", dir / "claw.root"});
  CHECK(claw.code == 1);
  CHECK(claw.err.find("F1") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "claw.root"));
}

TEST_CASE("cli linegraph and conflict") {
  TempDir dir;
  auto p4 = dir.file("p4.txt", kP4);
  auto m1 = run({"conflict", p4, "--hops", "1"});
  REQUIRE(m1.code == 0);
  CHECK(same_adjacency(parse_simple_graph(m1.out), path_graph(3)));
  auto m2 = run({"conflict", p4, "--hops", "2", "--out", dir / "gc.txt"});
  REQUIRE(m2.code == 0);
  CHECK(same_adjacency(parse_simple_graph(read_text_file(dir / "gc.txt")), complete_graph(3)));
  CHECK(read_text_file(dir / "gc.txt.map.csv") == "gc_vertex,link_id\n0,0\n1,1\n2,2\n");
  CHECK(run({"conflict", p4, "--hops", "0"}).code == 2);
  CHECK(run({"conflict", p4}).code == 2);
  auto lg = run({"linegraph", dir.file("par.txt", "v 2\ne 0 1\ne 0 1\ne 0 1\n")});
  REQUIRE(lg.code == 0);
  CHECK(same_adjacency(parse_simple_graph(lg.out), complete_graph(3)));
}

TEST_CASE("cli forbidden and derive") {
  TempDir dir;
  auto scan = run({"forbidden", dir.file("claw.txt", kClaw), "--catalog", "multigraph7"});
  CHECK(scan.code == 1);
  CHECK(scan.out.find("hits: 1") != std::string::npos);
  auto clean = run({"forbidden", dir.file("c6.txt", kC6)});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("hits: 0") != std::string::npos);
  CHECK(run({"forbidden", dir / "c6.txt", "--catalog", "nope"}).code == 2);

  auto four = run({"derive", "--max-n", "4"});
  CHECK(four.code == 0);
  CHECK(four.out.find("count: 1") != std::string::npos);
  auto seven = run({"derive", "--max-n", "7", "--out", dir / "seven.txt"});
  CHECK(seven.code == 0);
  CHECK(seven.out == "count: 7\n");
  CHECK(parse_catalog(read_text_file(dir / "seven.txt"), "x", "derived", 7).entries.size() == 7);
  CHECK(run({"derive", "--max-n", "8"}).code == 2);
}

TEST_CASE("cli mwm and mwis") {
  TempDir dir;
  auto mwm = run({"mwm", dir.file("w.txt", "v 4\ne 0 1 3\ne 1 2 1\ne 2 3 2\ne 0 1 4\n")});
  REQUIRE(mwm.code == 0);
  CHECK(mwm.out == "edges: 2 3\nweight: 6\n");
  auto p3 = dir.file("p3.txt", "v 3\ne 0 1\ne 1 2\n");
  auto w = dir.file("w.csv", "vertex_id,value\n0,3\n1,4\n2,3\n");
  CHECK(run({"mwis", p3, "--weights", w}).out == "vertices: 0 2\nweight: 6\n");
  CHECK(run({"mwis", p3, "--weights", w, "--method", "greedy"}).out == "vertices: 1\nweight: 4\n");
  CHECK(run({"mwis", p3}).out == "vertices: 0 2\nweight: 2\n");
}

TEST_CASE("cli schedule and simulate") {
  TempDir dir;
  auto p4 = dir.file("p4.txt", kP4);
  auto q = dir.file("q.csv", "link_id,value\n0,3\n1,1\n2,2\n");
  auto s1 = run({"schedule", p4, "--hops", "1", "--queues", q});
  REQUIRE(s1.code == 0);
  CHECK(s1.out == "mode: ROOT_MWM\nlinks: 0 2\nweight: 5\n");
  auto s2 = run({"schedule", p4, "--hops", "2", "--queues", q});
  CHECK(s2.out == "mode: ROOT_MWM\nlinks: 0\nweight: 3\n");
  auto unknown = dir.file("u.csv", "link_id,value\n0,3\n1,1\n2,2\n7,1\n");
  CHECK(run({"schedule", p4, "--hops", "1", "--queues", unknown}).code == 2);

  auto star = dir.file("star.txt", kClaw);
  auto rates = dir.file("r.csv", "link_id,value\n0,0.25\n1,0.25\n2,0.25\n");
  auto sim = run({"simulate", star, "--hops", "1", "--rates", rates, "--slots", "100000", "--seed", "7", "--out",
                  dir / "totals.csv", "--summary", dir / "summary.csv", "--log", dir / "log.jsonl"});
  REQUIRE(sim.code == 0);
  CHECK(sim.out.find("mode ROOT_MWM slots 100000 seed 7 mean_total_queue ") == 0);
  auto pos = sim.out.find("mean_total_queue ") + 17;
  CHECK(std::stod(sim.out.substr(pos)) < 50.0);
  CHECK(read_text_file(dir / "totals.csv").rfind("slot,arrivals,served,total_queue\n", 0) == 0);
  CHECK(fs::file_size(dir / "log.jsonl") > 0);
  auto again = run({"simulate", star, "--hops", "1", "--rates", rates, "--slots", "100000", "--seed", "7"});
  CHECK(again.out == sim.out);
  CHECK(run({"simulate", star, "--hops", "1", "--slots", "10"}).code == 2);
  CHECK(run({"simulate", star, "--hops", "1", "--rates", rates, "--slots", "0"}).code == 2);
}

TEST_CASE("cli conflict then root round trip through files") {
  TempDir dir;
  test::Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    Multigraph net = test::random_multigraph(rng, static_cast<std::size_t>(test::uniform(rng, 2, 8)),
                                             static_cast<std::size_t>(test::uniform(rng, 1, 10)));
    auto net_path = dir.file("net.txt", serialize_graph(net));
    std::string hops = trial % 2 ? "2" : "1";
    REQUIRE(run({"conflict", net_path, "--hops", hops, "--out", dir / "gc.txt"}).code == 0);
    SimpleGraph gc = parse_simple_graph(read_text_file(dir / "gc.txt"));
    auto r = run({"root", dir / "gc.txt", "--out", dir / "root.txt", "--map", dir / "map.csv"});
    CHECK(r.code == (is_line_multigraph(gc) ? 0 : 1));
    if (r.code != 0) continue;
    Multigraph root = read_graph_file(dir / "root.txt");
    std::vector<EdgeId> edge_of(gc.num_vertices());
    std::istringstream map(read_text_file(dir / "map.csv"));
    std::string line;
    std::getline(map, line);
    while (std::getline(map, line)) {
      auto comma = line.find(',');
      edge_of[std::stoul(line.substr(0, comma))] = static_cast<EdgeId>(std::stoul(line.substr(comma + 1)));
    }
    CHECK(same_adjacency(line_graph_through(root, VertexEdgeMap(edge_of)), gc));
  }
}

TEST_CASE("cli usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("recognize") != std::string::npos);
}
