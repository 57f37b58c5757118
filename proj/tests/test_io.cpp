#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modnet/errors.hpp"
#include "modnet/io.hpp"
#include "helpers.hpp"

using namespace modnet;
using doctest::Approx;

TEST_CASE("double formatting round-trips") {
  for (double v : {0.0, 1.0 / 6, -2.0 / 36, 0.559016994374947, 1e-17}) {
    CHECK(std::stod(fmt_double(v)) == v);
  }
}

TEST_CASE("partition files round-trip") {
  PartitionRecord rec{Partition(6, {NodeSet::of({0, 1, 2}), NodeSet::of({3, 4, 5})}),
                      "modularity", 1.0 / 6, true};
  std::string text = format_partition(rec);
  std::istringstream in(text);
  PartitionRecord back = parse_partition(in);
  CHECK(back.partition == rec.partition);
  CHECK(back.label == rec.label);
  CHECK(back.value == rec.value);
  CHECK(back.local_optimum == rec.local_optimum);

  std::istringstream plain("block 0 1\nblock 2\n");
  PartitionRecord minimal = parse_partition(plain);
  CHECK(minimal.partition == Partition(3, {NodeSet::of({0, 1}), NodeSet::of({2})}));

  std::istringstream overlap("block 0 1\nblock 1 2\n");
  CHECK_THROWS_AS(parse_partition(overlap), parse_error);
  std::istringstream gap("block 0 1\nblock 3\n");
  CHECK_THROWS_AS(parse_partition(gap), parse_error);
  std::istringstream junk("blok 0 1\n");
  CHECK_THROWS_AS(parse_partition(junk), parse_error);
  std::istringstream none("# empty\n");
  CHECK_THROWS_AS(parse_partition(none), parse_error);
  CHECK_THROWS_AS(read_partition_file("/nonexistent/p.txt"), io_error);
}

TEST_CASE("cover files round-trip") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    FuzzyCover q = testutil::random_cover(5, seed);
    std::istringstream in(format_cover(q));
    FuzzyCover back = parse_cover(in);
    REQUIRE(back.n() == q.n());
    for (int i = 0; i < q.n(); ++i) {
      REQUIRE(back.dist(i).mass().size() == q.dist(i).mass().size());
      for (const auto& [a, m] : q.dist(i).mass())
        CHECK(back.dist(i).mass_on(a) == Approx(m).epsilon(1e-12));
    }
  }

  // loader enforces the unit-mass tolerance
  std::istringstream bad("n 2\nmass 0 0.4 : 0\nmass 0 0.55 : 0 1\nmass 1 1.0 : 1\n");
  CHECK_THROWS_AS(parse_cover(bad), parse_error);
  std::istringstream ok("n 2\nmass 0 0.5000004 : 0\nmass 0 0.5 : 0 1\nmass 1 1.0 : 1\n");
  FuzzyCover q = parse_cover(ok);
  double sum = 0.0;
  for (const auto& [a, m] : q.dist(0).mass()) sum += m;
  CHECK(sum == Approx(1.0).epsilon(1e-12));

  std::istringstream missing_n("mass 0 1.0 : 0\n");
  CHECK_THROWS_AS(parse_cover(missing_n), parse_error);
  std::istringstream wrong_node("n 2\nmass 0 1.0 : 1\nmass 1 1.0 : 1\n");
  CHECK_THROWS_AS(parse_cover(wrong_node), parse_error);
  std::istringstream no_mass("n 2\nmass 0 1.0 : 0\n");
  CHECK_THROWS_AS(parse_cover(no_mass), parse_error);
  std::istringstream dup("n 1\nmass 0 0.5 : 0\nmass 0 0.5 : 0\n");
  CHECK_THROWS_AS(parse_cover(dup), parse_error);
}

TEST_CASE("edge lists round-trip through the writer") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    WeightedGraph g = testutil::random_weighted_graph(8, 0.4, seed);
    std::istringstream in(format_edge_list(g));
    CHECK(WeightedGraph::from_edge_list(in) == g);
  }
  // isolated nodes survive via the n directive
  WeightedGraph lonely(5, {{0, 3, 1.0}});
  std::istringstream in(format_edge_list(lonely));
  CHECK(WeightedGraph::from_edge_list(in) == lonely);
  WeightedGraph empty(4, {});
  std::istringstream ein(format_edge_list(empty));
  CHECK(WeightedGraph::from_edge_list(ein) == empty);
}

TEST_CASE("trace format") {
  SearchTrace t;
  t.seed = 42;
  t.steps.push_back({1, TraceAction::merge, {NodeSet::of({0}), NodeSet::of({3})}, 0.0});
  t.steps.push_back({2, TraceAction::fix_block, {NodeSet::of({0, 1, 2})}, 1.0 / 6});
  t.steps.push_back({3, TraceAction::split, {NodeSet::of({4}), NodeSet::of({5})}, 0.25});
  std::string text = format_trace(t);
  CHECK(text == "# modnet trace\n"
                "seed 42\n"
                "step 1 merge {0}{3} 0\n"
                "step 2 fix-block {0 1 2} 0.16666666666666666\n"
                "step 3 split {4}{5} 0.25\n");
}

TEST_CASE("family format lists modules and the per-node index") {
  ClusterScore s = dual_weight_score(half_regular(6));
  WeightedFamily f;
  f.score_label = s.label();
  f.entries.emplace(NodeSet::of({0, 1, 2}), FamilyEntry{s.eval_set(NodeSet::of({0, 1, 2})), {0, 2}});
  f.entries.emplace(NodeSet::of({2, 5}), FamilyEntry{s.eval_set(NodeSet::of({2, 5})), {1}});
  std::string text = format_family(f, 6);
  CHECK(text.find("label dual-weight\n") != std::string::npos);
  CHECK(text.find("module 0 1 2 : value " + fmt_double(2.4) + " : runs 0 2\n") !=
        std::string::npos);
  CHECK(text.find("node 2 : 0 1\n") != std::string::npos);  // node 2 in both modules
  CHECK(text.find("node 3 :\n") != std::string::npos);      // node 3 in none
}

TEST_CASE("atomic text writes") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "modnet_io_test";
  fs::create_directories(dir);
  fs::path target = dir / "out.txt";
  write_text_file(target.string(), "payload\n");
  std::ifstream in(target);
  std::string line;
  std::getline(in, line);
  CHECK(line == "payload");
  CHECK(!fs::exists(target.string() + ".tmp"));
  CHECK_THROWS_AS(write_text_file((dir / "missing" / "x.txt").string(), "x"), io_error);
  fs::remove_all(dir);
}
