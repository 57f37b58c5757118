// modnet - search for network modules in weighted graphs.
//
// Subcommands: cluster (greedy block-fixing search), merge (agglomerative
// baseline), overlap (two-stage multi-run family), gen (benchmark graphs),
// oracle (exact optimum for small n).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "modnet/errors.hpp"
#include "modnet/graph.hpp"
#include "modnet/io.hpp"
#include "modnet/mle.hpp"
#include "modnet/overlap.hpp"
#include "modnet/score.hpp"
#include "modnet/search.hpp"

namespace {

using namespace modnet;

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_io = 2;
constexpr int exit_cap = 3;

ClusterScore make_score(const WeightedGraph& g, const std::string& kind, double beta) {
  if (kind == "modularity") return modularity_score(g);
  if (kind == "dual-weight") return dual_weight_score(g);
  if (kind == "common-neighbor") return common_neighbor_score(g);
  if (kind == "cubic-triangle") return cubic_triangle_score(g, beta);
  throw std::invalid_argument("unknown score '" + kind + "'");
}

CandidateFamily family_from_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::vector<NodeSet> subs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    NodeSet a;
    int id;
    while (fields >> id) {
      if (id < 0 || id >= n) throw parse_error("member out of range", line_no);
      a.add(id);
    }
    if (!a.empty()) subs.push_back(a);
  }
  if (subs.empty()) throw parse_error("no subsets", line_no == 0 ? 1 : line_no);
  return CandidateFamily::of(std::move(subs));
}

// "0,1,2;3,4" -> {{0,1,2},{3,4}}
std::vector<NodeSet> parse_groups(const std::string& text) {
  std::vector<NodeSet> groups;
  std::istringstream by_group(text);
  std::string group;
  while (std::getline(by_group, group, ';')) {
    NodeSet a;
    std::istringstream by_id(group);
    std::string id;
    while (std::getline(by_id, id, ',')) {
      if (id.empty()) continue;
      a.add(std::stoi(id));
    }
    if (!a.empty()) groups.push_back(a);
  }
  if (groups.empty()) throw std::invalid_argument("no groups in '" + text + "'");
  return groups;
}

FuzzyCover make_init(const ClusterScore& s, const std::string& mode, double theta,
                     const std::string& init_file, const std::string& family_file) {
  int n = s.n();
  if (mode == "full-uniform") return uniform_cover(n);
  if (mode == "pairs") return uniform_pairs_cover(n);
  if (mode == "singletons") return partition_to_cover(Partition::singletons(n));
  if (mode == "threshold") {
    CandidateFamily fam = family_file.empty() ? CandidateFamily::all_pairs(n)
                                              : family_from_file(family_file, n);
    return init_threshold(s, fam, theta);
  }
  if (mode == "file") {
    if (init_file.empty()) throw std::invalid_argument("--init file needs --init-file");
    FuzzyCover q = read_cover_file(init_file);
    if (q.n() != n) throw std::invalid_argument("cover size does not match the graph");
    return q;
  }
  throw std::invalid_argument("unknown init mode '" + mode + "'");
}

void write_partition_outputs(const ClusterScore& s, const SearchResult& result,
                             const std::string& out_path, const std::string& trace_path) {
  PartitionRecord rec{result.partition, s.label(),
                      s.eval_partition(result.partition),
                      is_local_optimum(s, result.partition)};
  if (!out_path.empty()) write_text_file(out_path, format_partition(rec));
  if (!trace_path.empty()) write_text_file(trace_path, format_trace(result.trace));
  std::cout << "value " << fmt_double(rec.value) << "\n";
  std::cout << "blocks " << result.partition.size() << "\n";
  std::cout << "local-optimum " << (rec.local_optimum ? 1 : 0) << "\n";
  if (!out_path.empty()) std::cout << "output " << out_path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search for network modules in weighted graphs"};
  app.require_subcommand(1);

  std::string input, output, trace_path, score_kind = "modularity";
  std::string init_mode = "full-uniform", init_file, family_file, start_file;
  std::string large_init = "uniform";
  double beta = 1.0, theta = 0.0, p_add = 0.0, p_del = 0.0;
  int vartheta = 2, runs = 8, gen_n = 6;
  int omega_max_size = 0, omega_max_members = omega_default_max_members;
  std::uint64_t seed = 0;
  std::string blocks_text, cliques_text;

  auto add_score_opts = [&](CLI::App* cmd) {
    cmd->add_option("--score", score_kind, "modularity | dual-weight | common-neighbor | cubic-triangle")
        ->capture_default_str();
    cmd->add_option("--beta", beta, "triple coefficient for cubic-triangle, in (0,1]")
        ->capture_default_str();
  };

  CLI::App* cluster = app.add_subcommand("cluster", "greedy block-fixing search");
  cluster->add_option("input", input, "edge-list file")->required();
  add_score_opts(cluster);
  cluster->add_option("--init", init_mode,
                      "full-uniform | pairs | singletons | threshold | file")
      ->capture_default_str();
  cluster->add_option("--theta", theta, "threshold for --init threshold")->capture_default_str();
  cluster->add_option("--init-file", init_file, "cover file for --init file");
  cluster->add_option("--family-file", family_file, "candidate subsets for --init threshold");
  cluster->add_option("--seed", seed, "RNG seed")->capture_default_str();
  cluster->add_option("-o,--output", output, "partition file to write");
  cluster->add_option("--trace", trace_path, "trace file to write");

  CLI::App* merge = app.add_subcommand("merge", "agglomerative merging baseline");
  merge->add_option("input", input, "edge-list file")->required();
  add_score_opts(merge);
  merge->add_option("--start", start_file, "starting partition file (default singletons)");
  merge->add_option("--seed", seed, "RNG seed")->capture_default_str();
  merge->add_option("-o,--output", output, "partition file to write");
  merge->add_option("--trace", trace_path, "trace file to write");

  CLI::App* overlap = app.add_subcommand("overlap", "two-stage overlapping module family");
  overlap->add_option("input", input, "edge-list file")->required();
  add_score_opts(overlap);
  overlap->add_option("--theta", theta, "stage-1 init threshold")->capture_default_str();
  overlap->add_option("--vartheta", vartheta, "stage-2 size threshold (>= 0)")
      ->capture_default_str();
  overlap->add_option("--runs", runs, "runs per stage (>= 1)")->capture_default_str();
  overlap->add_option("--seed", seed, "RNG base seed")->capture_default_str();
  overlap->add_option("--family-file", family_file, "stage-1 candidate subsets (default all pairs)");
  overlap->add_option("--large-init", large_init, "uniform | score")->capture_default_str();
  overlap->add_option("--max-omega-size", omega_max_size, "cap on union size (0 = n)")
      ->capture_default_str();
  overlap->add_option("--max-omega-members", omega_max_members, "cap on generated unions")
      ->capture_default_str();
  overlap->add_option("-o,--output", output, "family file to write");

  CLI::App* gen = app.add_subcommand("gen", "benchmark graph generators");
  gen->require_subcommand(1);
  CLI::App* gen_half = gen->add_subcommand("half-regular", "two complete halves plus a matching");
  gen_half->add_option("--n", gen_n, "node count (even, > 4)")->required();
  gen_half->add_option("-o,--output", output, "edge-list file to write");
  CLI::App* gen_part = gen->add_subcommand("partition", "disjoint union of complete blocks");
  gen_part->add_option("--blocks", blocks_text, "blocks, e.g. \"0,1;2,3\"")->required();
  gen_part->add_option("-o,--output", output, "edge-list file to write");
  CLI::App* gen_noisy = gen->add_subcommand("noisy-partition", "partition graph with noise");
  gen_noisy->add_option("--blocks", blocks_text, "blocks, e.g. \"0,1;2,3\"")->required();
  gen_noisy->add_option("--p-add", p_add, "probability of adding each absent pair")
      ->capture_default_str();
  gen_noisy->add_option("--p-del", p_del, "probability of removing each edge")
      ->capture_default_str();
  gen_noisy->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen_noisy->add_option("-o,--output", output, "edge-list file to write");
  CLI::App* gen_clique = gen->add_subcommand("clique-union", "union of complete subgraphs");
  gen_clique->add_option("--cliques", cliques_text, "cliques, e.g. \"0,1,2;2,3,4\"")->required();
  gen_clique->add_option("-o,--output", output, "edge-list file to write");

  CLI::App* oracle = app.add_subcommand("oracle", "exact optimum by enumeration (n <= 12)");
  oracle->add_option("input", input, "edge-list file")->required();
  add_score_opts(oracle);
  oracle->add_option("-o,--output", output, "partition file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config;
  }

  try {
    if (*cluster) {
      WeightedGraph g = WeightedGraph::from_edge_list_file(input);
      ClusterScore s = make_score(g, score_kind, beta);
      FuzzyCover init = make_init(s, init_mode, theta, init_file, family_file);
      std::cout << "seed " << seed << "\n";
      SearchResult result = greedy_clustering(s, init, seed);
      write_partition_outputs(s, result, output, trace_path);
    } else if (*merge) {
      WeightedGraph g = WeightedGraph::from_edge_list_file(input);
      ClusterScore s = make_score(g, score_kind, beta);
      Partition start = start_file.empty() ? Partition::singletons(g.n())
                                           : read_partition_file(start_file).partition;
      if (start.n() != g.n())
        throw std::invalid_argument("start partition does not match the graph");
      std::cout << "seed " << seed << "\n";
      SearchResult result = greedy_merging(s, start, seed);
      write_partition_outputs(s, result, output, trace_path);
    } else if (*overlap) {
      WeightedGraph g = WeightedGraph::from_edge_list_file(input);
      ClusterScore s = make_score(g, score_kind, beta);
      TwoStageOptions opt;
      opt.theta = theta;
      opt.vartheta = vartheta;
      opt.runs = runs;
      if (large_init == "uniform")
        opt.mode = LargeInitMode::uniform;
      else if (large_init == "score")
        opt.mode = LargeInitMode::score_weighted;
      else
        throw std::invalid_argument("unknown large-init mode '" + large_init + "'");
      opt.omega_max_size = omega_max_size;
      opt.omega_max_members = omega_max_members;
      CandidateFamily fam = family_file.empty() ? CandidateFamily::all_pairs(g.n())
                                                : family_from_file(family_file, g.n());
      std::cout << "seed " << seed << "\n";
      WeightedFamily result = two_stage(s, fam, opt, seed);
      if (!output.empty()) write_text_file(output, format_family(result, g.n()));
      std::cout << "modules " << result.entries.size() << "\n";
      if (!output.empty()) std::cout << "output " << output << "\n";
    } else if (*gen) {
      WeightedGraph g(0, {});
      if (*gen_half) {
        g = half_regular(gen_n);
      } else if (*gen_part) {
        std::vector<NodeSet> blocks = parse_groups(blocks_text);
        int n = 0;
        for (const NodeSet& b : blocks) n = std::max(n, b.back() + 1);
        g = partition_graph(Partition(n, blocks));
      } else if (*gen_noisy) {
        std::vector<NodeSet> blocks = parse_groups(blocks_text);
        int n = 0;
        for (const NodeSet& b : blocks) n = std::max(n, b.back() + 1);
        std::cout << "seed " << seed << "\n";
        g = noisy_partition_graph(Partition(n, blocks), p_add, p_del, seed);
      } else {
        g = clique_union(parse_groups(cliques_text)).graph;
      }
      if (!output.empty()) write_text_file(output, format_edge_list(g));
      std::cout << "nodes " << g.n() << "\n";
      std::cout << "edges " << g.edge_count() << "\n";
      if (!output.empty()) std::cout << "output " << output << "\n";
    } else if (*oracle) {
      WeightedGraph g = WeightedGraph::from_edge_list_file(input);
      ClusterScore s = make_score(g, score_kind, beta);
      BruteForceResult result = brute_force_optimum(s);
      PartitionRecord rec{result.partition, s.label(), result.value,
                          is_local_optimum(s, result.partition)};
      if (!output.empty()) write_text_file(output, format_partition(rec));
      std::cout << "value " << fmt_double(result.value) << "\n";
      std::cout << "blocks " << result.partition.size() << "\n";
      std::cout << "near-ties " << result.near_tie_count << "\n";
      if (!output.empty()) std::cout << "output " << output << "\n";
    }
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  }
  return exit_ok;
}
