#include "modnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "modnet/errors.hpp"
#include "modnet/rng.hpp"

namespace modnet {

WeightedGraph::WeightedGraph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative node count");
  adj_.resize(static_cast<std::size_t>(n));
  strength_.assign(static_cast<std::size_t>(n), 0.0);

  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::out_of_range("graph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
    if (e.w < 0.0 || e.w > 1.0) throw std::invalid_argument("graph: weight outside [0,1]");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) throw std::invalid_argument("graph: duplicate pair");
    if (e.w == 0.0) continue;  // absent pair
    adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
    adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
    strength_[static_cast<std::size_t>(e.u)] += e.w;
    strength_[static_cast<std::size_t>(e.v)] += e.w;
    total_weight_ += e.w;
    ++edge_count_;
    if (e.w != 1.0) simple_ = false;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

WeightedGraph WeightedGraph::from_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  std::string line;
  int line_no = 0;
  long declared_n = -1;
  int max_id = -1;
  bool any_edge = false;
  NodeSet used;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    auto hash = sv.find('#');
    if (hash != std::string_view::npos) sv = sv.substr(0, hash);
    std::istringstream fields{std::string(sv)};
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment

    if (first == "n") {
      if (any_edge || declared_n >= 0)
        throw parse_error("n directive must appear once, before any edge", line_no);
      if (!(fields >> declared_n) || declared_n < 0)
        throw parse_error("malformed n directive", line_no);
      std::string extra;
      if (fields >> extra) throw parse_error("trailing fields after n directive", line_no);
      continue;
    }

    long u, v;
    double w = 1.0;
    std::istringstream edge_fields{std::string(sv)};
    if (!(edge_fields >> u >> v)) throw parse_error("malformed edge line", line_no);
    bool has_w = static_cast<bool>(edge_fields >> w);
    std::string extra;
    if (edge_fields >> extra) throw parse_error("trailing fields on edge line", line_no);
    if (!has_w && !edge_fields.eof()) throw parse_error("malformed weight", line_no);

    if (u < 0 || v < 0) throw parse_error("negative node id", line_no);
    if (u > 100000000 || v > 100000000) throw parse_error("node id too large", line_no);
    if (u == v) throw parse_error("self-loop", line_no);
    if (w < 0.0 || w > 1.0) throw parse_error("weight outside [0,1]", line_no);
    auto key = std::minmax(u, v);
    if (!seen.insert({static_cast<int>(key.first), static_cast<int>(key.second)}).second)
      throw parse_error("duplicate pair", line_no);
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
      throw parse_error("node id exceeds declared n", line_no);

    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    used.add(static_cast<int>(u));
    used.add(static_cast<int>(v));
    any_edge = true;
  }

  int n = declared_n >= 0 ? static_cast<int>(declared_n) : max_id + 1;
  if (declared_n < 0 && used.size() != n)
    throw parse_error("node ids have gaps; declare \"n <count>\" to allow isolated nodes",
                      line_no == 0 ? 1 : line_no);
  return WeightedGraph(n, edges);
}

WeightedGraph WeightedGraph::from_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return from_edge_list(in);
}

double WeightedGraph::strength(int i) const {
  check_node(i);
  return strength_[static_cast<std::size_t>(i)];
}

double WeightedGraph::weight(int i, int j) const {
  check_node(i);
  check_node(j);
  const auto& nb = adj_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, double>{j, 0.0});
  return (it != nb.end() && it->first == j) ? it->second : 0.0;
}

int WeightedGraph::degree(int i) const {
  require_simple("degree");
  check_node(i);
  return static_cast<int>(adj_[static_cast<std::size_t>(i)].size());
}

const std::vector<std::pair<int, double>>& WeightedGraph::neighbors(int i) const {
  check_node(i);
  return adj_[static_cast<std::size_t>(i)];
}

double WeightedGraph::spanned_edge_weight(const NodeSet& a) const {
  if (a.back() >= n_) throw std::out_of_range("spanned_edge_weight: member out of range");
  double sum = 0.0;
  a.for_each([&](int i) {
    for (const auto& [j, w] : adj_[static_cast<std::size_t>(i)])
      if (j > i && a.contains(j)) sum += w;
  });
  return sum;
}

NodeSet WeightedGraph::neighborhood(int i) const {
  require_simple("neighborhood");
  check_node(i);
  NodeSet r;
  for (const auto& [j, w] : adj_[static_cast<std::size_t>(i)]) r.add(j);
  return r;
}

double WeightedGraph::clustering_coefficient() const {
  require_simple("clustering_coefficient");
  long long triples = 0;
  for (int i = 0; i < n_; ++i) {
    long long d = static_cast<long long>(adj_[static_cast<std::size_t>(i)].size());
    triples += d * (d - 1) / 2;
  }
  if (triples == 0)
    throw std::invalid_argument("clustering_coefficient: no connected triples");
  long long triangles = 0;
  for (int i = 0; i < n_; ++i) {
    NodeSet ni = neighborhood(i);
    for (const auto& [j, wj] : adj_[static_cast<std::size_t>(i)]) {
      if (j <= i) continue;
      for (const auto& [k, wk] : adj_[static_cast<std::size_t>(j)])
        if (k > j && ni.contains(k)) ++triangles;
    }
  }
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int i = 0; i < n_; ++i)
    for (const auto& [j, w] : adj_[static_cast<std::size_t>(i)])
      if (j > i) out.push_back({i, j, w});
  return out;
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

void WeightedGraph::check_node(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("graph: node out of range");
}

void WeightedGraph::require_simple(const char* what) const {
  if (!simple_)
    throw std::invalid_argument(std::string(what) + ": defined for simple (0/1) graphs only");
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

WeightedGraph half_regular(int n) {
  if (n <= 4 || n % 2 != 0)
    throw std::invalid_argument("half_regular: n must be even and > 4");
  int h = n / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) {
      edges.push_back({i, j, 1.0});
      edges.push_back({h + i, h + j, 1.0});
    }
  for (int k = 0; k < h; ++k) edges.push_back({k, k + h, 1.0});
  return WeightedGraph(n, edges);
}

WeightedGraph partition_graph(const Partition& p) {
  std::vector<Edge> edges;
  for (const NodeSet& block : p.blocks()) {
    std::vector<int> m = block.members();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) edges.push_back({m[a], m[b], 1.0});
  }
  return WeightedGraph(p.n(), edges);
}

WeightedGraph noisy_partition_graph(const Partition& p, double p_add, double p_del,
                                    std::uint64_t seed) {
  if (p_add < 0.0 || p_add > 1.0 || p_del < 0.0 || p_del > 1.0)
    throw std::invalid_argument("noisy_partition_graph: probability outside [0,1]");
  WeightedGraph base = partition_graph(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j) {
      bool present = base.has_edge(i, j);
      double u = rng.uniform01();
      if (present ? !(u < p_del) : u < p_add) edges.push_back({i, j, 1.0});
    }
  return WeightedGraph(p.n(), edges);
}

CliqueUnion clique_union(const std::vector<NodeSet>& cliques) {
  if (cliques.empty()) throw std::invalid_argument("clique_union: empty clique list");
  NodeSet covered;
  int max_id = -1;
  for (const NodeSet& c : cliques) {
    if (c.empty()) throw std::invalid_argument("clique_union: empty clique");
    covered = covered.set_union(c);
    max_id = std::max(max_id, c.back());
  }
  int n = max_id + 1;
  if (covered.size() != n)
    throw std::invalid_argument("clique_union: cliques do not cover 0..n-1");

  std::set<std::pair<int, int>> pairs;
  for (const NodeSet& c : cliques) {
    std::vector<int> m = c.members();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) pairs.insert({m[a], m[b]});
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});

  // clique type: inclusion-maximal distinct supplied cliques, counted by size
  std::vector<NodeSet> distinct(cliques);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> kappa(static_cast<std::size_t>(n) + 1, 0);
  for (const NodeSet& c : distinct) {
    bool maximal = true;
    for (const NodeSet& d : distinct)
      if (!(d == c) && d.contains_all(c)) {
        maximal = false;
        break;
      }
    if (maximal) ++kappa[static_cast<std::size_t>(c.size())];
  }
  return CliqueUnion{WeightedGraph(n, edges), std::move(kappa)};
}

}  // namespace modnet
