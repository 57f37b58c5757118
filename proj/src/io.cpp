#include "modnet/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "modnet/errors.hpp"

namespace modnet {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw io_error("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw io_error("cannot move " + tmp + " to " + path);
}

namespace {

void append_ids(std::string& s, const NodeSet& a) {
  bool first = true;
  a.for_each([&](int i) {
    if (!first) s += ' ';
    s += std::to_string(i);
    first = false;
  });
}

}  // namespace

std::string format_partition(const PartitionRecord& rec) {
  std::string s = "# modnet partition\n";
  s += "label " + rec.label + "\n";
  s += "value " + fmt_double(rec.value) + "\n";
  s += "local-optimum " + std::string(rec.local_optimum ? "1" : "0") + "\n";
  for (const NodeSet& b : rec.partition.blocks()) {
    s += "block ";
    append_ids(s, b);
    s += '\n';
  }
  return s;
}

PartitionRecord parse_partition(std::istream& in) {
  std::string label = "unknown";
  double value = 0.0;
  bool local_opt = false;
  std::vector<NodeSet> blocks;
  std::string line;
  int line_no = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head == "label") {
      fields >> label;
    } else if (head == "value") {
      if (!(fields >> value)) throw parse_error("malformed value", line_no);
    } else if (head == "local-optimum") {
      int flag;
      if (!(fields >> flag)) throw parse_error("malformed local-optimum", line_no);
      local_opt = flag != 0;
    } else if (head == "block") {
      NodeSet b;
      int id;
      while (fields >> id) {
        if (id < 0) throw parse_error("negative node id", line_no);
        b.add(id);
        max_id = std::max(max_id, id);
      }
      if (b.empty()) throw parse_error("empty block", line_no);
      blocks.push_back(b);
    } else {
      throw parse_error("unknown record '" + head + "'", line_no);
    }
  }
  if (blocks.empty()) throw parse_error("no blocks", line_no == 0 ? 1 : line_no);
  try {
    return PartitionRecord{Partition(max_id + 1, std::move(blocks)), label, value, local_opt};
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), line_no);
  }
}

PartitionRecord read_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return parse_partition(in);
}

std::string format_trace(const SearchTrace& trace) {
  std::string s = "# modnet trace\n";
  s += "seed " + std::to_string(trace.seed) + "\n";
  for (const TraceStep& st : trace.steps) {
    s += "step " + std::to_string(st.t) + " " + to_string(st.action) + " ";
    for (const NodeSet& a : st.sets) s += a.to_string();
    s += " " + fmt_double(st.value) + "\n";
  }
  return s;
}

std::string format_cover(const FuzzyCover& q) {
  std::string s = "# modnet cover\n";
  s += "n " + std::to_string(q.n()) + "\n";
  for (int i = 0; i < q.n(); ++i)
    for (const auto& [a, m] : q.dist(i).mass()) {
      s += "mass " + std::to_string(i) + " " + fmt_double(m) + " :";
      a.for_each([&](int j) { s += ' ' + std::to_string(j); });
      s += '\n';
    }
  return s;
}

FuzzyCover parse_cover(std::istream& in) {
  int n = -1;
  std::vector<std::map<NodeSet, double>> mass;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head == "n") {
      if (n >= 0) throw parse_error("duplicate n line", line_no);
      if (!(fields >> n) || n <= 0) throw parse_error("malformed n line", line_no);
      mass.resize(static_cast<std::size_t>(n));
    } else if (head == "mass") {
      if (n < 0) throw parse_error("mass before n line", line_no);
      int node;
      double m;
      std::string colon;
      if (!(fields >> node >> m >> colon) || colon != ":")
        throw parse_error("malformed mass line", line_no);
      if (node < 0 || node >= n) throw parse_error("node out of range", line_no);
      if (!(m > 0.0)) throw parse_error("mass must be positive", line_no);
      NodeSet a;
      int id;
      while (fields >> id) {
        if (id < 0 || id >= n) throw parse_error("member out of range", line_no);
        a.add(id);
      }
      if (!a.contains(node)) throw parse_error("subset must contain the node", line_no);
      auto [it, fresh] = mass[static_cast<std::size_t>(node)].emplace(a, m);
      if (!fresh) throw parse_error("duplicate subset for node", line_no);
    } else {
      throw parse_error("unknown record '" + head + "'", line_no);
    }
  }
  if (n < 0) throw parse_error("missing n line", line_no == 0 ? 1 : line_no);
  std::vector<MembershipDistribution> dists;
  dists.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (mass[static_cast<std::size_t>(i)].empty())
      throw parse_error("node " + std::to_string(i) + " holds no mass", line_no);
    try {
      dists.emplace_back(i, std::move(mass[static_cast<std::size_t>(i)]), 1e-6);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), line_no);
    }
  }
  return FuzzyCover(std::move(dists));
}

FuzzyCover read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return parse_cover(in);
}

std::string format_family(const WeightedFamily& fam, int n) {
  std::string s = "# modnet family\n";
  s += "label " + fam.score_label + "\n";
  std::vector<const NodeSet*> order;
  order.reserve(fam.entries.size());
  for (const auto& [a, e] : fam.entries) {
    s += "module ";
    append_ids(s, a);
    s += " : value " + fmt_double(e.value) + " : runs";
    for (int r : e.runs) s += ' ' + std::to_string(r);
    s += '\n';
    order.push_back(&a);
  }
  for (int i = 0; i < n; ++i) {
    s += "node " + std::to_string(i) + " :";
    for (std::size_t k = 0; k < order.size(); ++k)
      if (order[k]->contains(i)) s += ' ' + std::to_string(k);
    s += '\n';
  }
  return s;
}

std::string format_edge_list(const WeightedGraph& g) {
  std::string s = "# modnet edge list\n";
  s += "n " + std::to_string(g.n()) + "\n";
  for (const Edge& e : g.edges()) {
    s += std::to_string(e.u) + " " + std::to_string(e.v);
    if (e.w != 1.0) s += " " + fmt_double(e.w);
    s += '\n';
  }
  return s;
}

}  // namespace modnet
