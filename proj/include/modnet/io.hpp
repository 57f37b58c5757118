#pragma once

#include <iosfwd>
#include <string>

#include "modnet/cover.hpp"
#include "modnet/graph.hpp"
#include "modnet/overlap.hpp"
#include "modnet/partition.hpp"
#include "modnet/search.hpp"

namespace modnet {

/// Round-trip double formatting (%.17g).
std::string fmt_double(double v);

/// Writes content to path via a temp file and rename, so outputs appear
/// once and whole.
void write_text_file(const std::string& path, const std::string& content);

struct PartitionRecord {
  Partition partition;
  std::string label;
  double value = 0.0;
  bool local_optimum = false;
};

// Partition file: "label <s>", "value <v>", "local-optimum <0|1>" headers
// followed by one "block <id...>" line per block.
std::string format_partition(const PartitionRecord& rec);
PartitionRecord parse_partition(std::istream& in);
PartitionRecord read_partition_file(const std::string& path);

// Trace file: "seed <s>" then "step <t> <action> {a b}{c} <value>" lines.
std::string format_trace(const SearchTrace& trace);

// Cover file: "n <count>" then "mass <node> <value> : <member...>" lines;
// each node's masses must sum to 1 within 1e-6 on load.
std::string format_cover(const FuzzyCover& q);
FuzzyCover parse_cover(std::istream& in);
FuzzyCover read_cover_file(const std::string& path);

// Family file: "label <s>", "module <id...> : value <v> : runs <r...>"
// lines, then a per-node index "node <i> : <module-ordinal...>".
std::string format_family(const WeightedFamily& fam, int n);

// Edge list with a leading "n <count>" directive; weight-1 edges are
// written bare.
std::string format_edge_list(const WeightedGraph& g);

}  // namespace modnet
