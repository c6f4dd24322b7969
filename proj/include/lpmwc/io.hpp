#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpmwc/graph.hpp"
#include "lpmwc/instances.hpp"
#include "lpmwc/relax.hpp"

namespace lpmwc {

/// Text instance format:
///   lpmwc 1
///   # comment (generators put provenance and `# threshold <value>` here)
///   p <finite real | inf>
///   graph <n> <m>
///   terminals <k> <id...>
///   <u> <v> <w>        (m lines)
/// Vertex ids are 0-based; weights are shortest-round-trip decimals, so
/// serialize(parse(serialize(x))) is byte-identical to serialize(x).
struct InstanceFile {
    Instance instance;
    std::vector<std::string> comments;  // full lines, without "# "

    std::optional<double> threshold() const;  // from a "threshold <v>" comment
};

InstanceFile make_instance_file(const GeneratedInstance& gen);

std::string serialize_instance(const InstanceFile& file);
InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance_string(const std::string& text);
InstanceFile load_instance(const std::string& path);

/// Partition file: integral (`part <i> <id...>`, i in 1..k) or fractional
/// (`frac <v> <x_1> ... <x_k>`), never mixed.
struct PartitionFile {
    bool fractional = false;
    std::vector<std::pair<int, std::vector<int>>> parts;  // (part index 1..k, ids)
    std::vector<std::pair<int, std::vector<double>>> rows;  // (vertex, simplex row)
};

std::string serialize_partition(const Instance& inst, const MultiwayCut& cut);
PartitionFile parse_partition(std::istream& in);
PartitionFile load_partition(const std::string& path);

/// Checks mutual consistency with the instance; throws ParseError on
/// structural mismatch (missing/duplicate vertices, bad part indices).
MultiwayCut partition_to_cut(const Instance& inst, const PartitionFile& file);
FractionalAssignment partition_to_fractional(const Instance& inst, const PartitionFile& file);

/// Shortest-round-trip decimal rendering used by every serializer.
std::string format_double(double value);
std::string format_p(double p);
double parse_double(const std::string& token, const std::string& what, int line_no);

}  // namespace lpmwc
