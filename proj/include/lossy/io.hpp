#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lossy/multigraph.hpp"

namespace lossy {

// Graph files use an extended DIMACS format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v> [w]     (1-based ids; repeated lines add multiplicity)
// Ids are 0-based internally: file vertex i becomes id i-1.
multigraph read_graph(std::istream& in);
multigraph read_graph_file(const std::string& path);

// Writes with vertices compacted to 1..n in id order; returns the mapping
// internal id -> file id so lift state can translate solutions back.
std::map<vertex_id, int> write_graph(std::ostream& out, const multigraph& g,
                                     const std::vector<std::string>& comments = {});
std::map<vertex_id, int> write_graph_file(const std::string& path, const multigraph& g,
                                          const std::vector<std::string>& comments = {});

// Terminal files: lines `t <v>` (1-based). Vertex-cover files: lines `vc <v>`.
std::vector<vertex_id> read_marked_vertices(std::istream& in, const std::string& tag);
std::vector<vertex_id> read_marked_vertices_file(const std::string& path, const std::string& tag);
void write_marked_vertices_file(const std::string& path, const std::string& tag,
                                const std::vector<vertex_id>& vs);

// Strings for disjoint factors: one string per line, UTF-8; symbols are
// code points.
using symbol = uint32_t;
std::vector<symbol> decode_utf8(const std::string& line);
std::string encode_utf8(const std::vector<symbol>& symbols);
std::vector<std::vector<symbol>> read_strings_file(const std::string& path);

// Labelled interval instances: lines `i <left> <right> <label>`.
struct labelled_interval {
  long long left = 0;
  long long right = 0;
  int label = 0;  // 0-based internally, 1-based in files
  auto operator<=>(const labelled_interval&) const = default;
};
std::vector<labelled_interval> read_intervals(std::istream& in);
std::vector<labelled_interval> read_intervals_file(const std::string& path);
void write_intervals_file(const std::string& path, const std::vector<labelled_interval>& iv);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lossy
