#include "lossy/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lossy {

multigraph read_graph(std::istream& in) {
  multigraph g;
  std::string line;
  long long n = -1, declared_m = 0, seen_m = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string fmt;
      ls >> fmt >> n >> declared_m;
      if (fmt != "edge" || n < 0) throw std::invalid_argument("graph file: bad problem line");
      for (long long v = 0; v < n; ++v) g.add_vertex(static_cast<vertex_id>(v));
    } else if (tag == "e") {
      long long u1 = 0, v1 = 0;
      long long w = -1;
      ls >> u1 >> v1;
      if (n < 0) throw std::invalid_argument("graph file: edge before problem line");
      if (u1 < 1 || u1 > n || v1 < 1 || v1 > n || u1 == v1)
        throw std::invalid_argument("graph file: bad edge endpoints");
      if (ls >> w) {
        g.add_edge(static_cast<vertex_id>(u1 - 1), static_cast<vertex_id>(v1 - 1));
        g.set_weight(static_cast<vertex_id>(u1 - 1), static_cast<vertex_id>(v1 - 1), w);
      } else {
        g.add_edge(static_cast<vertex_id>(u1 - 1), static_cast<vertex_id>(v1 - 1));
      }
      ++seen_m;
    }
  }
  if (n < 0) throw std::invalid_argument("graph file: missing problem line");
  if (declared_m != seen_m)
    throw std::invalid_argument("graph file: edge count mismatch");
  return g;
}

multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

std::map<vertex_id, int> write_graph(std::ostream& out, const multigraph& g,
                                     const std::vector<std::string>& comments) {
  std::map<vertex_id, int> file_id;
  int next = 1;
  for (vertex_id v : g.vertices()) file_id[v] = next++;
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto& [e, mult] : g.edges()) {
    for (int i = 0; i < mult; ++i) {
      out << "e " << file_id[e.lo] << " " << file_id[e.hi];
      if (auto w = g.weight(e.lo, e.hi)) out << " " << *w;
      out << "\n";
    }
  }
  return file_id;
}

std::map<vertex_id, int> write_graph_file(const std::string& path, const multigraph& g,
                                          const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  return write_graph(out, g, comments);
}

std::vector<vertex_id> read_marked_vertices(std::istream& in, const std::string& tag) {
  std::vector<vertex_id> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string t;
    long long v;
    if (!(ls >> t >> v)) continue;
    if (t != tag) continue;
    if (v < 1) throw std::invalid_argument("marked vertex file: ids are 1-based");
    out.push_back(static_cast<vertex_id>(v - 1));
  }
  return out;
}

std::vector<vertex_id> read_marked_vertices_file(const std::string& path, const std::string& tag) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_marked_vertices(in, tag);
}

void write_marked_vertices_file(const std::string& path, const std::string& tag,
                                const std::vector<vertex_id>& vs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (vertex_id v : vs) out << tag << " " << (v + 1) << "\n";
}

std::vector<symbol> decode_utf8(const std::string& line) {
  std::vector<symbol> out;
  size_t i = 0;
  while (i < line.size()) {
    unsigned char b = line[i];
    symbol cp = 0;
    int extra = 0;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      extra = 3;
    } else {
      throw std::invalid_argument("invalid UTF-8 byte");
    }
    if (i + extra >= line.size()) throw std::invalid_argument("truncated UTF-8 sequence");
    for (int j = 1; j <= extra; ++j) {
      unsigned char c = line[i + j];
      if ((c & 0xC0) != 0x80) throw std::invalid_argument("invalid UTF-8 continuation");
      cp = (cp << 6) | (c & 0x3F);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(const std::vector<symbol>& symbols) {
  std::string out;
  for (symbol cp : symbols) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::vector<std::vector<symbol>> read_strings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<symbol>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(decode_utf8(line));
  }
  return out;
}

std::vector<labelled_interval> read_intervals(std::istream& in) {
  std::vector<labelled_interval> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    labelled_interval iv;
    long long label1 = 0;
    if (!(ls >> tag >> iv.left >> iv.right >> label1)) continue;
    if (tag != "i") continue;
    if (iv.left > iv.right || label1 < 1)
      throw std::invalid_argument("interval file: bad interval line");
    iv.label = static_cast<int>(label1 - 1);
    out.push_back(iv);
  }
  return out;
}

std::vector<labelled_interval> read_intervals_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_intervals(in);
}

void write_intervals_file(const std::string& path, const std::vector<labelled_interval>& iv) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const auto& i : iv)
    out << "i " << i.left << " " << i.right << " " << (i.label + 1) << "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
}

}  // namespace lossy
