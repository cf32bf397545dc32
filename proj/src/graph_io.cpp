#include "elc/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace elc {

namespace {

// Strip one trailing newline (and optional carriage return) so that words
// copied from files with a final line break still parse.
std::string trim_trailing_newline(const std::string& s) {
  std::string t = s;
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
  return t;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  const std::string s = trim_trailing_newline(text);
  if (s.empty()) throw ParseError("empty graph6 input");
  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of range", static_cast<long>(i));
  }
  if (s[0] == '~')
    throw ParseError("graph6 long form (order > 62) not supported", 0);
  const int n = s[0] - 63;
  const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  const long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long>(s.size()) - 1 < bytes_needed)
    throw ParseError("graph6 input truncated: need " +
                     std::to_string(bytes_needed) + " data bytes");
  if (static_cast<long>(s.size()) - 1 > bytes_needed)
    throw ParseError("trailing bytes after graph6 data",
                     1 + bytes_needed);

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  if (g.n > 62)
    throw std::invalid_argument("encode_graph6: order " + std::to_string(g.n) +
                                " exceeds short-form limit 62");
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  const long bits = static_cast<long>(g.n) * (g.n - 1) / 2;
  std::vector<int> data((bits + 5) / 6, 0);
  long bit = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) data[bit / 6] |= 1 << (5 - bit % 6);
    }
  }
  for (int d : data) out.push_back(static_cast<char>(d + 63));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long n = -1, m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw ParseError("edge list: negative header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v))
      throw ParseError("edge list: expected " + std::to_string(m) +
                       " edges, got " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long extra;
  if (in >> extra) throw ParseError("edge list: trailing data after last edge");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

}  // namespace elc
