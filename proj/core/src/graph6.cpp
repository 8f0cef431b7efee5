#include "curv/graph6.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace curv {

namespace {

// Graphs are stored with dense n x n matrices, so keep decoded sizes sane.
constexpr int kMaxVertices = 4096;

int data_byte(std::string_view line, std::size_t pos) {
  if (pos >= line.size())
    throw ParseError("graph6 record truncated", line.size());
  unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6 byte out of range [63,126]", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 record", 0);

  std::size_t pos = 0;
  long n;
  int first = data_byte(line, pos++);
  if (first < 63) {  // 63 was already subtracted; first is in [0,63]
    n = first;
  } else {
    // '~' prefix: three more bytes carry an 18-bit size. A second '~'
    // would start the 8-byte form, which is beyond this tool.
    if (pos < line.size() && line[pos] == '~')
      throw ParseError("graph6 8-byte size form not supported", pos);
    long b0 = data_byte(line, pos++);
    long b1 = data_byte(line, pos++);
    long b2 = data_byte(line, pos++);
    n = (b0 << 12) | (b1 << 6) | b2;
    if (n <= 62) throw ParseError("non-canonical graph6 size encoding", 1);
  }
  if (n > kMaxVertices)
    throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kMaxVertices),
                     0);

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() != pos + nbytes)
    throw ParseError("graph6 record length mismatch: expected " +
                         std::to_string(pos + nbytes) + " bytes, got " +
                         std::to_string(line.size()),
                     line.size());

  std::vector<VertexPair> edges;
  std::size_t bit = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) value = data_byte(line, pos + bit / 6);
      if (value & (1 << (5 - static_cast<int>(bit % 6)))) edges.emplace_back(i, j);
    }
  }
  // Canonical records zero-pad the final byte.
  for (std::size_t b = bit; b < nbytes * 6; ++b) {
    if (b % 6 == 0) value = data_byte(line, pos + b / 6);
    if (value & (1 << (5 - static_cast<int>(b % 6))))
      throw ParseError("graph6 padding bits must be zero", pos + b / 6);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxVertices)
    throw InputError("graph too large for graph6 writer: n=" + std::to_string(n));
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long n, m;
  if (!(in >> n >> m)) throw ParseError("edge list: cannot read header 'n m'", 0);
  if (n < 0 || n > kMaxVertices) throw ParseError("edge list: bad vertex count", 0);
  if (m < 0) throw ParseError("edge list: bad edge count", 0);
  std::vector<VertexPair> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v))
      throw ParseError("edge list: cannot read edge " + std::to_string(i + 1) + " of " +
                           std::to_string(m),
                       0);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace curv
