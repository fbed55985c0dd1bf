#include "domhad/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "domhad/error.hpp"

namespace domhad {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_g6_byte(char c) { return c >= 63 && c <= 126; }

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text, int max_vertices) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
  std::string_view s = trim_right(text.substr(base));

  if (s.empty()) throw ParseError(ParseError::Kind::kTruncated, base, "empty graph6 string");
  std::size_t pos = 0;
  long n = 0;
  if (s[0] != '~') {
    if (!is_g6_byte(s[0])) throw ParseError(ParseError::Kind::kBadHeader, base, "malformed graph6 header byte");
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~')
      throw ParseError(ParseError::Kind::kTooLarge, base + 1, "8-byte graph6 header is not supported");
    if (s.size() < 4) throw ParseError(ParseError::Kind::kTruncated, base + s.size(), "truncated graph6 header");
    for (std::size_t i = 1; i <= 3; ++i) {
      if (!is_g6_byte(s[i]))
        throw ParseError(ParseError::Kind::kBadHeader, base + i, "malformed graph6 header byte");
      n = (n << 6) | (s[i] - 63);
    }
    pos = 4;
  }
  if (n > max_vertices)
    throw ParseError(ParseError::Kind::kTooLarge, base,
                     "graph6 order " + std::to_string(n) + " exceeds cap " + std::to_string(max_vertices));

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() < pos + bytes)
    throw ParseError(ParseError::Kind::kTruncated, base + s.size(),
                     "truncated graph6 payload: expected " + std::to_string(bytes) + " bytes");
  if (s.size() > pos + bytes)
    throw ParseError(ParseError::Kind::kTrailingData, base + pos + bytes, "unexpected trailing data");

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const char c = s[at];
      if (!is_g6_byte(c)) throw ParseError(ParseError::Kind::kBadPayload, base + at, "byte outside graph6 range");
      if (((c - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t at = pos + k / 6; at < pos + bytes; ++at)
    if (!is_g6_byte(s[at])) throw ParseError(ParseError::Kind::kBadPayload, base + at, "byte outside graph6 range");
  if (k % 6 != 0 && ((s[pos + k / 6] - 63) & ((1 << (6 - k % 6)) - 1)))
    throw ParseError(ParseError::Kind::kBadPayload, base + pos + k / 6, "nonzero padding bits");
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6LongFormMax) throw CapacityError("graph too large for 4-byte graph6 header");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long> numbers;
  std::vector<std::size_t> offsets;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t i = first;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
          ++i;
          continue;
        }
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || value < 0)
          throw ParseError(ParseError::Kind::kBadEdgeList, line_start + i, "expected a non-negative integer");
        numbers.push_back(value);
        offsets.push_back(line_start + i);
        i = static_cast<std::size_t>(ptr - line.data());
      }
    }
    line_start = line_end + 1;
  }
  if (numbers.size() < 2) throw ParseError(ParseError::Kind::kBadEdgeList, text.size(), "missing \"n m\" header");
  const long n = numbers[0];
  const long m = numbers[1];
  if (n > kMaxVertices) throw ParseError(ParseError::Kind::kTooLarge, offsets[0], "vertex count exceeds capacity");
  if (numbers.size() != static_cast<std::size_t>(2 + 2 * m))
    throw ParseError(ParseError::Kind::kBadEdgeList, text.size(),
                     "expected " + std::to_string(m) + " edges after header");
  std::vector<Edge> edges;
  for (long e = 0; e < m; ++e) {
    const long u = numbers[2 + 2 * e];
    const long v = numbers[3 + 2 * e];
    if (u >= n || v >= n || u == v)
      throw ParseError(ParseError::Kind::kBadEdgeList, offsets[2 + 2 * e], "invalid edge endpoint");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

std::string emit_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

GraphFormat detect_format(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string_view::npos) return GraphFormat::kGraph6;
  if (text.substr(i).starts_with(kGraph6Header) || is_g6_byte(text[i])) return GraphFormat::kGraph6;
  return GraphFormat::kEdgeList;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = detect_format(text);
  if (format == GraphFormat::kGraph6) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    return parse_graph6(i == std::string_view::npos ? std::string_view{} : text.substr(i));
  }
  return parse_edge_list(text);
}

}  // namespace domhad
