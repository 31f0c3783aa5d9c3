#pragma once

// graph6 interchange format.
//
// Layout: N(n) followed by the upper triangle of the adjacency matrix read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
// per byte, most significant first, each byte offset by 63. N(n) is one
// byte for n <= 62, '~' plus three bytes for n <= 258047, and "~~" plus six
// bytes otherwise.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;

inline std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }

  int acc = 0, filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Parses one graph6 record. An optional ">>graph6<<" prefix is accepted.
inline Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();

  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw Graph6Error("unexpected end of graph6 text", at);
    auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 character", at);
    return c - 63;
  };

  std::uint64_t n = 0;
  if (pos >= text.size()) throw Graph6Error("empty graph6 text", pos);
  if (text[pos] != '~') {
    n = sextet(pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
  }
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw Graph6Error("graph order too large for this build", pos);

  const auto order = static_cast<int>(n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Graph6Error("expected " + std::to_string(bytes) + " payload bytes, found " +
                          std::to_string(text.size() - pos),
                      text.size() < pos + bytes ? text.size() : pos + bytes);

  GraphBuilder b(order);
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + bit / 6;
      if ((sextet(at) >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    std::size_t at = pos + bit / 6;
    if (sextet(at) & ((1u << (6 - bit % 6)) - 1))
      throw Graph6Error("nonzero padding bits", at);
  }
  return std::move(b).build();
}

/// One graph per nonempty line. Parse errors carry the line number.
class Graph6StreamError : public std::runtime_error {
 public:
  Graph6StreamError(std::size_t line, const Graph6Error& e)
      : std::runtime_error("line " + std::to_string(line) + ": " + e.what()), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6StreamError(number, e);
    }
  }
  return out;
}

}  // namespace cospec
