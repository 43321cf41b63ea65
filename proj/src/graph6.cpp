#include "alphaspec/graph6.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

#include "alphaspec/errors.hpp"

namespace alphaspec {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, static_cast<std::uint64_t>(n));
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (text.substr(begin, kHeader.size()) == kHeader) begin += kHeader.size();

  std::size_t pos = begin;
  auto next = [&]() -> int {
    if (pos >= end) throw ParseError("graph6: unexpected end of input", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte outside the range 63..126", pos);
    ++pos;
    return c - kBias;
  };

  std::uint64_t n = 0;
  if (pos >= end) throw ParseError("graph6: empty input", pos);
  if (text[pos] != '~') {
    n = static_cast<std::uint64_t>(next());
  } else {
    ++pos;
    int groups = 3;
    if (pos < end && text[pos] == '~') {
      ++pos;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
  }
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex", begin);
  if (n > 100000) throw ParseError("graph6: order too large for a dense graph", begin);

  const std::uint64_t nbits = n * (n - 1) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (end - pos != nbytes) {
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " edge bytes, found " +
                         std::to_string(end - pos),
                     end - pos > nbytes ? pos + nbytes : end);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  Vertex i = 0, j = 1;
  for (std::uint64_t b = 0; b < nbytes; ++b) {
    const std::size_t at = pos;
    const int chunk = next();
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (chunk >> bit) & 1;
      if (k >= nbits) {
        if (set) throw ParseError("graph6: non-zero padding bits", at);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace alphaspec
