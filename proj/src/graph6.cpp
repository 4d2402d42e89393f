#include "amm/graph6.hpp"

#include <cstdint>

#include "amm/errors.hpp"

namespace amm {

namespace {

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw InputError("graph6: truncated input at byte " + std::to_string(pos));
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw InputError("graph6: non-printable or out-of-range byte " + std::to_string(c) + " at offset " +
                     std::to_string(pos));
  return c - 63;
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  put_size(out, n);
  int acc = 0;
  int bits = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input at offset 0");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] == 126) {
    if (text.size() > 1 && text[1] == 126) {
      for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, 2 + k));
      pos = 8;
      if (n <= 258047) throw InputError("graph6: non-canonical 8-byte length header at offset 0");
    } else {
      for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, 1 + k));
      pos = 4;
      if (n <= 62) throw InputError("graph6: non-canonical 4-byte length header at offset 0");
    }
    if (n > 100000) throw InputError("graph6: vertex count " + std::to_string(n) + " too large");
  } else {
    n = static_cast<std::uint64_t>(sextet(text, 0));
    pos = 1;
  }
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (pairs + 5) / 6;
  if (text.size() != pos + body)
    throw InputError("graph6: expected " + std::to_string(pos + body) + " bytes for n = " + std::to_string(n) +
                     ", got " + std::to_string(text.size()) + " (length mismatch at offset " +
                     std::to_string(std::min<std::size_t>(text.size(), pos + body)) + ")");
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  for (std::size_t b = pos; b < text.size(); ++b) sextet(text, b);
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace amm
