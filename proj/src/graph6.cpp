#include <cstdint>
#include <string>

#include "threshspec/errors.hpp"
#include "threshspec/sequence.hpp"

namespace threshspec {

namespace {

constexpr int kBias = 63;
constexpr char kLongMarker = 126;  // '~'

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kLongMarker);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  } else {
    out.push_back(kLongMarker);
    out.push_back(kLongMarker);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
}

int sextet(char c) {
  if (c < kBias || c > kBias + 63) throw ParseError("illegal graph6 character");
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const AdjacencyMatrix& adjacency) {
  const std::size_t n = adjacency.order();
  std::string out;
  put_order(out, n);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adjacency.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

AdjacencyMatrix graph6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_digits = [&](int count) {
    if (pos + count > text.size()) throw ParseError("truncated graph6 header");
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
    return v;
  };
  if (text[0] != kLongMarker) {
    n = read_digits(1);
  } else if (text.size() > 1 && text[1] != kLongMarker) {
    pos = 1;
    n = read_digits(3);
    if (n <= 62) throw ParseError("non-canonical graph6 header");
  } else {
    pos = 2;
    n = read_digits(6);
    if (n <= 258047) throw ParseError("non-canonical graph6 header");
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars) throw ParseError("truncated graph6 bit stream");
  if (text.size() - pos > chars) throw ParseError("trailing data after graph6 bit stream");

  std::vector<std::uint8_t> entries(n * n, 0);
  std::uint64_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int value = sextet(text[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) entries[i * n + j] = entries[j * n + i] = 1;
    }
  }
  for (std::uint64_t c = pos; c < text.size(); ++c) sextet(text[c]);
  return AdjacencyMatrix(n, std::move(entries));
}

}  // namespace threshspec
