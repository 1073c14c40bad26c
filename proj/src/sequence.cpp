#include "threshspec/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "threshspec/errors.hpp"

namespace threshspec {

namespace {

// Merge (digit, count) runs into blocks, treating the first vertex as a 0.
BlockSequence blocks_from_runs(const std::vector<std::pair<int, std::uint64_t>>& runs) {
  std::vector<std::uint64_t> blocks;
  int current = -1;
  bool first = true;
  for (auto [digit, count] : runs) {
    if (count == 0) continue;
    if (first) {
      blocks.push_back(1);
      current = 0;
      first = false;
      if (--count == 0) continue;
    }
    if (digit == current) {
      blocks.back() += count;
    } else {
      blocks.push_back(count);
      current = digit;
    }
  }
  if (blocks.empty()) throw ParseError("empty creation sequence");
  return BlockSequence::from_blocks(std::move(blocks));
}

}  // namespace

BlockSequence BlockSequence::from_blocks(std::vector<std::uint64_t> blocks) {
  if (blocks.empty()) throw InvalidArgument("block sequence must have at least one block");
  if (std::ranges::find(blocks, 0u) != blocks.end())
    throw InvalidArgument("block sizes must be positive");
  return BlockSequence(std::move(blocks));
}

std::uint64_t BlockSequence::order() const {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::uint64_t{0});
}

bool BlockSequence::connected() const { return blocks_.size() % 2 == 0 || order() == 1; }

BlockSequence BlockSequence::prefix(std::size_t count) const {
  if (count == 0 || count > blocks_.size()) throw InvalidArgument("prefix length out of range");
  return BlockSequence(std::vector<std::uint64_t>(blocks_.begin(), blocks_.begin() + count));
}

BlockSequence parse_binary(std::string_view s) {
  if (s.empty()) throw ParseError("empty creation sequence");
  std::vector<std::pair<int, std::uint64_t>> runs;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError(std::string("illegal character '") + c + "' in creation sequence");
    int digit = c - '0';
    if (!runs.empty() && runs.back().first == digit)
      ++runs.back().second;
    else
      runs.emplace_back(digit, 1);
  }
  return blocks_from_runs(runs);
}

BlockSequence parse_block_notation(std::string_view s) {
  std::vector<std::pair<int, std::uint64_t>> runs;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_space();
  while (pos < s.size()) {
    char c = s[pos];
    if (c != '0' && c != '1') throw ParseError(std::string("expected block digit, found '") + c + "'");
    int digit = c - '0';
    ++pos;
    std::uint64_t count = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), count);
      if (ec != std::errc{}) throw ParseError("malformed block exponent");
      pos = static_cast<std::size_t>(end - s.data());
      if (count == 0) throw ParseError("block exponent must be positive");
    }
    if (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])))
      throw ParseError("blocks must be separated by whitespace");
    runs.emplace_back(digit, count);
    skip_space();
  }
  if (runs.empty()) throw ParseError("empty creation sequence");
  return blocks_from_runs(runs);
}

BlockSequence parse_sequence(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  if (s.find('^') != std::string_view::npos || std::ranges::any_of(s, is_space))
    return parse_block_notation(s);
  return parse_binary(s);
}

std::string render_binary(const BlockSequence& seq) {
  std::string out;
  out.reserve(seq.order());
  for (std::size_t i = 0; i < seq.block_count(); ++i)
    out.append(seq.blocks()[i], i % 2 == 0 ? '0' : '1');
  return out;
}

std::string render_block_notation(const BlockSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.block_count(); ++i) {
    if (i) out += ' ';
    out += i % 2 == 0 ? '0' : '1';
    out += '^';
    out += std::to_string(seq.blocks()[i]);
  }
  return out;
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t order) : order_(order), entries_(order * order, 0) {}

AdjacencyMatrix::AdjacencyMatrix(std::size_t order, std::vector<std::uint8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) throw InvalidArgument("adjacency entry count does not match order");
  for (std::size_t i = 0; i < order_; ++i) {
    if (entries_[i * order_ + i] != 0) throw InvalidArgument("adjacency matrix must have a zero diagonal");
    for (std::size_t j = 0; j < order_; ++j) {
      auto v = entries_[i * order_ + j];
      if (v > 1) throw InvalidArgument("adjacency entries must be 0 or 1");
      if (v != entries_[j * order_ + i]) throw InvalidArgument("adjacency matrix must be symmetric");
    }
  }
}

AdjacencyMatrix AdjacencyMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint8_t> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidArgument("adjacency matrix must be square");
    for (int v : row) {
      if (v != 0 && v != 1) throw InvalidArgument("adjacency entries must be 0 or 1");
      entries.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return AdjacencyMatrix(n, std::move(entries));
}

std::size_t AdjacencyMatrix::degree(std::size_t v) const {
  auto row = std::span(entries_).subspan(v * order_, order_);
  return static_cast<std::size_t>(std::ranges::count(row, std::uint8_t{1}));
}

std::size_t AdjacencyMatrix::edge_count() const {
  return static_cast<std::size_t>(std::ranges::count(entries_, std::uint8_t{1})) / 2;
}

AdjacencyMatrix adjacency_matrix(const BlockSequence& seq) {
  const std::size_t n = seq.order();
  std::vector<std::uint8_t> entries(n * n, 0);
  std::size_t v = 0;
  for (std::size_t b = 0; b < seq.block_count(); ++b) {
    const bool dominating = b % 2 == 1;
    for (std::uint64_t k = 0; k < seq.blocks()[b]; ++k, ++v) {
      if (!dominating) continue;
      for (std::size_t u = 0; u < v; ++u) entries[v * n + u] = entries[u * n + v] = 1;
    }
  }
  return AdjacencyMatrix(n, std::move(entries));
}

GraphCounts vertex_edge_counts(const BlockSequence& seq) {
  GraphCounts counts;
  for (std::size_t b = 0; b < seq.block_count(); ++b) {
    const std::uint64_t size = seq.blocks()[b];
    if (b % 2 == 1) {
      // positions counts.vertices+1 .. counts.vertices+size, each joined to all predecessors
      counts.edges += size * counts.vertices + size * (size - 1) / 2;
    }
    counts.vertices += size;
  }
  return counts;
}

BlockSequence recognize_threshold(const AdjacencyMatrix& adjacency) {
  const std::size_t n = adjacency.order();
  if (n == 0) throw NotThreshold("graph has no vertices");
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adjacency.degree(v);
  std::vector<bool> removed(n, false);

  // Digits in reverse creation order.
  std::string reversed;
  reversed.reserve(n);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    std::size_t pick = n;
    char digit = '0';
    for (std::size_t v = 0; v < n; ++v) {
      if (removed[v]) continue;
      if (degree[v] == 0) {
        pick = v;
        digit = '0';
        break;
      }
      if (degree[v] == remaining - 1) {
        pick = v;
        digit = '1';
        break;
      }
    }
    if (pick == n) throw NotThreshold("no isolated or dominating vertex among the remaining vertices");
    removed[pick] = true;
    for (std::size_t u = 0; u < n; ++u)
      if (!removed[u] && adjacency.adjacent(pick, u)) --degree[u];
    reversed.push_back(digit);
  }
  std::ranges::reverse(reversed);
  return parse_binary(reversed);
}

}  // namespace threshspec
