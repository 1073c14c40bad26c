#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace threshspec {

/// Compact creation sequence (a_1, ..., a_n) of a threshold graph.
///
/// Block i counts a run of equal creation digits. Odd blocks (1-based) are
/// runs of isolated additions (digit 0), even blocks runs of dominating
/// additions (digit 1). The first vertex always belongs to block 1.
class BlockSequence {
 public:
  /// Throws InvalidArgument if `blocks` is empty or contains a zero.
  static BlockSequence from_blocks(std::vector<std::uint64_t> blocks);

  std::span<const std::uint64_t> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// 1-based block accessor matching the a_i notation.
  std::uint64_t a(std::size_t i) const { return blocks_.at(i - 1); }

  /// Vertex count N = sum of the blocks.
  std::uint64_t order() const;

  /// Connected iff the sequence ends with a dominating block, or N = 1.
  bool connected() const;

  /// The first `count` blocks.
  BlockSequence prefix(std::size_t count) const;

  bool operator==(const BlockSequence&) const = default;
  auto operator<=>(const BlockSequence&) const = default;

 private:
  explicit BlockSequence(std::vector<std::uint64_t> blocks) : blocks_(std::move(blocks)) {}
  std::vector<std::uint64_t> blocks_;
};

/// Parses a raw creation string over {0,1}. The first digit is read as 0.
BlockSequence parse_binary(std::string_view s);

/// Parses block notation such as "0^2 1^3 0^3 1^2". A bare digit counts
/// once; adjacent tokens with the same digit are merged.
BlockSequence parse_block_notation(std::string_view s);

/// Accepts either raw binary or block notation.
BlockSequence parse_sequence(std::string_view s);

std::string render_binary(const BlockSequence& seq);
std::string render_block_notation(const BlockSequence& seq);

/// Symmetric 0/1 matrix with zero diagonal.
class AdjacencyMatrix {
 public:
  /// Edgeless graph on `order` vertices.
  explicit AdjacencyMatrix(std::size_t order = 0);

  /// Row-major `order * order` entries. Throws InvalidArgument unless the
  /// entries are 0/1, symmetric, and zero on the diagonal.
  AdjacencyMatrix(std::size_t order, std::vector<std::uint8_t> entries);

  static AdjacencyMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t order() const { return order_; }
  bool adjacent(std::size_t i, std::size_t j) const { return entries_[i * order_ + j] != 0; }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::span<const std::uint8_t> entries() const { return entries_; }

  bool operator==(const AdjacencyMatrix&) const = default;

 private:
  std::size_t order_;
  std::vector<std::uint8_t> entries_;
};

/// Builds the graph vertex by vertex in creation order.
AdjacencyMatrix adjacency_matrix(const BlockSequence& seq);

struct GraphCounts {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  bool operator==(const GraphCounts&) const = default;
};

/// Closed-form counts; a dominating vertex at position p contributes p - 1 edges.
GraphCounts vertex_edge_counts(const BlockSequence& seq);

/// Inverse of the construction: repeatedly removes an isolated or a
/// dominating vertex. Throws NotThreshold when neither exists.
BlockSequence recognize_threshold(const AdjacencyMatrix& adjacency);

/// Standard graph6 encoding (upper triangle, column-major, 6 bits per char).
std::string graph6_encode(const AdjacencyMatrix& adjacency);

/// Throws ParseError on a malformed header, an illegal character, a
/// truncated bit stream, or trailing data.
AdjacencyMatrix graph6_decode(std::string_view text);

}  // namespace threshspec
