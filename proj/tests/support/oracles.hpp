#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// formula paths it is used to check.

#include <algorithm>
#include <bit>
#include <type_traits>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "threshspec/linalg.hpp"
#include "threshspec/polynomial.hpp"
#include "threshspec/sequence.hpp"

namespace threshspec::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x7468726573680001ULL);
  return engine;
}

/// Random sequence with `blocks` blocks, each in [1, max_block].
inline BlockSequence random_sequence(std::size_t blocks, std::uint64_t max_block) {
  std::uniform_int_distribution<std::uint64_t> dist(1, max_block);
  std::vector<std::uint64_t> v(blocks);
  for (auto& b : v) b = dist(rng());
  return BlockSequence::from_blocks(std::move(v));
}

/// Random connected sequence with an even block count in [2, max_blocks].
inline BlockSequence random_connected(std::size_t max_blocks, std::uint64_t max_block) {
  std::uniform_int_distribution<std::size_t> half(1, max_blocks / 2);
  return random_sequence(2 * half(rng()), max_block);
}

/// Every creation string of length N starting with 0 and ending with 1.
inline std::vector<std::string> connected_strings(std::size_t order) {
  std::vector<std::string> out;
  if (order < 2) return out;
  const std::uint64_t total = std::uint64_t{1} << (order - 2);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::string s(order, '0');
    s.back() = '1';
    for (std::size_t k = 0; k + 2 < order; ++k)
      if ((idx >> k) & 1) s[k + 1] = '1';
    out.push_back(s);
  }
  std::ranges::sort(out);
  return out;
}

/// Adjacency by the literal construction on a digit string.
inline std::vector<std::vector<int>> construct_by_definition(const std::string& digits) {
  const std::size_t n = digits.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t v = 1; v < n; ++v)
    if (digits[v] == '1')
      for (std::size_t u = 0; u < v; ++u) a[u][v] = a[v][u] = 1;
  return a;
}

inline std::vector<std::size_t> degree_multiset(const AdjacencyMatrix& a) {
  std::vector<std::size_t> d(a.order());
  for (std::size_t v = 0; v < a.order(); ++v) d[v] = a.degree(v);
  std::ranges::sort(d);
  return d;
}

/// gamma_n(l) by scanning every subset of [n] as a bitmask.
inline Integer gamma_by_subsets(const std::vector<std::uint64_t>& a, std::size_t l) {
  const std::size_t n = a.size();
  if (l == 0) return 1;
  Integer sum = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != l) continue;
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) t.push_back(i + 1);
    bool ok = true;
    for (std::size_t i = 1; i <= l && ok; ++i) ok = (t[i - 1] + n + i + l) % 2 == 0;
    if (!ok) continue;
    Integer product = 1;
    for (auto idx : t) product *= Integer(static_cast<unsigned long>(a[idx - 1]));
    sum += product;
  }
  return sum;
}

/// Cofactor expansion along the first row; exponential, for n <= 7.
template <class T>
T laplace_determinant(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) {
    if constexpr (std::is_same_v<T, IntPolynomial>)
      return IntPolynomial::constant(1);
    else
      return T(1);
  }
  if (n == 1) return m(0, 0);
  T det{};
  for (std::size_t c = 0; c < n; ++c) {
    SquareMatrix<T> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    T term = m(0, c) * laplace_determinant(minor);
    if (c % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}

inline IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Integer> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

}  // namespace threshspec::testing
