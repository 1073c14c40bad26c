#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "threshspec/linalg.hpp"
#include "threshspec/numeric.hpp"
#include "threshspec/polynomial.hpp"
#include "threshspec/roots.hpp"
#include "threshspec/sequence.hpp"

namespace threshspec {

/// gamma_n(l) for l = 0..n: the sum, over increasing index sequences of
/// length l whose parities alternate and end on the parity of n, of the
/// product of the selected block sizes. gamma_n(0) = 1.
class GammaTable {
 public:
  GammaTable(std::size_t n, std::vector<Integer> values);

  std::size_t n() const { return n_; }
  /// Zero for l > n.
  Integer operator[](std::size_t l) const { return l <= n_ ? values_[l] : Integer(0); }
  std::span<const Integer> values() const { return values_; }

  bool operator==(const GammaTable&) const = default;

 private:
  std::size_t n_;
  std::vector<Integer> values_;
};

using IndexSequence = std::vector<std::size_t>;

/// All 1-based index sequences of length l counted by gamma_n(l), in
/// lexicographic order.
std::vector<IndexSequence> index_sequences(std::size_t n, std::size_t l);

/// gamma_n(l) by enumerating index_sequences(n, l).
Integer gamma_bruteforce(const BlockSequence& seq, std::size_t l);

/// gamma_n via the two-step recurrence on the last block.
GammaTable gamma_table(const BlockSequence& seq);

/// Tables for every prefix a_1..a_k, k = 0..blocks.size(); entry k is gamma_k.
std::vector<GammaTable> prefix_gamma_tables(std::span<const Integer> blocks);

std::vector<Integer> to_integers(const BlockSequence& seq);

/// n x n quotient matrix of the block partition: entry (i, j) is the number
/// of neighbours a vertex of block i has in block j.
using QuotientMatrix = SquareMatrix<Integer>;

/// Tridiagonal reduction of D - xI with entries of degree at most 1.
using SymbolicTridiagonal = SquareMatrix<IntPolynomial>;

/// Requires an even block count (connected graph).
QuotientMatrix divisor_matrix(const BlockSequence& seq);
SymbolicTridiagonal tridiagonal_matrix(const BlockSequence& seq);

/// Q_n by the three-term recurrence, Q_0 = 1, Q_1 = x + a_1. Monic of degree n.
IntPolynomial q_recursive(const BlockSequence& seq);
IntPolynomial q_recursive(std::span<const Integer> blocks);

/// Q_n expanded from the alternating x^k (x+1)^k form with gamma
/// coefficients.
IntPolynomial p_closed_form(const BlockSequence& seq);
IntPolynomial p_closed_form(const GammaTable& gamma);

struct Multiplicities {
  std::size_t zero = 0;
  std::size_t minus_one = 0;
  bool operator==(const Multiplicities&) const = default;
};

/// Multiplicities of the eigenvalues 0 and -1 of a connected graph. When
/// a_1 = 1 the root -1 of Q_n is counted in `minus_one`.
Multiplicities multiplicities(const BlockSequence& seq);

/// det(A - xI) assembled from Q_n. Disconnected sequences contribute a
/// (-x)^k factor for the trailing isolated block.
IntPolynomial char_poly(const BlockSequence& seq);

/// det(A - xI) from integer determinants at t = 0..N and exact
/// interpolation. Independent of every formula above.
IntPolynomial brute_charpoly(const AdjacencyMatrix& adjacency);

/// det A = P_G(0). Requires a connected sequence.
Integer determinant(const BlockSequence& seq);

/// 0 when some odd block exceeds 1, otherwise (-1)^(N + n/2) * prod a_{2i}.
Integer determinant_closed_form(const BlockSequence& seq);

struct Eigenvalue {
  Rational value;  // exact when `exact`, otherwise a refined estimate
  std::string decimal;
  std::size_t multiplicity = 1;
  bool exact = false;
};

struct SpectrumReport {
  Multiplicities multiplicities;
  IntPolynomial divisor_polynomial;
  std::vector<RootInterval> divisor_roots;
  /// Every distinct eigenvalue, ascending.
  std::vector<Eigenvalue> eigenvalues;

  std::size_t total_multiplicity() const;
  Rational eigenvalue_sum() const;
  Rational eigenvalue_square_sum() const;
};

/// Requires a connected sequence.
SpectrumReport spectrum(const BlockSequence& seq, int precision = 12);

}  // namespace threshspec
