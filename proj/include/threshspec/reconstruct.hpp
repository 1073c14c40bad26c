#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "threshspec/numeric.hpp"
#include "threshspec/polynomial.hpp"
#include "threshspec/sequence.hpp"
#include "threshspec/spectral.hpp"

namespace threshspec {

/// gamma_n(0..n) recovered from a monic Q_n of even degree n.
struct MixedBasisCoeffs {
  std::size_t n = 0;
  std::vector<Integer> gamma;
  bool operator==(const MixedBasisCoeffs&) const = default;
};

/// Expands Q in the basis {(x(x+1))^k, x (x(x+1))^k}, whose elements have
/// degrees 0..n, by top-down elimination, and strips the alternating signs
/// so the result holds gamma_n(l) directly.
///
/// Throws InvalidArgument unless Q is monic of even degree >= 2, and
/// NonIntegerOrNegativeGamma when some recovered gamma_n(l) is not positive.
MixedBasisCoeffs mixed_basis_coeffs(const IntPolynomial& q);

/// Gamma_n(m, i) = sum_j (-1)^j gamma_n(m-1-j) gamma_{2i-r}(j),
/// j = 0..min(m-1, 2i-r), with r the parity of m. `prefix` must hold at
/// least a_1..a_{2i-r}.
Integer big_gamma(const MixedBasisCoeffs& gamma, std::span<const Integer> prefix, std::size_t m, std::size_t i);

/// Every Gamma_n(m, i) entering the expansion of gamma_n(m), 1 <= m <= n,
/// for a known sequence with an even number of blocks.
class BigGamma {
 public:
  explicit BigGamma(const BlockSequence& seq);

  std::size_t n() const { return n_; }
  /// Range of i in the expansion of gamma_n(m): [r, (n - m + r) / 2].
  std::pair<std::size_t, std::size_t> index_range(std::size_t m) const;
  const Integer& at(std::size_t m, std::size_t i) const;

  /// sum_i a_{2i+1-r} Gamma_n(m, i); equals gamma_n(m).
  Integer expansion(std::size_t m) const;

 private:
  std::size_t n_;
  std::vector<Integer> blocks_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> values_;
};

/// The unique connected block sequence whose characteristic polynomial
/// det(A - xI) is `p`. Throws NotThresholdSpectrum otherwise.
BlockSequence reconstruct_sequence(const IntPolynomial& p);

/// Two or more creation sequences sharing one characteristic polynomial.
struct Collision {
  IntPolynomial polynomial;
  std::vector<std::string> sequences;
};

struct CensusReport {
  std::size_t order = 0;
  std::size_t count = 0;
  std::size_t distinct = 0;
  std::vector<Collision> collisions;
  double elapsed_ms = 0.0;
  std::size_t workers = 1;
};

/// Enumerates all 2^(N-2) connected creation strings of length N (first
/// digit 0, last digit 1), computes each characteristic polynomial, and
/// reports polynomials shared by more than one string. Workers take
/// contiguous ranges of the string space; the merge is in string order, so
/// the result does not depend on `workers`.
CensusReport verify_distinct(std::size_t order, std::size_t workers);

/// {"order", "count", "collisions", "elapsed_ms", "workers"}
std::string census_to_json(const CensusReport& report, bool include_timing = true);

}  // namespace threshspec
