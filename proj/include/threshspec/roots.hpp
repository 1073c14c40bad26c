#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "threshspec/numeric.hpp"
#include "threshspec/polynomial.hpp"

namespace threshspec {

/// Isolating interval (lo, hi] for one distinct real root.
struct RootInterval {
  Rational lo;
  Rational hi;
  std::size_t multiplicity = 1;
  /// hi itself when it is the exact root, otherwise the midpoint.
  Rational estimate;
  /// `estimate` rounded to the requested number of decimals.
  std::string midpoint_estimate;
};

struct SquareFreeFactor {
  IntPolynomial factor;
  std::size_t multiplicity;
};

/// Yun's decomposition p = c * prod f_i^i with pairwise coprime, primitive,
/// square-free f_i. Factors equal to 1 are omitted.
std::vector<SquareFreeFactor> squarefree_decomposition(const IntPolynomial& p);

/// Primitive p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Sign of p at an exact rational point.
int sign_at(const IntPolynomial& p, const Rational& t);

/// Canonical Sturm chain of a square-free polynomial, each element scaled
/// by a positive constant.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& squarefree);
  /// Number of distinct roots in (lo, hi].
  std::size_t count(const Rational& lo, const Rational& hi) const;
  std::size_t variations(const Rational& t) const;
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Integer B with every real root strictly inside (-B, B).
Integer cauchy_bound(const IntPolynomial& p);

/// Disjoint intervals, sorted ascending, one per distinct real root, each
/// narrower than 10^-precision.
std::vector<RootInterval> sturm_isolate(const IntPolynomial& p, int precision = 12);

/// Decimal rendering of a rational rounded half away from zero.
std::string to_decimal(const Rational& value, int digits);

}  // namespace threshspec
