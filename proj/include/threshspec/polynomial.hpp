#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "threshspec/numeric.hpp"

namespace threshspec {

/// Dense univariate polynomial over the integers, coefficients ascending by
/// degree. The zero polynomial has an empty coefficient list; every other
/// value has a nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);

  static IntPolynomial constant(const Integer& c);
  /// c * x^k
  static IntPolynomial monomial(const Integer& c, std::size_t k);
  /// x + c
  static IntPolynomial linear(const Integer& c);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Integer> coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  Integer coefficient(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer eval(const Integer& t) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(IntPolynomial lhs, const Integer& c) { return lhs *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial rhs) { return rhs *= c; }
  friend IntPolynomial operator-(IntPolynomial p);

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const IntPolynomial& p, const Integer& c);
Integer eval_int(const IntPolynomial& p, const Integer& t);
IntPolynomial pow(const IntPolynomial& p, std::size_t k);
IntPolynomial derivative(const IntPolynomial& p);

/// p / q when q divides p over Z[x]. Throws NotDivisible otherwise and
/// InvalidArgument when q is zero.
IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& q);

struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// lc(q)^(deg p - deg q + 1) * p = quotient * q + remainder.
PseudoDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& q);

/// Nonnegative gcd of the coefficients.
Integer content(const IntPolynomial& p);
/// p / content(p) with a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

/// Largest k with (x - r)^k dividing p. Throws InvalidArgument for p = 0.
std::size_t root_multiplicity(const IntPolynomial& p, const Integer& r);

/// Ascending comma-separated decimal coefficients ("-1,0,1" is x^2 - 1).
/// The zero polynomial renders as "0".
std::string to_text(const IntPolynomial& p);
/// Inverse of to_text; whitespace around coefficients is ignored and
/// trailing zeros are dropped.
IntPolynomial parse_polynomial(std::string_view text);

/// Human-readable form, highest degree first, e.g. "x^2 - 3".
std::string to_pretty(const IntPolynomial& p);

}  // namespace threshspec
