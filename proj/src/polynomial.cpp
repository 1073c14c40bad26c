#include "threshspec/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "threshspec/errors.hpp"

namespace threshspec {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& c) { return IntPolynomial({c, 1}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer IntPolynomial::eval(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

IntPolynomial operator-(IntPolynomial p) {
  for (auto& v : p.coeffs_) v = -v;
  return p;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) { return p - q; }
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
IntPolynomial scale(const IntPolynomial& p, const Integer& c) { return p * c; }
Integer eval_int(const IntPolynomial& p, const Integer& t) { return p.eval(t); }

IntPolynomial pow(const IntPolynomial& p, std::size_t k) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k < p.coefficients().size(); ++k) out[k - 1] = p.coefficients()[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw NotDivisible("divisor degree exceeds dividend degree");

  std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
  const auto dq = static_cast<std::size_t>(q.degree());
  const auto qc = q.coefficients();
  std::vector<Integer> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), q.leading().get_mpz_t()))
      throw NotDivisible("leading coefficient does not divide over the integers");
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), q.leading().get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= factor * qc[j];
    quot[k] = std::move(factor);
  }
  if (std::ranges::any_of(rem, [](const Integer& v) { return v != 0; }))
    throw NotDivisible("nonzero remainder");
  return IntPolynomial(std::move(quot));
}

PseudoDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.degree() < q.degree()) return {IntPolynomial{}, p};

  const auto dq = static_cast<std::size_t>(q.degree());
  const Integer& lc = q.leading();
  std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Integer> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    // Multiply everything so far by lc, then cancel the current top term.
    for (auto& v : quot) v *= lc;
    Integer top = rem[k + dq];
    for (std::size_t j = 0; j < k + dq; ++j) rem[j] *= lc;
    rem[k + dq] = 0;
    for (std::size_t j = 0; j < dq; ++j) rem[k + j] -= top * q.coefficients()[j];
    quot[k] = top;
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial a = primitive_part(p);
  IntPolynomial b = primitive_part(q);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_divide(a, b).remainder;
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

std::size_t root_multiplicity(const IntPolynomial& p, const Integer& r) {
  if (p.is_zero()) throw InvalidArgument("root multiplicity of the zero polynomial");
  std::vector<Integer> c(p.coefficients().begin(), p.coefficients().end());
  std::size_t k = 0;
  while (c.size() > 1) {
    // Synthetic division by (x - r).
    std::vector<Integer> q(c.size() - 1);
    Integer acc = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      acc = acc * r + c[i];
      q[i - 1] = acc;
    }
    if (acc * r + c[0] != 0) break;
    c = std::move(q);
    ++k;
  }
  return k;
}

std::string to_text(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) out += ',';
    out += p.coefficients()[k].get_str(10);
  }
  return out;
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view field = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    std::string token(field);
    if (!token.empty() && token.front() == '+') token.erase(0, 1);
    const bool digits_ok = !token.empty() &&
                           std::all_of(token.begin() + (token.front() == '-' ? 1 : 0), token.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }) &&
                           token != "-";
    if (!digits_ok) throw ParseError("malformed polynomial coefficient '" + std::string(field) + "'");
    coeffs.emplace_back(token, 10);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string to_pretty(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const Integer& c = p.coefficients()[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str(10);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace threshspec
