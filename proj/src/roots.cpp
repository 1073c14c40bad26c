#include "threshspec/roots.hpp"

#include <algorithm>
#include <optional>

#include "threshspec/errors.hpp"

namespace threshspec {

std::vector<SquareFreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  IntPolynomial f = primitive_part(p);
  if (f.degree() < 1) return out;

  // Primitive divisors divide exactly over Z[x] (Gauss), so every quotient
  // below is an exact integer division.
  IntPolynomial df = derivative(f);
  IntPolynomial a = gcd(f, df);
  IntPolynomial b = exact_div(f, a);
  IntPolynomial c = exact_div(df, a);
  IntPolynomial d = c - derivative(b);
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    IntPolynomial next_b = exact_div(b, a);
    c = d.is_zero() ? IntPolynomial{} : exact_div(d, a);
    d = c - derivative(next_b);
    b = std::move(next_b);
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial f = primitive_part(p);
  if (f.degree() < 1) return f;
  return primitive_part(exact_div(f, gcd(f, derivative(f))));
}

int sign_at(const IntPolynomial& p, const Rational& t) {
  if (p.is_zero()) return 0;
  const Integer& num = t.get_num();
  const Integer& den = t.get_den();
  // Homogeneous Horner: den^deg * p(num/den), den > 0 keeps the sign.
  const auto c = p.coefficients();
  Integer acc = c.back();
  Integer den_pow = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + c[k] * den_pow;
  }
  return sgn(acc);
}

SturmChain::SturmChain(const IntPolynomial& squarefree) {
  if (squarefree.is_zero()) throw InvalidArgument("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree);
  IntPolynomial next = derivative(squarefree);
  while (!next.is_zero()) {
    chain_.push_back(next);
    const IntPolynomial& prev = chain_[chain_.size() - 2];
    const IntPolynomial& cur = chain_.back();
    PseudoDivision pd = pseudo_divide(prev, cur);
    // The pseudo-remainder carries lc^(delta+1); flip when that factor is negative.
    const long delta = prev.degree() - cur.degree();
    const bool negative_factor = cur.leading() < 0 && (delta + 1) % 2 == 1;
    IntPolynomial r = negative_factor ? pd.remainder : -pd.remainder;
    if (r.is_zero()) break;
    const Integer g = content(r);
    std::vector<Integer> reduced(r.coefficients().begin(), r.coefficients().end());
    for (auto& v : reduced) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    next = IntPolynomial(std::move(reduced));
  }
}

std::size_t SturmChain::variations(const Rational& t) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_at(q, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmChain::count(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

Integer cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 1;
  Integer top = 0;
  for (std::size_t k = 0; k + 1 < p.coefficients().size(); ++k) top = std::max(top, Integer(abs(p.coefficients()[k])));
  Integer q;
  const Integer lead = abs(p.leading());
  mpz_cdiv_q(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = abs(value.get_num()) * scale * 2 + value.get_den();
  Integer den = value.get_den() * 2;
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  std::string body = rounded.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (value < 0 && rounded != 0) body.insert(0, "-");
  return body;
}

namespace {

void isolate(const SturmChain& chain, const Rational& lo, const Rational& hi, std::size_t roots,
             std::vector<RootInterval>& out) {
  if (roots == 0) return;
  if (roots == 1) {
    out.push_back({lo, hi, 1, {}, {}});
    return;
  }
  Rational mid = (lo + hi) / 2;
  const std::size_t left = chain.count(lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, roots - left, out);
}

std::optional<Rational> nearest_rational_root(const IntPolynomial& f, const RootInterval& r) {
  const Integer lc = abs(f.leading());
  const Rational scaled = (r.lo + r.hi) / 2 * lc;
  Integer numerator;
  const Integer twice = 2 * scaled.get_num() + scaled.get_den();
  const Integer denom = 2 * scaled.get_den();
  mpz_fdiv_q(numerator.get_mpz_t(), twice.get_mpz_t(), denom.get_mpz_t());
  Rational candidate(numerator, lc);
  candidate.canonicalize();
  if (candidate > r.lo && candidate <= r.hi && sign_at(f, candidate) == 0) return candidate;
  return std::nullopt;
}

}  // namespace

std::vector<RootInterval> sturm_isolate(const IntPolynomial& p, int precision) {
  if (p.is_zero()) throw InvalidArgument("cannot isolate the roots of the zero polynomial");
  if (precision < 1) throw InvalidArgument("precision must be at least 1");
  const auto factors = squarefree_decomposition(p);
  if (factors.empty()) return {};

  IntPolynomial sqf = IntPolynomial::constant(1);
  std::vector<SturmChain> factor_chains;
  for (const auto& f : factors) {
    sqf *= f.factor;
    factor_chains.emplace_back(f.factor);
  }
  const SturmChain chain(sqf);
  const Rational bound(cauchy_bound(sqf));

  std::vector<RootInterval> roots;
  isolate(chain, -bound, bound, chain.count(-bound, bound), roots);

  Integer ten_pow = 1;
  for (int i = 0; i < precision; ++i) ten_pow *= 10;
  const Rational eps(Integer(1), ten_pow);

  for (auto& r : roots) {
    while (r.hi - r.lo >= eps) {
      Rational mid = (r.lo + r.hi) / 2;
      if (chain.count(r.lo, mid) == 1)
        r.hi = mid;
      else
        r.lo = mid;
    }
    r.estimate = (r.lo + r.hi) / 2;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (factor_chains[k].count(r.lo, r.hi) == 1) {
        r.multiplicity = factors[k].multiplicity;
        // A rational root of a primitive factor has a denominator dividing
        // its leading coefficient, so the nearest such fraction is the only
        // candidate inside an interval this narrow.
        if (auto exact = nearest_rational_root(factors[k].factor, r)) r.estimate = *exact;
        break;
      }
    }
    r.midpoint_estimate = to_decimal(r.estimate, precision);
  }
  return roots;
}

}  // namespace threshspec
