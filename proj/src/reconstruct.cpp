#include "threshspec/reconstruct.hpp"

#include <algorithm>
#include <limits>

#include "threshspec/errors.hpp"

namespace threshspec {

namespace {

// Gamma_n(m, i) with gamma_{2i-r} supplied as a ready table.
Integer big_gamma_with(const MixedBasisCoeffs& gamma, const GammaTable& inner, std::size_t m) {
  const std::size_t upper = std::min(m - 1, inner.n());
  Integer sum = 0;
  for (std::size_t j = 0; j <= upper; ++j) {
    Integer term = gamma.gamma[m - 1 - j] * inner[j];
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

std::size_t inner_order(std::size_t m, std::size_t i) {
  const std::size_t r = m % 2;
  if (i < r) throw InvalidArgument("big_gamma index i must be at least the parity of m");
  return 2 * i - r;
}

}  // namespace

MixedBasisCoeffs mixed_basis_coeffs(const IntPolynomial& q) {
  if (q.degree() < 2 || q.degree() % 2 != 0) throw InvalidArgument("mixed basis expansion needs an even degree >= 2");
  if (q.leading() != 1) throw InvalidArgument("mixed basis expansion needs a monic polynomial");
  const auto n = static_cast<std::size_t>(q.degree());
  const std::size_t m = n / 2;

  const IntPolynomial xy({0, 1, 1});
  std::vector<IntPolynomial> xy_pow{IntPolynomial::constant(1)};
  for (std::size_t k = 1; k <= m; ++k) xy_pow.push_back(xy_pow.back() * xy);

  MixedBasisCoeffs out;
  out.n = n;
  out.gamma.assign(n + 1, Integer(0));
  IntPolynomial rest = q;
  for (std::size_t d = n + 1; d-- > 0;) {
    // Basis element of degree d is (xy)^(d/2), times x when d is odd.
    const Integer c = rest.coefficient(d);
    if (c != 0) {
      IntPolynomial element = d % 2 == 0 ? xy_pow[d / 2] : xy_pow[d / 2] * IntPolynomial::x();
      rest -= element * c;
    }
    out.gamma[n - d] = (m - d / 2) % 2 == 0 ? c : Integer(-c);
  }
  for (std::size_t l = 0; l <= n; ++l) {
    if (out.gamma[l] <= 0)
      throw NonIntegerOrNegativeGamma("gamma_" + std::to_string(n) + "(" + std::to_string(l) +
                                      ") = " + out.gamma[l].get_str() + " is not positive");
  }
  return out;
}

Integer big_gamma(const MixedBasisCoeffs& gamma, std::span<const Integer> prefix, std::size_t m, std::size_t i) {
  if (m < 1 || m > gamma.n) throw InvalidArgument("big_gamma index m out of range");
  const std::size_t k = inner_order(m, i);
  if (prefix.size() < k) throw InvalidArgument("big_gamma needs a longer block prefix");
  const auto tables = prefix_gamma_tables(prefix.first(k));
  return big_gamma_with(gamma, tables.back(), m);
}

BigGamma::BigGamma(const BlockSequence& seq) : n_(seq.block_count()), blocks_(to_integers(seq)) {
  if (n_ % 2 != 0) throw InvalidArgument("BigGamma requires an even number of blocks");
  const auto tables = prefix_gamma_tables(blocks_);
  const MixedBasisCoeffs gamma{n_, std::vector<Integer>(tables.back().values().begin(), tables.back().values().end())};
  for (std::size_t m = 1; m <= n_; ++m) {
    auto [lo, hi] = index_range(m);
    for (std::size_t i = lo; i <= hi; ++i) values_[{m, i}] = big_gamma_with(gamma, tables[inner_order(m, i)], m);
  }
}

std::pair<std::size_t, std::size_t> BigGamma::index_range(std::size_t m) const {
  if (m < 1 || m > n_) throw InvalidArgument("BigGamma index m out of range");
  const std::size_t r = m % 2;
  return {r, (n_ - m + r) / 2};
}

const Integer& BigGamma::at(std::size_t m, std::size_t i) const {
  auto it = values_.find({m, i});
  if (it == values_.end()) throw InvalidArgument("BigGamma index out of range");
  return it->second;
}

Integer BigGamma::expansion(std::size_t m) const {
  auto [lo, hi] = index_range(m);
  const std::size_t r = m % 2;
  Integer sum = 0;
  for (std::size_t i = lo; i <= hi; ++i) sum += blocks_[2 * i + 1 - r - 1] * at(m, i);
  return sum;
}

BlockSequence reconstruct_sequence(const IntPolynomial& p) {
  if (p.degree() < 1) throw NotThresholdSpectrum("characteristic polynomial must have positive degree");
  const auto order = static_cast<std::size_t>(p.degree());
  const Integer lead_sign = order % 2 == 0 ? 1 : -1;
  if (p.leading() != lead_sign) throw NotThresholdSpectrum("leading coefficient must be (-1)^N");
  if (order == 1) {
    if (p == IntPolynomial::monomial(-1, 1)) return BlockSequence::from_blocks({1});
    throw NotThresholdSpectrum("the only order-1 characteristic polynomial is -x");
  }

  const std::size_t zero_mult = root_multiplicity(p, 0);
  const std::size_t minus_one_mult = root_multiplicity(p, -1);
  const std::size_t remaining = order - zero_mult - minus_one_mult;
  // Q_n has even degree; when a_1 = 1 it keeps exactly one root -1.
  std::size_t minus_one_exp = minus_one_mult;
  if (remaining % 2 == 1) {
    if (minus_one_mult == 0) throw NotThresholdSpectrum("cannot split off an even-degree divisor polynomial");
    minus_one_exp -= 1;
  }
  const std::size_t n = order - zero_mult - minus_one_exp;
  if (n < 2) throw NotThresholdSpectrum("divisor polynomial degree must be at least 2");

  IntPolynomial stripped = IntPolynomial::monomial(1, zero_mult) * pow(IntPolynomial::linear(1), minus_one_exp);
  IntPolynomial q;
  MixedBasisCoeffs gamma;
  try {
    q = exact_div(p * lead_sign, stripped);
    gamma = mixed_basis_coeffs(q);
  } catch (const NotDivisible& e) {
    throw NotThresholdSpectrum(e.what());
  } catch (const InvalidArgument& e) {
    throw NotThresholdSpectrum(e.what());
  }

  // Recover a_1..a_n in order; each step solves the expansion of
  // gamma_n(n - k + 1) for its last summand, whose coefficient is a_k.
  std::vector<Integer> blocks;
  std::vector<GammaTable> tables{GammaTable(0, {1})};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t target = n - k + 1;
    const std::size_t r = target % 2;
    const std::size_t top = (k - 1 + r) / 2;
    Integer known = 0;
    for (std::size_t i = r; i < top; ++i)
      known += blocks[2 * i - r] * big_gamma_with(gamma, tables[2 * i - r], target);
    const Integer divisor = big_gamma_with(gamma, tables[k - 1], target);
    if (divisor <= 0) throw NotThresholdSpectrum("vanishing or negative Gamma divisor at block " + std::to_string(k));
    const Integer numerator = gamma.gamma[target] - known;
    if (!mpz_divisible_p(numerator.get_mpz_t(), divisor.get_mpz_t()))
      throw NotThresholdSpectrum("block " + std::to_string(k) + " is not an integer");
    Integer ak;
    mpz_divexact(ak.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
    if (ak < 1) throw NotThresholdSpectrum("block " + std::to_string(k) + " is not positive");
    blocks.push_back(ak);

    std::vector<Integer> values(k + 1);
    values[0] = 1;
    for (std::size_t l = 1; l <= k; ++l) {
      values[l] = ak * tables[k - 1][l - 1];
      if (k >= 2) values[l] += tables[k - 2][l];
    }
    tables.emplace_back(k, std::move(values));
  }

  // The stripped factors must be the ones the recovered blocks imply.
  Integer implied_zero = 0;
  Integer implied_minus_one = 0;
  for (std::size_t k = 0; k < n; ++k) (k % 2 == 0 ? implied_zero : implied_minus_one) += blocks[k] - 1;
  if (implied_zero != zero_mult || implied_minus_one != minus_one_exp) {
    Integer implied_order = implied_zero + implied_minus_one + n;
    throw NotThresholdSpectrum("recovered blocks imply " + implied_order.get_str() + " vertices, polynomial has degree " +
                               std::to_string(order));
  }

  std::vector<std::uint64_t> sizes;
  for (const auto& b : blocks) {
    if (!b.fits_ulong_p()) throw NotThresholdSpectrum("block size out of range");
    sizes.push_back(b.get_ui());
  }
  BlockSequence seq = BlockSequence::from_blocks(std::move(sizes));
  if (char_poly(seq) != p) throw NotThresholdSpectrum("recovered sequence does not reproduce the polynomial");
  return seq;
}

}  // namespace threshspec
