#include "threshspec/spectral.hpp"

#include <algorithm>
#include <numeric>

#include "threshspec/errors.hpp"

namespace threshspec {

namespace {

void require_connected(const BlockSequence& seq, const char* what) {
  if (seq.block_count() % 2 != 0)
    throw InvalidArgument(std::string(what) + " requires a connected sequence (even number of blocks)");
}

Integer signed_one(std::uint64_t exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

void extend(std::size_t n, std::size_t l, IndexSequence& prefix, std::vector<IndexSequence>& out) {
  if (prefix.size() == l) {
    out.push_back(prefix);
    return;
  }
  const std::size_t i = prefix.size() + 1;  // 1-based position being filled
  // t_i has the parity of n + i - l and must exceed the previous entry.
  std::size_t t = prefix.empty() ? 1 : prefix.back() + 1;
  if ((t + n + i - l) % 2 != 0) ++t;
  // Leave room for the l - i entries still to come.
  for (; t + (l - i) <= n; t += 2) {
    prefix.push_back(t);
    extend(n, l, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

GammaTable::GammaTable(std::size_t n, std::vector<Integer> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ + 1) throw InvalidArgument("gamma table needs n + 1 values");
}

std::vector<IndexSequence> index_sequences(std::size_t n, std::size_t l) {
  std::vector<IndexSequence> out;
  if (l > n) return out;
  IndexSequence prefix;
  extend(n, l, prefix, out);
  return out;
}

Integer gamma_bruteforce(const BlockSequence& seq, std::size_t l) {
  const std::size_t n = seq.block_count();
  if (l > n) throw InvalidArgument("gamma index out of range");
  if (l == 0) return 1;
  Integer sum = 0;
  for (const auto& t : index_sequences(n, l)) {
    Integer product = 1;
    for (std::size_t idx : t) product *= Integer(static_cast<unsigned long>(seq.a(idx)));
    sum += product;
  }
  return sum;
}

std::vector<Integer> to_integers(const BlockSequence& seq) {
  std::vector<Integer> out;
  out.reserve(seq.block_count());
  for (auto b : seq.blocks()) out.emplace_back(static_cast<unsigned long>(b));
  return out;
}

std::vector<GammaTable> prefix_gamma_tables(std::span<const Integer> blocks) {
  std::vector<GammaTable> tables;
  tables.reserve(blocks.size() + 1);
  tables.emplace_back(0, std::vector<Integer>{1});
  for (std::size_t k = 1; k <= blocks.size(); ++k) {
    const Integer& ak = blocks[k - 1];
    std::vector<Integer> values(k + 1);
    values[0] = 1;
    for (std::size_t l = 1; l <= k; ++l) {
      values[l] = ak * tables[k - 1][l - 1];
      if (k >= 2) values[l] += tables[k - 2][l];
    }
    tables.emplace_back(k, std::move(values));
  }
  return tables;
}

GammaTable gamma_table(const BlockSequence& seq) {
  const auto blocks = to_integers(seq);
  return prefix_gamma_tables(blocks).back();
}

QuotientMatrix divisor_matrix(const BlockSequence& seq) {
  require_connected(seq, "divisor_matrix");
  const std::size_t n = seq.block_count();
  QuotientMatrix d(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Integer aj(static_cast<unsigned long>(seq.a(j)));
      if (i % 2 == 1) {
        // isolated block: joined only to later dominating blocks
        d(i - 1, j - 1) = (j % 2 == 0 && j > i) ? aj : Integer(0);
      } else if (j < i) {
        d(i - 1, j - 1) = aj;
      } else if (j == i) {
        d(i - 1, j - 1) = aj - 1;
      } else {
        d(i - 1, j - 1) = j % 2 == 0 ? aj : Integer(0);
      }
    }
  }
  return d;
}

SymbolicTridiagonal tridiagonal_matrix(const BlockSequence& seq) {
  require_connected(seq, "tridiagonal_matrix");
  const std::size_t n = seq.block_count();
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial y = IntPolynomial::linear(1);
  SymbolicTridiagonal m(n);
  m(0, 0) = IntPolynomial::linear(Integer(static_cast<unsigned long>(seq.a(1))));
  for (std::size_t k = 2; k <= n; ++k) {
    const Integer ak(static_cast<unsigned long>(seq.a(k)));
    m(k - 1, k - 1) = IntPolynomial::constant(k % 2 == 0 ? Integer(-ak) : ak);
  }
  for (std::size_t k = 1; k < n; ++k) {
    // 1-based: (odd, odd+1) = -(x+1), (even, even+1) = -x; mirrored x+1 / x below.
    if (k % 2 == 1) {
      m(k - 1, k) = -y;
      m(k, k - 1) = x;
    } else {
      m(k - 1, k) = -x;
      m(k, k - 1) = y;
    }
  }
  return m;
}

IntPolynomial q_recursive(std::span<const Integer> blocks) {
  IntPolynomial before = IntPolynomial::constant(1);
  if (blocks.empty()) return before;
  IntPolynomial current = IntPolynomial::linear(blocks[0]);
  const IntPolynomial xy({0, 1, 1});
  for (std::size_t k = 2; k <= blocks.size(); ++k) {
    const Integer coef = k % 2 == 1 ? Integer(blocks[k - 1]) : Integer(-blocks[k - 1]);
    IntPolynomial next = current * coef + xy * before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

IntPolynomial q_recursive(const BlockSequence& seq) { return q_recursive(to_integers(seq)); }

IntPolynomial p_closed_form(const GammaTable& gamma) {
  const std::size_t n = gamma.n();
  if (n == 0) return IntPolynomial::constant(1);
  const std::size_t m = n / 2;
  const std::size_t r0 = n % 2;
  const std::size_t r1 = 1 - r0;
  const IntPolynomial xy({0, 1, 1});

  std::vector<IntPolynomial> xy_pow{IntPolynomial::constant(1)};
  for (std::size_t k = 1; k <= m; ++k) xy_pow.push_back(xy_pow.back() * xy);

  auto half = [&](std::size_t r, std::size_t upper) {
    IntPolynomial sum;
    for (std::size_t k = 0; k <= upper; ++k) {
      const Integer sign = (m - k) % 2 == 0 ? 1 : -1;
      sum += xy_pow[k] * (sign * gamma[n - 2 * k - r]);
    }
    return r == 0 ? sum : sum * IntPolynomial::x();
  };
  return half(r0, m) + half(r1, m - r1);
}

IntPolynomial p_closed_form(const BlockSequence& seq) { return p_closed_form(gamma_table(seq)); }

Multiplicities multiplicities(const BlockSequence& seq) {
  if (seq.order() == 1) return {1, 0};
  require_connected(seq, "multiplicities");
  Multiplicities mult;
  for (std::size_t i = 1; i <= seq.block_count(); i += 2) mult.zero += seq.a(i) - 1;
  for (std::size_t i = 2; i <= seq.block_count(); i += 2) mult.minus_one += seq.a(i) - 1;
  if (seq.a(1) == 1) mult.minus_one += 1;
  return mult;
}

IntPolynomial char_poly(const BlockSequence& seq) {
  const std::size_t n = seq.block_count();
  if (n % 2 == 1) {
    // Trailing isolated block of size k splits off as an edgeless component.
    const IntPolynomial isolated = pow(IntPolynomial::monomial(-1, 1), seq.a(n));
    if (n == 1) return isolated;
    return isolated * char_poly(seq.prefix(n - 1));
  }
  std::uint64_t zero_exp = 0;
  std::uint64_t minus_one_exp = 0;
  for (std::size_t i = 1; i <= n; i += 2) zero_exp += seq.a(i) - 1;
  for (std::size_t i = 2; i <= n; i += 2) minus_one_exp += seq.a(i) - 1;

  IntPolynomial p = q_recursive(seq) * pow(IntPolynomial::linear(1), minus_one_exp);
  std::vector<Integer> shifted(zero_exp, Integer(0));
  shifted.insert(shifted.end(), p.coefficients().begin(), p.coefficients().end());
  return IntPolynomial(std::move(shifted)) * signed_one(seq.order());
}

IntPolynomial brute_charpoly(const AdjacencyMatrix& adjacency) {
  const std::size_t n = adjacency.order();
  std::vector<Integer> values(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    SquareMatrix<Integer> m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = (adjacency.adjacent(i, j) ? 1 : 0) - (i == j ? static_cast<long>(t) : 0L);
    values[t] = bareiss_determinant(std::move(m));
  }

  // Newton forward differences on the nodes 0..n.
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = n; i >= k; --i) values[i] -= values[i - 1];

  IntPolynomial result;
  IntPolynomial falling = IntPolynomial::constant(1);  // x (x-1) ... (x-k+1)
  Integer factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      factorial *= static_cast<unsigned long>(k);
      falling *= IntPolynomial::linear(-Integer(static_cast<unsigned long>(k - 1)));
    }
    if (!mpz_divisible_p(values[k].get_mpz_t(), factorial.get_mpz_t()))
      throw Error("interpolation produced a non-integer coefficient");
    Integer c;
    mpz_divexact(c.get_mpz_t(), values[k].get_mpz_t(), factorial.get_mpz_t());
    result += falling * c;
  }
  return result;
}

Integer determinant(const BlockSequence& seq) {
  if (seq.order() == 1) return 0;
  require_connected(seq, "determinant");
  return char_poly(seq).coefficient(0);
}

Integer determinant_closed_form(const BlockSequence& seq) {
  if (seq.order() == 1) return 0;
  require_connected(seq, "determinant_closed_form");
  Integer product = 1;
  for (std::size_t i = 1; i <= seq.block_count(); i += 2)
    if (seq.a(i) > 1) return 0;
  for (std::size_t i = 2; i <= seq.block_count(); i += 2) product *= Integer(static_cast<unsigned long>(seq.a(i)));
  return product * signed_one(seq.order() + seq.block_count() / 2);
}

std::size_t SpectrumReport::total_multiplicity() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), std::size_t{0},
                         [](std::size_t acc, const Eigenvalue& e) { return acc + e.multiplicity; });
}

Rational SpectrumReport::eigenvalue_sum() const {
  Rational sum = 0;
  for (const auto& e : eigenvalues) sum += e.value * static_cast<unsigned long>(e.multiplicity);
  return sum;
}

Rational SpectrumReport::eigenvalue_square_sum() const {
  Rational sum = 0;
  for (const auto& e : eigenvalues) sum += e.value * e.value * static_cast<unsigned long>(e.multiplicity);
  return sum;
}

SpectrumReport spectrum(const BlockSequence& seq, int precision) {
  SpectrumReport report;
  report.multiplicities = multiplicities(seq);
  auto exact = [precision](long v, std::size_t mult) {
    return Eigenvalue{Rational(v), to_decimal(Rational(v), precision), mult, true};
  };
  if (seq.order() == 1) {
    report.divisor_polynomial = IntPolynomial::constant(1);
    report.eigenvalues.push_back(exact(0, 1));
    return report;
  }

  report.divisor_polynomial = q_recursive(seq);
  report.divisor_roots = sturm_isolate(report.divisor_polynomial, precision);
  if (report.multiplicities.minus_one > 0) report.eigenvalues.push_back(exact(-1, report.multiplicities.minus_one));
  if (report.multiplicities.zero > 0) report.eigenvalues.push_back(exact(0, report.multiplicities.zero));

  const Rational minus_one(-1);
  const bool q_has_minus_one = root_multiplicity(report.divisor_polynomial, -1) > 0;
  for (const auto& r : report.divisor_roots) {
    // -1 is already counted in m-1 above.
    if (q_has_minus_one && r.lo < minus_one && minus_one <= r.hi) continue;
    const bool is_exact = sign_at(report.divisor_polynomial, r.estimate) == 0;
    report.eigenvalues.push_back({r.estimate, r.midpoint_estimate, r.multiplicity, is_exact});
  }
  std::ranges::sort(report.eigenvalues, [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  return report;
}

}  // namespace threshspec
