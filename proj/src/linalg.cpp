#include "threshspec/linalg.hpp"

#include <utility>

namespace threshspec {

namespace {

bool is_zero(const Integer& v) { return v == 0; }
bool is_zero(const IntPolynomial& v) { return v.is_zero(); }

Integer divide_exact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) { return exact_div(a, b); }

template <class T>
T bareiss(SquareMatrix<T> m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m(swap_row, k))) ++swap_row;
      if (swap_row == n) return T{};
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(cross, previous);
      }
      m(i, k) = T{};
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace

Integer bareiss_determinant(SquareMatrix<Integer> m) { return bareiss(std::move(m), Integer(1)); }

IntPolynomial bareiss_determinant(SquareMatrix<IntPolynomial> m) {
  return bareiss(std::move(m), IntPolynomial::constant(1));
}

IntPolynomial tridiagonal_determinant(const SquareMatrix<IntPolynomial>& m) {
  const std::size_t n = m.size();
  IntPolynomial before = IntPolynomial::constant(1);  // f_{k-2}
  if (n == 0) return before;
  IntPolynomial current = m(0, 0);  // f_{k-1}
  for (std::size_t k = 1; k < n; ++k) {
    IntPolynomial next = m(k, k) * current - m(k - 1, k) * m(k, k - 1) * before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

}  // namespace threshspec
