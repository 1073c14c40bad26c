#pragma once

#include <cstddef>
#include <vector>

#include "threshspec/numeric.hpp"
#include "threshspec/polynomial.hpp"

namespace threshspec {

/// Row-major square matrix over an exact ring (Integer or IntPolynomial).
template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t size = 0) : size_(size), data_(size * size) {}

  std::size_t size() const { return size_; }
  T& operator()(std::size_t row, std::size_t col) { return data_[row * size_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * size_ + col]; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t size_;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) elimination with row pivoting; every division
/// is exact. The 0x0 determinant is 1.
Integer bareiss_determinant(SquareMatrix<Integer> m);
IntPolynomial bareiss_determinant(SquareMatrix<IntPolynomial> m);

/// Continuant expansion along the three central diagonals; entries outside
/// them are ignored.
IntPolynomial tridiagonal_determinant(const SquareMatrix<IntPolynomial>& m);

}  // namespace threshspec
