// Dense matrix product kernels. The serial version is the reference; the
// OpenMP version splits output rows across threads.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qgraft/scalar.hpp"

namespace qgraft {

template <class T>
class Matrix;

template <class T>
Matrix<T> multiply_serial(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& y = b(k, j);
        if (!is_zero(y)) c(i, j) += x * y;
      }
    }
  return c;
}

template <class T>
Matrix<T> multiply_parallel(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (long ii = 0; ii < rows; ++ii) {
    auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& y = b(k, j);
        if (!is_zero(y)) c(i, j) += x * y;
      }
    }
  }
  return c;
}

// Below this many output entries the thread startup costs more than it saves.
inline constexpr std::size_t kParallelThreshold = 256;

}  // namespace qgraft
