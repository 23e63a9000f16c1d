// Exact dense linear algebra on operators over V⊗V and V⊗V⊗V.
//
// Composite indices flatten row-major: for V = V_1⊗…⊗V_k the tuple
// (i_1,…,i_k) maps to ((i_1·m_2 + i_2)·m_3 + …). An operator on V⊗V with
// N = dim V stores M^{ij}_{kl} at row i·N+j, column k·N+l.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgraft/kernels.hpp"
#include "qgraft/scalar.hpp"

namespace qgraft {

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

struct IndexShape {
  std::vector<int> dims;

  IndexShape() = default;
  explicit IndexShape(std::vector<int> d);
  std::size_t total() const;
  std::size_t flatten(const std::vector<int>& idx) const;
  std::vector<int> unflatten(std::size_t flat) const;
  friend bool operator==(const IndexShape&, const IndexShape&) = default;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, T(0L)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<T>& data() const { return a_; }

  bool is_zero_matrix() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& x) { return is_zero(x); });
  }
  std::size_t nonzeros() const {
    return static_cast<std::size_t>(std::count_if(a_.begin(), a_.end(), [](const T& x) { return !is_zero(x); }));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!is_zero(o.a_[i])) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!is_zero(o.a_[i])) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_)
      if (!is_zero(x)) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.rows() * b.cols() >= kParallelThreshold) return multiply_parallel(a, b);
    return multiply_serial(a, b);
  }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using SMatrix = Matrix<Scalar>;
using QMatrix = Matrix<Rational>;

enum class Transpose { t1, t2 };
enum class Slot { s12, s13, s23 };

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!is_zero(b(r, c))) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

// P^{ij}_{kl} = δ_il δ_jk on V⊗V, dim V = n.
template <class T>
Matrix<T> permutation_P(std::size_t n) {
  Matrix<T> p(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i * n + j, j * n + i) = T(1L);
  return p;
}

// K0^{ij}_{kl} = δ_ij δ_kl.
template <class T>
Matrix<T> k0(std::size_t n) {
  Matrix<T> k(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k2 = 0; k2 < n; ++k2) k(i * n + i, k2 * n + k2) = T(1L);
  return k;
}

template <class T>
Matrix<T> partial_transpose(const Matrix<T>& m, std::size_t n, Transpose which) {
  Matrix<T> out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const T& x = which == Transpose::t1 ? m(k * n + j, i * n + l) : m(i * n + l, k * n + j);
          if (!is_zero(x)) out(i * n + j, k * n + l) = x;
        }
  return out;
}

// (tr_2 M)^i_k = Σ_a M^{ia}_{ka}
template <class T>
Matrix<T> partial_trace_2(const Matrix<T>& m, std::size_t n) {
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a) {
        const T& x = m(i * n + a, k * n + a);
        if (!is_zero(x)) out(i, k) += x;
      }
  return out;
}

template <class T>
Matrix<T> embed_on_triple(const Matrix<T>& m, std::size_t n, Slot slot) {
  const auto id = Matrix<T>::identity(n);
  switch (slot) {
    case Slot::s12:
      return kron(m, id);
    case Slot::s23:
      return kron(id, m);
    case Slot::s13: {
      const auto p23 = kron(id, permutation_P<T>(n));
      return p23 * kron(m, id) * p23;
    }
  }
  throw std::invalid_argument("embed_on_triple: bad slot");
}

template <class T>
Matrix<T> power(const Matrix<T>& m, int k) {
  auto r = Matrix<T>::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

inline std::size_t pivot_cost(const Scalar& x) { return x.num().num_terms() + 4 * (x.den().num_terms() - 1); }
inline std::size_t pivot_cost(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

// Reduced row echelon form in place; returns pivot columns. Pivots are the
// cheapest nonzero entries of their column to limit coefficient growth.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    std::size_t best_cost = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      std::size_t cost = pivot_cost(m(i, c));
      if (best == m.rows() || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    const T inv = T(1L) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) support.push_back(j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

// Basis of {v : m v = 0}, one column vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), T(0L));
    v[f] = T(1L);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!is_zero(m(i, f))) v[piv[i]] = -m(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1L);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix();
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QMatrix evaluate(const SMatrix& m, const Rational& s0);

// Operator with its composite index shape; acts on V⊗V where V has shape.dims.
struct CompositeMatrix {
  IndexShape shape;
  SMatrix mat;

  CompositeMatrix() = default;
  CompositeMatrix(IndexShape s, SMatrix m);
  std::size_t dim() const { return shape.total(); }
  // M^{ij}_{kl} with flat composite indices.
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return mat(i * dim() + j, k * dim() + l);
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return mat(i * dim() + j, k * dim() + l); }
  friend bool operator==(const CompositeMatrix&, const CompositeMatrix&) = default;
};

CompositeMatrix permutation_P(const IndexShape& shape);
CompositeMatrix identity(const IndexShape& shape);
CompositeMatrix k0(const IndexShape& shape);
CompositeMatrix partial_transpose(const CompositeMatrix& m, Transpose which);
CompositeMatrix invert(const CompositeMatrix& m);
SMatrix partial_trace_2(const CompositeMatrix& m);
SMatrix embed_on_triple(const CompositeMatrix& m, Slot slot);

// Tensor product of factor operators, built as a Kronecker product and then
// conjugated by the leg permutation so factor t acts on legs (t, n+t).
CompositeMatrix interleave_construct(const std::vector<CompositeMatrix>& factors);

// Dense univariate polynomial, coefficients from degree 0 upward.
template <class T>
struct Poly {
  std::vector<T> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  static Poly linear_root(const T& r) { return Poly{{-r, T(1L)}}; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p{std::vector<T>(a.c.size() + b.c.size() - 1, T(0L))};
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    return p;
  }
  friend bool operator==(const Poly&, const Poly&) = default;
  T eval(const T& x) const {
    T acc(0L);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
  // Exact division; throws unless the remainder vanishes.
  Poly divide_exact(const Poly& d) const {
    std::vector<T> r = c;
    if (c.size() < d.c.size()) throw std::domain_error("divide_exact: degree too small");
    std::vector<T> q(c.size() - d.c.size() + 1, T(0L));
    for (std::size_t k = q.size(); k-- > 0;) {
      T f = r[k + d.c.size() - 1] / d.c.back();
      q[k] = f;
      for (std::size_t j = 0; j < d.c.size(); ++j) r[k + j] -= f * d.c[j];
    }
    for (auto const& x : r)
      if (!is_zero(x)) throw std::domain_error("divide_exact: nonzero remainder");
    return Poly{q};
  }
  Matrix<T> at_matrix(const Matrix<T>& m) const {
    auto acc = Matrix<T>(m.rows(), m.cols());
    const auto id = Matrix<T>::identity(m.rows());
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * m + id * c[i];
    return acc;
  }
};

using UniPoly = Poly<Scalar>;
std::string poly_str(const UniPoly& p);

// Monic minimal polynomial by exact Krylov search on I, M, M², …
template <class T>
Poly<T> krylov_minimal_polynomial(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  struct Row {
    std::vector<T> v;
    std::size_t pivot;
    std::vector<T> comb;
  };
  std::vector<Row> basis;
  auto pw = Matrix<T>::identity(n);
  for (std::size_t k = 0;; ++k) {
    std::vector<T> w = pw.data();
    std::vector<T> comb(k + 1, T(0L));
    comb[k] = T(1L);
    for (auto const& b : basis) {
      if (is_zero(w[b.pivot])) continue;
      T f = w[b.pivot];
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_zero(b.v[i])) w[i] -= f * b.v[i];
      for (std::size_t i = 0; i < b.comb.size(); ++i)
        if (!is_zero(b.comb[i])) comb[i] -= f * b.comb[i];
    }
    auto nz = std::find_if(w.begin(), w.end(), [](const T& x) { return !is_zero(x); });
    if (nz == w.end()) return Poly<T>{comb};
    T inv = T(1L) / *nz;
    for (auto& x : w)
      if (!is_zero(x)) x *= inv;
    for (auto& x : comb)
      if (!is_zero(x)) x *= inv;
    // Keep earlier rows reduced against the new pivot.
    std::size_t piv = static_cast<std::size_t>(nz - w.begin());
    for (auto& b : basis) {
      if (is_zero(b.v[piv])) continue;
      T f = b.v[piv];
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_zero(w[i])) b.v[i] -= f * w[i];
      b.comb.resize(k + 1, T(0L));
      for (std::size_t i = 0; i < comb.size(); ++i)
        if (!is_zero(comb[i])) b.comb[i] -= f * comb[i];
    }
    basis.push_back(Row{std::move(w), piv, std::move(comb)});
    pw = pw * m;
  }
}

// Tries the product of distinct hint roots first, dropping roots that are not
// needed; falls back to Krylov when the hints do not annihilate.
UniPoly minimal_polynomial(const SMatrix& m, const std::vector<Scalar>* hint_roots = nullptr);

// Roots of the form ±s^e, with multiplicity, found by trial division.
std::vector<Scalar> monomial_roots(const UniPoly& p, int max_exp = 48);

nlohmann::json matrix_to_json(const CompositeMatrix& m);
CompositeMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qgraft
