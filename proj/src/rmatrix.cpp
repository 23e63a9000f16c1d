#include "qgraft/rmatrix.hpp"

#include <algorithm>

namespace qgraft {

int s_exponent_of(const Rational& d) {
  Rational e = d * 2;
  if (e.get_den() != 1) throw std::invalid_argument("root norm d must make 2d an integer, got " + d.get_str());
  return static_cast<int>(e.get_num().get_si());
}

CompositeMatrix standard_R(const RepSpec& spec) {
  if (spec.lie_rank < 2) throw std::invalid_argument("standard_R: need n >= 2");
  if (sgn(spec.root_norm) <= 0) throw std::invalid_argument("standard_R: root norm must be positive");
  const auto n = static_cast<std::size_t>(spec.lie_rank);
  const int e = s_exponent_of(spec.root_norm);
  const Scalar qd = Scalar::s_pow(e);
  const Scalar off = qd - Scalar::s_pow(-e);
  // The dual module gives the same matrix after relabeling its basis.
  CompositeMatrix r(IndexShape({spec.lie_rank}), SMatrix(n * n, n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.at(i, j, i, j) = i == j ? qd : Scalar(1L);
      if (i < j) r.at(i, j, j, i) = off;
    }
  return r;
}

CompositeMatrix tensor_R(const std::vector<CompositeMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_R: no factors");
  struct Entry {
    std::size_t i, j, k, l;
    Scalar v;
  };
  std::vector<Entry> acc{{0, 0, 0, 0, Scalar(1L)}};
  std::vector<int> dims;
  for (auto const& f : factors) {
    const std::size_t m = f.dim();
    std::vector<Entry> fe;
    for (std::size_t r = 0; r < f.mat.rows(); ++r)
      for (std::size_t c = 0; c < f.mat.cols(); ++c)
        if (!f.mat(r, c).is_zero()) fe.push_back({r / m, r % m, c / m, c % m, f.mat(r, c)});
    std::vector<Entry> next;
    next.reserve(acc.size() * fe.size());
    for (auto const& a : acc)
      for (auto const& b : fe)
        next.push_back({a.i * m + b.i, a.j * m + b.j, a.k * m + b.k, a.l * m + b.l, a.v * b.v});
    acc = std::move(next);
    dims.insert(dims.end(), f.shape.dims.begin(), f.shape.dims.end());
  }
  IndexShape shape(dims);
  const std::size_t n = shape.total();
  CompositeMatrix r(shape, SMatrix(n * n, n * n));
  for (auto const& e : acc) r.at(e.i, e.j, e.k, e.l) = e.v;
  return r;
}

std::vector<Scalar> factor_roots(const RepSpec& spec) {
  const int e = s_exponent_of(spec.root_norm);
  return {Scalar::s_pow(e), -Scalar::s_pow(-e)};
}

std::vector<Scalar> predict_eigenvalues(const std::vector<std::vector<Scalar>>& roots) {
  std::vector<Scalar> acc{Scalar(1L)};
  for (auto const& fr : roots) {
    if (fr.empty()) throw std::invalid_argument("predict_eigenvalues: empty factor root list");
    std::vector<Scalar> next;
    for (auto const& a : acc)
      for (auto const& b : fr) {
        Scalar p = a * b;
        if (std::find(next.begin(), next.end(), p) == next.end()) next.push_back(p);
      }
    acc = std::move(next);
  }
  return acc;
}

MajidPair majid_pair(const CompositeMatrix& r_big, const Scalar& eigen, const std::vector<Scalar>* hints) {
  const std::size_t n = r_big.dim();
  const auto p = permutation_P<Scalar>(n);
  const auto id = SMatrix::identity(n * n);
  const SMatrix pr_big = p * r_big.mat;
  UniPoly mu_big = minimal_polynomial(pr_big, hints);
  if (!mu_big.eval(eigen).is_zero()) throw NotAnEigenvalue(eigen.str());

  MajidPair out;
  out.lambda = -eigen;
  const Scalar inv_lambda = out.lambda.inverse();
  out.R = CompositeMatrix(r_big.shape, r_big.mat * inv_lambda);
  const SMatrix pr = pr_big * inv_lambda;

  // Roots of P·R are those of P·R_big divided by λ; rescale the polynomial.
  out.minpoly = mu_big;
  Scalar scale(1L);
  for (auto& c : out.minpoly.c) {
    c *= scale;
    scale *= out.lambda;
  }
  const Scalar lead = out.minpoly.c.back();
  for (auto& c : out.minpoly.c) c /= lead;
  out.eigenvalues = monomial_roots(out.minpoly);

  UniPoly nu = out.minpoly.divide_exact(UniPoly::linear_root(Scalar(-1L)));
  const SMatrix prp = id + nu.at_matrix(pr);
  out.Rprime = CompositeMatrix(r_big.shape, p * prp);
  out.checks = majid_conditions(out.R.mat, out.Rprime.mat, n);
  if (!out.checks.ybe_mixed_1) throw MajidConditionFailed("R12 R13 R'23 = R'23 R13 R12");
  if (!out.checks.ybe_mixed_2) throw MajidConditionFailed("R23 R13 R'12 = R'12 R13 R23");
  if (!out.checks.normalization) throw MajidConditionFailed("(PR + I)(PR' - I) = 0");
  if (!out.checks.unitarity) throw MajidConditionFailed("R21 R'12 = R'21 R12");
  return out;
}

bool check_ybe(const CompositeMatrix& r) { return ybe_holds(r.mat, r.dim()); }

Scalar check_frt(const CompositeMatrix& r) {
  auto c = frt_constant(r.mat, r.dim());
  if (!c) throw FrtViolation();
  return *c;
}

std::array<CompositeMatrix, 4> pairing_matrices(const CompositeMatrix& r) {
  const std::size_t n = r.dim();
  const SMatrix rinv = inverse(r.mat);
  return {r,
          CompositeMatrix(r.shape, swap_legs(rinv, n)),
          CompositeMatrix(r.shape, inverse(partial_transpose(r.mat, n, Transpose::t2))),
          CompositeMatrix(r.shape, swap_legs(inverse(partial_transpose(rinv, n, Transpose::t1)), n))};
}

}  // namespace qgraft
