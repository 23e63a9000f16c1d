#include "qgraft/linalg.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace qgraft {

IndexShape::IndexShape(std::vector<int> d) : dims(std::move(d)) {
  for (int m : dims)
    if (m < 1) throw std::invalid_argument("IndexShape: factor dimensions must be >= 1");
}

std::size_t IndexShape::total() const {
  std::size_t t = 1;
  for (int m : dims) t *= static_cast<std::size_t>(m);
  return t;
}

std::size_t IndexShape::flatten(const std::vector<int>& idx) const {
  if (idx.size() != dims.size()) throw std::invalid_argument("IndexShape::flatten: arity mismatch");
  std::size_t f = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    if (idx[t] < 0 || idx[t] >= dims[t]) throw std::out_of_range("IndexShape::flatten: component out of range");
    f = f * static_cast<std::size_t>(dims[t]) + static_cast<std::size_t>(idx[t]);
  }
  return f;
}

std::vector<int> IndexShape::unflatten(std::size_t flat) const {
  if (flat >= total()) throw std::out_of_range("IndexShape::unflatten: index out of range");
  std::vector<int> idx(dims.size());
  for (std::size_t t = dims.size(); t-- > 0;) {
    idx[t] = static_cast<int>(flat % static_cast<std::size_t>(dims[t]));
    flat /= static_cast<std::size_t>(dims[t]);
  }
  return idx;
}

QMatrix evaluate(const SMatrix& m, const Rational& s0) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).eval(s0);
  return out;
}

CompositeMatrix::CompositeMatrix(IndexShape s, SMatrix m) : shape(std::move(s)), mat(std::move(m)) {
  const std::size_t n = shape.total();
  if (mat.rows() != n * n || mat.cols() != n * n)
    throw std::invalid_argument("CompositeMatrix: matrix size does not match shape");
}

CompositeMatrix permutation_P(const IndexShape& shape) {
  return {shape, permutation_P<Scalar>(shape.total())};
}

CompositeMatrix identity(const IndexShape& shape) {
  const std::size_t n = shape.total();
  return {shape, SMatrix::identity(n * n)};
}

CompositeMatrix k0(const IndexShape& shape) { return {shape, k0<Scalar>(shape.total())}; }

CompositeMatrix partial_transpose(const CompositeMatrix& m, Transpose which) {
  return {m.shape, partial_transpose(m.mat, m.dim(), which)};
}

CompositeMatrix invert(const CompositeMatrix& m) { return {m.shape, inverse(m.mat)}; }

SMatrix partial_trace_2(const CompositeMatrix& m) { return partial_trace_2(m.mat, m.dim()); }

SMatrix embed_on_triple(const CompositeMatrix& m, Slot slot) { return embed_on_triple(m.mat, m.dim(), slot); }

// Permutation operator sending e_{x_0}⊗…⊗e_{x_{L-1}} (legs with the given
// dims) to the tensor whose leg p holds x_{perm[p]}.
static SMatrix leg_permutation(const std::vector<int>& dims, const std::vector<std::size_t>& perm) {
  IndexShape in(dims);
  std::vector<int> out_dims(dims.size());
  for (std::size_t p = 0; p < perm.size(); ++p) out_dims[p] = dims[perm[p]];
  IndexShape out(out_dims);
  SMatrix x(in.total(), in.total());
  for (std::size_t f = 0; f < in.total(); ++f) {
    auto idx = in.unflatten(f);
    std::vector<int> moved(idx.size());
    for (std::size_t p = 0; p < perm.size(); ++p) moved[p] = idx[perm[p]];
    x(out.flatten(moved), f) = Scalar(1L);
  }
  return x;
}

CompositeMatrix interleave_construct(const std::vector<CompositeMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("interleave_construct: no factors");
  if (factors.size() == 1) return factors[0];
  // Kronecker product acts on V_1⊗V_1⊗V_2⊗V_2⊗…; X reorders the legs to
  // V_1⊗…⊗V_n⊗V_1⊗…⊗V_n.
  SMatrix big = factors[0].mat;
  std::vector<int> dims_all, pair_dims;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    if (t > 0) big = kron(big, factors[t].mat);
    int m = static_cast<int>(factors[t].dim());
    pair_dims.push_back(m);
    pair_dims.push_back(m);
    for (int d : factors[t].shape.dims) dims_all.push_back(d);
  }
  const std::size_t n = factors.size();
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    perm[t] = 2 * t;
    perm[n + t] = 2 * t + 1;
  }
  SMatrix x = leg_permutation(pair_dims, perm);
  return {IndexShape(dims_all), x * big * transpose(x)};
}

std::string poly_str(const UniPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = p.c[i].is_one();
    if (!unit || i == 0) os << "(" << p.c[i].str() << ")";
    if (i > 0) os << (unit ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

UniPoly minimal_polynomial(const SMatrix& m, const std::vector<Scalar>* hint_roots) {
  if (hint_roots && !hint_roots->empty()) {
    std::vector<Scalar> roots;
    for (auto const& r : *hint_roots)
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    const auto id = SMatrix::identity(m.rows());
    auto annihilates = [&](const std::vector<Scalar>& rs) {
      auto acc = id;
      for (auto const& r : rs) acc = acc * (m - id * r);
      return acc.is_zero_matrix();
    };
    if (annihilates(roots)) {
      for (std::size_t i = 0; i < roots.size();) {
        auto fewer = roots;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        if (!fewer.empty() && annihilates(fewer))
          roots = std::move(fewer);
        else
          ++i;
      }
      UniPoly p{{Scalar(1L)}};
      for (auto const& r : roots) p = p * UniPoly::linear_root(r);
      return p;
    }
  }
  return krylov_minimal_polynomial(m);
}

std::vector<Scalar> monomial_roots(const UniPoly& p, int max_exp) {
  std::vector<Scalar> found;
  UniPoly rest = p;
  bool progress = true;
  while (rest.degree() > 0 && progress) {
    progress = false;
    for (int e = -max_exp; e <= max_exp && !progress; ++e)
      for (long sign : {1L, -1L}) {
        Scalar r = Scalar::s_pow(e) * Scalar(sign);
        if (!rest.eval(r).is_zero()) continue;
        rest = rest.divide_exact(UniPoly::linear_root(r));
        found.push_back(r);
        progress = true;
        break;
      }
  }
  return found;
}

nlohmann::json matrix_to_json(const CompositeMatrix& m) {
  nlohmann::json j;
  j["dims"] = m.shape.dims;
  auto entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.mat.rows(); ++r)
    for (std::size_t c = 0; c < m.mat.cols(); ++c)
      if (!m.mat(r, c).is_zero()) entries.push_back({r, c, m.mat(r, c).str()});
  j["entries"] = entries;
  return j;
}

CompositeMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs \"dims\" and \"entries\"");
  IndexShape shape(j.at("dims").get<std::vector<int>>());
  const std::size_t n = shape.total() * shape.total();
  SMatrix m(n, n);
  for (auto const& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("matrix entry must be [row, col, scalar]");
    auto r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
    if (r >= n || c >= n) throw std::invalid_argument("matrix entry index out of range");
    m(r, c) = Scalar::parse(e[2].get<std::string>());
  }
  return {shape, m};
}

}  // namespace qgraft
