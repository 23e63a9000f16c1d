#include "qgraft/braided.hpp"

#include <numeric>
#include <unordered_map>

namespace qgraft {

std::vector<std::string> BraidedAlgebra::names() const {
  return composite_names(generators, side == Side::vector ? "e" : "f");
}

std::vector<NCPolynomial> BraidedAlgebra::all_relations() const {
  auto all = quad_relations;
  all.insert(all.end(), extra_relations.begin(), extra_relations.end());
  return all;
}

BraidedAlgebra relations_from_pair(const MajidPair& pair, Side side) {
  const std::size_t n = pair.R.dim();
  const auto p = permutation_P<Scalar>(n);
  const SMatrix a = SMatrix::identity(n * n) - p * pair.Rprime.mat;
  std::vector<NCPolynomial> rels;
  for (std::size_t x = 0; x < n * n; ++x) {
    NCPolynomial r;
    for (std::size_t y = 0; y < n * n; ++y) {
      const Scalar& c = side == Side::vector ? a(x, y) : a(y, x);
      if (!c.is_zero()) r.add(word_from_code(y, 2, n), c);
    }
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  BraidedAlgebra alg;
  alg.side = side;
  alg.generators = pair.R.shape;
  alg.quad_relations = echelon_basis(rels, MonomialOrder(n));
  alg.pair = &pair;
  return alg;
}

std::vector<Scalar> to_word_vector(const NCPolynomial& p, std::size_t ngens) {
  int d = p.degree();
  std::size_t len = 1;
  for (int i = 0; i < d; ++i) len *= ngens;
  std::vector<Scalar> v(len);
  for (auto const& [w, c] : p.terms) {
    if (static_cast<int>(w.size()) != d) throw std::invalid_argument("to_word_vector: polynomial not homogeneous");
    v[word_code(w, ngens)] = c;
  }
  return v;
}

NCPolynomial from_word_vector(const std::vector<Scalar>& v, std::size_t degree, std::size_t ngens) {
  NCPolynomial p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p.terms.emplace(word_from_code(i, degree, ngens), v[i]);
  return p;
}

// ------------------------------------------------------------- BlockMatrix

std::size_t BlockMatrix::size() const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < degree; ++i) s *= ngens;
  return s;
}

void BlockMatrix::index() {
  block_of.assign(size(), 0);
  pos_in_block.assign(size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      block_of[blocks[b][i]] = b;
      pos_in_block[blocks[b][i]] = i;
    }
}

Scalar BlockMatrix::entry(std::size_t r, std::size_t c) const {
  if (block_of[r] != block_of[c]) return Scalar();
  return mats[block_of[r]](pos_in_block[r], pos_in_block[c]);
}

SMatrix BlockMatrix::dense() const {
  SMatrix m(size(), size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < blocks[b].size(); ++i)
      for (std::size_t j = 0; j < blocks[b].size(); ++j) m(blocks[b][i], blocks[b][j]) = mats[b](i, j);
  return m;
}

QMatrix BlockMatrix::evaluate_dense(const Rational& s0) const { return evaluate(dense(), s0); }

std::size_t BlockMatrix::exact_rank() const {
  std::size_t r = 0;
  for (auto const& m : mats) r += rank(m);
  return r;
}

namespace {

struct Braiding {
  std::size_t n;
  // For each input pair code a·n+b, the nonzero (output pair, value) list.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;

  explicit Braiding(const MajidPair& pair) : n(pair.R.dim()), cols(n * n) {
    const SMatrix psi = permutation_P<Scalar>(n) * pair.R.mat;
    for (std::size_t r = 0; r < n * n; ++r)
      for (std::size_t c = 0; c < n * n; ++c)
        if (!psi(r, c).is_zero()) cols[c].emplace_back(r, psi(r, c));
  }

  std::size_t pow(std::size_t d) const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < d; ++i) s *= n;
    return s;
  }

  // Code of w with letters at positions i, i+1 replaced by the pair `out`.
  std::size_t replace(std::size_t code, std::size_t degree, std::size_t i, std::size_t out) const {
    std::size_t scale = pow(degree - i - 2);
    std::size_t old = (code / scale) % (n * n);
    return code - old * scale + out * scale;
  }
  std::size_t pair_at(std::size_t code, std::size_t degree, std::size_t i) const {
    return (code / pow(degree - i - 2)) % (n * n);
  }
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<std::vector<std::size_t>> word_components(const Braiding& br, std::size_t degree) {
  const std::size_t total = br.pow(degree);
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t w = 0; w < total; ++w)
    for (std::size_t i = 0; i + 1 < degree; ++i)
      for (auto const& [out, v] : br.cols[br.pair_at(w, degree, i)]) {
        auto a = find_root(parent, w), b = find_root(parent, br.replace(w, degree, i, out));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t w = 0; w < total; ++w) {
    auto root = find_root(parent, w);
    auto [it, fresh] = slot.emplace(root, blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(w);
  }
  return blocks;
}

}  // namespace

BlockMatrix pairing_matrix(const MajidPair& pair, int degree) {
  if (degree < 1) throw std::invalid_argument("pairing_matrix: degree must be >= 1");
  const Braiding br(pair);
  const std::size_t n = br.n;
  BlockMatrix g;
  g.ngens = n;
  g.degree = 1;
  for (std::size_t x = 0; x < n; ++x) {
    g.blocks.push_back({x});
    g.mats.push_back(SMatrix::identity(1));
  }
  g.index();
  for (std::size_t k = 2; k <= static_cast<std::size_t>(degree); ++k) {
    BlockMatrix next;
    next.ngens = n;
    next.degree = k;
    next.blocks = word_components(br, k);
    next.index();
    for (auto const& words : next.blocks) {
      const std::size_t b = words.size();
      std::vector<SMatrix> psi(k - 1, SMatrix(b, b));
      for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t c = 0; c < b; ++c)
          for (auto const& [out, v] : br.cols[br.pair_at(words[c], k, i)])
            psi[i](next.pos_in_block[br.replace(words[c], k, i, out)], c) += v;
      SMatrix bracket = SMatrix::identity(b), term = SMatrix::identity(b);
      for (std::size_t kk = 1; kk < k; ++kk) {
        term = term * psi[k - 1 - kk];
        bracket += term;
      }
      SMatrix gi(b, b);
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c)
          if (words[r] % n == words[c] % n) gi(r, c) = g.entry(words[r] / n, words[c] / n);
      next.mats.push_back(gi * bracket);
    }
    g = std::move(next);
  }
  return g;
}

std::vector<NCPolynomial> radical_basis(const MajidPair& pair, int degree, Side side, const MonomialOrder* order) {
  const std::size_t n = pair.R.dim();
  const MonomialOrder ord = order ? *order : MonomialOrder(n);
  if (degree < 2) return {};

  // Lower-degree relations generate the part of the ideal we quotient out.
  std::vector<NCPolynomial> lower = relations_from_pair(pair, side).quad_relations;
  for (int e = 3; e < degree; ++e) {
    auto r = radical_basis(pair, e, side, &ord);
    lower.insert(lower.end(), r.begin(), r.end());
  }

  BlockMatrix g = pairing_matrix(pair, degree);
  std::vector<std::vector<NCPolynomial>> ideal_by_block(g.blocks.size());
  for (auto const& rel : lower) {
    const std::size_t e = static_cast<std::size_t>(rel.degree());
    const std::size_t pad = static_cast<std::size_t>(degree) - e;
    for (std::size_t left = 0; left <= pad; ++left) {
      const std::size_t right = pad - left;
      std::size_t nl = 1, nr = 1;
      for (std::size_t i = 0; i < left; ++i) nl *= n;
      for (std::size_t i = 0; i < right; ++i) nr *= n;
      for (std::size_t u = 0; u < nl; ++u)
        for (std::size_t v = 0; v < nr; ++v) {
          NCPolynomial s = rel.sandwich(word_from_code(u, left, n), word_from_code(v, right, n));
          ideal_by_block[g.block_of[word_code(s.terms.begin()->first, n)]].push_back(std::move(s));
        }
    }
  }

  std::vector<NCPolynomial> out;
  for (std::size_t b = 0; b < g.blocks.size(); ++b) {
    const auto& words = g.blocks[b];
    auto kernel = nullspace(side == Side::vector ? g.mats[b] : transpose(g.mats[b]));
    if (kernel.empty()) continue;
    auto ideal = echelon_basis(ideal_by_block[b], ord);
    std::vector<NCPolynomial> reduced;
    for (auto const& v : kernel) {
      NCPolynomial p;
      for (std::size_t i = 0; i < words.size(); ++i)
        if (!v[i].is_zero()) p.terms.emplace(word_from_code(words[i], static_cast<std::size_t>(degree), n), v[i]);
      for (auto const& r : ideal) {
        Scalar f = p.coeff(r.leading(ord));
        if (!f.is_zero()) p -= r * f;
      }
      if (!p.is_zero()) reduced.push_back(std::move(p));
    }
    auto basis = echelon_basis(reduced, ord);
    out.insert(out.end(), basis.begin(), basis.end());
  }
  return echelon_basis(out, ord);
}

BraidedAlgebra quotient(const BraidedAlgebra& algebra, const std::vector<NCPolynomial>& extra) {
  for (auto const& p : extra)
    if (!p.homogeneous()) throw std::invalid_argument("quotient: relations must be homogeneous");
  BraidedAlgebra q = algebra;
  q.extra_relations.insert(q.extra_relations.end(), extra.begin(), extra.end());
  return q;
}

}  // namespace qgraft
