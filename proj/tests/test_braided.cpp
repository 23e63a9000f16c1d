#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qgraft/braided.hpp"
#include "qgraft/fixtures.hpp"
#include "qgraft/graft.hpp"
#include "qgraft/oracle.hpp"
#include "qgraft/rewrite.hpp"

using namespace qgraft;

namespace {

MajidPair pair_for(const GraftSpec& spec) {
  std::vector<CompositeMatrix> rs;
  std::vector<std::vector<Scalar>> roots;
  for (auto const& f : spec.factors) {
    rs.push_back(standard_R(f));
    roots.push_back(factor_roots(f));
  }
  auto hints = predict_eigenvalues(roots);
  return majid_pair(tensor_R(rs), spec.eigen_to_minus_one, &hints);
}

const MajidPair& f4() {
  static const MajidPair p = pair_for(GraftSpec::f4());
  return p;
}

const MajidPair& typeA22() {
  static const MajidPair p = pair_for(GraftSpec::typeA(2, 2));
  return p;
}

bool in_ideal_degree(const std::vector<NCPolynomial>& gens, const NCPolynomial& p, std::size_t ngens) {
  // Span of u·g·v over all words u, v with the right total degree.
  std::vector<NCPolynomial> span;
  const std::size_t d = static_cast<std::size_t>(p.degree());
  for (auto const& g : gens) {
    const std::size_t e = static_cast<std::size_t>(g.degree());
    if (e > d) continue;
    for (std::size_t left = 0; left <= d - e; ++left) {
      std::size_t right = d - e - left, nl = 1, nr = 1;
      for (std::size_t i = 0; i < left; ++i) nl *= ngens;
      for (std::size_t i = 0; i < right; ++i) nr *= ngens;
      for (std::size_t a = 0; a < nl; ++a)
        for (std::size_t b = 0; b < nr; ++b)
          span.push_back(g.sandwich(word_from_code(a, left, ngens), word_from_code(b, right, ngens)));
    }
  }
  return in_span(span, p, MonomialOrder(ngens));
}

// Independent oracle: G_d is the sum over all permutations of the braid lift
// of a reduced word, computed numerically on the full tensor power.
QMatrix brute_force_pairing(const MajidPair& pair, int d, const Rational& s0) {
  const std::size_t n = pair.R.dim();
  const QMatrix psi = evaluate(permutation_P(pair.R.shape).mat * pair.R.mat, s0);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  auto psi_at = [&](int pos) {
    std::size_t left = 1, right = 1;
    for (int i = 0; i < pos; ++i) left *= n;
    for (int i = pos + 2; i < d; ++i) right *= n;
    return kron(kron(QMatrix::identity(left), psi), QMatrix::identity(right));
  };
  QMatrix sum(total, total);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Bubble sort records a reduced word for the permutation.
    std::vector<int> p = perm, word;
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (int i = 0; i + 1 < d; ++i)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i) + 1]) {
          std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
          word.push_back(i);
          swapped = true;
        }
    }
    QMatrix lift = QMatrix::identity(total);
    for (int pos : word) lift = lift * psi_at(pos);
    sum += lift;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

TEST_CASE("quadratic relations contain the displayed commutations") {
  auto a = relations_from_pair(typeA22(), Side::vector);
  CHECK(in_span(a.quad_relations, typeA_qcommutation(), MonomialOrder(4)));
  auto f = relations_from_pair(f4(), Side::vector);
  for (int j = 1; j <= 3; ++j) CHECK(in_span(f.quad_relations, f4_qcommutation(j), MonomialOrder(6)));
  for (int i = 1; i <= 2; ++i) CHECK(in_span(f.quad_relations, f4_square_relation(i), MonomialOrder(6)));
  // Same dimension count on both sides: kernel of PR' - I.
  auto cov = relations_from_pair(f4(), Side::covector);
  CHECK(cov.quad_relations.size() == f.quad_relations.size());
  CHECK(a.quad_relations.size() == 6);
}

TEST_CASE("pairing matrices in low degree") {
  auto g1 = pairing_matrix(f4(), 1);
  CHECK(g1.dense() == SMatrix::identity(6));
  auto g2 = pairing_matrix(typeA22(), 2);
  auto psi = permutation_P(typeA22().R.shape).mat * typeA22().R.mat;
  CHECK(g2.dense() == SMatrix::identity(16) + psi);
  CHECK_THROWS_AS(pairing_matrix(f4(), 0), std::invalid_argument);
}

TEST_CASE("pairing matrix matches the permutation-sum oracle") {
  for (auto const* pair : {&typeA22(), &f4()})
    for (int d = 2; d <= 3; ++d) {
      auto g = pairing_matrix(*pair, d);
      for (auto const& s0 : random_eval_points(pair == &f4() ? 1 : 3, static_cast<std::uint64_t>(d)))
        CHECK(g.evaluate_dense(s0) == brute_force_pairing(*pair, d, s0));
    }
}

TEST_CASE("Serre elements lie in the kernel of G_3") {
  auto g3 = pairing_matrix(f4(), 3).dense();
  auto check_right = [&](const NCPolynomial& p) {
    auto v = to_word_vector(p, 6);
    for (std::size_t r = 0; r < g3.rows(); ++r) {
      Scalar acc;
      for (std::size_t c = 0; c < g3.cols(); ++c)
        if (!v[c].is_zero() && !g3(r, c).is_zero()) acc += g3(r, c) * v[c];
      if (!acc.is_zero()) return false;
    }
    return true;
  };
  auto check_left = [&](const NCPolynomial& p) {
    auto v = to_word_vector(p, 6);
    for (std::size_t c = 0; c < g3.cols(); ++c) {
      Scalar acc;
      for (std::size_t r = 0; r < g3.rows(); ++r)
        if (!v[r].is_zero() && !g3(r, c).is_zero()) acc += v[r] * g3(r, c);
      if (!acc.is_zero()) return false;
    }
    return true;
  };
  for (auto const& p : f4_serre_elements(Side::vector)) CHECK(check_right(p));
  for (auto const& p : f4_serre_elements(Side::covector)) CHECK(check_left(p));
  CHECK(f4_serre_elements(Side::vector).size() == 6);
}

TEST_CASE("radicals") {
  CHECK(radical_basis(f4(), 1, Side::vector).empty());
  // Type A has nothing new in degree 2.
  auto a = relations_from_pair(typeA22(), Side::vector);
  for (auto const& r : radical_basis(typeA22(), 2, Side::vector)) CHECK(in_span(a.quad_relations, r, MonomialOrder(4)));
  CHECK(radical_basis(typeA22(), 3, Side::vector).empty());

  auto rad = radical_basis(f4(), 3, Side::vector);
  CHECK(rad.size() == 32);
  for (auto const& p : f4_serre_elements(Side::vector)) CHECK(in_span(rad, p, MonomialOrder(6)));
  auto crad = radical_basis(f4(), 3, Side::covector);
  CHECK(crad.size() == 32);
  for (auto const& p : f4_serre_elements(Side::covector)) CHECK(in_span(crad, p, MonomialOrder(6)));
}

TEST_CASE("exact and evaluated ranks agree") {
  for (int d = 1; d <= 3; ++d) {
    auto g = pairing_matrix(f4(), d);
    const auto exact = g.exact_rank();
    for (auto const& s0 : random_eval_points(3, 40 + static_cast<std::uint64_t>(d)))
      CHECK(rank(g.evaluate_dense(s0)) == exact);
  }
  CHECK(pairing_matrix(f4(), 3).exact_rank() == 112);
}

TEST_CASE("quotient") {
  auto alg = relations_from_pair(f4(), Side::vector);
  auto same = quotient(alg, {});
  CHECK(same.all_relations() == alg.all_relations());

  auto rad = radical_basis(f4(), 3, Side::vector);
  auto with = quotient(alg, rad);
  auto sys = complete(orient(with.all_relations(), MonomialOrder(6), 4));
  auto h = hilbert_dims(sys, 4);
  CHECK(h == std::vector<long>{1, 6, 30, 112, 375});
  // Adding an element of the ideal changes nothing.
  auto more = rad;
  more.push_back(rad[0].sandwich(make_word({0}), Word()));
  auto sys2 = complete(orient(quotient(alg, more).all_relations(), MonomialOrder(6), 4));
  CHECK(hilbert_dims(sys2, 4) == h);
}

TEST_CASE("word vector round trip") {
  auto p = f4_serre_elements(Side::vector)[2];
  CHECK(from_word_vector(to_word_vector(p, 6), 3, 6) == p);
}

TEST_CASE("Serre elements generate no new ideal beyond the radical") {
  auto alg = relations_from_pair(f4(), Side::vector);
  auto rad = radical_basis(f4(), 3, Side::vector);
  std::vector<NCPolynomial> gens = alg.quad_relations;
  gens.insert(gens.end(), rad.begin(), rad.end());
  for (auto const& p : f4_serre_elements(Side::vector)) CHECK(in_ideal_degree(gens, p, 6));
}
