#include <doctest.h>

#include <random>

#include "qgraft/linalg.hpp"
#include "qgraft/oracle.hpp"
#include "qgraft/rmatrix.hpp"

using namespace qgraft;

namespace {

SMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(-3, 3), zero(0, 2);
  SMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (zero(rng)) m(i, j) = coef(rng) * Scalar::s_pow(exp(rng)) + coef(rng);
  return m;
}

const CompositeMatrix& r_c2() {
  static const CompositeMatrix r = standard_R({2, Module::natural, Rational(1, 2)});
  return r;
}

}  // namespace

TEST_CASE("index shapes flatten row-major") {
  IndexShape sh({3, 2});
  CHECK(sh.total() == 6);
  CHECK(sh.flatten({0, 0}) == 0);
  CHECK(sh.flatten({1, 0}) == 2);
  CHECK(sh.flatten({2, 1}) == 5);
  for (std::size_t f = 0; f < 6; ++f) CHECK(sh.flatten(sh.unflatten(f)) == f);
}

TEST_CASE("permutation operator") {
  auto p2 = permutation_P(IndexShape({2}));
  CHECK(p2.mat(1, 2) == 1);
  CHECK(p2.mat(2, 1) == 1);
  CHECK(p2.mat(0, 0) == 1);
  CHECK(p2.mat(3, 3) == 1);
  CHECK(p2.mat.nonzeros() == 4);
  CHECK(permutation_P(IndexShape({1})).mat == SMatrix::identity(1));
  auto p = permutation_P(IndexShape({3, 2}));
  CHECK(p.mat.rows() == 36);
  CHECK(p.mat * p.mat == SMatrix::identity(36));
}

TEST_CASE("partial transposes") {
  for (auto which : {Transpose::t1, Transpose::t2})
    CHECK(partial_transpose(identity(IndexShape({3})), which).mat == SMatrix::identity(9));
  // The off-diagonal of R on C^2 sits at (12),(21); t2 moves it to (11),(22).
  auto t2 = partial_transpose(r_c2(), Transpose::t2);
  CHECK(t2.at(0, 0, 1, 1) == Scalar::s() - Scalar::s_pow(-1));
  CHECK(t2.at(0, 1, 1, 0).is_zero());
  auto t1 = partial_transpose(r_c2(), Transpose::t1);
  CHECK(t1.at(1, 1, 0, 0) == Scalar::s() - Scalar::s_pow(-1));
  std::mt19937_64 rng(oracle_seed());
  for (int k = 0; k < 5; ++k) {
    CompositeMatrix m(IndexShape({3}), random_matrix(rng, 9, 9));
    CHECK(partial_transpose(partial_transpose(m, Transpose::t1), Transpose::t1) == m);
    CHECK(partial_transpose(partial_transpose(m, Transpose::t2), Transpose::t2) == m);
    // t1 t2 is the full transpose
    CHECK(partial_transpose(partial_transpose(m, Transpose::t1), Transpose::t2).mat == transpose(m.mat));
  }
}

TEST_CASE("K0") {
  auto k = k0(IndexShape({2}));
  CHECK(k.at(0, 0, 0, 0) == 1);
  CHECK(k.at(0, 0, 1, 1) == 1);
  CHECK(k.at(1, 1, 0, 0) == 1);
  CHECK(k.at(1, 1, 1, 1) == 1);
  CHECK(k.mat.nonzeros() == 4);
  for (int n = 1; n <= 4; ++n) {
    auto kn = k0(IndexShape({n}));
    Scalar tr;
    for (std::size_t i = 0; i < kn.mat.rows(); ++i) tr += kn.mat(i, i);
    CHECK(tr == n);
  }
  CHECK(k0(IndexShape({1})).mat == SMatrix::identity(1));
}

TEST_CASE("exact inverse") {
  auto inv = invert(r_c2());
  CHECK(r_c2().mat * inv.mat == SMatrix::identity(4));
  CHECK(invert(identity(IndexShape({3}))) == identity(IndexShape({3})));
  auto big = tensor_R({standard_R({3, Module::natural, 1}), standard_R({2, Module::natural, Rational(1, 2)})});
  auto t2 = partial_transpose(big, Transpose::t2);
  auto t2inv = invert(t2);
  CHECK(t2.mat * t2inv.mat == SMatrix::identity(36));
  SMatrix sing(2, 2);
  sing(0, 0) = Scalar::q();
  sing(0, 1) = 1;
  sing(1, 0) = Scalar::q() * Scalar::q();
  sing(1, 1) = Scalar::q();
  CHECK_THROWS_AS(inverse(sing), SingularMatrix);
}

TEST_CASE("partial trace") {
  for (int n = 1; n <= 3; ++n) {
    IndexShape sh({n});
    CHECK(partial_trace_2(identity(sh)) == SMatrix::identity(static_cast<std::size_t>(n)) * Scalar(long(n)));
    CHECK(partial_trace_2(permutation_P(sh)) == SMatrix::identity(static_cast<std::size_t>(n)));
  }
  // D = tr_2(P ((R^t2)^-1)^t1) is diagonal.
  auto inv_t2 = invert(partial_transpose(r_c2(), Transpose::t2));
  auto inner = partial_transpose(inv_t2, Transpose::t1);
  CompositeMatrix pm(r_c2().shape, permutation_P(r_c2().shape).mat * inner.mat);
  SMatrix d = partial_trace_2(pm);
  CHECK(d(0, 1).is_zero());
  CHECK(d(1, 0).is_zero());
  CHECK(!d(0, 0).is_zero());
}

TEST_CASE("triple embeddings") {
  auto id = identity(IndexShape({2}));
  for (auto slot : {Slot::s12, Slot::s13, Slot::s23}) CHECK(embed_on_triple(id, slot) == SMatrix::identity(8));
  // P13 sends (a,b,c) to (c,b,a).
  auto p13 = embed_on_triple(permutation_P(IndexShape({2})), Slot::s13);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) CHECK(p13(c * 4 + b * 2 + a, a * 4 + b * 2 + c) == 1);
  CHECK(p13.nonzeros() == 8);
  const auto& r = r_c2();
  auto r12 = embed_on_triple(r, Slot::s12), r13 = embed_on_triple(r, Slot::s13), r23 = embed_on_triple(r, Slot::s23);
  CHECK(r12 * r13 * r23 == r23 * r13 * r12);
}

TEST_CASE("serial and parallel products agree") {
  std::mt19937_64 rng(oracle_seed() + 3);
  for (auto [r, k, c] : {std::tuple{5, 7, 3}, std::tuple{20, 20, 20}, std::tuple{33, 9, 40}}) {
    auto a = random_matrix(rng, r, k), b = random_matrix(rng, k, c);
    CHECK(multiply_serial(a, b) == multiply_parallel(a, b));
  }
  auto x = evaluate(random_matrix(rng, 40, 40), 3), y = evaluate(random_matrix(rng, 40, 40), 3);
  CHECK(multiply_serial(x, y) == multiply_parallel(x, y));
}

TEST_CASE("evaluation commutes with products, inverses and rank") {
  std::mt19937_64 rng(oracle_seed() + 11);
  const auto pts = random_eval_points(3, 2);
  for (int t = 0; t < 4; ++t) {
    auto a = random_matrix(rng, 6, 6), b = random_matrix(rng, 6, 6);
    for (auto const& s0 : pts) {
      CHECK(evaluate(a * b, s0) == evaluate(a, s0) * evaluate(b, s0));
      // Generic rank bounds the rank at any point from above.
      CHECK(rank(evaluate(a, s0)) <= rank(a));
    }
  }
  SMatrix m = r_c2().mat;
  for (auto const& s0 : pts) CHECK(evaluate(inverse(m), s0) == inverse(evaluate(m, s0)));
}

TEST_CASE("rref, rank and nullspace") {
  std::mt19937_64 rng(oracle_seed() + 5);
  for (int t = 0; t < 5; ++t) {
    auto a = random_matrix(rng, 4, 7);
    auto ns = nullspace(a);
    CHECK(ns.size() + rank(a) == 7);
    for (auto const& v : ns)
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("minimal polynomial") {
  SMatrix pr = permutation_P<Scalar>(2) * standard_R({2, Module::natural, 1}).mat;
  UniPoly mp = minimal_polynomial(pr);
  const Scalar q = Scalar::q();
  CHECK(mp == UniPoly::linear_root(q) * UniPoly::linear_root(-q.inverse()));
  SMatrix one(1, 1);
  one(0, 0) = q;
  CHECK(minimal_polynomial(one) == UniPoly::linear_root(q));

  auto big = tensor_R({standard_R({3, Module::natural, 1}), standard_R({2, Module::natural, Rational(1, 2)})});
  SMatrix pbig = permutation_P(big.shape).mat * big.mat * Scalar::s_pow(-1);
  UniPoly mb = minimal_polynomial(pbig);
  CHECK(mb.degree() == 4);
  auto roots = monomial_roots(mb);
  std::vector<Scalar> want{q, -1, -q.inverse(), q.pow(-2)};
  CHECK(roots.size() == 4);
  for (auto const& w : want) CHECK(std::find(roots.begin(), roots.end(), w) != roots.end());

  // Generic-point oracle: the polynomial annihilates the numeric matrix and
  // its degree matches the numeric minimal polynomial.
  for (auto const& s0 : random_eval_points(3, 4)) {
    QMatrix num = evaluate(pbig, s0);
    Poly<Rational> p{{}};
    for (auto const& c : mb.c) p.c.push_back(c.eval(s0));
    CHECK(p.at_matrix(num).is_zero_matrix());
    CHECK(krylov_minimal_polynomial(num).degree() == mb.degree());
  }
}

TEST_CASE("interleaved construction agrees with the factorized tensor") {
  auto a = standard_R({3, Module::natural, 1});
  auto b = standard_R({2, Module::natural, Rational(1, 2)});
  CHECK(interleave_construct({a}) == a);
  CHECK(interleave_construct({a, b}) == tensor_R({a, b}));
  auto i3 = identity(IndexShape({3})), i2 = identity(IndexShape({2}));
  CHECK(interleave_construct({i3, i2}).mat == SMatrix::identity(36));
}

TEST_CASE("matrix JSON round trip") {
  auto r = standard_R({3, Module::dual, 1});
  CHECK(matrix_from_json(matrix_to_json(r)) == r);
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse(R"({"dims":[2],"entries":[[1]]})")));
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse(R"({"dims":[2],"entries":[[4,0,"q"]]})")));
}
