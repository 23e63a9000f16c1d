#include <doctest.h>

#include "qgraft/fixtures.hpp"
#include "qgraft/graft.hpp"

using namespace qgraft;

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix typeA_cartan(int r) {
  IntMatrix c(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    if (i + 1 < r) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = -1;
      c[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = -1;
    }
  }
  return c;
}

MajidPair pair_for(const GraftSpec& spec) {
  std::vector<CompositeMatrix> rs;
  for (auto const& f : spec.factors) rs.push_back(standard_R(f));
  return majid_pair(tensor_R(rs), spec.eigen_to_minus_one);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("self pairing exponents") {
  CHECK(self_pairing(GraftSpec::typeA(2, 2), pair_for(GraftSpec::typeA(2, 2))) == 2);
  CHECK(self_pairing(GraftSpec::typeA(3, 2), pair_for(GraftSpec::typeA(3, 2))) == 2);
  CHECK(self_pairing(GraftSpec::f4(), pair_for(GraftSpec::f4())) == 1);
  CHECK(self_pairing(GraftSpec::rank1(), pair_for(GraftSpec::rank1())) == 2);
}

TEST_CASE("neighbor exponents") {
  auto a = neighbor_pairings(GraftSpec::typeA(4, 3));
  CHECK(a[0] == std::vector<Rational>{0, 0, -1});
  CHECK(a[1].back() == -1);
  auto f = neighbor_pairings(GraftSpec::f4());
  CHECK(f[0] == std::vector<Rational>{0, -1});
  CHECK(abs(f[1][0]) == Rational(1, 2));
  CHECK(f[1][0] == Rational(-1, 2));
  CHECK(neighbor_pairings(GraftSpec::rank1())[0] == std::vector<Rational>{-1});
}

TEST_CASE("weight exponents") {
  auto w = weight_exponents(GraftSpec::typeA(3, 4));
  CHECK(w.exponents[0] == std::vector<Rational>{Rational(-1, 3), Rational(-2, 3)});
  CHECK(w.exponents[1] == std::vector<Rational>{Rational(-1, 4), Rational(-1, 2), Rational(-3, 4)});
  auto f = weight_exponents(GraftSpec::f4());
  CHECK(f.exponents[0] == std::vector<Rational>{Rational(-1, 3), Rational(-2, 3)});
  CHECK(f.exponents[1] == std::vector<Rational>{Rational(-1, 2)});
  CHECK(weight_exponents(GraftSpec::rank1()).exponents[0] == std::vector<Rational>{Rational(-1, 2)});
}

TEST_CASE("old generators on the new one") {
  for (auto spec : {GraftSpec::typeA(3, 3), GraftSpec::typeA(2, 4), GraftSpec::f4(), GraftSpec::rank1()}) {
    auto on = old_on_new_scalars(spec, weight_exponents(spec));
    auto nb = neighbor_pairings(spec);
    CHECK(on == nb);
  }
  // E_1 commutes with K_n for n >= 3.
  auto on = old_on_new_scalars(GraftSpec::typeA(4, 2), weight_exponents(GraftSpec::typeA(4, 2)));
  CHECK(on[0][0] == 0);
  CHECK(on[0][2] == -1);
}

TEST_CASE("Cartan matrices from pairings") {
  std::vector<std::vector<Rational>> b{{2, -1, 0, 0},
                                       {-1, 2, -1, 0},
                                       {0, -1, 1, Rational(-1, 2)},
                                       {0, 0, Rational(-1, 2), 1}};
  auto c = cartan_from_pairings(b);
  CHECK(c[1][2] == -1);
  CHECK(c[2][1] == -2);
  CHECK(c[2][3] == -1);
  CHECK(c[3][2] == -1);
  CHECK(classify(c).label == "F4");
  CHECK_THROWS(cartan_from_pairings({{2, -1}, {-1, 3}}));
}

TEST_CASE("classification") {
  for (int r = 1; r <= 7; ++r) CHECK(classify(typeA_cartan(r)).label == "A" + std::to_string(r));
  for (std::string lab : {"B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    auto c = catalog_cartan(lab);
    REQUIRE(c.has_value());
    CHECK(classify(*c).label == lab);
  }
  // Relabelled nodes are still recognized.
  auto f = *catalog_cartan("F4");
  IntMatrix rev(4, std::vector<int>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rev[i][j] = f[3 - i][3 - j];
  auto cl = classify(rev);
  CHECK(cl.label == "F4");
  CHECK(cl.witness.size() == 4);
  CHECK(classify({{2, -3}, {-1, 2}}).label == "G2");
  CHECK(classify({{2, -2}, {-2, 2}}).label == "unrecognized");
  CHECK(!catalog_cartan("Z9").has_value());
}

TEST_CASE("type A pipeline") {
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 2}}) {
    auto spec = GraftSpec::typeA(n, m);
    spec.max_degree = 3;
    auto rep = run_pipeline(spec);
    CHECK(rep.cartan == typeA_cartan(n + m - 1));
    CHECK(rep.classification.label == "A" + std::to_string(n + m - 1));
    CHECK(rep.ybe);
    CHECK(rep.majid.all());
    CHECK(rep.confluent);
    CHECK(rep.warnings.empty());
  }
  auto spec = GraftSpec::typeA(2, 2);
  spec.max_degree = 3;
  auto rep = run_pipeline(spec);
  CHECK(contains(rep.presentation, "E1^2*E2 + (-q - q^-1)*E1*E2*E1 + E2*E1^2 = 0"));
  CHECK(contains(rep.presentation, "[E2, F_k] = delta_{2,k} (K2 - K2^-1)/(q_* - q_*^-1)"));
  CHECK(contains(rep.presentation, "q_* = q"));
}

TEST_CASE("F4 pipeline") {
  auto rep = run_pipeline(GraftSpec::f4());
  CHECK(rep.classification.label == "F4");
  CHECK(rep.cartan == *catalog_cartan("F4"));
  CHECK(rep.cartan[1][2] == -1);
  CHECK(rep.cartan[2][1] == -2);
  std::vector<Rational> norms;
  for (std::size_t i = 0; i < 4; ++i) norms.push_back(rep.sym_pairings[i][i]);
  CHECK(norms == std::vector<Rational>{2, 2, 1, 1});
  CHECK(rep.hilbert == std::vector<long>{1, 6, 30, 112, 375});
  CHECK(rep.pairing_ranks == std::vector<long>{1, 6, 30, 112, 375});
  CHECK(rep.radicals.size() == 32);
  CHECK(rep.confluent);
  CHECK(rep.frt_const == Scalar::q_pow(-8));
  CHECK(rep.lambda == Scalar::s());
  CHECK(rep.warnings.empty());
  // Order-4 Serre relation between nodes 3 and 2 with q^(1/2)-binomials.
  CHECK(contains(rep.presentation, "E3^3*E2"));
  CHECK(contains(rep.presentation, "q_* = q^(1/2)"));

  auto j = rep.to_json();
  for (auto key : {"preset", "dims", "minpoly_roots", "checks", "cartan", "sym_pairings", "classification", "hilbert",
                   "warnings"})
    CHECK(j.contains(key));
  CHECK(j["classification"] == "F4");
}

TEST_CASE("rank-one pipeline") {
  auto rep = run_pipeline(GraftSpec::rank1());
  CHECK(rep.classification.label == "A2");
  CHECK(rep.old_on_new[0] == Rational(-1));
  CHECK(rep.hilbert == std::vector<long>{1, 2, 3, 4, 5});
}

TEST_CASE("pipeline errors name the stage") {
  auto spec = GraftSpec::f4();
  spec.eigen_to_minus_one = Scalar::q_pow(5);
  try {
    run_pipeline(spec);
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(!e.stage.empty());
  }
}

TEST_CASE("fixtures") {
  auto sum = run_fixtures();
  CHECK(sum.ok());
  CHECK(sum.count(FixtureStatus::erratum_flagged) == 3);
  for (auto const& r : sum.results) {
    INFO(r.name);
    if (r.name == "A1-self-exponent") CHECK(r.computed == "2");
    if (r.name == "F4-Rprime-coeff-2") CHECK(r.status == FixtureStatus::pass);
    if (r.name == "B2-coefficient") CHECK(r.status != FixtureStatus::fail);
    if (r.name == "F4-alpha4-exponent") CHECK(r.status == FixtureStatus::erratum_flagged);
  }
  auto j = sum.to_json();
  CHECK(j.is_object());
}
