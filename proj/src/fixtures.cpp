#include "qgraft/fixtures.hpp"

#include <algorithm>

#include "qgraft/graft.hpp"
#include "qgraft/rewrite.hpp"

namespace qgraft {

std::string to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::pass:
      return "pass";
    case FixtureStatus::fail:
      return "fail";
    case FixtureStatus::erratum_flagged:
      return "erratum-flagged";
  }
  return "fail";
}

std::size_t FixtureSummary::count(FixtureStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const FixtureResult& r) { return r.status == s; }));
}

nlohmann::json FixtureSummary::to_json() const {
  auto arr = nlohmann::json::array();
  for (auto const& r : results)
    arr.push_back({{"name", r.name},
                   {"status", to_string(r.status)},
                   {"computed", r.computed},
                   {"expected", r.expected},
                   {"anchor", r.anchor}});
  return {{"fixtures", arr},
          {"pass", count(FixtureStatus::pass)},
          {"fail", count(FixtureStatus::fail)},
          {"erratum_flagged", count(FixtureStatus::erratum_flagged)}};
}

namespace {

// Flat index of the F4 generator e^{(i1,i2)}.
int g(int i1, int i2) { return (i1 - 1) * 2 + (i2 - 1); }

NCPolynomial mono(std::initializer_list<int> w, const Scalar& c = Scalar(1L)) {
  return NCPolynomial::monomial(make_word(w), c);
}

Scalar sq(int e) { return Scalar::s_pow(e); }

}  // namespace

std::vector<NCPolynomial> f4_serre_elements(Side side) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= 2; ++j) {
    pairs.emplace_back(g(1, j), g(2, j));
    pairs.emplace_back(g(2, j), g(3, j));
    pairs.emplace_back(g(1, j), g(3, j));
  }
  const Scalar q = Scalar::q();
  std::vector<NCPolynomial> out;
  for (auto [a, b] : pairs) {
    if (side == Side::vector)
      out.push_back(mono({b, b, a}) - mono({b, a, b}, Scalar(1L) + q) + mono({a, b, b}, q));
    else
      out.push_back(mono({a, b, b}) - mono({b, a, b}, Scalar(1L) + q.inverse()) + mono({b, b, a}, q.inverse()));
  }
  return out;
}

std::vector<NCPolynomial> f4_printed_system() {
  const Scalar q = Scalar::q();
  std::vector<NCPolynomial> s;
  // S1
  for (int j = 1; j <= 3; ++j) s.push_back(mono({g(j, 2), g(j, 1)}) - mono({g(j, 1), g(j, 2)}, sq(1)));
  // S2: σ4 (rows 1,2), σ5 (rows 2,3), σ6 (rows 1,3)
  for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}})
    s.push_back(mono({g(b, 2), g(a, 1)}) - mono({g(b, 1), g(a, 2)}, sq(1)) + mono({g(a, 2), g(b, 1)}, sq(-2)) -
                mono({g(a, 1), g(b, 2)}, sq(-1)));
  // S3: σ7..σ12
  for (auto [a, b] : {std::pair{g(1, 1), g(2, 1)}, std::pair{g(1, 2), g(2, 2)}, std::pair{g(2, 1), g(3, 1)},
                      std::pair{g(2, 2), g(3, 2)}, std::pair{g(1, 1), g(3, 1)}, std::pair{g(1, 2), g(3, 2)}})
    s.push_back(mono({b, b, a}) - mono({b, a, b}, Scalar(1L) + q) + mono({a, b, b}, q));
  return s;
}

std::vector<PrintedOverlap> f4_printed_overlaps() {
  auto w = [](std::initializer_list<int> l) { return make_word(l); };
  return {
      {2, 7, w({3}), w({2}), w({2, 0})},
      {3, 9, w({5}), w({4}), w({4, 2})},
      {3, 11, w({5}), w({4}), w({4, 0})},
      {8, 1, w({3, 3}), w({1}), w({0})},
      {10, 2, w({5, 5}), w({3}), w({2})},
      {12, 1, w({5, 5}), w({1}), w({0})},
      {5, 7, w({5}), w({2}), w({2, 0})},
      {10, 4, w({5, 5}), w({3}), w({0})},
  };
}

NCPolynomial typeA_qcommutation() {
  const int e11 = 0, e12 = 1;
  return mono({e12, e11}) - mono({e11, e12}, Scalar::q());
}

NCPolynomial f4_square_relation(int i) {
  return mono({g(i, 1), g(i + 1, 2)}) - mono({g(i, 2), g(i + 1, 1)}, sq(-1)) + mono({g(i + 1, 1), g(i, 2)}, sq(2)) -
         mono({g(i + 1, 2), g(i, 1)}, sq(1));
}

NCPolynomial f4_qcommutation(int j) { return mono({g(j, 2), g(j, 1)}) - mono({g(j, 1), g(j, 2)}, sq(1)); }

// ------------------------------------------------------------------- suite

namespace {

struct Suite {
  FixtureSummary sum;

  void add(const std::string& name, bool ok, const std::string& computed, const std::string& expected,
           const std::string& anchor) {
    sum.results.push_back({name, ok ? FixtureStatus::pass : FixtureStatus::fail, computed, expected, anchor});
  }
  // Pass when computed equals the printed value; erratum-flagged when it
  // equals the documented correction instead.
  void add_erratum(const std::string& name, bool matches_printed, bool matches_correction, const std::string& computed,
                   const std::string& expected, const std::string& anchor) {
    FixtureStatus st = matches_printed      ? FixtureStatus::pass
                       : matches_correction ? FixtureStatus::erratum_flagged
                                            : FixtureStatus::fail;
    sum.results.push_back({name, st, computed, expected, anchor});
  }
  template <class F>
  void guard(const std::string& name, const std::string& anchor, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name, false, std::string("error: ") + e.what(), "", anchor);
    }
  }
};

std::string roots_str(std::vector<Scalar> r) {
  std::vector<std::string> s;
  for (auto const& x : r) s.push_back(x.str());
  std::sort(s.begin(), s.end());
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i];
  return out + "}";
}

bool same_roots(const std::vector<Scalar>& a, const std::vector<Scalar>& b) { return roots_str(a) == roots_str(b); }

}  // namespace

FixtureSummary run_fixtures() {
  Suite s;
  const Scalar q = Scalar::q();
  const Scalar qi = q.inverse();

  const GraftSpec a22 = GraftSpec::typeA(2, 2);
  const GraftSpec f4 = GraftSpec::f4();
  auto build = [](const GraftSpec& spec) {
    std::vector<CompositeMatrix> rs;
    std::vector<std::vector<Scalar>> roots;
    for (auto const& f : spec.factors) {
      rs.push_back(standard_R(f));
      roots.push_back(factor_roots(f));
    }
    auto hints = predict_eigenvalues(roots);
    return majid_pair(tensor_R(rs), spec.eigen_to_minus_one, &hints);
  };
  const MajidPair pa = build(a22);
  const MajidPair pf = build(f4);

  s.guard("A1-self-exponent", "type A: E_new K_new = q^2 K_new E_new", [&] {
    Rational t = self_pairing(a22, pa);
    s.add("A1-self-exponent", t == 2, t.get_str(), "2", "type A: E_new K_new = q^2 K_new E_new");
  });
  s.guard("A6-neighbor-exponent", "type A: E_new K_{n-1} = q^-1 K_{n-1} E_new", [&] {
    auto nb = neighbor_pairings(GraftSpec::typeA(4, 3));
    bool ok = nb[0] == std::vector<Rational>{0, 0, -1} && nb[1] == std::vector<Rational>{0, -1};
    s.add("A6-neighbor-exponent", ok, nb[0].back().get_str(), "-1", "type A: E_new K_{n-1} = q^-1 K_{n-1} E_new");
  });
  s.guard("F4-self-exponent", "F4: E_3 K_3 = q K_3 E_3", [&] {
    Rational t = self_pairing(f4, pf);
    s.add("F4-self-exponent", t == 1, t.get_str(), "1", "F4: E_3 K_3 = q K_3 E_3");
  });
  s.guard("F4-alpha2-exponent", "F4: e(3,2) K_2 = q^-1 K_2 e(3,2)", [&] {
    Rational t = neighbor_pairings(f4)[0][1];
    s.add("F4-alpha2-exponent", t == -1, t.get_str(), "-1", "F4: e(3,2) K_2 = q^-1 K_2 e(3,2)");
  });
  s.guard("F4-alpha4-exponent", "F4: e(3,2) K_4, printed as q^(1/2) K_4 e(3,2)", [&] {
    Rational t = neighbor_pairings(f4)[1][0];
    s.add_erratum("F4-alpha4-exponent", t == Rational(1, 2), abs(t) == Rational(1, 2), t.get_str(), "1/2",
                  "F4: e(3,2) K_4, printed as q^(1/2) K_4 e(3,2); the ratio R^{12}_{12}/R^{22}_{22} gives q^(-1/2)");
  });

  // R' of the F4 pair as R(PR)^2 + a R(PR) + b R + c P.
  s.guard("F4-Rprime", "F4 R' expansion", [&] {
    UniPoly nu = pf.minpoly.divide_exact(UniPoly::linear_root(Scalar(-1L)));
    const Scalar a = nu.c.at(2), b = nu.c.at(1), c = nu.c.at(0) + Scalar(1L);
    const Scalar pa_ = qi - q - q.pow(-2), pb = qi - Scalar(1L) - q.pow(-3), pc = q.pow(-2) + Scalar(1L);
    const std::string anchor = "F4 R' = R(PR)^2 + a R(PR) + b R + c P";
    s.add("F4-Rprime-coeff-0", nu.c.at(3).is_one(), nu.c.at(3).str(), "1", anchor + ", leading");
    s.add("F4-Rprime-coeff-1", a == pa_, a.str(), pa_.str(), anchor + ", a");
    s.add("F4-Rprime-coeff-2", b == pb, b.str(), pb.str(), anchor + ", b");
    s.add("F4-Rprime-coeff-3", c == pc, c.str(), pc.str(), anchor + ", c");
    const std::size_t n = pf.R.dim();
    const SMatrix p = permutation_P<Scalar>(n);
    const SMatrix pr = p * pf.R.mat;
    SMatrix rhs = pf.R.mat * pr * pr + pf.R.mat * pr * pa_ + pf.R.mat * pb + p * pc;
    s.add("F4-Rprime-matrix", rhs == pf.Rprime.mat, rhs == pf.Rprime.mat ? "equal" : "differs", "equal", anchor);
  });
  s.guard("A-Rprime-formula", "type A R' = RPR - (q^2+q^-2)R + 2P", [&] {
    const SMatrix p = permutation_P<Scalar>(pa.R.dim());
    SMatrix rhs = pa.R.mat * p * pa.R.mat - pa.R.mat * (q.pow(2) + q.pow(-2)) + p * Scalar(2L);
    bool ok = rhs == pa.Rprime.mat;
    s.add("A-Rprime-formula", ok, ok ? "equal" : "differs", "equal", "type A R' = RPR - (q^2+q^-2)R + 2P");
  });
  s.guard("A-minpoly-roots", "type A braiding roots", [&] {
    std::vector<Scalar> want{Scalar(-1L), q.pow(2), q.pow(-2)};
    s.add("A-minpoly-roots", same_roots(pa.eigenvalues, want), roots_str(pa.eigenvalues), roots_str(want),
          "type A normalized braiding roots {-1, q^2, q^-2}");
  });
  s.guard("F4-minpoly-roots", "F4 braiding roots", [&] {
    std::vector<Scalar> want{q, Scalar(-1L), -qi, q.pow(-2)};
    s.add("F4-minpoly-roots", same_roots(pf.eigenvalues, want), roots_str(pf.eigenvalues), roots_str(want),
          "F4 quartic roots {q^(3/2), -q^(1/2), -q^(-1/2), q^(-3/2)} divided by q^(1/2)");
  });
  s.guard("R-C2-displayed", "displayed 4x4 R on C^2 with q^(1/2)", [&] {
    auto r = standard_R({2, Module::natural, Rational(1, 2)});
    SMatrix want(4, 4);
    want(0, 0) = sq(1);
    want(1, 1) = Scalar(1L);
    want(2, 2) = Scalar(1L);
    want(3, 3) = sq(1);
    want(1, 2) = sq(1) - sq(-1);
    s.add("R-C2-displayed", r.mat == want, r.mat == want ? "equal" : "differs", "equal",
          "R on C^2: diagonal (q^(1/2),1,1,q^(1/2)), q^(1/2)-q^(-1/2) at row (1,2), column (2,1)");
  });
  s.guard("R-sum-form", "summation form of R on C^n", [&] {
    // diag + (q-q^-1) Σ_{i>j} E_ij ⊗ E_ji puts the off-diagonal entry at
    // row (i,j), column (j,i) with i > j.
    auto r = standard_R({2, Module::natural, Rational(1, 2)});
    SMatrix sum(4, 4);
    for (std::size_t i = 0; i < 4; ++i) sum(i, i) = r.mat(i, i);
    sum(2, 1) = sq(1) - sq(-1);
    s.add_erratum("R-sum-form", sum == r.mat, !(sum == r.mat) && sum == transpose(r.mat),
                  sum == r.mat ? "equal" : "transpose of the entry formula", "equal to the displayed matrix",
                  "R = Σ q^δ E_ii⊗E_jj + (q-q^-1) Σ_{i>j} E_ij⊗E_ji against the entry formula");
  });
  s.guard("tensor-corner-entry", "R on C^3 ⊗ C^2 corner", [&] {
    auto r = tensor_R({standard_R({3, Module::natural, 1}), standard_R({2, Module::natural, Rational(1, 2)})});
    Scalar v = r.at(0, 0, 0, 0);
    s.add("tensor-corner-entry", v == sq(3), v.str(), sq(3).str(), "R on C^3⊗C^2 at ((1,1),(1,1)) = q·q^(1/2)");
  });
  s.guard("FRT-constants", "FRT constants", [&] {
    const auto r3 = standard_R({3, Module::natural, 1});
    const auto r2 = standard_R({2, Module::natural, Rational(1, 2)});
    Scalar c3 = check_frt(r3), c2 = check_frt(r2), ct = check_frt(tensor_R({r3, r2}));
    s.add("FRT-C3", c3 == q.pow(-6), c3.str(), q.pow(-6).str(), "FRT constant of R on C^3, d = 1");
    s.add("FRT-C2", c2 == q.pow(-2), c2.str(), q.pow(-2).str(), "FRT constant of R on C^2, d = 1/2");
    s.add("FRT-tensor-product", ct == c3 * c2, ct.str(), (c3 * c2).str(), "tensor FRT constant = product of factors");
  });
  s.guard("qint-3-sqrtq", "[3] at base q^(1/2)", [&] {
    Scalar v = q_integer(3, sq(1));
    Scalar want = q + Scalar(1L) + qi;
    s.add("qint-3-sqrtq", v == want, v.str(), want.str(), "[3]_{q^(1/2)} = q + 1 + q^-1");
  });

  // Type A q-commutation between generators sharing the second index.
  const Scalar b2_printed = (Scalar(2L) * q.pow(2) + Scalar(3L)) / (Scalar(2L) * (q + qi));
  s.guard("B2-eval-q1", "printed coefficient at q = 1", [&] {
    Rational v = b2_printed.eval(1);
    s.add("B2-eval-q1", v == Rational(5, 4), rational_str(v), "5/4", "(2q^2+3)/(2(q+q^-1)) at q = 1");
  });
  s.guard("B2-coefficient", "type A: e^i e^j for i2 = j2, i1 > j1", [&] {
    auto alg = relations_from_pair(pa, Side::vector);
    auto sys = orient(alg.quad_relations, MonomialOrder(4), 2);
    // e^{(2,1)} e^{(1,1)} with flat indices 2 and 0.
    NCPolynomial nf = sys.normal_form(NCPolynomial::monomial(make_word({2, 0})));
    Scalar c = nf.coeff(make_word({0, 2}));
    bool single = nf.terms.size() == 1 && !c.is_zero();
    s.add_erratum("B2-coefficient", single && c == b2_printed, single && (c == q || c == qi),
                  single ? c.str() : nf.str(composite_names(pa.R.shape, "e")), b2_printed.str(),
                  "type A: e^i e^j = (2q^2+3)/(2(q+q^-1)) e^j e^i for i2 = j2, i1 > j1; must specialize to 1 at q = 1");
  });

  s.guard("F4-serre-radicals", "F4 cubic q-Serre elements in the kernel of G_3", [&] {
    BlockMatrix g3 = pairing_matrix(pf, 3);
    const SMatrix d = g3.dense();
    std::size_t good = 0, total = 0;
    for (Side side : {Side::vector, Side::covector})
      for (auto const& p : f4_serre_elements(side)) {
        ++total;
        auto v = to_word_vector(p, 6);
        bool zero = true;
        for (std::size_t r = 0; r < d.rows() && zero; ++r) {
          Scalar acc;
          for (std::size_t c = 0; c < d.cols(); ++c) {
            const Scalar& x = side == Side::vector ? d(r, c) : d(c, r);
            if (!x.is_zero() && !v[c].is_zero()) acc += x * v[c];
          }
          zero = acc.is_zero();
        }
        good += zero;
      }
    s.add("F4-serre-radicals", good == total, std::to_string(good) + "/" + std::to_string(total),
          std::to_string(total) + "/" + std::to_string(total), "cubic q-Serre radicals of the F4 dual pair");
  });
  s.guard("F4-printed-overlaps", "ambiguities of the printed F4 reduction system", [&] {
    RewriteSystem sys = orient(f4_printed_system(), MonomialOrder(6), 6);
    auto ovs = overlaps(sys);
    std::size_t found = 0;
    for (auto const& po : f4_printed_overlaps()) {
      bool hit = std::any_of(ovs.begin(), ovs.end(), [&](const Overlap& o) {
        return o.a == po.a && o.b == po.b && o.c == po.c && !o.inclusion;
      });
      found += hit;
    }
    s.add("F4-printed-overlaps", found == 8, std::to_string(found) + " of 8 (" + std::to_string(ovs.size()) + " total)",
          "8 of 8", "listed overlap ambiguities of S1, S2, S3");
  });
  s.guard("F4-basis-profile", "PBW count of the 20 listed basis elements", [&] {
    // Degrees of the listed root vectors: 6 of degree 1, 9 of 2, 2 of 3, 3 of 4.
    std::vector<long> pbw(5, 0);
    pbw[0] = 1;
    for (auto [deg, count] : {std::pair{1, 6}, std::pair{2, 9}, std::pair{3, 2}, std::pair{4, 3}})
      for (int k = 0; k < count; ++k)
        for (std::size_t d = static_cast<std::size_t>(deg); d < pbw.size(); ++d) pbw[d] += pbw[d - static_cast<std::size_t>(deg)];
    std::vector<long> ranks;
    for (int d = 0; d <= 4; ++d) ranks.push_back(d == 0 ? 1 : static_cast<long>(pairing_matrix(pf, d).exact_rank()));
    auto str = [](const std::vector<long>& v) {
      std::string o;
      for (auto x : v) o += (o.empty() ? "" : ",") + std::to_string(x);
      return o;
    };
    s.add("F4-basis-profile", ranks == pbw, str(ranks), str(pbw),
          "basis of the quotient braided group: root vectors of degrees 1x6, 2x9, 3x2, 4x3");
  });
  for (auto [label, spec] : {std::pair{"A3", GraftSpec::typeA(2, 2)}, std::pair{"F4", GraftSpec::f4()},
                             std::pair{"A2", GraftSpec::rank1()}}) {
    const std::string name = std::string("graft-") + spec.preset;
    s.guard(name, "classification", [&] {
      GraftSpec sp = spec;
      sp.max_degree = 3;
      sp.radical_degree = 3;
      auto rep = run_pipeline(sp);
      s.add(name, rep.classification.label == label, rep.classification.label, label,
            "Dynkin type of the grafted quantum group");
    });
  }
  return s.sum;
}

}  // namespace qgraft
