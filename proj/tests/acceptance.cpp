// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "qgraft/braided.hpp"
#include "qgraft/fixtures.hpp"
#include "qgraft/graft.hpp"
#include "qgraft/oracle.hpp"
#include "qgraft/rewrite.hpp"

using namespace qgraft;

namespace {

const Scalar q = Scalar::q();
const Scalar s = Scalar::s();

// Numeric verdicts collected by criteria 1-9 for criterion 11.
struct NumericLedger {
  std::size_t checks = 0, disagreements = 0;
  std::vector<std::string> notes;
  void record(const std::string& what, bool exact, bool numeric) {
    ++checks;
    if (exact != numeric) {
      ++disagreements;
      notes.push_back(what);
    }
  }
};

NumericLedger ledger;
const std::vector<Rational> points = random_eval_points(3);

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostream&)> body;
};

Rational qval(const Rational& s0) { return s0 * s0; }

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

const MajidPair& f4_pair() {
  static const MajidPair p = pair_for(GraftSpec::f4());
  return p;
}

std::vector<CompositeMatrix> factors_of(const GraftSpec& spec) {
  std::vector<CompositeMatrix> rs;
  for (auto const& f : spec.factors) rs.push_back(standard_R(f));
  return rs;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ----------------------------------------------------------------- criteria

bool quadratic_braiding(std::ostream& log) {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = standard_R({n, Module::natural, 1});
    SMatrix pr = permutation_P(r.shape).mat * r.mat;
    auto id = SMatrix::identity(pr.rows());
    bool exact = ((pr - id * q) * (pr + id * q.inverse())).is_zero_matrix();
    double t = seconds_since(t0);
    ok = ok && exact && t < 1.0;
    log << "n=" << n << " " << (exact ? "holds" : "fails") << " in " << t << " s; ";
    for (auto const& s0 : points) {
      QMatrix num = evaluate(pr, s0);
      auto nid = QMatrix::identity(num.rows());
      bool v = ((num - nid * qval(s0)) * (num + nid * (1 / qval(s0)))).is_zero_matrix();
      ledger.record("quadratic braiding n=" + std::to_string(n), exact, v);
    }
  }
  return ok;
}

bool ybe(std::ostream& log) {
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    auto r = standard_R({n, Module::natural, 1});
    bool exact = check_ybe(r);
    ok = ok && exact;
    for (auto const& s0 : points)
      ledger.record("YBE n=" + std::to_string(n), exact, ybe_holds(evaluate(r.mat, s0), r.dim()));
  }
  auto t0 = std::chrono::steady_clock::now();
  auto big = tensor_R(factors_of(GraftSpec::f4()));
  bool exact = check_ybe(big);
  double t = seconds_since(t0);
  log << "R on C^n for n=2..4 and the 36x36 F4 tensor (" << t << " s for the F4 legs)";
  for (auto const& s0 : points) ledger.record("YBE F4 tensor", exact, ybe_holds(evaluate(big.mat, s0), big.dim()));
  return ok && exact && t < 120.0;
}

bool factorization(std::ostream& log) {
  bool ok = true;
  for (auto spec : {GraftSpec::typeA(2, 2), GraftSpec::f4()}) {
    auto fs = factors_of(spec);
    auto a = tensor_R(fs), b = interleave_construct(fs);
    bool exact = a == b;
    ok = ok && exact;
    log << spec.preset << " " << (exact ? "equal" : "differ") << "; ";
    for (auto const& s0 : points)
      ledger.record("factorization " + spec.preset, exact, evaluate(a.mat, s0) == evaluate(b.mat, s0));
  }
  return ok;
}

bool typeA_minpoly(std::ostream& log) {
  bool ok = true;
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    auto pair = pair_for(GraftSpec::typeA(n, m));
    auto roots = pair.eigenvalues;
    bool exact = roots.size() == 3;
    for (auto const& x : {Scalar(-1L), q * q, q.pow(-2)})
      exact = exact && std::find(roots.begin(), roots.end(), x) != roots.end();
    ok = ok && exact;
    log << "(" << n << "," << m << "):";
    for (auto const& r : roots) log << " " << r.str();
    log << "; ";
    SMatrix pr = permutation_P(pair.R.shape).mat * pair.R.mat;
    for (auto const& s0 : points) {
      QMatrix num = evaluate(pr, s0);
      Poly<Rational> p{{Rational(1)}};
      for (Rational x : std::vector<Rational>{Rational(-1), Rational(qval(s0) * qval(s0)), Rational(1 / (qval(s0) * qval(s0)))}) p = p * Poly<Rational>::linear_root(x);
      bool v = p.at_matrix(num).is_zero_matrix() && krylov_minimal_polynomial(num).degree() == 3;
      ledger.record("type A minimal polynomial", exact, v);
    }
  }
  return ok;
}

bool majid_regression(std::ostream& log) {
  auto a = pair_for(GraftSpec::typeA(2, 2));
  auto p = permutation_P(a.R.shape).mat;
  const SMatrix& r = a.R.mat;
  SMatrix wantA = r * p * r - r * (q * q + q.pow(-2)) + p * Scalar(2L);
  bool okA = a.Rprime.mat == wantA && a.checks.all();

  const auto& f = f4_pair();
  auto pf = permutation_P(f.R.shape).mat;
  const SMatrix& rf = f.R.mat;
  SMatrix pr = pf * rf;
  SMatrix wantF = rf * pr * pr + rf * pr * (q.inverse() - q - q.pow(-2)) + rf * (q.inverse() - 1 - q.pow(-3)) +
                  pf * (q.pow(-2) + 1);
  bool okF = f.Rprime.mat == wantF && f.checks.all();
  log << "type A formula and conditions " << (okA ? "hold" : "fail") << "; F4 coefficients and conditions "
      << (okF ? "hold" : "fail");
  for (auto const& s0 : points) {
    ledger.record("Majid type A", okA,
                  evaluate(a.Rprime.mat, s0) == evaluate(wantA, s0) &&
                      majid_conditions(evaluate(r, s0), evaluate(a.Rprime.mat, s0), a.R.dim()).all());
    ledger.record("Majid F4", okF,
                  evaluate(f.Rprime.mat, s0) == evaluate(wantF, s0) &&
                      majid_conditions(evaluate(rf, s0), evaluate(f.Rprime.mat, s0), f.R.dim()).all());
  }
  return okA && okF;
}

bool frt(std::ostream& log) {
  bool ok = true;
  std::vector<std::pair<std::string, CompositeMatrix>> all;
  for (int n = 2; n <= 5; ++n)
    for (auto mod : {Module::natural, Module::dual})
      all.emplace_back("C" + std::to_string(n) + (mod == Module::dual ? "*" : ""), standard_R({n, mod, 1}));
  all.emplace_back("C2 d=1/2", standard_R({2, Module::natural, Rational(1, 2)}));
  for (auto spec : {GraftSpec::typeA(2, 2), GraftSpec::typeA(2, 3), GraftSpec::f4()}) {
    auto fs = factors_of(spec);
    auto big = tensor_R(fs);
    Scalar prod(1L);
    bool fac_ok = true;
    for (auto const& x : fs) {
      auto c = frt_constant(x.mat, x.dim());
      fac_ok = fac_ok && c.has_value();
      if (c) prod *= *c;
    }
    auto c = frt_constant(big.mat, big.dim());
    bool match = fac_ok && c && *c == prod;
    ok = ok && match;
    log << spec.preset << " tensor c = " << (c ? c->str() : "none") << (match ? " (product of factors); " : "; ");
    all.emplace_back(spec.preset + " tensor", big);
  }
  for (auto const& [name, r] : all) {
    auto c = frt_constant(r.mat, r.dim());
    bool exact = c.has_value() && !c->is_zero();
    ok = ok && exact;
    if (!exact) log << name << " fails; ";
    for (auto const& s0 : points) {
      auto nc = frt_constant(evaluate(r.mat, s0), r.dim());
      ledger.record("FRT " + name, exact, nc.has_value() && sgn(*nc) != 0 && (!c || *nc == c->eval(s0)));
    }
  }
  log << all.size() << " matrices checked";
  return ok;
}

bool braided_relations(std::ostream& log) {
  auto a = relations_from_pair(pair_for(GraftSpec::typeA(2, 2)), Side::vector);
  bool okA = in_span(a.quad_relations, typeA_qcommutation(), MonomialOrder(4));
  auto f = relations_from_pair(f4_pair(), Side::vector);
  bool okF = true;
  for (int j = 1; j <= 3; ++j) okF = okF && in_span(f.quad_relations, f4_qcommutation(j), MonomialOrder(6));
  for (int i = 1; i <= 2; ++i) okF = okF && in_span(f.quad_relations, f4_square_relation(i), MonomialOrder(6));
  log << "type A q-commutation " << (okA ? "in span" : "missing") << "; F4 q^(1/2)-commutations and square relations "
      << (okF ? "in span" : "missing");
  return okA && okF;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool hilbert(std::ostream& log) {
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}}) {
    auto alg = relations_from_pair(pair_for(GraftSpec::typeA(n, m)), Side::vector);
    const long k = n * m;
    auto done = complete(orient(alg.all_relations(), MonomialOrder(static_cast<std::size_t>(k)), 5));
    auto h = hilbert_dims(done, 5);
    bool match = is_confluent(done);
    for (long d = 0; d <= 5; ++d) match = match && h[static_cast<std::size_t>(d)] == binom(k + d - 1, d);
    ok = ok && match;
    log << "nm=" << k << ":";
    for (auto x : h) log << " " << x;
    log << "; ";
  }
  double t = seconds_since(t0);
  log << t << " s";
  return ok && t < 300.0;
}

bool radicals(std::ostream& log) {
  const auto& pair = f4_pair();
  // Serre elements against G_3: right kernel on the vector side, left on the covector side.
  auto g3 = pairing_matrix(pair, 3);
  SMatrix dense = g3.dense();
  auto apply = [&](const std::vector<Scalar>& v, bool left) {
    bool zero = true;
    for (std::size_t a = 0; a < dense.rows() && zero; ++a) {
      Scalar acc;
      for (std::size_t b = 0; b < dense.cols(); ++b) {
        const Scalar& g = left ? dense(b, a) : dense(a, b);
        if (!v[b].is_zero() && !g.is_zero()) acc += g * v[b];
      }
      zero = acc.is_zero();
    }
    return zero;
  };
  auto apply_num = [&](const QMatrix& g, const std::vector<Scalar>& v, const Rational& s0, bool left) {
    for (std::size_t a = 0; a < g.rows(); ++a) {
      Rational acc = 0;
      for (std::size_t b = 0; b < g.cols(); ++b) acc += (left ? g(b, a) : g(a, b)) * v[b].eval(s0);
      if (sgn(acc) != 0) return false;
    }
    return true;
  };
  std::vector<QMatrix> g3num;
  for (auto const& s0 : points) g3num.push_back(g3.evaluate_dense(s0));
  std::size_t serre_ok = 0, serre_total = 0;
  for (auto side : {Side::vector, Side::covector})
    for (auto const& p : f4_serre_elements(side)) {
      auto v = to_word_vector(p, 6);
      bool exact = apply(v, side == Side::covector);
      serre_ok += exact;
      ++serre_total;
      for (std::size_t i = 0; i < points.size(); ++i)
        ledger.record("Serre kernel", exact, apply_num(g3num[i], v, points[i], side == Side::covector));
    }
  log << serre_ok << "/" << serre_total << " Serre elements in ker G3; ";

  // The printed system lies in the quotient ideal of the pair.
  auto alg = quotient(relations_from_pair(pair, Side::vector), radical_basis(pair, 3, Side::vector));
  auto qsys = complete(orient(alg.all_relations(), MonomialOrder(6), 3));
  std::size_t in_ideal = 0;
  for (auto const& rel : f4_printed_system()) in_ideal += qsys.normal_form(rel).is_zero();
  log << in_ideal << "/12 printed relations in the quotient ideal; ";

  auto sys = orient(f4_printed_system(), MonomialOrder(6), 6);
  std::size_t quad = 0, cubic = 0;
  for (auto const& r : sys.rules()) (r.lhs.size() == 2 ? quad : cubic) += 1;
  bool shapes = quad == 6 && cubic == 6 && sys.rules().size() == 12;
  auto ovs = overlaps(sys);
  std::size_t found = 0;
  for (auto const& po : f4_printed_overlaps())
    found += std::any_of(ovs.begin(), ovs.end(),
                         [&](const Overlap& o) { return o.a == po.a && o.b == po.b && o.c == po.c && !o.inclusion; });
  auto done = complete(sys);
  bool conf = is_confluent(done);
  log << "rule shapes 3+3+6 " << (shapes ? "match" : "differ") << "; " << found << "/8 listed overlaps among "
      << ovs.size() << "; completion to degree 6: " << done.rules().size() << " rules, "
      << (conf ? "confluent" : "not confluent");
  return serre_ok == serre_total && in_ideal == 12 && shapes && found == 8 && conf;
}

bool grafting(std::ostream& log) {
  bool ok = true;
  auto want = [](const std::string& label) { return *catalog_cartan(label); };
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    auto spec = GraftSpec::typeA(n, m);
    spec.max_degree = 3;
    auto rep = run_pipeline(spec);
    std::string label = "A" + std::to_string(n + m - 1);
    bool match = rep.classification.label == label && rep.cartan == want(label);
    ok = ok && match;
    log << "typeA(" << n << "," << m << ") -> " << rep.classification.label << "; ";
  }
  auto f = run_pipeline(GraftSpec::f4());
  bool norms = true;
  const std::vector<Rational> expect{2, 2, 1, 1};
  for (std::size_t i = 0; i < 4; ++i) norms = norms && f.sym_pairings[i][i] == expect[i];
  bool f4ok = f.classification.label == "F4" && f.cartan == want("F4") && f.cartan[1][2] == -1 &&
              f.cartan[2][1] == -2 && norms;
  log << "f4 -> " << f.classification.label << (norms ? " with norms (2,2,1,1); " : " with wrong norms; ");
  auto r1 = run_pipeline(GraftSpec::rank1());
  bool r1ok = r1.classification.label == "A2";
  log << "rank1 -> " << r1.classification.label << "; ";

  auto sum = run_fixtures();
  auto status = [&](const std::string& name) {
    for (auto const& r : sum.results)
      if (r.name == name) return r.status;
    return FixtureStatus::fail;
  };
  bool fx = status("A1-self-exponent") == FixtureStatus::pass && status("A6-neighbor-exponent") == FixtureStatus::pass &&
            status("F4-self-exponent") == FixtureStatus::pass && status("F4-alpha2-exponent") == FixtureStatus::pass &&
            status("F4-alpha4-exponent") == FixtureStatus::erratum_flagged;
  log << "scalar fixtures " << (fx ? "as expected (alpha4 sign flagged)" : "off");
  return ok && f4ok && r1ok && fx;
}

bool numeric_oracle(std::ostream& log) {
  log << ledger.checks << " numeric re-checks at s0 =";
  for (auto const& p : points) log << " " << p.get_str();
  log << " (seed " << oracle_seed() << "), " << ledger.disagreements << " disagreements";
  for (auto const& n : ledger.notes) log << "; " << n;
  return ledger.checks > 0 && ledger.disagreements == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "quadratic braiding (PR - q)(PR + q^-1) = 0, n = 2..5", quadratic_braiding},
      {2, "Yang-Baxter equation", ybe},
      {3, "factorized tensor R equals the interleaved construction", factorization},
      {4, "type A braiding roots {-1, q^2, q^-2}", typeA_minpoly},
      {5, "Majid pair regression", majid_regression},
      {6, "FRT condition and constants", frt},
      {7, "braided relation membership", braided_relations},
      {8, "type A graded dimensions are binomial", hilbert},
      {9, "radicals, F4 reduction system and its ambiguities", radicals},
      {10, "grafting classification and scalar fixtures", grafting},
      {11, "numeric oracle agrees with exact verdicts", numeric_oracle},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    std::ostringstream log;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.body(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    failed += !ok;
    std::printf("criterion %2d %s  %s [%.2f s]\n    %s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                seconds_since(t0), log.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed ? 1 : 0;
}
