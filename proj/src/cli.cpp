#include "qgraft/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "qgraft/braided.hpp"
#include "qgraft/dsl.hpp"
#include "qgraft/fixtures.hpp"
#include "qgraft/graft.hpp"
#include "qgraft/oracle.hpp"
#include "qgraft/rewrite.hpp"
#include "qgraft/rmatrix.hpp"

namespace qgraft {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw InputError("cannot write " + path);
  o << text;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (!path.empty()) write_file(path, j.dump(2) + "\n");
}

CompositeMatrix load_matrix(const std::string& path) {
  try {
    return matrix_from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Module parse_module(const std::string& m) {
  if (m == "natural") return Module::natural;
  if (m == "dual") return Module::dual;
  throw InputError("module must be natural or dual, got " + m);
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw InputError("not a rational number: " + s);
  }
}

RepSpec parse_factor(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 3) throw InputError("factor must be n,module,d: " + text);
  RepSpec r;
  try {
    r.lie_rank = std::stoi(parts[0]);
  } catch (const std::exception&) {
    throw InputError("bad rank in factor " + text);
  }
  r.module = parse_module(parts[1]);
  r.root_norm = parse_rational(parts[2]);
  return r;
}

GraftSpec preset_spec(const std::string& preset, int n, int m) {
  if (preset == "typeA") return GraftSpec::typeA(n, m);
  if (preset == "f4") return GraftSpec::f4();
  if (preset == "rank1") return GraftSpec::rank1();
  throw InputError("unknown preset " + preset);
}

MajidPair preset_pair(const GraftSpec& spec) {
  std::vector<CompositeMatrix> rs;
  std::vector<std::vector<Scalar>> roots;
  for (auto const& f : spec.factors) {
    rs.push_back(standard_R(f));
    roots.push_back(factor_roots(f));
  }
  auto hints = predict_eigenvalues(roots);
  return majid_pair(tensor_R(rs), spec.eigen_to_minus_one, &hints);
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + names.at(static_cast<std::size_t>(letter(w, i)));
  return s.empty() ? "1" : s;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

// ------------------------------------------------------------------ rmat etc.

struct MatrixOpts {
  int n = 2;
  std::string module = "natural";
  std::string d = "1";
  std::vector<std::string> factors;
  std::string out;
};

int run_rmat(const MatrixOpts& o, std::ostream& out) {
  RepSpec spec{o.n, parse_module(o.module), parse_rational(o.d)};
  auto r = standard_R(spec);
  auto j = matrix_to_json(r);
  if (o.out.empty())
    out << j.dump() << "\n";
  else
    write_json(o.out, j);
  return 0;
}

int run_tensor(const MatrixOpts& o, std::ostream& out) {
  std::vector<CompositeMatrix> fs;
  for (auto const& f : o.factors) fs.push_back(standard_R(parse_factor(f)));
  auto r = tensor_R(fs);
  auto j = matrix_to_json(r);
  if (o.out.empty())
    out << j.dump() << "\n";
  else
    write_json(o.out, j);
  return 0;
}

struct CheckOpts {
  std::string kind;
  std::vector<std::string> files;
  bool numeric = false;
  std::string report;
};

int run_check(const CheckOpts& o, std::ostream& out) {
  nlohmann::json rep{{"check", o.kind}};
  bool ok = true;
  auto need = [&](std::size_t k) {
    if (o.files.size() != k) throw InputError("check " + o.kind + " needs " + std::to_string(k) + " matrix file(s)");
  };
  if (o.kind == "ybe") {
    need(1);
    auto r = load_matrix(o.files[0]);
    const std::size_t n = r.dim();
    auto r12 = embed_on_triple(r.mat, n, Slot::s12);
    auto r13 = embed_on_triple(r.mat, n, Slot::s13);
    auto r23 = embed_on_triple(r.mat, n, Slot::s23);
    SMatrix lhs = r12 * r13 * r23, rhs = r23 * r13 * r12;
    ok = lhs == rhs;
    out << "R12 R13 R23 = R23 R13 R12: " << yes(ok) << "\n";
    rep["exact"] = ok;
    if (!ok) {
      auto fails = nlohmann::json::array();
      for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
          if (!(lhs(i, j) == rhs(i, j))) {
            if (fails.size() < 10) {
              out << "  entry (" << i << "," << j << "): R12R13R23 = " << lhs(i, j).str()
                  << ", R23R13R12 = " << rhs(i, j).str() << "\n";
              fails.push_back({i, j, lhs(i, j).str(), rhs(i, j).str()});
            }
          }
      rep["violations"] = fails;
    }
    if (o.numeric) {
      for (auto const& s0 : random_eval_points(3)) {
        bool v = ybe_holds(evaluate(r.mat, s0), n);
        out << "  at s = " << rational_str(s0) << ": " << yes(v) << "\n";
        rep["numeric"].push_back({rational_str(s0), v});
        if (v != ok && !v) ok = false;
      }
    }
  } else if (o.kind == "frt") {
    need(1);
    auto r = load_matrix(o.files[0]);
    auto c = frt_constant(r.mat, r.dim());
    ok = c.has_value();
    out << "FRT product is a multiple of K0: " << yes(ok) << "\n";
    if (c) out << "  constant: " << c->str() << "\n";
    rep["multiple_of_K0"] = ok;
    if (c) rep["constant"] = c->str();
  } else if (o.kind == "majid") {
    need(2);
    auto r = load_matrix(o.files[0]);
    auto rp = load_matrix(o.files[1]);
    if (r.dim() != rp.dim()) throw InputError("R and R' have different shapes");
    auto c = majid_conditions(r.mat, rp.mat, r.dim());
    out << "R12 R13 R'23 = R'23 R13 R12: " << yes(c.ybe_mixed_1) << "\n"
        << "R23 R13 R'12 = R'12 R13 R23: " << yes(c.ybe_mixed_2) << "\n"
        << "(PR + I)(PR' - I) = 0: " << yes(c.normalization) << "\n"
        << "R21 R'12 = R'21 R12: " << yes(c.unitarity) << "\n";
    ok = c.all();
    rep["conditions"] = {{"ybe_mixed_1", c.ybe_mixed_1},
                         {"ybe_mixed_2", c.ybe_mixed_2},
                         {"normalization", c.normalization},
                         {"unitarity", c.unitarity}};
  } else {
    throw InputError("unknown check " + o.kind + " (ybe, frt, majid)");
  }
  rep["ok"] = ok;
  write_json(o.report, rep);
  return ok ? 0 : 1;
}

struct PairOpts {
  std::string r_file, preset, eigen, out, out_r;
  int n = 2, m = 2;
};

int run_pair(const PairOpts& o, std::ostream& out) {
  MajidPair pair;
  if (!o.preset.empty()) {
    if (!o.r_file.empty()) throw InputError("give either --r or --preset");
    GraftSpec spec = preset_spec(o.preset, o.n, o.m);
    if (!o.eigen.empty()) spec.eigen_to_minus_one = Scalar::parse(o.eigen);
    pair = preset_pair(spec);
  } else {
    if (o.r_file.empty() || o.eigen.empty()) throw InputError("pair needs --r FILE --eigen SCALAR or --preset");
    pair = majid_pair(load_matrix(o.r_file), Scalar::parse(o.eigen));
  }
  out << "lambda: " << pair.lambda.str() << "\n";
  out << "minimal polynomial of PR: " << poly_str(pair.minpoly) << "\n";
  out << "roots:";
  for (auto const& r : pair.eigenvalues) out << " " << r.str();
  out << "\n";
  out << "conditions hold: " << yes(pair.checks.all()) << "\n";
  if (!o.out.empty()) write_json(o.out, matrix_to_json(pair.Rprime));
  if (!o.out_r.empty()) write_json(o.out_r, matrix_to_json(pair.R));
  return pair.checks.all() ? 0 : 1;
}

struct BraidedOpts {
  std::string preset = "f4", side = "vector", report;
  int n = 2, m = 2, radicals = 3;
};

int run_braided(const BraidedOpts& o, std::ostream& out) {
  const GraftSpec spec = preset_spec(o.preset, o.n, o.m);
  Side side;
  if (o.side == "vector")
    side = Side::vector;
  else if (o.side == "covector")
    side = Side::covector;
  else
    throw InputError("side must be vector or covector");
  const MajidPair pair = preset_pair(spec);
  const BraidedAlgebra alg = relations_from_pair(pair, side);
  const auto names = alg.names();
  nlohmann::json rep{{"preset", o.preset}, {"side", o.side}};
  out << "quadratic relations (" << alg.quad_relations.size() << "):\n";
  for (auto const& r : alg.quad_relations) {
    out << "  " << r.str(names) << "\n";
    rep["quadratic"].push_back(poly_to_json(r, names));
  }
  rep["radicals"] = nlohmann::json::array();
  for (int d = 3; d <= o.radicals; ++d) {
    auto rad = radical_basis(pair, d, side);
    out << "degree " << d << " radicals (" << rad.size() << "):\n";
    for (auto const& r : rad) {
      out << "  " << r.str(names) << "\n";
      rep["radicals"].push_back(poly_to_json(r, names));
    }
  }
  write_json(o.report, rep);
  return 0;
}

// ------------------------------------------------------------------ rewrite

struct RewriteOpts {
  std::string system, order, normal_form, report;
  int max_degree = 4;
  bool hilbert = false, check_confluence = false;
};

int run_rewrite(const RewriteOpts& o, std::ostream& out) {
  RelationFile rf;
  rf = parse_dsl(read_file(o.system));
  const auto& names = rf.generators;
  if (!o.order.empty()) {
    std::vector<int> seq;
    std::stringstream ss(o.order);
    for (std::string tok; std::getline(ss, tok, '<');) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      int idx = rf.generator_index(tok);
      if (idx < 0) throw InputError("unknown generator in --order: " + tok);
      seq.push_back(idx);
    }
    if (seq.size() != names.size()) throw InputError("--order must list every generator");
    try {
      rf.order = MonomialOrder::from_sequence(seq);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (o.max_degree < 1) throw InputError("--max-degree must be positive");

  RewriteSystem sys;
  try {
    sys = orient(rf.relations, rf.order, o.max_degree);
  } catch (const BoundExceeded& e) {
    throw InputError(e.what());
  } catch (const NoLeadingTerm& e) {
    throw InputError(e.what());
  }

  // Number rules after the relation they came from, r1, r2, ...
  std::vector<std::string> label(sys.rules().size());
  for (std::size_t i = 0; i < sys.rules().size(); ++i) {
    label[i] = "new" + std::to_string(i + 1);
    for (std::size_t k = 0; k < rf.relations.size(); ++k)
      if (!rf.relations[k].is_zero() && rf.relations[k].leading(rf.order) == sys.rules()[i].lhs) {
        label[i] = "r" + std::to_string(k + 1);
        break;
      }
  }

  nlohmann::json rep{{"system", o.system}, {"max_degree", o.max_degree}};
  out << "rules (" << sys.rules().size() << "):\n";
  for (std::size_t i = 0; i < sys.rules().size(); ++i) {
    const auto& r = sys.rules()[i];
    out << "  " << label[i] << ": " << word_str(r.lhs, names) << " -> " << r.rhs.str(names) << "\n";
    rep["rules"].push_back({{"label", label[i]}, {"lhs", word_str(r.lhs, names)}, {"rhs", r.rhs.str(names)}});
  }

  bool ok = true;
  const bool need_completion = o.check_confluence || o.hilbert || !o.normal_form.empty();
  RewriteSystem done;
  if (need_completion) done = complete(sys);

  if (o.check_confluence) {
    std::size_t unresolved = 0;
    auto ovs = overlaps(sys);
    out << "ambiguities of the oriented system:\n";
    rep["ambiguities"] = nlohmann::json::array();
    for (auto const& ov : ovs) {
      if (static_cast<int>(ov.word().size()) > o.max_degree) continue;
      bool res = resolve(sys, ov).resolvable;
      unresolved += !res;
      std::string line = "(" + label[ov.first] + ", " + label[ov.second] + ", " + word_str(ov.a, names) + ", " +
                         word_str(ov.b, names) + ", " + word_str(ov.c, names) + ")";
      out << "  " << line << (ov.inclusion ? " inclusion" : "") << (res ? " resolvable" : " needs completion")
          << "\n";
      rep["ambiguities"].push_back({{"overlap", line}, {"inclusion", ov.inclusion}, {"resolvable", res}});
    }
    const bool conf = is_confluent(done);
    out << "oriented system confluent as given: " << yes(unresolved == 0) << "\n";
    out << "completed system: " << done.rules().size() << " rules, every ambiguity through degree " << o.max_degree
        << " resolves: " << yes(conf) << "\n";
    rep["input_confluent"] = unresolved == 0;
    rep["completed_rules"] = done.rules().size();
    rep["confluent"] = conf;
    ok = ok && conf;
  }
  if (o.hilbert) {
    auto h = hilbert_dims(done, o.max_degree);
    out << "graded dimensions:";
    for (auto x : h) out << " " << x;
    out << "\n";
    rep["hilbert"] = h;
  }
  if (!o.normal_form.empty()) {
    Word w = parse_word(o.normal_form, names);
    if (static_cast<int>(w.size()) > o.max_degree) throw InputError("word is longer than --max-degree");
    NCPolynomial nf = done.normal_form(NCPolynomial::monomial(w));
    out << "normal form: " << nf.str(names) << "\n";
    rep["normal_form"] = nf.str(names);
  }
  rep["ok"] = ok;
  write_json(o.report, rep);
  return ok ? 0 : 1;
}

// -------------------------------------------------------------------- graft

struct GraftOpts {
  std::string preset, report;
  int n = 2, m = 2, max_degree = 4;
};

int run_graft(const GraftOpts& o, std::ostream& out) {
  GraftSpec spec = preset_spec(o.preset, o.n, o.m);
  spec.max_degree = o.max_degree;
  GraftReport rep = run_pipeline(spec);
  out << "preset: " << rep.preset << "\n";
  out << "dims:";
  for (auto d : rep.dims) out << " " << d;
  out << "\nlambda: " << rep.lambda.str() << "\n";
  out << "braiding roots:";
  for (auto const& r : rep.minpoly_roots) out << " " << r.str();
  out << "\nYBE: " << yes(rep.ybe) << ", Majid conditions: " << yes(rep.majid.all())
      << ", FRT constant: " << rep.frt_const.str() << "\n";
  out << "quadratic relations: " << rep.quad_relations << ", radicals: " << rep.radicals.size()
      << ", rules after completion: " << rep.rules << ", confluent: " << yes(rep.confluent) << "\n";
  out << "graded dimensions:";
  for (auto h : rep.hilbert) out << " " << h;
  out << "\nCartan matrix:\n";
  for (auto const& row : rep.cartan) {
    out << " ";
    for (int x : row) out << " " << x;
    out << "\n";
  }
  out << "classification: " << rep.classification.label << "\n";
  for (auto const& w : rep.warnings) out << "warning: " << w << "\n";
  out << "\n" << rep.presentation;
  write_json(o.report, rep.to_json());
  bool ok = rep.ybe && rep.majid.all() && rep.confluent && rep.classification.label != "unrecognized";
  return ok ? 0 : 1;
}

int run_fixture_suite(const std::string& report, std::ostream& out) {
  auto sum = run_fixtures();
  for (auto const& r : sum.results) {
    out << to_string(r.status) << "  " << r.name << "  computed " << r.computed;
    if (r.status != FixtureStatus::pass) out << ", expected " << r.expected;
    out << "  [" << r.anchor << "]\n";
  }
  out << sum.count(FixtureStatus::pass) << " pass, " << sum.count(FixtureStatus::fail) << " fail, "
      << sum.count(FixtureStatus::erratum_flagged) << " erratum-flagged\n";
  write_json(report, sum.to_json());
  return sum.ok() ? 0 : 1;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact R-matrix, braided algebra and grafting toolkit", "qgraft"};
  app.require_subcommand(1);

  MatrixOpts mo;
  auto* rmat = app.add_subcommand("rmat", "R-matrix of an sl_n natural or dual module");
  rmat->add_option("--n", mo.n, "rank n of sl_n")->required();
  rmat->add_option("--module", mo.module, "natural or dual");
  rmat->add_option("--d", mo.d, "root norm d = (a,a)/2");
  rmat->add_option("--out", mo.out, "write matrix JSON here");

  auto* tensor = app.add_subcommand("tensor", "tensor product R-matrix");
  tensor->add_option("--factor", mo.factors, "n,module,d (repeatable)")->required();
  tensor->add_option("--out", mo.out, "write matrix JSON here");

  CheckOpts co;
  auto* check = app.add_subcommand("check", "verify ybe, frt or majid conditions on matrix files");
  check->add_option("kind", co.kind, "ybe | frt | majid")->required();
  check->add_option("files", co.files, "matrix JSON files")->required();
  check->add_flag("--numeric", co.numeric, "also check at random rational points");
  check->add_option("--report", co.report, "JSON report");

  PairOpts po;
  auto* pair = app.add_subcommand("pair", "Majid pair from R and an eigenvalue");
  pair->add_option("--r", po.r_file, "matrix JSON of R");
  pair->add_option("--preset", po.preset, "typeA | f4 | rank1");
  pair->add_option("--n", po.n);
  pair->add_option("--m", po.m);
  pair->add_option("--eigen", po.eigen, "eigenvalue of PR sent to -1");
  pair->add_option("--out", po.out, "write R' JSON here");
  pair->add_option("--out-r", po.out_r, "write normalized R JSON here");

  BraidedOpts bo;
  auto* braided = app.add_subcommand("braided", "braided (co)vector algebra relations and radicals");
  braided->add_option("--preset", bo.preset, "typeA | f4 | rank1");
  braided->add_option("--n", bo.n);
  braided->add_option("--m", bo.m);
  braided->add_option("--side", bo.side, "vector | covector");
  braided->add_option("--radicals", bo.radicals, "search radicals up to this degree");
  braided->add_option("--report", bo.report, "JSON report");

  RewriteOpts ro;
  auto* rewrite = app.add_subcommand("rewrite", "reduction system from a relation file");
  rewrite->add_option("--system", ro.system, "relation file")->required();
  rewrite->add_option("--max-degree", ro.max_degree, "degree bound")->required();
  rewrite->add_flag("--hilbert", ro.hilbert, "graded dimensions");
  rewrite->add_flag("--check-confluence", ro.check_confluence, "list ambiguities and complete");
  rewrite->add_option("--normal-form", ro.normal_form, "word such as e2*e1");
  rewrite->add_option("--order", ro.order, "generator order, e.g. \"e1 < e2 < e3\"");
  rewrite->add_option("--report", ro.report, "JSON report");

  GraftOpts go;
  auto* graft = app.add_subcommand("graft", "grafting pipeline");
  graft->require_subcommand(1);
  auto* grun = graft->add_subcommand("run", "run a preset");
  grun->add_option("--preset", go.preset, "typeA | f4 | rank1")->required();
  grun->add_option("--n", go.n);
  grun->add_option("--m", go.m);
  grun->add_option("--max-degree", go.max_degree);
  grun->add_option("--report", go.report, "JSON report");

  std::string fixtures_report;
  auto* fixtures = app.add_subcommand("fixtures", "regression fixtures");
  fixtures->add_option("--report", fixtures_report, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*rmat) return run_rmat(mo, out);
    if (*tensor) return run_tensor(mo, out);
    if (*check) return run_check(co, out);
    if (*pair) return run_pair(po, out);
    if (*braided) return run_braided(bo, out);
    if (*rewrite) return run_rewrite(ro, out);
    if (*graft) return run_graft(go, out);
    if (*fixtures) return run_fixture_suite(fixtures_report, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DslError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedScalar& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qgraft"};
  for (auto const& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qgraft
