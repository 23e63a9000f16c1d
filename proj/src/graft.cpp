#include "qgraft/graft.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qgraft {

GraftSpec GraftSpec::typeA(int n, int m) {
  GraftSpec s;
  s.preset = "typeA";
  s.factors = {{n, Module::natural, 1}, {m, Module::dual, 1}};
  s.eigen_to_minus_one = Scalar(-1L);
  return s;
}

GraftSpec GraftSpec::f4() {
  GraftSpec s;
  s.preset = "f4";
  s.factors = {{3, Module::natural, 1}, {2, Module::natural, Rational(1, 2)}};
  s.eigen_to_minus_one = -Scalar::s();
  return s;
}

GraftSpec GraftSpec::rank1() {
  GraftSpec s;
  s.preset = "rank1";
  s.factors = {{2, Module::natural, 1}};
  s.eigen_to_minus_one = -Scalar::q_pow(-1);
  return s;
}

namespace {

// Exponent of q in ±q^t, as an exact rational.
Rational q_exponent(const Scalar& x) {
  Rational c;
  int e = 0;
  if (!x.is_monomial(&c, &e) || abs(c) != 1) throw NonMonomialScalar(x.str());
  Rational t(e, 2);
  t.canonicalize();
  return t;
}

std::string q_power_str(const Rational& t) {
  if (t == 0) return "1";
  if (t == 1) return "q";
  if (t.get_den() == 1) return "q^" + t.get_str();
  return "q^(" + t.get_str() + ")";
}

// (α_i, α_j) inside one sl_n factor, local nodes 1..n-1.
Rational factor_pairing(const RepSpec& f, int i, int j) {
  if (i == j) return f.root_norm * 2;
  if (std::abs(i - j) == 1) return -f.root_norm;
  return 0;
}

template <class F>
auto staged(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

}  // namespace

Rational self_pairing(const GraftSpec& spec, const MajidPair& pair) {
  Scalar prod(1L);
  for (auto const& f : spec.factors) {
    const auto r = standard_R(f);
    const std::size_t v = static_cast<std::size_t>(f.lie_rank) - 1;
    prod *= r.at(v, v, v, v);
  }
  return q_exponent(prod / pair.lambda);
}

std::vector<std::vector<Rational>> neighbor_pairings(const GraftSpec& spec) {
  std::vector<std::vector<Rational>> out;
  for (auto const& f : spec.factors) {
    const auto r = standard_R(f);
    const std::size_t v = static_cast<std::size_t>(f.lie_rank) - 1;
    std::vector<Rational> t;
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(f.lie_rank); ++j)
      t.push_back(q_exponent(r.at(j, v, j, v) / r.at(j + 1, v, j + 1, v)));
    out.push_back(std::move(t));
  }
  return out;
}

WeightVector weight_exponents(const GraftSpec& spec) {
  WeightVector w;
  for (auto const& f : spec.factors) {
    std::vector<Rational> e;
    for (int j = 1; j < f.lie_rank; ++j) e.emplace_back(-j, f.lie_rank);
    for (auto& x : e) x.canonicalize();
    w.exponents.push_back(std::move(e));
  }
  return w;
}

std::vector<std::vector<Rational>> old_on_new_scalars(const GraftSpec& spec, const WeightVector& w) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t t = 0; t < spec.factors.size(); ++t) {
    const auto& f = spec.factors[t];
    std::vector<Rational> row;
    for (int j = 1; j < f.lie_rank; ++j) {
      Rational s = 0;
      for (int i = 1; i < f.lie_rank; ++i) s += w.exponents[t][static_cast<std::size_t>(i - 1)] * factor_pairing(f, i, j);
      row.push_back(s);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<int>> cartan_from_pairings(const std::vector<std::vector<Rational>>& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(b[i][i]) <= 0) throw std::domain_error("nonpositive root norm at node " + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
      if (b[i][j] != b[j][i]) throw std::domain_error("pairing matrix is not symmetric");
      Rational x = 2 * b[i][j] / b[i][i];
      if (x.get_den() != 1) throw std::domain_error("non-integral Cartan entry " + x.get_str());
      a[i][j] = static_cast<int>(x.get_num().get_si());
    }
  }
  return a;
}

namespace {

// Symmetric pairing for a Dynkin diagram given root norms and edges; the
// pairing on an edge is -max(norm)/2 for simple and double/triple bonds.
std::vector<std::vector<int>> cartan_of(const std::vector<Rational>& norms,
                                        const std::vector<std::pair<int, int>>& edges) {
  const std::size_t n = norms.size();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = norms[i];
  for (auto [i, j] : edges) {
    Rational v = -std::max(norms[static_cast<std::size_t>(i)], norms[static_cast<std::size_t>(j)]) / 2;
    b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  }
  return cartan_from_pairings(b);
}

std::vector<std::pair<int, int>> chain(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

std::vector<std::string> catalog_labels(std::size_t rank) {
  const int r = static_cast<int>(rank);
  std::vector<std::string> out{"A" + std::to_string(r)};
  if (r >= 2) out.push_back("B" + std::to_string(r));
  if (r >= 3) out.push_back("C" + std::to_string(r));
  if (r >= 4) out.push_back("D" + std::to_string(r));
  if (r >= 6 && r <= 8) out.push_back("E" + std::to_string(r));
  if (r == 4) out.push_back("F4");
  if (r == 2) out.push_back("G2");
  return out;
}

bool match(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& c,
           std::vector<std::size_t>& perm, std::vector<bool>& used, std::size_t k) {
  const std::size_t n = a.size();
  if (k == n) return true;
  for (std::size_t x = 0; x < n; ++x) {
    if (used[x]) continue;
    bool ok = true;
    for (std::size_t i = 0; i <= k && ok; ++i) {
      std::size_t y = i == k ? x : perm[i];
      ok = a[k][i] == c[x][y] && a[i][k] == c[y][x];
    }
    if (!ok) continue;
    used[x] = true;
    perm[k] = x;
    if (match(a, c, perm, used, k + 1)) return true;
    used[x] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> catalog_cartan(const std::string& label) {
  if (label.size() < 2) return std::nullopt;
  const char type = label[0];
  int r = 0;
  try {
    r = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (r < 1) return std::nullopt;
  auto rn = static_cast<std::size_t>(r);
  switch (type) {
    case 'A':
      return cartan_of(std::vector<Rational>(rn, 2), chain(r));
    case 'B': {
      if (r < 2) return std::nullopt;
      std::vector<Rational> norms(rn, 2);
      norms.back() = 1;
      return cartan_of(norms, chain(r));
    }
    case 'C': {
      if (r < 3) return std::nullopt;
      std::vector<Rational> norms(rn, 1);
      norms.back() = 2;
      return cartan_of(norms, chain(r));
    }
    case 'D': {
      if (r < 4) return std::nullopt;
      auto e = chain(r - 1);
      e.emplace_back(r - 3, r - 1);
      return cartan_of(std::vector<Rational>(rn, 2), e);
    }
    case 'E': {
      if (r < 6 || r > 8) return std::nullopt;
      auto e = chain(r - 1);
      e.emplace_back(2, r - 1);
      return cartan_of(std::vector<Rational>(rn, 2), e);
    }
    case 'F':
      if (r != 4) return std::nullopt;
      return cartan_of({2, 2, 1, 1}, chain(4));
    case 'G':
      if (r != 2) return std::nullopt;
      return cartan_of({6, 2}, chain(2));
    default:
      return std::nullopt;
  }
}

ClassifiedDiagram classify(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  for (auto const& label : catalog_labels(n)) {
    auto c = catalog_cartan(label);
    if (!c) continue;
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    if (match(cartan, *c, perm, used, 0)) return {label, perm};
  }
  return {"unrecognized", {}};
}

// ------------------------------------------------------------ presentation

namespace {

std::string coeff_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  bool paren = c.num().num_terms() > 1 || !c.is_laurent();
  return (paren ? "(" + c.str() + ")" : c.str()) + "*";
}

std::string power(const std::string& g, int k) {
  if (k == 0) return "";
  return k == 1 ? g : g + "^" + std::to_string(k);
}

std::string join_factors(const std::vector<std::string>& parts) {
  std::string s;
  for (auto const& p : parts) {
    if (p.empty()) continue;
    s += (s.empty() ? "" : "*") + p;
  }
  return s;
}

std::string composite_label(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

}  // namespace

std::string emit_presentation(const GraftReport& r) {
  std::ostringstream os;
  const std::size_t n = r.cartan.size();
  auto E = [](std::size_t i) { return "E" + std::to_string(i + 1); };
  auto node_name = [&](std::size_t i) -> std::string {
    if (i == r.new_index) return "new node";
    const auto& nd = r.nodes[i < r.new_index ? i : i - 1];
    return "factor " + std::to_string(nd.factor + 1) + " node " + std::to_string(nd.local);
  };

  os << "quantum group of type " << r.classification.label << " (" << n << " simple roots)\n";
  os << "lambda = " << r.lambda.str() << "\n";
  const Rational qstar_exp = r.sym_pairings[r.new_index][r.new_index] / 2;
  os << "q_* = " << q_power_str(qstar_exp) << "\n";
  os << "generators: E_i, F_i, K_i^{+-1} for i = 1.." << n << "\n";
  for (std::size_t i = 0; i < n; ++i) os << "  " << E(i) << ": " << node_name(i) << "\n";

  const std::string v = composite_label(r.dims);
  const std::string knew = "K" + std::to_string(r.new_index + 1);
  os << "identification: e" << v << " -> " << E(r.new_index) << ", f" << v << " -> F" << r.new_index + 1
     << ", m+" << v << v << "*c^-1 -> " << knew << "\n";
  os << knew << " = ";
  std::vector<std::string> kparts;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const auto& nd = r.nodes[i];
    const Rational& c = r.weights.exponents[nd.factor][static_cast<std::size_t>(nd.local - 1)];
    if (c == 0) continue;
    std::size_t pos = i < r.new_index ? i : i + 1;
    kparts.push_back("K" + std::to_string(pos + 1) + "^(" + c.get_str() + ")");
  }
  kparts.push_back("(m+)" + v + v + "*c^-1");
  os << join_factors(kparts) << "  (as exponents of m+ diagonals)\n";

  os << "commutation with K:\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& b = r.sym_pairings[i][j];
      if (b == 0) continue;
      os << "  " << E(i) << "*K" << j + 1 << " = " << q_power_str(b) << "*K" << j + 1 << "*" << E(i) << "\n";
      os << "  F" << i + 1 << "*K" << j + 1 << " = " << q_power_str(-b) << "*K" << j + 1 << "*F" << i + 1 << "\n";
    }

  os << "cross relations:\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Rational e = r.sym_pairings[i][i] / 2;
    const std::string qi = i == r.new_index ? "q_*" : q_power_str(e);
    os << "  [" << E(i) << ", F_k] = delta_{" << i + 1 << ",k} (K" << i + 1 << " - K" << i + 1 << "^-1)/(" << qi
       << " - " << qi << "^-1)\n";
  }

  os << "Serre relations:\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int order = 1 - r.cartan[i][j];
      // q_i = q^{(α_i,α_i)/2} = s^{(α_i,α_i)}
      const Rational& bii = r.sym_pairings[i][i];
      if (bii.get_den() != 1) throw std::domain_error("root norm " + bii.get_str() + " is not an integer");
      const Scalar qi = Scalar::s_pow(static_cast<int>(bii.get_num().get_si()));
      std::ostringstream line;
      for (int k = 0; k <= order; ++k) {
        Scalar c = q_binomial(order, k, qi);
        if (k % 2) c = -c;
        Rational lc;
        bool neg = c.is_monomial(&lc) && sgn(lc) < 0;
        if (neg) c = -c;
        line << (k == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ")) << coeff_prefix(c)
             << join_factors({power(E(i), order - k), E(j), power(E(i), k)});
      }
      os << "  " << line.str() << " = 0\n";
    }
  return os.str();
}

// ---------------------------------------------------------------- pipeline

GraftReport run_pipeline(const GraftSpec& spec) {
  if (spec.factors.empty()) throw StageError("spec", "at least one factor is required");
  GraftReport rep;
  rep.preset = spec.preset;

  std::vector<CompositeMatrix> rs;
  std::vector<std::vector<Scalar>> roots;
  staged("standard_R", [&] {
    for (auto const& f : spec.factors) {
      rs.push_back(standard_R(f));
      roots.push_back(factor_roots(f));
      rep.dims.push_back(static_cast<std::size_t>(f.lie_rank));
    }
    return 0;
  });
  const CompositeMatrix r_big = staged("tensor_R", [&] { return tensor_R(rs); });
  const auto hints = predict_eigenvalues(roots);
  if (std::find(hints.begin(), hints.end(), spec.eigen_to_minus_one) == hints.end())
    throw StageError("spec", "eigenvalue " + spec.eigen_to_minus_one.str() + " is not a predicted eigenvalue");

  rep.ybe = staged("ybe", [&] { return check_ybe(r_big); });
  if (!rep.ybe) rep.warnings.push_back("tensor R fails the Yang-Baxter equation");
  rep.frt_const = staged("frt", [&] { return check_frt(r_big); });

  const MajidPair pair = staged("majid_pair", [&] { return majid_pair(r_big, spec.eigen_to_minus_one, &hints); });
  rep.lambda = pair.lambda;
  rep.minpoly_roots = pair.eigenvalues;
  rep.majid = pair.checks;

  const std::size_t ngens = r_big.dim();
  const MonomialOrder ord(ngens);
  BraidedAlgebra alg = staged("relations_from_pair", [&] { return relations_from_pair(pair, Side::vector); });
  rep.quad_relations = alg.quad_relations.size();

  const int rad_top = std::min(spec.radical_degree, spec.max_degree);
  staged("radical_basis", [&] {
    rep.pairing_ranks.push_back(1);
    for (int d = 1; d <= rad_top; ++d) {
      BlockMatrix g = pairing_matrix(pair, d);
      rep.pairing_ranks.push_back(static_cast<long>(g.exact_rank()));
    }
    for (int d = 3; d <= rad_top; ++d) {
      auto r = radical_basis(pair, d, Side::vector, &ord);
      rep.radicals.insert(rep.radicals.end(), r.begin(), r.end());
    }
    return 0;
  });
  if (!rep.radicals.empty()) alg = quotient(alg, rep.radicals);

  staged("rewrite", [&] {
    RewriteSystem sys = orient(alg.all_relations(), ord, spec.max_degree);
    RewriteSystem done = complete(sys);
    rep.rules = done.rules().size();
    rep.confluent = is_confluent(done);
    rep.hilbert = hilbert_dims(done, spec.max_degree);
    return 0;
  });
  if (!rep.confluent) rep.warnings.push_back("completed system is not confluent within the degree bound");
  for (std::size_t d = 0; d < rep.pairing_ranks.size() && d < rep.hilbert.size(); ++d)
    if (rep.pairing_ranks[d] != rep.hilbert[d])
      rep.warnings.push_back("degree " + std::to_string(d) + ": normal words " + std::to_string(rep.hilbert[d]) +
                             " but rank of the pairing " + std::to_string(rep.pairing_ranks[d]));

  staged("cartan", [&] {
    rep.self_pairing = self_pairing(spec, pair);
    const auto nb = neighbor_pairings(spec);
    rep.weights = weight_exponents(spec);
    const auto on = old_on_new_scalars(spec, rep.weights);

    // Diagram order: factor 1 ascending, the new node, later factors
    // descending so each factor's last node sits next to the new one.
    for (int j = 1; j < spec.factors[0].lie_rank; ++j) rep.nodes.push_back({0, j});
    rep.new_index = rep.nodes.size();
    for (std::size_t t = 1; t < spec.factors.size(); ++t)
      for (int j = spec.factors[t].lie_rank - 1; j >= 1; --j) rep.nodes.push_back({t, j});

    const std::size_t n = rep.nodes.size() + 1;
    auto pos = [&](std::size_t k) { return k < rep.new_index ? k : k + 1; };
    rep.sym_pairings.assign(n, std::vector<Rational>(n, 0));
    rep.sym_pairings[rep.new_index][rep.new_index] = rep.self_pairing;
    for (std::size_t a = 0; a < rep.nodes.size(); ++a) {
      const auto& na = rep.nodes[a];
      const auto li = static_cast<std::size_t>(na.local - 1);
      rep.neighbor.push_back(nb[na.factor][li]);
      rep.old_on_new.push_back(on[na.factor][li]);
      rep.sym_pairings[pos(a)][rep.new_index] = nb[na.factor][li];
      rep.sym_pairings[rep.new_index][pos(a)] = nb[na.factor][li];
      for (std::size_t b = 0; b < rep.nodes.size(); ++b) {
        const auto& nbn = rep.nodes[b];
        if (nbn.factor != na.factor) continue;
        rep.sym_pairings[pos(a)][pos(b)] = factor_pairing(spec.factors[na.factor], na.local, nbn.local);
      }
      if (abs(rep.neighbor.back()) != abs(rep.old_on_new.back()))
        rep.warnings.push_back("node " + std::to_string(pos(a) + 1) + ": R-matrix exponent " +
                               rep.neighbor.back().get_str() + " vs weight exponent " +
                               rep.old_on_new.back().get_str());
      else if (rep.neighbor.back() != rep.old_on_new.back())
        rep.warnings.push_back("node " + std::to_string(pos(a) + 1) + ": sign disagreement between R-matrix and weight exponents");
    }
    rep.cartan = cartan_from_pairings(rep.sym_pairings);
    rep.classification = classify(rep.cartan);
    return 0;
  });
  rep.presentation = emit_presentation(rep);
  return rep;
}

nlohmann::json GraftReport::to_json() const {
  nlohmann::json j;
  j["preset"] = preset;
  j["dims"] = dims;
  auto roots = nlohmann::json::array();
  for (auto const& r : minpoly_roots) roots.push_back(r.str());
  j["minpoly_roots"] = roots;
  j["checks"] = {{"ybe", ybe}, {"majid", majid.all()}, {"frt_const", frt_const.str()}};
  j["cartan"] = cartan;
  auto sp = nlohmann::json::array();
  for (auto const& row : sym_pairings) {
    auto jr = nlohmann::json::array();
    for (auto const& x : row) jr.push_back(x.get_str());
    sp.push_back(jr);
  }
  j["sym_pairings"] = sp;
  j["classification"] = classification.label;
  j["hilbert"] = hilbert;
  j["warnings"] = warnings;
  j["lambda"] = lambda.str();
  j["radicals"] = radicals.size();
  j["rules"] = rules;
  j["confluent"] = confluent;
  j["pairing_ranks"] = pairing_ranks;
  j["presentation"] = presentation;
  return j;
}

}  // namespace qgraft
