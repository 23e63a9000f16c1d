// Grafting pipeline: compose factor R-matrices, normalize to a Majid pair,
// build the braided algebra and its radical quotient, then read off the
// pairings of the new simple root and classify the resulting Cartan matrix.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgraft/braided.hpp"
#include "qgraft/rewrite.hpp"
#include "qgraft/rmatrix.hpp"

namespace qgraft {

struct NonMonomialScalar : std::domain_error {
  explicit NonMonomialScalar(const std::string& s) : std::domain_error("expected ± a power of q^(1/2), got " + s) {}
};

struct StageError : std::runtime_error {
  StageError(const std::string& stage, const std::string& msg)
      : std::runtime_error("[" + stage + "] " + msg), stage(stage) {}
  std::string stage;
};

struct GraftSpec {
  std::string preset = "custom";
  std::vector<RepSpec> factors;
  Scalar eigen_to_minus_one;
  int max_degree = 4;     // completion and Hilbert bound
  int radical_degree = 4;  // radicals are searched in degrees 3..min(this, max_degree)

  static GraftSpec typeA(int n, int m);
  static GraftSpec f4();
  static GraftSpec rank1();
};

// Exponents of K_new over the old K_i, one list per factor, in local node
// order 1..n_t-1.
struct WeightVector {
  std::vector<std::vector<Rational>> exponents;
};

// One old simple root: factor t, local node j (1-based).
struct OldNode {
  std::size_t factor;
  int local;
};

struct ClassifiedDiagram {
  std::string label;                 // "F4", or "unrecognized"
  std::vector<std::size_t> witness;  // node i -> catalog node witness[i]
};

struct GraftReport {
  std::string preset;
  std::vector<std::size_t> dims;
  std::vector<Scalar> minpoly_roots;
  Scalar lambda;
  bool ybe = false;
  MajidChecks majid;
  Scalar frt_const;
  std::size_t quad_relations = 0;
  std::vector<NCPolynomial> radicals;
  std::vector<long> hilbert;
  std::vector<long> pairing_ranks;  // rank G_d for d = 0..radical bound
  std::size_t rules = 0;
  bool confluent = false;

  Rational self_pairing;
  std::vector<OldNode> nodes;           // old nodes in diagram order around the new one
  std::vector<Rational> neighbor;       // (α_new, α_j) from R-matrix entries, per node
  std::vector<Rational> old_on_new;     // same from weight exponents
  WeightVector weights;
  std::vector<std::vector<Rational>> sym_pairings;  // diagram order, new node at index new_index
  std::size_t new_index = 0;
  std::vector<std::vector<int>> cartan;
  ClassifiedDiagram classification;
  std::string presentation;
  std::vector<std::string> warnings;

  nlohmann::json to_json() const;
};

GraftReport run_pipeline(const GraftSpec& spec);

// Exponent t in E_new K_new = q^t K_new E_new.
Rational self_pairing(const GraftSpec& spec, const MajidPair& pair);
// Per factor, per local node j: exponent of R^{j v}_{j v} / R^{j+1 v}_{j+1 v}.
std::vector<std::vector<Rational>> neighbor_pairings(const GraftSpec& spec);
WeightVector weight_exponents(const GraftSpec& spec);
// t_j = Σ_i c_i (α_i, α_j) inside each factor.
std::vector<std::vector<Rational>> old_on_new_scalars(const GraftSpec& spec, const WeightVector& w);

// Cartan integers a_ij = 2(α_i,α_j)/(α_i,α_i); throws if not integral.
std::vector<std::vector<int>> cartan_from_pairings(const std::vector<std::vector<Rational>>& b);
ClassifiedDiagram classify(const std::vector<std::vector<int>>& cartan);
// Catalog Cartan matrix for labels like "A3", "B2", "F4", "E6".
std::optional<std::vector<std::vector<int>>> catalog_cartan(const std::string& label);

std::string emit_presentation(const GraftReport& report);

}  // namespace qgraft
