// Regression fixtures pinning displayed constants. A fixture whose pinned
// value is believed to be misprinted ends as "erratum-flagged" instead of
// failing, provided the computed value matches the documented correction.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qgraft/braided.hpp"
#include "qgraft/rmatrix.hpp"

namespace qgraft {

enum class FixtureStatus { pass, fail, erratum_flagged };
std::string to_string(FixtureStatus s);

struct FixtureResult {
  std::string name;
  FixtureStatus status = FixtureStatus::fail;
  std::string computed;
  std::string expected;
  std::string anchor;
};

struct FixtureSummary {
  std::vector<FixtureResult> results;
  std::size_t count(FixtureStatus s) const;
  bool ok() const { return count(FixtureStatus::fail) == 0; }
  nlohmann::json to_json() const;
};

FixtureSummary run_fixtures();

// Cubic q-Serre elements in the F4 braided algebras, generators e1..e6 =
// (1,1),(1,2),(2,1),(2,2),(3,1),(3,2). Vector side:
//   b^2 a - (1+q) b a b + q a b^2, covector side:
//   a b^2 - (1+q^-1) b a b + q^-1 b^2 a,
// for the pairs (a,b) = ((i,j),(i+1,j)), i = 1,2 and ((1,j),(3,j)).
std::vector<NCPolynomial> f4_serre_elements(Side side);

// Quadratic and cubic relations of the F4 reduction systems as printed,
// in the form lhs - rhs; indices 0..11 are σ1..σ12.
std::vector<NCPolynomial> f4_printed_system();

// The eight ambiguities listed with that system, as (σ_i, σ_j, A, B, C) with
// 1-based rule numbers.
struct PrintedOverlap {
  int first, second;
  Word a, b, c;
};
std::vector<PrintedOverlap> f4_printed_overlaps();

// Type A quadratic relation e^i e^j = q e^j e^i of the vector algebra for
// i = (1,2), j = (1,1); flat indices 1 and 0 for every shape (n, m).
NCPolynomial typeA_qcommutation();

// F4 (■) relation for row pair (i, i+1), 1-based i.
NCPolynomial f4_square_relation(int i);
// F4 q^{1/2}-commutation e^{(j,2)} e^{(j,1)} - q^{1/2} e^{(j,1)} e^{(j,2)}.
NCPolynomial f4_qcommutation(int j);

}  // namespace qgraft
