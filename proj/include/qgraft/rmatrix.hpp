// R-matrices of sl_n natural/dual modules, tensor products, Majid pairs and
// the YBE / FRT / Majid checks.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qgraft/linalg.hpp"

namespace qgraft {

enum class Module { natural, dual };

struct RepSpec {
  int lie_rank = 2;  // n of sl_n
  Module module = Module::natural;
  Rational root_norm = 1;  // d = (α,α)/2
};

struct NotAnEigenvalue : std::domain_error {
  explicit NotAnEigenvalue(const std::string& e) : std::domain_error("not an eigenvalue of PR: " + e) {}
};
struct MajidConditionFailed : std::domain_error {
  explicit MajidConditionFailed(const std::string& which) : std::domain_error("Majid condition failed: " + which) {}
};
struct FrtViolation : std::domain_error {
  FrtViolation() : std::domain_error("FRT product is not a multiple of K0") {}
};

// q^d as a power of s; throws unless 2d is an integer.
int s_exponent_of(const Rational& d);

CompositeMatrix standard_R(const RepSpec& spec);
CompositeMatrix tensor_R(const std::vector<CompositeMatrix>& factors);

// The two eigenvalues q^d, -q^{-d} of the braiding P·R for one factor.
std::vector<Scalar> factor_roots(const RepSpec& spec);
std::vector<Scalar> predict_eigenvalues(const std::vector<std::vector<Scalar>>& factor_roots);

struct MajidChecks {
  bool ybe_mixed_1 = false;  // R12 R13 R'23 = R'23 R13 R12
  bool ybe_mixed_2 = false;  // R23 R13 R'12 = R'12 R13 R23
  bool normalization = false;  // (PR + I)(PR' - I) = 0
  bool unitarity = false;  // R21 R'12 = R'21 R12
  bool all() const { return ybe_mixed_1 && ybe_mixed_2 && normalization && unitarity; }
};

struct MajidPair {
  CompositeMatrix R;       // normalized, R_big = lambda·R
  CompositeMatrix Rprime;
  Scalar lambda;
  UniPoly minpoly;                 // of P·R, monic
  std::vector<Scalar> eigenvalues;  // roots of minpoly, contains -1
  MajidChecks checks;
};

MajidPair majid_pair(const CompositeMatrix& R_big, const Scalar& eigen_to_minus_one,
                     const std::vector<Scalar>* hint_roots = nullptr);

template <class T>
Matrix<T> swap_legs(const Matrix<T>& m, std::size_t n) {
  auto p = permutation_P<T>(n);
  return p * m * p;
}

template <class T>
bool ybe_holds(const Matrix<T>& r, std::size_t n) {
  auto r12 = embed_on_triple(r, n, Slot::s12);
  auto r13 = embed_on_triple(r, n, Slot::s13);
  auto r23 = embed_on_triple(r, n, Slot::s23);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

template <class T>
MajidChecks majid_conditions(const Matrix<T>& r, const Matrix<T>& rp, std::size_t n) {
  MajidChecks c;
  auto r12 = embed_on_triple(r, n, Slot::s12);
  auto r13 = embed_on_triple(r, n, Slot::s13);
  auto r23 = embed_on_triple(r, n, Slot::s23);
  auto rp12 = embed_on_triple(rp, n, Slot::s12);
  auto rp23 = embed_on_triple(rp, n, Slot::s23);
  c.ybe_mixed_1 = r12 * r13 * rp23 == rp23 * r13 * r12;
  c.ybe_mixed_2 = r23 * r13 * rp12 == rp12 * r13 * r23;
  auto p = permutation_P<T>(n);
  auto id = Matrix<T>::identity(n * n);
  c.normalization = ((p * r + id) * (p * rp - id)).is_zero_matrix();
  c.unitarity = swap_legs(r, n) * rp == swap_legs(rp, n) * r;
  return c;
}

// c with (R^{-1})^{t1} P (R^{t2})^{-1} P K0 = c K0, or nothing when the
// product is not a multiple of K0.
template <class T>
std::optional<T> frt_constant(const Matrix<T>& r, std::size_t n) {
  auto p = permutation_P<T>(n);
  auto lhs = partial_transpose(inverse(r), n, Transpose::t1) * p *
             inverse(partial_transpose(r, n, Transpose::t2)) * p * k0<T>(n);
  T c = lhs(0, 0);
  if (!(lhs == k0<T>(n) * c)) return std::nullopt;
  return c;
}

bool check_ybe(const CompositeMatrix& r);
Scalar check_frt(const CompositeMatrix& r);

// Values of <m±, t> and <m±, t~>: R, (R^{-1})_{21}, (R^{t2})^{-1},
// ([(R^{-1})^{t1}]^{-1})_{21}; rows index (i,k), columns (j,l).
std::array<CompositeMatrix, 4> pairing_matrices(const CompositeMatrix& r);

}  // namespace qgraft
