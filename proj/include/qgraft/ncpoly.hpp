// Noncommutative polynomials over Scalar and degree-lexicographic orders.
#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "qgraft/linalg.hpp"
#include "qgraft/scalar.hpp"

namespace qgraft {

// A word stores one generator index per char.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
inline int letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

// Word <-> flat index over n generators, first letter most significant.
std::size_t word_code(const Word& w, std::size_t n);
Word word_from_code(std::size_t code, std::size_t degree, std::size_t n);

class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::size_t ngens);
  // Generators listed from smallest to largest.
  static MonomialOrder from_sequence(const std::vector<int>& ascending);

  std::size_t ngens() const { return rank_.size(); }
  int rank(int g) const { return rank_.at(static_cast<std::size_t>(g)); }
  // Degree first, then lexicographic by generator rank.
  int compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  const std::vector<int>& ranks() const { return rank_; }

 private:
  std::vector<int> rank_;
};

struct NCPolynomial {
  std::map<Word, Scalar> terms;

  NCPolynomial() = default;
  static NCPolynomial monomial(const Word& w, const Scalar& c = Scalar(1L));

  bool is_zero() const { return terms.empty(); }
  int degree() const;
  bool homogeneous() const;
  Scalar coeff(const Word& w) const;
  void add(const Word& w, const Scalar& c);
  Word leading(const MonomialOrder& ord) const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& operator*=(const Scalar& c);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const Scalar& c) { return a *= c; }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  // u·p·v
  NCPolynomial sandwich(const Word& u, const Word& v) const;
  Rational eval_coeff(const Word& w, const Rational& s0) const { return coeff(w).eval(s0); }

  std::string str(const std::vector<std::string>& names) const;
};

// "e(1,2)"-style names for composite generators, 1-based.
std::vector<std::string> composite_names(const IndexShape& shape, const std::string& prefix);

nlohmann::json poly_to_json(const NCPolynomial& p, const std::vector<std::string>& names);

// Reduced row echelon basis of a set of homogeneous polynomials: each result
// is monic in its leading word and no leading word appears in another.
std::vector<NCPolynomial> echelon_basis(const std::vector<NCPolynomial>& polys, const MonomialOrder& ord);

// Membership of p in the linear span of polys.
bool in_span(const std::vector<NCPolynomial>& polys, const NCPolynomial& p, const MonomialOrder& ord);

}  // namespace qgraft
