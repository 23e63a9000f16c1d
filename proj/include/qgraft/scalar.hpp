// Exact arithmetic in Q(s), s = q^(1/2).
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgraft {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero scalar") {}
};

struct PoleAtPoint : std::domain_error {
  explicit PoleAtPoint(const std::string& where)
      : std::domain_error("denominator vanishes at s = " + where) {}
};

struct MalformedScalar : std::invalid_argument {
  MalformedScalar(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at offset " + std::to_string(pos)), offset(pos) {}
  std::size_t offset;
};

// Laurent polynomial in s with rational coefficients. Stored densely from the
// lowest exponent; the first and last stored coefficients are never zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int exp);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t num_terms() const;
  Rational coeff(int exp) const;
  const Rational& leading() const { return c_.back(); }
  const Rational& trailing() const { return c_.front(); }
  std::map<int, Rational> coeffs() const;

  LaurentPoly shifted(int k) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  Rational eval(const Rational& s0) const;

  // Exact quotient and remainder for ordinary polynomials (low() >= 0).
  static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem);
  // Monic gcd up to units s^k; the result starts at s^0.
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

  std::string str() const;

 private:
  friend class Scalar;
  void trim();
  int low_ = 0;
  std::vector<Rational> c_;
};

// Element of Q(s) in canonical form: den is a monic polynomial in s with
// nonzero constant term, gcd(num, den) = 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT
  explicit Scalar(LaurentPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar s_pow(int e) { return Scalar(LaurentPoly::monomial(1, e)); }
  static Scalar q_pow(int e) { return s_pow(2 * e); }
  static Scalar s() { return s_pow(1); }
  static Scalar q() { return s_pow(2); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.low_ == 0 && den_.c_.size() == 1; }
  // c * s^e with rational c; fills the outputs when true.
  bool is_monomial(Rational* c = nullptr, int* e = nullptr) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar inverse() const;
  Scalar pow(int k) const;
  Rational eval(const Rational& s0) const;

  // Canonical text, parseable by parse().
  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_{Rational(1)};
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

enum class QComb { Integer, Factorial, Binomial };

// [n]_b, [n]_b! or the binomial [n k]_b; k is ignored unless Binomial.
Scalar q_combinatorics(int n, int k, const Scalar& base, QComb which);
Scalar q_integer(int n, const Scalar& base);
Scalar q_binomial(int n, int k, const Scalar& base);

std::string rational_str(const Rational& r);

}  // namespace qgraft
