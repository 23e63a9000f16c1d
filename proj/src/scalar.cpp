#include "qgraft/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qgraft {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exp;
  return p;
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t end = c_.size();
  while (sgn(c_[end - 1]) == 0) --end;
  if (lead > 0 || end < c_.size()) {
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(end), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

std::size_t LaurentPoly::num_terms() const {
  std::size_t n = 0;
  for (auto const& x : c_) n += sgn(x) != 0;
  return n;
}

Rational LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < low_ || exp > high()) return 0;
  return c_[static_cast<std::size_t>(exp - low_)];
}

std::map<int, Rational> LaurentPoly::coeffs() const {
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) out.emplace(low_ + static_cast<int>(i), c_[i]);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + static_cast<std::size_t>(low_ - lo)] = c_[i];
    c_.swap(c);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i + static_cast<std::size_t>(o.low_ - low_)] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

static Rational rational_pow(const Rational& x, int e) {
  Rational base = x, r = 1;
  if (e < 0) {
    base = 1 / x;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& s0) const {
  if (is_zero()) return 0;
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * s0 + c_[i];
  return acc * rational_pow(s0, low_);
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem) {
  if (b.is_zero()) throw DivisionByZero();
  if ((!a.is_zero() && a.low_ < 0) || b.low_ < 0) throw std::invalid_argument("divmod: negative exponent");
  // Work with ordinary coefficient vectors indexed by degree.
  auto dense = [](const LaurentPoly& p) {
    std::vector<Rational> v;
    if (p.is_zero()) return v;
    v.assign(static_cast<std::size_t>(p.high()) + 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) v[static_cast<std::size_t>(p.low_) + i] = p.c_[i];
    return v;
  };
  std::vector<Rational> r = dense(a), d = dense(b);
  std::vector<Rational> qv;
  if (r.size() >= d.size()) qv.assign(r.size() - d.size() + 1, Rational(0));
  const Rational inv_lead = 1 / d.back();
  for (std::size_t k = qv.size(); k-- > 0;) {
    Rational c = r[k + d.size() - 1] * inv_lead;
    qv[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
  }
  quo = LaurentPoly();
  quo.c_ = std::move(qv);
  quo.trim();
  rem = LaurentPoly();
  rem.c_ = std::move(r);
  rem.trim();
}

// Monomials are units, so both sides are first shifted to start at s^0.
LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  if (!a.is_zero()) a.low_ = 0;
  if (!b.is_zero()) b.low_ = 0;
  while (!b.is_zero()) {
    LaurentPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) r *= 1 / Rational(r.leading());
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= 1 / Rational(a.leading());
  return a;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

static void append_term(std::ostringstream& os, const Rational& c, int e, bool first) {
  Rational mag = abs(c);
  if (sgn(c) < 0)
    os << (first ? "-" : " - ");
  else if (!first)
    os << " + ";
  if (e == 0) {
    os << rational_str(mag);
    return;
  }
  if (mag != 1) os << rational_str(mag) << "*";
  os << "q";
  if (e % 2 == 0) {
    if (e != 2) os << "^" << e / 2;
  } else {
    os << "^(" << e << "/2)";
  }
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    append_term(os, c_[i], low_ + static_cast<int>(i), first);
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------------- Scalar

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  if (den_.low_ != 0) {
    num_ = num_.shifted(-den_.low_);
    den_ = den_.shifted(-den_.low_);
  }
  if (den_.c_.size() > 1) {
    LaurentPoly n0 = num_.shifted(-num_.low_);
    LaurentPoly g = LaurentPoly::gcd(n0, den_);
    if (g.high() > 0) {
      LaurentPoly q, r;
      LaurentPoly::divmod(n0, g, q, r);
      num_ = q.shifted(num_.low_);
      LaurentPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

bool Scalar::is_one() const {
  return is_laurent() && num_.low_ == 0 && num_.c_.size() == 1 && num_.c_[0] == 1;
}

bool Scalar::is_monomial(Rational* c, int* e) const {
  if (!is_laurent() || num_.c_.size() != 1) return false;
  if (c) *c = num_.c_[0];
  if (e) *e = num_.low_;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  bool laurent = is_laurent() && o.is_laurent();
  num_ = num_ * o.num_;
  if (laurent) return *this;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  Rational c;
  int e;
  if (o.is_monomial(&c, &e)) {
    num_ = num_.shifted(-e);
    num_ *= 1 / c;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar base = *this, r(1L);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Rational Scalar::eval(const Rational& s0) const {
  if (sgn(s0) == 0) throw PoleAtPoint("0");
  Rational d = den_.eval(s0);
  if (sgn(d) == 0) throw PoleAtPoint(s0.get_str());
  return num_.eval(s0) / d;
}

std::string Scalar::str() const {
  if (is_laurent()) return num_.str();
  std::string n = num_.str();
  if (num_.num_terms() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

// --------------------------------------------------------------------- parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& t) : t_(t) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != t_.size()) fail("unexpected character '" + std::string(1, t_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw MalformedScalar(msg, pos_); }

  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(t_.substr(start, pos_ - start));
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  // Exponent as a rational: int, -int, or parenthesized signed fraction.
  Rational exponent() {
    if (eat('(')) {
      bool neg = eat('-');
      Rational e(integer());
      if (eat('/')) {
        mpz_class d = integer();
        if (d == 0) fail("zero denominator in exponent");
        e /= Rational(d);
      }
      if (!eat(')')) fail("expected ')'");
      e.canonicalize();
      return neg ? Rational(-e) : e;
    }
    bool neg = eat('-');
    Rational e(integer());
    return neg ? Rational(-e) : e;
  }

  Scalar power() {
    Scalar base = atom();
    if (!eat('^')) return base;
    std::size_t at = pos_;
    Rational e = exponent();
    if (e.get_den() == 1) {
      if (!e.get_num().fits_sint_p()) fail("exponent too large");
      int k = static_cast<int>(e.get_num().get_si());
      if (k < 0 && base.is_zero()) fail("zero to a negative power");
      return base.pow(k);
    }
    // Fractional powers are only defined for unit monomials s^k.
    Rational c;
    int k = 0;
    if (!base.is_monomial(&c, &k) || c != 1) {
      pos_ = at;
      fail("fractional exponent needs a power of q or s");
    }
    Rational se = e * k;
    if (se.get_den() != 1) {
      pos_ = at;
      fail("exponent leaves the ring Q[s, 1/s]");
    }
    return Scalar::s_pow(static_cast<int>(se.get_num().get_si()));
  }

  Scalar atom() {
    skip();
    if (pos_ >= t_.size()) fail("unexpected end of scalar");
    char c = t_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (c == 's') {
      ++pos_;
      return Scalar::s();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(integer()));
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& t_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).run(); }

// ---------------------------------------------------------- q-combinatorics

Scalar q_integer(int n, const Scalar& base) {
  // [n]_b = b^{n-1} + b^{n-3} + ... + b^{1-n}, and [-n] = -[n]
  if (n < 0) return -q_integer(-n, base);
  Scalar r;
  for (int k = 0; k < n; ++k) r += base.pow(n - 1 - 2 * k);
  return r;
}

Scalar q_combinatorics(int n, int k, const Scalar& base, QComb which) {
  if (n < 0 || k < 0 || (which == QComb::Binomial && k > n))
    throw std::invalid_argument("q_combinatorics: need 0 <= k <= n");
  if (base.is_zero()) throw std::invalid_argument("q_combinatorics: zero base");
  auto fact = [&](int m) {
    Scalar r(1L);
    for (int i = 2; i <= m; ++i) r *= q_integer(i, base);
    return r;
  };
  switch (which) {
    case QComb::Integer:
      return q_integer(n, base);
    case QComb::Factorial:
      return fact(n);
    case QComb::Binomial:
      return fact(n) / (fact(k) * fact(n - k));
  }
  return Scalar();
}

Scalar q_binomial(int n, int k, const Scalar& base) { return q_combinatorics(n, k, base, QComb::Binomial); }

}  // namespace qgraft
