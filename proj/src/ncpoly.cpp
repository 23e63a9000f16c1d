#include "qgraft/ncpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qgraft {

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int x : letters) w.push_back(static_cast<char>(x));
  return w;
}

std::size_t word_code(const Word& w, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) c = c * n + static_cast<std::size_t>(letter(w, i));
  return c;
}

Word word_from_code(std::size_t code, std::size_t degree, std::size_t n) {
  Word w(degree, '\0');
  for (std::size_t i = degree; i-- > 0;) {
    w[i] = static_cast<char>(code % n);
    code /= n;
  }
  return w;
}

MonomialOrder::MonomialOrder(std::size_t ngens) : rank_(ngens) { std::iota(rank_.begin(), rank_.end(), 0); }

MonomialOrder MonomialOrder::from_sequence(const std::vector<int>& ascending) {
  MonomialOrder o;
  o.rank_.assign(ascending.size(), -1);
  for (std::size_t r = 0; r < ascending.size(); ++r) {
    auto g = static_cast<std::size_t>(ascending[r]);
    if (g >= ascending.size() || o.rank_[g] != -1)
      throw std::invalid_argument("monomial order must list each generator exactly once");
    o.rank_[g] = static_cast<int>(r);
  }
  return o;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = rank_[static_cast<std::size_t>(letter(a, i))];
    int rb = rank_[static_cast<std::size_t>(letter(b, i))];
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

NCPolynomial NCPolynomial::monomial(const Word& w, const Scalar& c) {
  NCPolynomial p;
  p.add(w, c);
  return p;
}

int NCPolynomial::degree() const {
  int d = -1;
  for (auto const& [w, c] : terms) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

bool NCPolynomial::homogeneous() const {
  if (terms.empty()) return true;
  auto d = terms.begin()->first.size();
  return std::all_of(terms.begin(), terms.end(), [d](auto const& t) { return t.first.size() == d; });
}

Scalar NCPolynomial::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Scalar() : it->second;
}

void NCPolynomial::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Word NCPolynomial::leading(const MonomialOrder& ord) const {
  if (terms.empty()) throw std::domain_error("leading word of zero polynomial");
  const Word* best = &terms.begin()->first;
  for (auto const& [w, c] : terms)
    if (ord.less(*best, w)) best = &w;
  return *best;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (auto const& [w, c] : o.terms) add(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (auto const& [w, c] : o.terms) add(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [w, x] : terms) x *= c;
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r;
  for (auto const& [u, x] : a.terms)
    for (auto const& [v, y] : b.terms) r.add(u + v, x * y);
  return r;
}

NCPolynomial NCPolynomial::sandwich(const Word& u, const Word& v) const {
  NCPolynomial r;
  for (auto const& [w, c] : terms) r.terms.emplace(u + w + v, c);
  return r;
}

std::string NCPolynomial::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  // Print in descending deglex on raw indices so output is stable.
  std::vector<const std::pair<const Word, Scalar>*> ts;
  for (auto const& t : terms) ts.push_back(&t);
  MonomialOrder ord(names.size());
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Scalar c = t->second;
    bool neg = false;
    Rational lead;
    if (c.is_monomial(&lead) && sgn(lead) < 0) {
      neg = true;
      c = -c;
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (!c.is_one()) {
      bool paren = c.num().num_terms() > 1 || !c.is_laurent();
      os << (paren ? "(" : "") << c.str() << (paren ? ")" : "") << "*";
    }
    for (std::size_t i = 0; i < t->first.size(); ++i)
      os << (i ? "*" : "") << names.at(static_cast<std::size_t>(letter(t->first, i)));
  }
  return os.str();
}

std::vector<std::string> composite_names(const IndexShape& shape, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t f = 0; f < shape.total(); ++f) {
    auto idx = shape.unflatten(f);
    std::string s = prefix + "(";
    for (std::size_t t = 0; t < idx.size(); ++t) s += (t ? "," : "") + std::to_string(idx[t] + 1);
    names.push_back(s + ")");
  }
  return names;
}

nlohmann::json poly_to_json(const NCPolynomial& p, const std::vector<std::string>& names) {
  auto arr = nlohmann::json::array();
  for (auto const& [w, c] : p.terms) {
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < w.size(); ++i) letters.push_back(names.at(static_cast<std::size_t>(letter(w, i))));
    arr.push_back({letters, c.str()});
  }
  return arr;
}

std::vector<NCPolynomial> echelon_basis(const std::vector<NCPolynomial>& polys, const MonomialOrder& ord) {
  std::vector<std::pair<Word, NCPolynomial>> basis;
  std::map<Word, std::size_t> by_lead;
  for (auto p : polys) {
    for (auto const& [lead, b] : basis) {
      auto it = p.terms.find(lead);
      if (it == p.terms.end()) continue;
      Scalar f = it->second;
      for (auto const& [w, c] : b.terms) p.add(w, -(f * c));
    }
    if (p.is_zero()) continue;
    Word lead = p.leading(ord);
    p *= p.coeff(lead).inverse();
    for (auto& [l2, b] : basis) {
      auto it = b.terms.find(lead);
      if (it == b.terms.end()) continue;
      Scalar f = it->second;
      for (auto const& [w, c] : p.terms) b.add(w, -(f * c));
    }
    basis.emplace_back(lead, std::move(p));
  }
  std::sort(basis.begin(), basis.end(), [&](auto const& a, auto const& b) { return ord.less(a.first, b.first); });
  std::vector<NCPolynomial> out;
  for (auto& [l, b] : basis) out.push_back(std::move(b));
  return out;
}

bool in_span(const std::vector<NCPolynomial>& polys, const NCPolynomial& p, const MonomialOrder& ord) {
  auto basis = echelon_basis(polys, ord);
  NCPolynomial r = p;
  for (auto const& b : basis) {
    Word lead = b.leading(ord);
    Scalar f = r.coeff(lead);
    if (f.is_zero()) continue;
    r -= b * f;
  }
  return r.is_zero();
}

}  // namespace qgraft
