#include "qgraft/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace qgraft {

int RelationFile::generator_index(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(const std::string& t) : t_(t) {}

  RelationFile run() {
    bool have_order = false;
    std::vector<std::pair<std::size_t, std::size_t>> rel_spans;
    for (skip(); pos_ < t_.size(); skip()) {
      const std::size_t at = pos_;
      std::string kw = ident();
      if (kw == "gens") {
        if (!f_.generators.empty()) fail("duplicate gens statement", at);
        gens();
      } else if (kw == "order") {
        if (f_.generators.empty()) fail("order before gens", at);
        if (have_order) fail("duplicate order statement", at);
        order();
        have_order = true;
      } else if (kw == "rel") {
        if (f_.generators.empty()) fail("rel before gens", at);
        f_.relations.push_back(ncpoly());
      } else {
        fail(kw.empty() ? "expected a statement" : "unknown statement '" + kw + "'", at);
      }
      expect(';');
    }
    if (f_.generators.empty()) fail("no gens statement", pos_);
    if (!have_order) f_.order = MonomialOrder(f_.generators.size());
    return std::move(f_);
  }

  Word word_only() {
    skip();
    Word w = product();
    skip();
    if (pos_ != t_.size()) fail("trailing characters", pos_);
    return w;
  }

  void set_generators(const std::vector<std::string>& g) { f_.generators = g; }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    auto [l, c] = line_col(at);
    throw SyntaxError(msg, l, c);
  }

  std::pair<std::size_t, std::size_t> line_col(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < t_.size(); ++i) {
      if (t_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  void skip() {
    while (pos_ < t_.size()) {
      if (std::isspace(static_cast<unsigned char>(t_[pos_]))) {
        ++pos_;
      } else if (t_[pos_] == '#') {
        while (pos_ < t_.size() && t_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < t_.size() && t_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  // Identifier with an optional index suffix such as e(1,2).
  std::string ident() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= t_.size() || !ident_start(t_[pos_])) return {};
    while (pos_ < t_.size() && ident_char(t_[pos_])) ++pos_;
    if (pos_ < t_.size() && t_[pos_] == '(') {
      std::size_t p = pos_ + 1;
      while (p < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[p])) || t_[p] == ',')) ++p;
      if (p < t_.size() && t_[p] == ')' && p > pos_ + 1) pos_ = p + 1;
    }
    return t_.substr(start, pos_ - start);
  }

  void gens() {
    while (true) {
      skip();
      std::size_t at = pos_;
      std::string g = ident();
      if (g.empty()) break;
      if (g == "q" || g == "s") fail("'" + g + "' is reserved for the scalar parameter", at);
      if (f_.generator_index(g) >= 0) fail("duplicate generator '" + g + "'", at);
      f_.generators.push_back(g);
    }
    if (f_.generators.empty()) fail("gens needs at least one generator", pos_);
    if (f_.generators.size() > 255) fail("too many generators", pos_);
  }

  int generator(std::size_t* at_out = nullptr) {
    skip();
    std::size_t at = pos_;
    if (at_out) *at_out = at;
    std::string g = ident();
    if (g.empty()) fail("expected a generator", at);
    int idx = f_.generator_index(g);
    if (idx < 0) {
      auto [l, c] = line_col(at);
      throw UnknownGenerator(g, l, c);
    }
    return idx;
  }

  void order() {
    std::vector<int> seq{generator()};
    while (peek('<')) {
      ++pos_;
      seq.push_back(generator());
    }
    if (seq.size() != f_.generators.size()) fail("order must list every generator exactly once", pos_);
    try {
      f_.order = MonomialOrder::from_sequence(seq);
    } catch (const std::invalid_argument&) {
      fail("order must list every generator exactly once", pos_);
    }
  }

  Word product() {
    Word w;
    w.push_back(static_cast<char>(generator()));
    while (peek('*')) {
      ++pos_;
      w.push_back(static_cast<char>(generator()));
    }
    return w;
  }

  // Position of the identifier starting at p, if it names a generator.
  bool generator_at(std::size_t p) const {
    if (p >= t_.size() || !ident_start(t_[p])) return false;
    std::size_t e = p;
    while (e < t_.size() && ident_char(t_[e])) ++e;
    std::string base = t_.substr(p, e - p);
    if (f_.generator_index(base) >= 0) return true;
    if (e < t_.size() && t_[e] == '(') {
      std::size_t c = t_.find(')', e);
      if (c != std::string::npos && f_.generator_index(t_.substr(p, c + 1 - p)) >= 0) return true;
    }
    return false;
  }

  // Scans an optional scalar prefix and returns [start, end) of its text.
  // The scalar ends at a top-level '*' followed by a generator name.
  std::pair<std::size_t, std::size_t> scalar_span() {
    skip();
    const std::size_t start = pos_;
    if (generator_at(start)) return {start, start};
    int depth = 0;
    for (std::size_t p = start; p < t_.size(); ++p) {
      char c = t_[p];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) fail("unbalanced ')'", p);
      if (depth > 0) continue;
      if (c == ';' || ((c == '+' || c == '-') && p > start && t_[p - 1] != '^')) break;
      if (c == '*') {
        std::size_t n = p + 1;
        while (n < t_.size() && std::isspace(static_cast<unsigned char>(t_[n]))) ++n;
        if (generator_at(n)) return {start, p};
      }
      if (ident_start(c) && c != 'q' && c != 's' && (p == start || !ident_char(t_[p - 1]))) {
        std::size_t e = p;
        while (e < t_.size() && ident_char(t_[e])) ++e;
        auto [l, col] = line_col(p);
        throw UnknownGenerator(t_.substr(p, e - p), l, col);
      }
    }
    fail("term has no generator", start);
  }

  NCPolynomial term(bool negate) {
    auto [a, b] = scalar_span();
    Scalar c(1L);
    if (b > a) {
      try {
        c = Scalar::parse(t_.substr(a, b - a));
      } catch (const MalformedScalar& e) {
        auto [l, col] = line_col(a + e.offset);
        throw MalformedScalar(std::to_string(l) + ":" + std::to_string(col) + ": " + e.what(), a + e.offset);
      } catch (const DivisionByZero&) {
        auto [l, col] = line_col(a);
        throw MalformedScalar(std::to_string(l) + ":" + std::to_string(col) + ": division by zero", a);
      }
      pos_ = b + 1;
    }
    Word w = product();
    return NCPolynomial::monomial(w, negate ? -c : c);
  }

  NCPolynomial ncpoly() {
    NCPolynomial p;
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    } else if (peek('+')) {
      ++pos_;
    }
    p += term(neg);
    while (true) {
      if (peek('+')) {
        ++pos_;
        p += term(false);
      } else if (peek('-')) {
        ++pos_;
        p += term(true);
      } else {
        break;
      }
    }
    return p;
  }

  const std::string& t_;
  std::size_t pos_ = 0;
  RelationFile f_;
};

}  // namespace

RelationFile parse_dsl(const std::string& text) { return Parser(text).run(); }

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  Parser p(text);
  p.set_generators(generators);
  return p.word_only();
}

}  // namespace qgraft
