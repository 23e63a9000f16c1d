// Reduction systems for homogeneous noncommutative relations: orientation,
// normal forms, ambiguities, degree-bounded completion and graded dimensions.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qgraft/ncpoly.hpp"

namespace qgraft {

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(int d) : std::runtime_error("relation of degree " + std::to_string(d) + " exceeds degree bound") {}
};

struct NoLeadingTerm : std::invalid_argument {
  explicit NoLeadingTerm(const std::string& rel) : std::invalid_argument("relation has no leading term: " + rel) {}
};

struct Rule {
  Word lhs;
  NCPolynomial rhs;
  NCPolynomial relation() const;  // lhs - rhs
};

struct Overlap {
  std::size_t first = 0, second = 0;  // rule indices
  Word a, b, c;                       // first.lhs = a·b, second.lhs = b·c (or first.lhs = a·second.lhs·c)
  bool inclusion = false;
  Word word() const { return a + b + c; }
  friend bool operator==(const Overlap&, const Overlap&) = default;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(MonomialOrder order, int degree_bound);
  RewriteSystem(const RewriteSystem& o);
  RewriteSystem& operator=(const RewriteSystem& o);

  const MonomialOrder& order() const { return order_; }
  int degree_bound() const { return bound_; }
  void set_degree_bound(int b) { bound_ = b; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t ngens() const { return order_.ngens(); }

  // Appends a rule; the caller keeps the system inter-reduced.
  void add_rule(Rule r);
  // Replaces the rule list wholesale.
  void set_rules(std::vector<Rule> rules);

  // Index of a rule whose lhs occurs in w, with its offset.
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
  bool is_normal(const Word& w) const { return !find_redex(w).has_value(); }

  NCPolynomial normal_form(const Word& w) const;
  NCPolynomial normal_form(const NCPolynomial& p) const;
  // Rewrites at a caller-chosen redex each step; used to test that the
  // result does not depend on the strategy.
  template <class Choose>
  NCPolynomial normal_form_with(const NCPolynomial& p, Choose&& choose) const;

  std::size_t rule_index(const Word& lhs) const;

 private:
  void reindex();
  MonomialOrder order_;
  int bound_ = 0;
  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t> by_lhs_;
  std::vector<std::size_t> lhs_lengths_;
  mutable std::unordered_map<Word, NCPolynomial> cache_;
  mutable std::unique_ptr<std::mutex> cache_mu_ = std::make_unique<std::mutex>();
};

// Solves each relation for its leading word and inter-reduces, degree by degree.
RewriteSystem orient(const std::vector<NCPolynomial>& relations, const MonomialOrder& order, int degree_bound);

std::vector<Overlap> overlaps(const RewriteSystem& sys);

struct Resolution {
  bool resolvable = true;
  NCPolynomial discrepancy;
};
Resolution resolve(const RewriteSystem& sys, const Overlap& ov);

// Adds oriented discrepancies until every ambiguity of degree <= bound
// resolves. Throws BoundExceeded when a rule already exceeds the bound.
RewriteSystem complete(const RewriteSystem& sys);

// Words of each degree 0..up_to containing no rule lhs.
std::vector<long> hilbert_dims(const RewriteSystem& sys, int up_to);
std::vector<Word> normal_words(const RewriteSystem& sys, int degree);

// All ambiguities up to the bound resolve.
bool is_confluent(const RewriteSystem& sys);

template <class Choose>
NCPolynomial RewriteSystem::normal_form_with(const NCPolynomial& p, Choose&& choose) const {
  NCPolynomial cur = p, done;
  while (!cur.is_zero()) {
    auto it = cur.terms.begin();
    Word w = it->first;
    Scalar c = it->second;
    cur.terms.erase(it);
    std::vector<std::pair<std::size_t, std::size_t>> redexes;
    for (std::size_t len : lhs_lengths_)
      for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
        auto f = by_lhs_.find(w.substr(pos, len));
        if (f != by_lhs_.end()) redexes.emplace_back(f->second, pos);
      }
    if (redexes.empty()) {
      done.add(w, c);
      continue;
    }
    auto [ri, pos] = redexes[choose(redexes.size()) % redexes.size()];
    const Rule& r = rules_[ri];
    cur += r.rhs.sandwich(w.substr(0, pos), w.substr(pos + r.lhs.size())) * c;
  }
  return done;
}

}  // namespace qgraft
