#include "qgraft/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qgraft {

NCPolynomial Rule::relation() const {
  NCPolynomial r = NCPolynomial::monomial(lhs);
  r -= rhs;
  return r;
}

RewriteSystem::RewriteSystem(MonomialOrder order, int degree_bound) : order_(std::move(order)), bound_(degree_bound) {}

RewriteSystem::RewriteSystem(const RewriteSystem& o)
    : order_(o.order_), bound_(o.bound_), rules_(o.rules_), by_lhs_(o.by_lhs_), lhs_lengths_(o.lhs_lengths_) {}

RewriteSystem& RewriteSystem::operator=(const RewriteSystem& o) {
  if (this == &o) return *this;
  order_ = o.order_;
  bound_ = o.bound_;
  rules_ = o.rules_;
  by_lhs_ = o.by_lhs_;
  lhs_lengths_ = o.lhs_lengths_;
  std::lock_guard<std::mutex> lk(*cache_mu_);
  cache_.clear();
  return *this;
}

void RewriteSystem::reindex() {
  by_lhs_.clear();
  std::set<std::size_t> lens;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    by_lhs_[rules_[i].lhs] = i;
    lens.insert(rules_[i].lhs.size());
  }
  lhs_lengths_.assign(lens.begin(), lens.end());
  std::lock_guard<std::mutex> lk(*cache_mu_);
  cache_.clear();
}

void RewriteSystem::add_rule(Rule r) {
  rules_.push_back(std::move(r));
  reindex();
}

void RewriteSystem::set_rules(std::vector<Rule> rules) {
  rules_ = std::move(rules);
  reindex();
}

std::size_t RewriteSystem::rule_index(const Word& lhs) const {
  auto it = by_lhs_.find(lhs);
  if (it == by_lhs_.end()) throw std::out_of_range("no rule with that left-hand side");
  return it->second;
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t len : lhs_lengths_) {
      if (pos + len > w.size()) break;
      auto it = by_lhs_.find(w.substr(pos, len));
      if (it != by_lhs_.end()) return std::make_pair(it->second, pos);
    }
  return std::nullopt;
}

NCPolynomial RewriteSystem::normal_form(const Word& w) const {
  {
    std::lock_guard<std::mutex> lk(*cache_mu_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  NCPolynomial result;
  if (auto red = find_redex(w)) {
    const Rule& r = rules_[red->first];
    const Word u = w.substr(0, red->second), v = w.substr(red->second + r.lhs.size());
    for (auto const& [m, c] : r.rhs.terms) {
      NCPolynomial sub = normal_form(u + m + v);
      for (auto const& [x, y] : sub.terms) result.add(x, y * c);
    }
  } else {
    result = NCPolynomial::monomial(w);
  }
  std::lock_guard<std::mutex> lk(*cache_mu_);
  cache_.emplace(w, result);
  return result;
}

NCPolynomial RewriteSystem::normal_form(const NCPolynomial& p) const {
  NCPolynomial out;
  for (auto const& [w, c] : p.terms) {
    NCPolynomial sub = normal_form(w);
    for (auto const& [x, y] : sub.terms) out.add(x, y * c);
  }
  return out;
}

namespace {

Rule rule_from(const NCPolynomial& monic, const MonomialOrder& ord) {
  Rule r;
  r.lhs = monic.leading(ord);
  r.rhs = NCPolynomial::monomial(r.lhs) - monic;
  return r;
}

// Adds the echelon form of cands (already reduced by sys) as new rules.
void add_echelon(RewriteSystem& sys, const std::vector<NCPolynomial>& cands) {
  for (auto const& p : echelon_basis(cands, sys.order())) sys.add_rule(rule_from(p, sys.order()));
}

std::map<int, std::vector<NCPolynomial>> by_degree(const std::vector<NCPolynomial>& rels, int bound) {
  std::map<int, std::vector<NCPolynomial>> out;
  for (auto const& r : rels) {
    if (r.is_zero()) continue;
    if (!r.homogeneous()) throw std::invalid_argument("relation is not homogeneous");
    int d = r.degree();
    if (d == 0) throw NoLeadingTerm("constant relation");
    if (d > bound) throw BoundExceeded(d);
    out[d].push_back(r);
  }
  return out;
}

}  // namespace

RewriteSystem orient(const std::vector<NCPolynomial>& relations, const MonomialOrder& order, int degree_bound) {
  RewriteSystem sys(order, degree_bound);
  for (auto const& [d, rels] : by_degree(relations, degree_bound)) {
    std::vector<NCPolynomial> cands;
    for (auto const& r : rels) cands.push_back(sys.normal_form(r));
    add_echelon(sys, cands);
  }
  return sys;
}

std::vector<Overlap> overlaps(const RewriteSystem& sys) {
  std::vector<Overlap> out;
  const auto& rs = sys.rules();
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const Word& x = rs[i].lhs;
      const Word& y = rs[j].lhs;
      for (std::size_t k = 1; k < std::min(x.size(), y.size()); ++k)
        if (x.compare(x.size() - k, k, y, 0, k) == 0)
          out.push_back({i, j, x.substr(0, x.size() - k), y.substr(0, k), y.substr(k), false});
      if (i != j && y.size() < x.size())
        for (std::size_t pos = x.find(y); pos != Word::npos; pos = x.find(y, pos + 1))
          out.push_back({i, j, x.substr(0, pos), y, x.substr(pos + y.size()), true});
    }
  std::stable_sort(out.begin(), out.end(), [](const Overlap& a, const Overlap& b) {
    return a.word().size() < b.word().size();
  });
  return out;
}

Resolution resolve(const RewriteSystem& sys, const Overlap& ov) {
  const Rule& f = sys.rules().at(ov.first);
  const Rule& g = sys.rules().at(ov.second);
  NCPolynomial one = ov.inclusion ? f.rhs : f.rhs.sandwich("", ov.c);
  NCPolynomial two = ov.inclusion ? g.rhs.sandwich(ov.a, ov.c) : g.rhs.sandwich(ov.a, "");
  Resolution r;
  r.discrepancy = sys.normal_form(one) - sys.normal_form(two);
  r.resolvable = r.discrepancy.is_zero();
  return r;
}

RewriteSystem complete(const RewriteSystem& input) {
  std::vector<NCPolynomial> rels;
  for (auto const& r : input.rules()) rels.push_back(r.relation());
  const int bound = input.degree_bound();
  auto grouped = by_degree(rels, bound);
  RewriteSystem sys(input.order(), bound);
  for (int d = 2; d <= bound; ++d) {
    std::vector<NCPolynomial> cands;
    for (auto const& ov : overlaps(sys)) {
      if (static_cast<int>(ov.word().size()) != d) continue;
      auto res = resolve(sys, ov);
      if (!res.resolvable) cands.push_back(std::move(res.discrepancy));
    }
    if (auto it = grouped.find(d); it != grouped.end())
      for (auto const& r : it->second) cands.push_back(sys.normal_form(r));
    add_echelon(sys, cands);
  }
  // Keep the input rule order when nothing changed.
  if (sys.rules().size() == input.rules().size()) {
    bool same = true;
    for (auto const& r : input.rules()) {
      auto it = std::find_if(sys.rules().begin(), sys.rules().end(), [&](const Rule& x) { return x.lhs == r.lhs; });
      if (it == sys.rules().end() || !(it->rhs == r.rhs)) same = false;
    }
    if (same) return input;
  }
  return sys;
}

std::vector<Word> normal_words(const RewriteSystem& sys, int degree) {
  std::vector<Word> layer{Word()};
  for (int d = 0; d < degree; ++d) {
    std::vector<Word> next;
    for (auto const& w : layer)
      for (std::size_t g = 0; g < sys.ngens(); ++g) {
        Word x = w;
        x.push_back(static_cast<char>(g));
        bool ok = true;
        // Prefix is normal, so a new redex must end at the last letter.
        for (auto const& r : sys.rules())
          if (r.lhs.size() <= x.size() && x.compare(x.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
            ok = false;
            break;
          }
        if (ok) next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
  return layer;
}

std::vector<long> hilbert_dims(const RewriteSystem& sys, int up_to) {
  std::vector<long> dims;
  std::vector<Word> layer{Word()};
  dims.push_back(1);
  std::set<std::size_t> lens;
  for (auto const& r : sys.rules()) lens.insert(r.lhs.size());
  std::set<Word> lhs;
  for (auto const& r : sys.rules()) lhs.insert(r.lhs);
  for (int d = 1; d <= up_to; ++d) {
    std::vector<Word> next;
    for (auto const& w : layer)
      for (std::size_t g = 0; g < sys.ngens(); ++g) {
        Word x = w;
        x.push_back(static_cast<char>(g));
        bool ok = true;
        for (std::size_t len : lens)
          if (len <= x.size() && lhs.count(x.substr(x.size() - len))) {
            ok = false;
            break;
          }
        if (ok) next.push_back(std::move(x));
      }
    layer = std::move(next);
    dims.push_back(static_cast<long>(layer.size()));
  }
  return dims;
}

bool is_confluent(const RewriteSystem& sys) {
  for (auto const& ov : overlaps(sys)) {
    if (static_cast<int>(ov.word().size()) > sys.degree_bound()) continue;
    if (!resolve(sys, ov).resolvable) return false;
  }
  return true;
}

}  // namespace qgraft
