#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "axiomforge/distance/oracle.hpp"
#include "axiomforge/pddl/ast.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/pddl/printer.hpp"

namespace axiomforge::distance {

/// Per-change costs for StructuralOracle. Dropping a precondition widens
/// what an action may do, so it weighs more than adding one.
struct StructuralWeights {
  std::size_t removed_precondition = 3;
  std::size_t added_precondition = 1;
  std::size_t changed_effect = 2;
  std::size_t action_base = 4;
  std::size_t changed_declaration = 1;
};

namespace detail {

inline std::vector<std::string> conjuncts(const pddl::Formula& f) {
  std::vector<std::string> out;
  if (f.kind == pddl::FormulaKind::And) {
    for (const auto& c : f.children) out.push_back(pddl::print_formula(c));
  } else {
    out.push_back(pddl::print_formula(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t minus_count(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return d.size();
}

inline std::vector<std::string> declarations(const pddl::DomainAst& d) {
  std::vector<std::string> out;
  for (const auto& p : d.predicates) out.push_back("p:" + p.name + "/" + std::to_string(p.params.size()));
  for (const auto& t : d.types) out.push_back("t:" + t.name + "<" + t.parent);
  for (const auto& c : d.constants) out.push_back("c:" + c.name);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Weighted count of rule-level differences between two domains.
inline std::size_t structural_cost(const pddl::DomainAst& reference, const pddl::DomainAst& candidate,
                                   const StructuralWeights& w = {}) {
  std::size_t cost = 0;
  for (const auto& ra : reference.actions) {
    const auto* ca = candidate.find_action(ra.name);
    const auto rp = detail::conjuncts(ra.precondition);
    const auto re = detail::conjuncts(ra.effect);
    if (!ca) {
      cost += w.action_base + rp.size() + re.size();
      continue;
    }
    const auto cp = detail::conjuncts(ca->precondition);
    const auto ce = detail::conjuncts(ca->effect);
    cost += w.removed_precondition * detail::minus_count(rp, cp);
    cost += w.added_precondition * detail::minus_count(cp, rp);
    cost += w.changed_effect * (detail::minus_count(re, ce) + detail::minus_count(ce, re));
    if (ra.params.size() != ca->params.size()) cost += w.changed_declaration;
  }
  for (const auto& ca : candidate.actions) {
    if (reference.find_action(ca.name)) continue;
    cost += w.action_base + detail::conjuncts(ca.precondition).size() + detail::conjuncts(ca.effect).size();
  }
  const auto rd = detail::declarations(reference);
  const auto cd = detail::declarations(candidate);
  cost += w.changed_declaration * (detail::minus_count(rd, cd) + detail::minus_count(cd, rd));
  return cost;
}

/// Deterministic offline semantic comparator. Ranks by structural_cost,
/// then edit distance, then text. Unparseable candidates rank last.
class StructuralOracle : public DistanceOracle {
 public:
  explicit StructuralOracle(StructuralWeights weights = {}) : weights_(weights) {}

  Choice closer(const std::string& reference, const std::string& a, const std::string& b) override {
    const auto ka = key(reference, a);
    const auto kb = key(reference, b);
    return std::tie(ka, a) <= std::tie(kb, b) ? Choice::A : Choice::B;
  }

  std::size_t cost(const std::string& reference, const std::string& text) {
    {
      std::lock_guard lock(mu_);
      auto it = costs_.find({reference, text});
      if (it != costs_.end()) return it->second;
    }
    std::size_t c = std::numeric_limits<std::size_t>::max();
    auto r = pddl::parse_domain(reference);
    auto t = pddl::parse_domain(text);
    if (r.ok() && t.ok()) c = structural_cost(*r, *t, weights_);
    std::lock_guard lock(mu_);
    costs_.emplace(std::make_pair(reference, text), c);
    return c;
  }

 private:
  std::pair<std::size_t, std::size_t> key(const std::string& reference, const std::string& text) {
    return {cost(reference, text), lev_.get(reference, text)};
  }

  StructuralWeights weights_;
  std::mutex mu_;
  std::map<std::pair<std::string, std::string>, std::size_t> costs_;
  detail::LevenshteinCache lev_;
};

}  // namespace axiomforge::distance
