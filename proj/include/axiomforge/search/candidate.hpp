#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "axiomforge/distance/levenshtein.hpp"
#include "axiomforge/pddl/link.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/pddl/printer.hpp"
#include "axiomforge/planner/grounding.hpp"
#include "axiomforge/planner/planner.hpp"

namespace axiomforge::search {

enum class PlanOutcome { Solved, Unsolvable, ResourceExceeded, GroundingExplosion, Invalid };

inline const char* to_string(PlanOutcome o) {
  switch (o) {
    case PlanOutcome::Solved: return "solved";
    case PlanOutcome::Unsolvable: return "unsolvable";
    case PlanOutcome::ResourceExceeded: return "resource-exceeded";
    case PlanOutcome::GroundingExplosion: return "grounding-explosion";
    case PlanOutcome::Invalid: return "invalid";
  }
  return "?";
}

/// Weights of the edit objective. `length` multiplies the plan length; the
/// default 1 gives score = len + lambda*compactness + alpha*lev.
struct ObjectiveWeights {
  double alpha = 0.01;
  double lambda = 0.01;
  double penalty = 1e6;
  double length = 1.0;

  ObjectiveWeights scaled(double k) const { return {alpha * k, lambda * k, penalty * k, length * k}; }
};

struct EditCandidate {
  pddl::DomainAst domain;
  std::string text;

  std::uint64_t step_id = 0;
  std::optional<std::uint64_t> parent_id;
  std::size_t oracle_round = 0;
  std::string description;

  PlanOutcome outcome = PlanOutcome::Invalid;
  planner::Plan plan;
  std::string plan_text;
  bool regression_ok = false;
  std::vector<std::string> regression_failures;
  std::size_t compactness = 0;
  std::size_t lev_distance = 0;
  std::optional<std::size_t> semantic_rank_position;
  double score = std::numeric_limits<double>::infinity();

  bool solved() const noexcept { return outcome == PlanOutcome::Solved; }
  std::optional<std::size_t> plan_length() const {
    if (!solved()) return std::nullopt;
    return plan.length();
  }
  bool succeeds(std::size_t target_length) const { return solved() && regression_ok && plan.length() <= target_length; }
};

namespace detail {

inline std::size_t count_literals(const pddl::Formula& f) {
  if (f.is_literal()) return 1;
  std::size_t n = 0;
  for (const auto& c : f.children) n += count_literals(c);
  return n;
}

inline bool same_params(const std::vector<pddl::TypedName>& a, const std::vector<pddl::TypedName>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || a[i].type != b[i].type) return false;
  return true;
}

}  // namespace detail

/// Total literal count over every action precondition and effect.
inline std::size_t compactness(const pddl::DomainAst& d) {
  std::size_t n = 0;
  for (const auto& a : d.actions) n += detail::count_literals(a.precondition) + detail::count_literals(a.effect);
  return n;
}

inline double score(const EditCandidate& c, const ObjectiveWeights& w) {
  if (c.outcome == PlanOutcome::GroundingExplosion || c.outcome == PlanOutcome::Invalid)
    return std::numeric_limits<double>::infinity();
  if (!c.solved() || !c.regression_ok) return w.penalty;
  return w.length * static_cast<double>(c.plan.length()) + w.lambda * static_cast<double>(c.compactness) +
         w.alpha * static_cast<double>(c.lev_distance);
}

/// Short description of how `child` differs from `parent`, by action and
/// predicate name.
inline std::string describe_edit(const pddl::DomainAst& parent, const pddl::DomainAst& child) {
  std::vector<std::string> parts;
  for (const auto& a : child.actions) {
    const auto* old = parent.find_action(a.name);
    if (!old) {
      parts.push_back("added action " + a.name);
    } else if (pddl::print_formula(old->precondition) != pddl::print_formula(a.precondition) ||
               pddl::print_formula(old->effect) != pddl::print_formula(a.effect) || !detail::same_params(old->params, a.params)) {
      parts.push_back("changed action " + a.name);
    }
  }
  for (const auto& a : parent.actions)
    if (!child.find_action(a.name)) parts.push_back("removed action " + a.name);
  for (const auto& p : child.predicates)
    if (!parent.find_predicate(p.name)) parts.push_back("added predicate " + p.name);
  for (const auto& p : parent.predicates)
    if (!child.find_predicate(p.name)) parts.push_back("removed predicate " + p.name);
  if (parts.empty()) return "no change";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "; " + parts[i];
  return out;
}

/// Grounds, solves and regression-checks candidate domains against a fixed
/// target problem. Results are cached by canonical text; safe to call from
/// several threads.
class Evaluator {
 public:
  Evaluator(pddl::DomainAst original, pddl::ProblemAst problem, std::vector<pddl::ProblemAst> suite,
            planner::SearchLimits limits = {}, planner::GroundingLimits grounding = {}, ObjectiveWeights weights = {})
      : original_(std::move(original)),
        original_text_(pddl::print_canonical(original_)),
        problem_(std::move(problem)),
        limits_(limits),
        grounding_(grounding),
        weights_(weights) {
    // Only problems the original solves are binding.
    for (auto& p : suite)
      if (solve_status(original_, p).status == planner::SolveStatus::Solved) suite_.push_back(std::move(p));
  }

  const pddl::DomainAst& original() const noexcept { return original_; }
  const std::string& original_text() const noexcept { return original_text_; }
  const pddl::ProblemAst& problem() const noexcept { return problem_; }
  const std::vector<pddl::ProblemAst>& suite() const noexcept { return suite_; }
  const ObjectiveWeights& weights() const noexcept { return weights_; }

  EditCandidate evaluate(const pddl::DomainAst& domain) {
    const auto text = pddl::print_canonical(domain);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(text); it != cache_.end()) return it->second;
    }
    auto c = compute(domain, text);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(text, std::move(c)).first->second;
  }

  /// Parses `text` first; unparseable or invalid texts give an Invalid candidate.
  EditCandidate evaluate_text(const std::string& text) {
    auto parsed = pddl::parse_domain(text);
    if (!parsed.ok() || !pddl::validate_domain(*parsed).empty()) {
      EditCandidate c;
      c.text = text;
      c.outcome = PlanOutcome::Invalid;
      c.lev_distance = distance::levenshtein(original_text_, text);
      c.score = score(c, weights_);
      return c;
    }
    return evaluate(*parsed);
  }

  /// Results in input order regardless of which worker finished first.
  std::vector<EditCandidate> evaluate_texts(const std::vector<std::string>& texts, std::size_t jobs) {
    std::vector<EditCandidate> out(texts.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, texts.size()));
    if (workers == 1) {
      for (std::size_t i = 0; i < texts.size(); ++i) out[i] = evaluate_text(texts[i]);
      return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < texts.size(); i += workers) out[i] = evaluate_text(texts[i]);
      });
    for (auto& t : pool) t.join();
    return out;
  }

 private:
  struct Status {
    planner::SolveStatus status = planner::SolveStatus::Unsolvable;
    bool explosion = false;
    bool link_failed = false;
    planner::Plan plan;
    std::string plan_text;
  };

  Status solve_status(const pddl::DomainAst& d, const pddl::ProblemAst& p) const {
    Status s;
    auto linked = pddl::link(d, p);
    if (!linked.ok()) {
      s.link_failed = true;
      return s;
    }
    try {
      auto task = planner::ground(*linked, grounding_);
      auto r = planner::solve(task, limits_);
      s.status = r.status;
      if (r.solved()) {
        s.plan = r.plan;
        s.plan_text = planner::format_plan(task, r.plan);
      }
    } catch (const planner::GroundingExplosion&) {
      s.explosion = true;
    }
    return s;
  }

  EditCandidate compute(const pddl::DomainAst& domain, const std::string& text) const {
    EditCandidate c;
    c.domain = domain;
    c.text = text;
    c.compactness = compactness(domain);
    c.lev_distance = distance::levenshtein(original_text_, text);
    auto s = solve_status(domain, problem_);
    if (s.link_failed) {
      c.outcome = PlanOutcome::Invalid;
    } else if (s.explosion) {
      c.outcome = PlanOutcome::GroundingExplosion;
    } else {
      switch (s.status) {
        case planner::SolveStatus::Solved: c.outcome = PlanOutcome::Solved; break;
        case planner::SolveStatus::Unsolvable: c.outcome = PlanOutcome::Unsolvable; break;
        case planner::SolveStatus::ResourceExceeded: c.outcome = PlanOutcome::ResourceExceeded; break;
      }
      c.plan = std::move(s.plan);
      c.plan_text = std::move(s.plan_text);
    }
    c.regression_ok = true;
    for (const auto& p : suite_) {
      if (solve_status(domain, p).status != planner::SolveStatus::Solved) {
        c.regression_ok = false;
        c.regression_failures.push_back(p.name);
      }
    }
    c.score = score(c, weights_);
    return c;
  }

  pddl::DomainAst original_;
  std::string original_text_;
  pddl::ProblemAst problem_;
  std::vector<pddl::ProblemAst> suite_;
  planner::SearchLimits limits_;
  planner::GroundingLimits grounding_;
  ObjectiveWeights weights_;
  std::mutex mu_;
  std::map<std::string, EditCandidate> cache_;
};

}  // namespace axiomforge::search
