#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "axiomforge/planner/grounding.hpp"
#include "axiomforge/planner/state.hpp"

namespace axiomforge::planner {

struct SearchLimits {
  std::size_t max_expanded_states = 1'000'000;
  std::size_t max_plan_length = 100;
  std::chrono::milliseconds wall_budget{10'000};
};

/// Indices into GroundedTask::actions.
struct Plan {
  std::vector<std::size_t> steps;
  std::size_t length() const noexcept { return steps.size(); }
  bool operator==(const Plan&) const = default;
};

enum class SolveStatus { Solved, Unsolvable, ResourceExceeded };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::Unsolvable: return "unsolvable";
    case SolveStatus::ResourceExceeded: return "resource-exceeded";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Unsolvable;
  Plan plan;
  std::size_t expanded = 0;
  std::size_t generated = 0;

  bool solved() const noexcept { return status == SolveStatus::Solved; }
};

class PreconditionViolated : public std::runtime_error {
 public:
  explicit PreconditionViolated(const std::string& action)
      : std::runtime_error("precondition of " + action + " does not hold"), action_(action) {}
  const std::string& action() const noexcept { return action_; }

 private:
  std::string action_;
};

inline bool holds(const State& s, const GroundAction& a) {
  if (!a.flat_precondition) return a.precondition.holds(s);
  for (auto p : a.pre_positive)
    if (!s.test(p)) return false;
  for (auto p : a.pre_negative)
    if (s.test(p)) return false;
  return true;
}

namespace detail {

inline State successor(const State& s, const GroundAction& a) {
  State next = s;
  for (auto d : a.effect.deletes) next.reset(d);
  for (auto x : a.effect.adds) next.set(x);
  for (const auto& g : a.conditional) {
    if (!g.condition.holds(s)) continue;
    for (auto d : g.deletes) next.reset(d);
    for (auto x : g.adds) next.set(x);
  }
  return next;
}

}  // namespace detail

inline State apply(const State& s, const GroundAction& a) {
  if (!holds(s, a)) throw PreconditionViolated(a.text());
  return detail::successor(s, a);
}

/// Breadth-first search with duplicate detection. Actions are expanded in
/// grounding order, so the returned plan is step-optimal and reproducible.
inline SolveResult solve(const GroundedTask& task, const SearchLimits& limits = {}) {
  SolveResult result;
  if (task.goal.holds(task.init)) {
    result.status = SolveStatus::Solved;
    return result;
  }

  struct Node {
    std::size_t parent;
    std::size_t action;
    std::size_t depth;
  };
  std::vector<Node> nodes{{0, 0, 0}};
  std::unordered_set<State, StateHash> seen{task.init};
  std::deque<std::pair<State, std::size_t>> frontier;
  frontier.emplace_back(task.init, 0);

  const auto deadline = std::chrono::steady_clock::now() + limits.wall_budget;
  bool cut = false;

  while (!frontier.empty()) {
    auto [state, id] = std::move(frontier.front());
    frontier.pop_front();
    const std::size_t depth = nodes[id].depth;
    if (depth >= limits.max_plan_length) {
      cut = true;
      continue;
    }
    if (result.expanded >= limits.max_expanded_states ||
        ((result.expanded & 0xff) == 0 && std::chrono::steady_clock::now() > deadline)) {
      result.status = SolveStatus::ResourceExceeded;
      return result;
    }
    ++result.expanded;

    for (std::size_t ai = 0; ai < task.actions.size(); ++ai) {
      const auto& a = task.actions[ai];
      if (!holds(state, a)) continue;
      State next = detail::successor(state, a);
      ++result.generated;
      if (seen.contains(next)) continue;
      const std::size_t nid = nodes.size();
      nodes.push_back(Node{id, ai, depth + 1});
      if (task.goal.holds(next)) {
        for (std::size_t cur = nid; cur != 0; cur = nodes[cur].parent) result.plan.steps.push_back(nodes[cur].action);
        std::reverse(result.plan.steps.begin(), result.plan.steps.end());
        result.status = SolveStatus::Solved;
        return result;
      }
      seen.insert(next);
      frontier.emplace_back(std::move(next), nid);
    }
  }
  result.status = cut ? SolveStatus::ResourceExceeded : SolveStatus::Unsolvable;
  return result;
}

struct PlanCheck {
  bool valid = false;
  /// Index of the first step whose precondition fails, or plan length when
  /// every step applies but the goal is not reached.
  std::optional<std::size_t> failure_index;
};

inline PlanCheck validate_plan(const GroundedTask& task, const Plan& plan) {
  State s = task.init;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto idx = plan.steps[i];
    if (idx >= task.actions.size() || !holds(s, task.actions[idx])) return {false, i};
    s = detail::successor(s, task.actions[idx]);
  }
  if (!task.goal.holds(s)) return {false, plan.steps.size()};
  return {true, std::nullopt};
}

inline std::string format_plan(const GroundedTask& task, const Plan& plan) {
  std::string out;
  for (auto idx : plan.steps) out += task.actions[idx].text() + "\n";
  out += "length: " + std::to_string(plan.length()) + "\n";
  return out;
}

/// Reads one "(name arg ...)" step per line. Blank lines, `;` comments and a
/// trailing "length:" line are ignored. Returns nullopt on an unknown step.
inline std::optional<Plan> parse_plan(const GroundedTask& task, const std::string& text) {
  std::unordered_map<std::string, std::size_t> by_text;
  for (std::size_t i = 0; i < task.actions.size(); ++i) by_text.emplace(task.actions[i].text(), i);
  Plan plan;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto c = line.find(';'); c != std::string::npos) line.erase(c);
    std::string norm;
    bool space = false;
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        space = true;
        continue;
      }
      if (space && !norm.empty() && norm.back() != '(' && ch != ')') norm += ' ';
      space = false;
      norm += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (norm.empty() || norm.rfind("length:", 0) == 0) continue;
    auto it = by_text.find(norm);
    if (it == by_text.end()) return std::nullopt;
    plan.steps.push_back(it->second);
  }
  return plan;
}

}  // namespace axiomforge::planner
