#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axiomforge/pddl/ast.hpp"
#include "axiomforge/pddl/printer.hpp"

namespace axiomforge::proposer {

struct ProposalContext {
  pddl::DomainAst domain;
  pddl::ProblemAst problem;
  /// nullopt when the goal is unreachable under `domain`.
  std::optional<std::size_t> baseline_length;
  std::size_t target_length = 0;
  std::string failure_summary;
  /// One line per earlier candidate, e.g. "added action x: length 5".
  std::vector<std::string> history;
};

inline constexpr const char* kSystemPrompt =
    "You edit PDDL planning domains. You change action schemas so that a planner can reach a goal in fewer "
    "steps, while keeping the rules as close to the original as you can.";

inline std::string build_prompt(const ProposalContext& ctx) {
  std::string p;
  p += "Current domain:\n```pddl\n" + pddl::print_canonical(ctx.domain) + "```\n\n";
  p += "Problem:\n```pddl\n" + pddl::print_problem(ctx.problem) + "```\n\n";
  if (ctx.baseline_length) {
    p += "The shortest plan under the current domain has " + std::to_string(*ctx.baseline_length) + " steps.\n";
  } else {
    p += "Under the current domain the goal is currently unreachable.\n";
  }
  p += "Target: a plan of at most " + std::to_string(ctx.target_length) + " steps.\n";
  if (!ctx.failure_summary.empty()) p += "\nWhat went wrong so far:\n" + ctx.failure_summary + "\n";
  if (!ctx.history.empty()) {
    p += "\nEarlier attempts:\n";
    for (const auto& h : ctx.history) p += "- " + h + "\n";
  }
  p += "\nPropose modified domains. Keep predicate and action names where you can, keep the problem above valid, "
       "and prefer small edits.\n"
       "Output format: each proposal is one complete PDDL domain inside its own ```pddl fenced block. "
       "Do not send partial domains or diffs.\n";
  return p;
}

}  // namespace axiomforge::proposer
