#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "axiomforge/proposer/context.hpp"

namespace axiomforge::proposer {

/// Source of rule edits. All texts are canonical domains that parse,
/// validate and link against ctx.problem.
class ProposalOracle {
 public:
  virtual ~ProposalOracle() = default;
  /// At most k distinct proposals.
  virtual std::vector<std::string> propose(const ProposalContext& ctx, std::size_t k) = 0;
  virtual std::string crossover(const ProposalContext& ctx, const std::string& parent_a,
                                const std::string& parent_b) = 0;
  virtual std::string mutate(const ProposalContext& ctx, const std::string& candidate) = 0;
  /// Number of propose/crossover/mutate requests served.
  virtual std::size_t calls() const = 0;
};

}  // namespace axiomforge::proposer
