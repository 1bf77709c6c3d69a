#pragma once

#include <atomic>
#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "axiomforge/distance/oracle.hpp"
#include "axiomforge/pddl/printer.hpp"
#include "axiomforge/proposer/context.hpp"
#include "axiomforge/proposer/extract.hpp"
#include "axiomforge/proposer/http.hpp"
#include "axiomforge/proposer/oracle.hpp"

namespace axiomforge::proposer {

/// One round of `samples` completions, pooled and deduplicated by canonical
/// text. Every returned domain links against ctx.problem.
inline std::vector<pddl::DomainAst> http_propose(ChatClient& client, const ProposalContext& ctx, std::size_t k) {
  const auto replies = client.complete(kSystemPrompt, build_prompt(ctx), client.config().samples);
  std::vector<pddl::DomainAst> pooled;
  for (const auto& r : replies) {
    auto ex = extract_candidates(r, static_cast<std::size_t>(-1), &ctx.problem);
    for (auto& d : ex.candidates) pooled.push_back(std::move(d));
  }
  std::vector<pddl::DomainAst> out;
  std::set<std::string> seen;
  for (auto& d : pooled) {
    if (out.size() >= k) break;
    if (seen.insert(pddl::print_canonical(d)).second) out.push_back(std::move(d));
  }
  return out;
}

class HttpProposalOracle : public ProposalOracle {
 public:
  explicit HttpProposalOracle(std::shared_ptr<ChatClient> client) : client_(std::move(client)) {}

  std::vector<std::string> propose(const ProposalContext& ctx, std::size_t k) override {
    ++calls_;
    return dedup_canonical(http_propose(*client_, ctx, k));
  }

  std::string crossover(const ProposalContext& ctx, const std::string& a, const std::string& b) override {
    ++calls_;
    std::string prompt = "Two edited versions of the same PDDL domain follow.\n\nFirst:\n```pddl\n" + a +
                         "```\n\nSecond:\n```pddl\n" + b +
                         "```\n\nWrite one domain that combines the useful edits of both. Problem it must support:\n"
                         "```pddl\n" + pddl::print_problem(ctx.problem) +
                         "```\nReply with exactly one complete domain in a ```pddl fenced block.\n";
    return first_or(prompt, ctx, a);
  }

  std::string mutate(const ProposalContext& ctx, const std::string& candidate) override {
    ++calls_;
    ProposalContext local = ctx;
    auto parsed = pddl::parse_domain(candidate);
    if (parsed.ok()) local.domain = *parsed;
    std::string prompt = build_prompt(local) + "\nReply with exactly one domain that makes one small change.\n";
    return first_or(prompt, ctx, candidate);
  }

  std::size_t calls() const override { return calls_; }

 private:
  std::string first_or(const std::string& prompt, const ProposalContext& ctx, const std::string& fallback) {
    for (const auto& r : client_->complete(kSystemPrompt, prompt, 1)) {
      auto ex = extract_candidates(r, 1, &ctx.problem);
      if (!ex.candidates.empty()) return pddl::print_canonical(ex.candidates.front());
    }
    return fallback;
  }

  std::shared_ptr<ChatClient> client_;
  std::atomic<std::size_t> calls_{0};
};

/// Reads the first '1' or '2' answer out of a reply.
inline int parse_preference(const std::string& reply) {
  for (std::size_t i = 0; i < reply.size(); ++i) {
    const char c = reply[i];
    if (c != '1' && c != '2') continue;
    const bool left_ok = i == 0 || !std::isalnum(static_cast<unsigned char>(reply[i - 1]));
    const bool right_ok = i + 1 == reply.size() || !std::isalnum(static_cast<unsigned char>(reply[i + 1]));
    if (left_ok && right_ok) return c - '0';
  }
  return 0;
}

/// Asks the model which of two domains departs less from a reference.
/// Replies without a readable answer are not counted.
class HttpComparisonSampler : public distance::ComparisonSampler {
 public:
  explicit HttpComparisonSampler(std::shared_ptr<ChatClient> client) : client_(std::move(client)) {}

  distance::Votes sample(const std::string& reference, const std::string& first, const std::string& second,
                         std::size_t samples) override {
    const std::string prompt = "Reference domain:\n```pddl\n" + reference + "```\n\nOption 1:\n```pddl\n" + first +
                               "```\n\nOption 2:\n```pddl\n" + second +
                               "```\n\nConsider preconditions, effects and what plans become possible. Which option "
                               "changes the behaviour of the reference the least? Answer with 1 or 2 only.\n";
    distance::Votes v;
    for (const auto& r : client_->complete(kSystemPrompt, prompt, samples)) {
      const int p = parse_preference(r);
      if (p == 1) ++v.first;
      if (p == 2) ++v.second;
    }
    return v;
  }

 private:
  std::shared_ptr<ChatClient> client_;
};

}  // namespace axiomforge::proposer
