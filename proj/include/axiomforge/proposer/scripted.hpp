#pragma once

#include <atomic>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "axiomforge/corpus/corpus.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/pddl/printer.hpp"
#include "axiomforge/proposer/context.hpp"
#include "axiomforge/proposer/extract.hpp"
#include "axiomforge/proposer/oracle.hpp"

namespace axiomforge::proposer {

class NoScriptMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScriptEntry {
  std::string label;
  std::function<bool(const ProposalContext&)> trigger;
  /// Domain texts, any formatting; canonicalized on use.
  std::vector<std::string> responses;
};

/// Splices actions and predicates of `b` that `a` lacks into `a`. Returns
/// `a` unchanged if either side does not parse or the splice is invalid.
inline std::string splice_actions(const std::string& a, const std::string& b) {
  auto pa = pddl::parse_domain(a);
  auto pb = pddl::parse_domain(b);
  if (!pa.ok() || !pb.ok()) return a;
  pddl::DomainAst out = *pa;
  for (const auto& p : pb->predicates)
    if (!out.find_predicate(p.name)) out.predicates.push_back(p);
  for (const auto& act : pb->actions)
    if (!out.find_action(act.name)) out.actions.push_back(act);
  if (!pddl::validate_domain(out).empty()) return a;
  return pddl::print_canonical(out);
}

/// Offline proposal source replaying fixed responses. Never touches the
/// network.
class ScriptedOracle : public ProposalOracle {
 public:
  using CrossoverFn = std::function<std::string(const ProposalContext&, const std::string&, const std::string&)>;
  using MutateFn = std::function<std::string(const ProposalContext&, const std::string&)>;

  explicit ScriptedOracle(std::vector<ScriptEntry> script, CrossoverFn crossover = nullptr, MutateFn mutate = nullptr)
      : script_(std::move(script)), crossover_(std::move(crossover)), mutate_(std::move(mutate)) {
    if (!crossover_)
      crossover_ = [](const ProposalContext&, const std::string& x, const std::string& y) { return splice_actions(x, y); };
    if (!mutate_) mutate_ = [](const ProposalContext&, const std::string& x) { return x; };
  }

  /// Parsed responses of the first entry whose trigger accepts ctx.
  std::vector<pddl::DomainAst> propose_domains(const ProposalContext& ctx, std::size_t k) const {
    for (const auto& e : script_) {
      if (!e.trigger(ctx)) continue;
      std::vector<pddl::DomainAst> out;
      for (const auto& r : e.responses) {
        if (out.size() >= k) break;
        auto ex = extract_candidates("```pddl\n" + r + "\n```", 1, &ctx.problem);
        if (!ex.candidates.empty()) out.push_back(std::move(ex.candidates.front()));
      }
      return out;
    }
    throw NoScriptMatch("no script entry for domain " + ctx.domain.name);
  }

  std::vector<std::string> propose(const ProposalContext& ctx, std::size_t k) override {
    ++calls_;
    return dedup_canonical(propose_domains(ctx, k));
  }

  std::string crossover(const ProposalContext& ctx, const std::string& a, const std::string& b) override {
    ++calls_;
    return crossover_(ctx, a, b);
  }

  std::string mutate(const ProposalContext& ctx, const std::string& candidate) override {
    ++calls_;
    return mutate_(ctx, candidate);
  }

  std::size_t calls() const override { return calls_; }

 private:
  std::vector<ScriptEntry> script_;
  CrossoverFn crossover_;
  MutateFn mutate_;
  std::atomic<std::size_t> calls_{0};
};

inline std::vector<pddl::DomainAst> scripted_propose(const ScriptedOracle& oracle, const ProposalContext& ctx,
                                                     std::size_t k) {
  return oracle.propose_domains(ctx, k);
}

/// Built-in script: for blocksworld, the tower-lifting variant followed by
/// the mid-tower extraction variant.
inline std::vector<ScriptEntry> builtin_script() {
  std::vector<ScriptEntry> s;
  std::vector<std::string> bw;
  for (const auto& v : corpus::blocksworld_variants()) bw.emplace_back(v.domain_text);
  s.push_back({"blocksworld", [](const ProposalContext& c) { return c.domain.name == "blocksworld"; }, bw});
  return s;
}

}  // namespace axiomforge::proposer
