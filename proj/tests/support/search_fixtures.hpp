#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axiomforge/corpus/corpus.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/pddl/printer.hpp"
#include "axiomforge/proposer/oracle.hpp"
#include "axiomforge/proposer/scripted.hpp"
#include "axiomforge/search/search.hpp"

namespace fixtures {

namespace af = axiomforge;

inline af::search::SearchContext flagship_context() {
  const auto& entry = af::corpus::load("blocksworld");
  af::search::SearchContext ctx;
  ctx.original = *af::pddl::parse_domain(entry.domain_text);
  ctx.problem = *af::pddl::parse_problem(entry.flagship().text);
  ctx.regression_suite = af::corpus::regression_suite("blocksworld");
  ctx.corpus_domain = "blocksworld";
  return ctx;
}

inline std::string canonical(std::string_view text) { return af::pddl::print_canonical(*af::pddl::parse_domain(text)); }

inline std::string without_action(std::string_view text, const std::string& name) {
  auto d = *af::pddl::parse_domain(text);
  std::erase_if(d.actions, [&](const af::pddl::ActionSchema& a) { return a.name == name; });
  return af::pddl::print_canonical(d);
}

/// Blocksworld plus a harmless extra action; never shortens a plan.
inline std::string with_wave(std::string_view text) {
  auto d = *af::pddl::parse_domain(text);
  auto extra = *af::pddl::parse_domain(R"((define (domain blocksworld)
    (:requirements :strips)
    (:predicates (clear ?x))
    (:action wave :parameters (?x) :precondition (clear ?x) :effect (clear ?x))))");
  d.actions.push_back(extra.actions.front());
  return af::pddl::print_canonical(d);
}

inline std::string multi_lift() { return canonical(af::corpus::texts::kBlocksMultiLiftDomain); }
inline std::string mid_extract() { return canonical(af::corpus::texts::kBlocksMidExtractDomain); }

/// Returns the same list on every call, ignoring context.
class FixedOracle : public af::proposer::ProposalOracle {
 public:
  explicit FixedOracle(std::vector<std::string> texts) : texts_(std::move(texts)) {}
  std::vector<std::string> propose(const af::proposer::ProposalContext&, std::size_t k) override {
    ++calls_;
    std::vector<std::string> out = texts_;
    if (out.size() > k) out.resize(k);
    return out;
  }
  std::string crossover(const af::proposer::ProposalContext&, const std::string& a, const std::string&) override {
    ++calls_;
    return a;
  }
  std::string mutate(const af::proposer::ProposalContext&, const std::string& c) override {
    ++calls_;
    return c;
  }
  std::size_t calls() const override { return calls_; }

 private:
  std::vector<std::string> texts_;
  std::size_t calls_ = 0;
};

/// Success only appears two proposal rounds away from the original: the
/// first round adds a useless action, the second adds multi-lift on top.
inline std::vector<af::proposer::ScriptEntry> staged_script() {
  using af::proposer::ProposalContext;
  std::vector<af::proposer::ScriptEntry> script;
  script.push_back({"stage-2", [](const ProposalContext& c) { return c.domain.find_action("wave") != nullptr; },
                    {with_wave(af::corpus::texts::kBlocksMultiLiftDomain)}});
  script.push_back({"stage-1", [](const ProposalContext& c) { return c.domain.name == "blocksworld"; },
                    {with_wave(af::corpus::texts::kBlocksworldDomain)}});
  return script;
}

inline af::proposer::ScriptedOracle staged_oracle() { return af::proposer::ScriptedOracle(staged_script()); }

}  // namespace fixtures
