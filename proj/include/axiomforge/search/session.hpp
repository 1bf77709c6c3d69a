#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "axiomforge/distance/oracle.hpp"
#include "axiomforge/proposer/oracle.hpp"
#include "axiomforge/search/candidate.hpp"
#include "axiomforge/search/config.hpp"
#include "axiomforge/trajectory/trajectory.hpp"

namespace axiomforge::search {

/// What a search works on: the original rules, the target problem and the
/// problems every edit must keep solvable.
struct SearchContext {
  pddl::DomainAst original;
  pddl::ProblemAst problem;
  std::vector<pddl::ProblemAst> regression_suite;
  planner::SearchLimits limits;
  planner::GroundingLimits grounding;
  std::string corpus_domain;
  /// Optional; steps and the final summary are written here.
  trajectory::Recorder* recorder = nullptr;
};

inline trajectory::TrajectoryHeader make_header(const SearchConfig& cfg, const SearchContext& ctx) {
  trajectory::TrajectoryHeader h;
  h.corpus_domain = ctx.corpus_domain;
  h.seed = cfg.seed;
  h.config = to_json(cfg);
  h.original_domain = pddl::print_canonical(ctx.original);
  h.problem = pddl::print_problem(ctx.problem);
  return h;
}

namespace detail {

/// Shared plumbing for the four strategies: evaluation, step numbering,
/// recording, oracle accounting and best-so-far tracking.
class Session {
 public:
  Session(const SearchConfig& cfg, const SearchContext& ctx, proposer::ProposalOracle& proposals,
          distance::DistanceOracle* dist)
      : cfg_(cfg),
        ctx_(ctx),
        proposals_(proposals),
        dist_(dist),
        eval_(ctx.original, ctx.problem, ctx.regression_suite, ctx.limits, ctx.grounding, cfg.weights),
        rng_(cfg.seed),
        proposal_calls0_(proposals.calls()),
        dist_calls0_(dist ? dist->transport_calls() : 0) {
    cfg_.check();
  }

  const SearchConfig& cfg() const noexcept { return cfg_; }
  Evaluator& evaluator() noexcept { return eval_; }
  std::mt19937_64& rng() noexcept { return rng_; }
  proposer::ProposalOracle& proposals() noexcept { return proposals_; }

  bool succeeds(const EditCandidate& c) const { return c.succeeds(cfg_.target_length); }

  EditCandidate root() {
    auto c = eval_.evaluate(ctx_.original);
    c.description = "original";
    c.oracle_round = 0;
    c.parent_id.reset();
    c.step_id = next_id_++;
    commit(c, "root");
    return c;
  }

  proposer::ProposalContext context_for(const EditCandidate& node) const {
    proposer::ProposalContext pc;
    pc.domain = node.domain;
    pc.problem = ctx_.problem;
    pc.baseline_length = node.plan_length();
    pc.target_length = cfg_.target_length;
    pc.failure_summary = summary(node);
    pc.history = history_;
    return pc;
  }

  /// Evaluates `texts` as children of `parent` and records them in order.
  std::vector<EditCandidate> adopt(const std::vector<std::string>& texts, const EditCandidate& parent,
                                   const std::string& phase, std::size_t round) {
    auto evaluated = eval_.evaluate_texts(texts, cfg_.jobs);
    for (auto& c : evaluated) {
      c.parent_id = parent.step_id;
      c.oracle_round = round;
      c.description = c.outcome == PlanOutcome::Invalid && c.domain.actions.empty()
                          ? "unparseable proposal"
                          : describe_edit(parent.domain, c.domain);
      c.semantic_rank_position.reset();
      c.step_id = next_id_++;
      commit(c, phase);
    }
    return evaluated;
  }

  /// One proposal round from `parent`. Texts rejected by `keep` are dropped
  /// before evaluation.
  std::vector<EditCandidate> expand(const EditCandidate& parent, const std::string& phase, std::size_t round,
                                    const std::function<bool(const std::string&)>& keep = nullptr) {
    auto texts = proposals_.propose(context_for(parent), cfg_.proposals_per_expansion);
    if (keep) {
      std::vector<std::string> kept;
      for (auto& t : texts)
        if (keep(t)) kept.push_back(std::move(t));
      texts = std::move(kept);
    }
    return adopt(texts, parent, phase, round);
  }

  /// Preference used when no candidate succeeds: lower score, then earlier step.
  static bool better(const EditCandidate& a, const EditCandidate& b) {
    return std::tie(a.score, a.step_id) < std::tie(b.score, b.step_id);
  }

  std::size_t oracle_calls() const {
    return proposals_.calls() - proposal_calls0_ + (dist_ ? dist_->transport_calls() - dist_calls0_ : 0);
  }

  SearchResult finish(std::optional<EditCandidate> success_best, SearchTrace trace) {
    SearchResult r;
    r.success = success_best.has_value();
    r.best = r.success ? std::move(success_best) : best_;
    r.explored = explored_;
    r.oracle_calls = oracle_calls();
    r.step_hashes = hashes_;
    r.trace = std::move(trace);
    if (ctx_.recorder) {
      r.trajectory_id = ctx_.recorder->run_id();
      trajectory::RunSummary s;
      s.success = r.success;
      s.explored = r.explored;
      s.oracle_calls = r.oracle_calls;
      s.algorithm = to_string(cfg_.algorithm);
      if (r.best) {
        s.best_step_id = r.best->step_id;
        s.best_length = r.best->plan_length();
      }
      ctx_.recorder->finish(s);
    }
    return r;
  }

 private:
  static std::string summary(const EditCandidate& c) {
    std::string s;
    switch (c.outcome) {
      case PlanOutcome::Solved: s = "shortest plan has " + std::to_string(c.plan.length()) + " steps"; break;
      case PlanOutcome::Unsolvable: s = "goal unreachable"; break;
      case PlanOutcome::ResourceExceeded: s = "planner ran out of budget"; break;
      case PlanOutcome::GroundingExplosion: s = "grounding too large"; break;
      case PlanOutcome::Invalid: s = "domain invalid for this problem"; break;
    }
    if (!c.regression_failures.empty()) {
      s += "; no longer solves";
      for (const auto& f : c.regression_failures) s += " " + f;
    }
    return s;
  }

  void commit(const EditCandidate& c, const std::string& phase) {
    ++explored_;
    hashes_.push_back(trajectory::hash_hex(c.text));
    if (!best_ || better(c, *best_)) best_ = c;
    if (c.step_id > 0) {
      history_.push_back(c.description + ": " + summary(c));
      if (history_.size() > 8) history_.erase(history_.begin());
    }
    if (!ctx_.recorder) return;
    trajectory::TrajectoryStep s;
    s.step_id = c.step_id;
    s.parent_id = c.parent_id;
    s.phase = phase;
    s.domain_text = c.text;
    s.edit = c.description;
    s.plan_length = c.plan_length();
    s.regression_ok = c.regression_ok;
    if (std::isfinite(c.score)) s.score = c.score;
    s.lev_distance = c.lev_distance;
    s.oracle_round = c.oracle_round;
    s.timestamp_ms = trajectory::now_ms();
    ctx_.recorder->record(s);
  }

  SearchConfig cfg_;
  const SearchContext& ctx_;
  proposer::ProposalOracle& proposals_;
  distance::DistanceOracle* dist_;
  Evaluator eval_;
  std::mt19937_64 rng_;
  std::size_t proposal_calls0_;
  std::size_t dist_calls0_;
  std::uint64_t next_id_ = 0;
  std::size_t explored_ = 0;
  std::optional<EditCandidate> best_;
  std::vector<std::string> hashes_;
  std::vector<std::string> history_;
};

}  // namespace detail
}  // namespace axiomforge::search
