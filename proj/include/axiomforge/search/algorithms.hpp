#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "axiomforge/distance/rank.hpp"
#include "axiomforge/search/session.hpp"

namespace axiomforge::search {

namespace detail {

// Library distributions differ between standard libraries; these do not.
inline std::size_t draw_index(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
inline double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Level-by-level expansion; stops at the first successful candidate.
inline SearchResult bfs_search(const SearchConfig& cfg, const SearchContext& ctx, proposer::ProposalOracle& oracle) {
  detail::Session s(cfg, ctx, oracle, nullptr);
  SearchTrace trace;
  auto root = s.root();
  if (s.succeeds(root)) {
    trace.success_round = 0;
    return s.finish(root, trace);
  }
  std::set<std::string> seen{root.text};
  auto keep = [&](const std::string& t) { return seen.insert(t).second; };
  std::vector<EditCandidate> level{root};
  for (std::size_t depth = 1; depth <= cfg.max_depth && !level.empty(); ++depth) {
    std::vector<EditCandidate> next;
    for (const auto& node : level) {
      for (auto& c : s.expand(node, "bfs", depth, keep)) {
        if (s.succeeds(c)) {
          trace.success_round = depth;
          return s.finish(c, trace);
        }
        next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  return s.finish(std::nullopt, trace);
}

/// Normalized improvement over the original plan length.
inline double mcts_reward(const EditCandidate& c, std::optional<std::size_t> baseline) {
  if (!c.solved() || !c.regression_ok) return 0.0;
  if (!baseline) return 1.0;
  if (*baseline == 0) return 0.0;
  const double r = (static_cast<double>(*baseline) - static_cast<double>(c.plan.length())) /
                   static_cast<double>(*baseline);
  return std::clamp(r, 0.0, 1.0);
}

inline SearchResult mcts_search(const SearchConfig& cfg, const SearchContext& ctx, proposer::ProposalOracle& oracle) {
  detail::Session s(cfg, ctx, oracle, nullptr);
  struct Node {
    EditCandidate cand;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
    std::size_t depth = 0;
    std::size_t visits = 0;
    double total = 0;
    bool expanded = false;
  };
  std::vector<Node> tree;
  tree.push_back({s.root(), std::nullopt, {}, 0, 0, 0, false});
  const auto baseline = tree[0].cand.plan_length();

  std::optional<EditCandidate> best_success;
  auto consider = [&](const EditCandidate& c) {
    if (s.succeeds(c) && (!best_success || detail::Session::better(c, *best_success))) best_success = c;
  };
  consider(tree[0].cand);

  for (std::size_t it = 0; it < cfg.mcts_iterations; ++it) {
    std::size_t cur = 0;
    while (tree[cur].expanded && !tree[cur].children.empty()) {
      std::size_t pick = tree[cur].children.front();
      double best_value = -std::numeric_limits<double>::infinity();
      for (auto ch : tree[cur].children) {
        const auto& n = tree[ch];
        const double mean = n.visits ? n.total / static_cast<double>(n.visits) : 0.0;
        const double v = ucb1(mean, n.visits, tree[cur].visits, cfg.mcts_exploration_c);
        if (v > best_value) {
          best_value = v;
          pick = ch;
        }
      }
      cur = pick;
    }

    if (!tree[cur].expanded && tree[cur].depth < cfg.max_depth) {
      tree[cur].expanded = true;
      const std::string own = tree[cur].cand.text;
      auto kids = s.expand(tree[cur].cand, "mcts-expand", tree[cur].depth + 1,
                           [&](const std::string& t) { return t != own; });
      for (auto& k : kids) {
        consider(k);
        tree.push_back({std::move(k), cur, {}, tree[cur].depth + 1, 0, 0, false});
        tree[cur].children.push_back(tree.size() - 1);
      }
      if (!tree[cur].children.empty()) cur = tree[cur].children.front();
    }

    double reward = mcts_reward(tree[cur].cand, baseline);
    EditCandidate at = tree[cur].cand;
    for (std::size_t d = 0; d < cfg.mcts_rollout_depth; ++d) {
      auto texts = oracle.propose(s.context_for(at), cfg.proposals_per_expansion);
      if (texts.empty()) break;
      const auto chosen = texts[detail::draw_index(s.rng(), texts.size())];
      auto step = s.adopt({chosen}, at, "mcts-rollout", tree[cur].depth + d + 1);
      at = std::move(step.front());
      consider(at);
      reward = std::max(reward, mcts_reward(at, baseline));
    }

    for (std::optional<std::size_t> n = cur; n; n = tree[*n].parent) {
      tree[*n].visits += 1;
      tree[*n].total += reward;
    }
  }

  SearchTrace trace;
  trace.root_visits = tree[0].visits;
  for (auto ch : tree[0].children) trace.root_child_visits.push_back(tree[ch].visits);
  return s.finish(best_success, trace);
}

inline SearchResult genetic_search(const SearchConfig& cfg, const SearchContext& ctx,
                                   proposer::ProposalOracle& oracle) {
  if (cfg.ga_population < 2) throw std::invalid_argument("population must be at least 2");
  detail::Session s(cfg, ctx, oracle, nullptr);
  SearchTrace trace;
  auto root = s.root();

  auto rank_less = [](const EditCandidate& a, const EditCandidate& b) {
    return std::tie(a.score, a.text, a.step_id) < std::tie(b.score, b.text, b.step_id);
  };
  auto first_success = [&](const std::vector<EditCandidate>& pop) -> std::optional<EditCandidate> {
    std::optional<EditCandidate> out;
    for (const auto& c : pop)
      if (s.succeeds(c) && (!out || rank_less(c, *out))) out = c;
    return out;
  };
  auto note = [&](const std::vector<EditCandidate>& pop) {
    trace.population_sizes.push_back(pop.size());
    trace.generation_best.push_back(std::min_element(pop.begin(), pop.end(), rank_less)->score);
  };

  auto proposals = oracle.propose(s.context_for(root), cfg.ga_population);
  if (proposals.size() > cfg.ga_population) proposals.resize(cfg.ga_population);
  auto population = s.adopt(proposals, root, "ga-init", 0);
  while (population.size() < cfg.ga_population) population.push_back(root);
  note(population);
  if (auto hit = first_success(population)) {
    trace.success_round = 0;
    return s.finish(hit, trace);
  }

  auto tournament = [&](const std::vector<EditCandidate>& pop) -> const EditCandidate& {
    const auto& a = pop[detail::draw_index(s.rng(), pop.size())];
    const auto& b = pop[detail::draw_index(s.rng(), pop.size())];
    return rank_less(b, a) ? b : a;
  };

  for (std::size_t gen = 1; gen <= cfg.ga_generations; ++gen) {
    std::vector<EditCandidate> offspring;
    for (std::size_t i = 0; i < cfg.ga_population; ++i) {
      const auto& p1 = tournament(population);
      const auto& p2 = tournament(population);
      auto ctx1 = s.context_for(p1);
      auto child = oracle.crossover(ctx1, p1.text, p2.text);
      if (detail::draw_unit(s.rng()) < cfg.ga_mutation_rate) child = oracle.mutate(ctx1, child);
      auto made = s.adopt({child}, p1, "ga-offspring", gen);
      offspring.push_back(std::move(made.front()));
    }
    auto elite = *std::min_element(population.begin(), population.end(), rank_less);
    offspring.push_back(std::move(elite));
    std::stable_sort(offspring.begin(), offspring.end(), rank_less);
    offspring.resize(cfg.ga_population);
    population = std::move(offspring);
    note(population);
    if (auto hit = first_success(population)) {
      trace.success_round = gen;
      return s.finish(hit, trace);
    }
  }
  return s.finish(std::nullopt, trace);
}

/// Keeps the best `beam_width` candidates per iteration, ordered by score,
/// then position in the hybrid ranking against the original, then text.
inline SearchResult beam_search(const SearchConfig& cfg, const SearchContext& ctx, proposer::ProposalOracle& oracle,
                                distance::DistanceOracle& dist) {
  detail::Session s(cfg, ctx, oracle, &dist);
  SearchTrace trace;
  auto root = s.root();
  trace.beam_sizes.push_back(1);
  if (s.succeeds(root)) {
    trace.success_round = 0;
    return s.finish(root, trace);
  }
  const auto& reference = s.evaluator().original_text();
  std::set<std::string> seen{root.text};
  auto keep = [&](const std::string& t) { return seen.insert(t).second; };
  std::vector<EditCandidate> beam{root};

  for (std::size_t iter = 1; iter <= cfg.max_depth; ++iter) {
    std::vector<EditCandidate> pool = beam;
    for (const auto& member : beam)
      for (auto& c : s.expand(member, "beam", iter, keep)) pool.push_back(std::move(c));

    std::vector<std::string> texts;
    for (const auto& c : pool) texts.push_back(c.text);
    auto ranked = distance::hybrid_rank(reference, texts, cfg.rank_keep, dist);
    for (std::size_t pos = 0; pos < ranked.order.size(); ++pos) pool[ranked.order[pos]].semantic_rank_position = pos;
    std::stable_sort(pool.begin(), pool.end(), [](const EditCandidate& a, const EditCandidate& b) {
      return std::tie(a.score, *a.semantic_rank_position, a.text) < std::tie(b.score, *b.semantic_rank_position, b.text);
    });

    std::optional<EditCandidate> hit;
    for (const auto& c : pool)
      if (s.succeeds(c)) {
        hit = c;
        break;
      }
    if (pool.size() > cfg.beam_width) pool.resize(cfg.beam_width);
    beam = std::move(pool);
    trace.beam_sizes.push_back(beam.size());
    if (hit) {
      trace.success_round = iter;
      return s.finish(hit, trace);
    }
  }
  return s.finish(std::nullopt, trace);
}

inline SearchResult run_search(const SearchConfig& cfg, const SearchContext& ctx, proposer::ProposalOracle& oracle,
                               distance::DistanceOracle& dist) {
  switch (cfg.algorithm) {
    case Algorithm::Bfs: return bfs_search(cfg, ctx, oracle);
    case Algorithm::Mcts: return mcts_search(cfg, ctx, oracle);
    case Algorithm::Genetic: return genetic_search(cfg, ctx, oracle);
    case Algorithm::Beam: return beam_search(cfg, ctx, oracle, dist);
  }
  return {};
}

}  // namespace axiomforge::search
