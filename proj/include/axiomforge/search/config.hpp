#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "axiomforge/search/candidate.hpp"

namespace axiomforge::search {

enum class Algorithm { Bfs, Mcts, Genetic, Beam };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Bfs: return "bfs";
    case Algorithm::Mcts: return "mcts";
    case Algorithm::Genetic: return "genetic";
    case Algorithm::Beam: return "beam";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(const std::string& s) {
  if (s == "bfs") return Algorithm::Bfs;
  if (s == "mcts") return Algorithm::Mcts;
  if (s == "genetic" || s == "ga") return Algorithm::Genetic;
  if (s == "beam") return Algorithm::Beam;
  return std::nullopt;
}

struct SearchConfig {
  Algorithm algorithm = Algorithm::Beam;
  std::size_t target_length = 0;
  std::size_t beam_width = 8;
  std::size_t mcts_iterations = 10;
  double mcts_exploration_c = std::sqrt(2.0);
  std::size_t mcts_rollout_depth = 2;
  std::size_t ga_population = 4;
  std::size_t ga_generations = 3;
  double ga_mutation_rate = 0.2;
  std::size_t max_depth = 3;
  std::size_t proposals_per_expansion = 8;
  /// Survivors of the edit-distance filter before oracle ranking in beam search.
  std::size_t rank_keep = 16;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  ObjectiveWeights weights;

  void check() const {
    if (beam_width < 1) throw std::invalid_argument("beam width must be at least 1");
    if (!(mcts_exploration_c >= 0)) throw std::invalid_argument("exploration constant must be non-negative");
    if (!(ga_mutation_rate >= 0 && ga_mutation_rate <= 1))
      throw std::invalid_argument("mutation rate must lie in [0, 1]");
    if (weights.alpha < 0 || weights.lambda < 0) throw std::invalid_argument("weights must be non-negative");
    if (!(weights.penalty > 0)) throw std::invalid_argument("penalty must be positive");
    if (rank_keep < 1) throw std::invalid_argument("rank keep must be at least 1");
  }
};

inline nlohmann::json to_json(const SearchConfig& c) {
  return {{"algorithm", to_string(c.algorithm)},
          {"target_length", c.target_length},
          {"beam_width", c.beam_width},
          {"mcts_iterations", c.mcts_iterations},
          {"mcts_exploration_c", c.mcts_exploration_c},
          {"mcts_rollout_depth", c.mcts_rollout_depth},
          {"ga_population", c.ga_population},
          {"ga_generations", c.ga_generations},
          {"ga_mutation_rate", c.ga_mutation_rate},
          {"max_depth", c.max_depth},
          {"proposals_per_expansion", c.proposals_per_expansion},
          {"rank_keep", c.rank_keep},
          {"seed", c.seed},
          {"weights",
           {{"alpha", c.weights.alpha},
            {"lambda", c.weights.lambda},
            {"penalty", c.weights.penalty},
            {"length", c.weights.length}}}};
}

/// Per-algorithm bookkeeping kept for inspection.
struct SearchTrace {
  /// Round (BFS depth, beam iteration, GA generation) at which success was found.
  std::optional<std::size_t> success_round;
  std::vector<std::size_t> root_child_visits;
  std::size_t root_visits = 0;
  std::vector<std::size_t> beam_sizes;
  std::vector<std::size_t> population_sizes;
  std::vector<double> generation_best;
};

struct SearchResult {
  std::optional<EditCandidate> best;
  bool success = false;
  std::size_t explored = 0;
  std::size_t oracle_calls = 0;
  std::string trajectory_id;
  /// Step hashes in recording order.
  std::vector<std::string> step_hashes;
  SearchTrace trace;
};

inline double ucb1(double mean_reward, std::size_t node_visits, std::size_t parent_visits, double c) {
  if (node_visits == 0) return std::numeric_limits<double>::infinity();
  return mean_reward +
         c * std::sqrt(std::log(static_cast<double>(parent_visits)) / static_cast<double>(node_visits));
}

}  // namespace axiomforge::search
