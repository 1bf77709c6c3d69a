#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "axiomforge/corpus/domain_texts.hpp"
#include "axiomforge/corpus/problem_texts.hpp"
#include "axiomforge/pddl/ast.hpp"
#include "axiomforge/pddl/parser.hpp"

namespace axiomforge::corpus {

struct ProblemEntry {
  std::string name;
  std::string_view text;
  /// nullopt marks a problem known to be unsolvable under the original rules.
  std::optional<std::size_t> optimal_length;
};

struct CorpusEntry {
  std::string name;
  std::string_view domain_text;
  std::vector<ProblemEntry> problems;

  /// First problem; the one a search targets by default.
  const ProblemEntry& flagship() const { return problems.front(); }

  const ProblemEntry* find_problem(std::string_view problem) const {
    for (const auto& p : problems)
      if (p.name == problem) return &p;
    return nullptr;
  }
};

/// An authored rule change for a corpus domain, with the optimum it yields
/// on that domain's flagship problem.
struct DomainVariant {
  std::string name;
  std::string_view domain_text;
  std::size_t flagship_optimal_length;
};

class UnknownDomain : public std::invalid_argument {
 public:
  explicit UnknownDomain(const std::string& name) : std::invalid_argument("unknown domain: " + name) {}
};

inline const std::vector<std::string>& domain_names() {
  static const std::vector<std::string> names{"blocksworld", "briefcase", "bulldozer", "casino",
                                              "depot",       "ferry",     "gripper",   "hanoi",
                                              "logistics",   "maze",      "miconic",   "monkey"};
  return names;
}

namespace detail {

inline std::vector<CorpusEntry> build_entries() {
  using namespace texts;
  return {
      {"blocksworld",
       kBlocksworldDomain,
       {{"bw-flagship", kBlocksFlagship, 6},
        {"bw-swap-2", kBlocksSwap2, 4},
        {"bw-to-table", kBlocksToTable, 2},
        {"bw-reverse-3", kBlocksReverse3, 6},
        {"bw-self-on", kBlocksSelfOn, std::nullopt}}},
      {"briefcase",
       kBriefcaseDomain,
       {{"bc-one-doc", kBriefcaseOneDoc, 2},
        {"bc-two-docs", kBriefcaseTwoDocs, 3},
        {"bc-deliver-and-return", kBriefcaseReturn, 4}}},
      {"bulldozer",
       kBulldozerDomain,
       {{"bd-board-drive", kBulldozerBoardDrive, 2}, {"bd-walk-cross", kBulldozerWalkCross, 3}}},
      {"casino",
       kCasinoDomain,
       {{"cs-one-prize", kCasinoOnePrize, 2}, {"cs-two-prizes-return", kCasinoTwoPrizes, 4}}},
      {"depot", kDepotDomain, {{"dp-cross-site", kDepotCrossSite, 5}, {"dp-restack", kDepotRestack, 2}}},
      {"ferry", kFerryDomain, {{"fr-one-car", kFerryOneCar, 3}, {"fr-far-side", kFerryFarSide, 4}}},
      {"gripper", kGripperDomain, {{"gr-one-ball", kGripperOneBall, 3}, {"gr-two-balls", kGripperTwoBalls, 5}}},
      {"hanoi", kHanoiDomain, {{"hn-3", kHanoi3, 7}, {"hn-2", kHanoi2, 3}, {"hn-1", kHanoi1, 1}}},
      {"logistics", kLogisticsDomain, {{"lg-truck", kLogisticsTruck, 3}, {"lg-truck-air", kLogisticsAir, 6}}},
      {"maze", kMazeDomain, {{"mz-2x2", kMaze2x2, 2}, {"mz-2x3-blocked", kMaze2x3Blocked, 4}}},
      {"miconic", kMiconicDomain, {{"mc-up", kMiconicUp, 3}, {"mc-down-up", kMiconicDownUp, 4}}},
      {"monkey", kMonkeyDomain, {{"mk-bananas", kMonkeyBananas, 5}, {"mk-water", kMonkeyWater, 4}}},
  };
}

inline const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> all = build_entries();
  return all;
}

}  // namespace detail

inline const CorpusEntry& load(std::string_view name) {
  for (const auto& e : detail::entries())
    if (e.name == name) return e;
  throw UnknownDomain(std::string(name));
}

inline bool contains(std::string_view name) {
  const auto& names = domain_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

/// Solvable problems of a domain, parsed. Every entry has a recorded optimum.
inline std::vector<pddl::ProblemAst> regression_suite(std::string_view name) {
  std::vector<pddl::ProblemAst> out;
  for (const auto& p : load(name).problems) {
    if (!p.optimal_length) continue;
    auto parsed = pddl::parse_problem(p.text);
    if (!parsed.ok()) throw std::logic_error("corpus problem " + p.name + " does not parse");
    out.push_back(std::move(*parsed.value));
  }
  return out;
}

inline const std::vector<DomainVariant>& blocksworld_variants() {
  static const std::vector<DomainVariant> variants{
      {"multi-lift", texts::kBlocksMultiLiftDomain, 2},
      {"mid-extract", texts::kBlocksMidExtractDomain, 4},
  };
  return variants;
}

}  // namespace axiomforge::corpus
