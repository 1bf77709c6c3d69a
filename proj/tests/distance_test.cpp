#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "axiomforge/corpus/corpus.hpp"
#include "axiomforge/distance/distance.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/pddl/printer.hpp"
#include "support/edit_fixtures.hpp"

namespace ad = axiomforge::distance;
using edits::mutation_set;
using edits::random_string;
using edits::ref_lev;

namespace {

std::string canonical(std::string_view text) {
  auto d = axiomforge::pddl::parse_domain(text);
  EXPECT_TRUE(d.ok());
  return axiomforge::pddl::print_canonical(*d);
}

std::vector<std::string> lev_sorted(const std::string& ref, std::vector<std::string> xs) {
  std::vector<std::pair<std::size_t, std::string>> keyed;
  for (auto& x : xs) keyed.emplace_back(ref_lev(ref, x), std::move(x));
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  for (auto& [d, x] : keyed) out.push_back(std::move(x));
  return out;
}

class CountingSampler : public ad::ComparisonSampler {
 public:
  explicit CountingSampler(std::function<ad::Votes(const std::string&, const std::string&, const std::string&)> f)
      : f_(std::move(f)) {}
  ad::Votes sample(const std::string& r, const std::string& a, const std::string& b, std::size_t) override {
    ++calls;
    return f_(r, a, b);
  }
  std::atomic<std::size_t> calls{0};

 private:
  std::function<ad::Votes(const std::string&, const std::string&, const std::string&)> f_;
};

constexpr std::string_view kGrid = R"((define (domain grid)
  (:requirements :strips)
  (:predicates (at ?x) (clear ?y) (adjacent ?x ?y))
  (:action move :parameters (?x ?y)
    :precondition (and (at ?x) (clear ?y))
    :effect (and (at ?y) (not (at ?x))))))";

constexpr std::string_view kGridAddAdjacent = R"((define (domain grid)
  (:requirements :strips)
  (:predicates (at ?x) (clear ?y) (adjacent ?x ?y))
  (:action move :parameters (?x ?y)
    :precondition (and (at ?x) (clear ?y) (adjacent ?x ?y))
    :effect (and (at ?y) (not (at ?x))))))";

constexpr std::string_view kGridDropClear = R"((define (domain grid)
  (:requirements :strips)
  (:predicates (at ?x) (clear ?y) (adjacent ?x ?y))
  (:action move :parameters (?x ?y)
    :precondition (and (at ?x))
    :effect (and (at ?y) (not (at ?x))))))";

}  // namespace

TEST(Levenshtein, AndToOrIsThreeEdits) {
  EXPECT_EQ(ad::levenshtein("(and (clear ?x) (clear ?y))", "(or (clear ?x) (clear ?y))"), 3u);
}

TEST(Levenshtein, Basics) {
  EXPECT_EQ(ad::levenshtein("abc", ""), 3u);
  EXPECT_EQ(ad::levenshtein("", ""), 0u);
  EXPECT_EQ(ad::levenshtein("kitten", "sitting"), 3u);
  const std::string t = canonical(axiomforge::corpus::texts::kBlocksworldDomain);
  EXPECT_EQ(ad::levenshtein(t, t), 0u);
}

TEST(Levenshtein, MatchesReferenceOnRandomStrings) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    auto a = random_string(rng, 14);
    auto b = random_string(rng, 14);
    EXPECT_EQ(ad::levenshtein(a, b), ref_lev(a, b)) << a << " | " << b;
  }
}

TEST(Levenshtein, MetricAxioms) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    auto a = random_string(rng, 20);
    auto b = random_string(rng, 20);
    auto c = random_string(rng, 20);
    EXPECT_EQ(ad::levenshtein(a, a), 0u);
    EXPECT_EQ(ad::levenshtein(a, b), ad::levenshtein(b, a));
    EXPECT_LE(ad::levenshtein(a, c), ad::levenshtein(a, b) + ad::levenshtein(b, c));
    EXPECT_LE(ad::levenshtein(a, b), std::max(a.size(), b.size()));
  }
}

TEST(SemanticRank, IdenticalTextFirst) {
  const std::string ref = canonical(axiomforge::corpus::texts::kBlocksworldDomain);
  std::vector<std::string> cands{canonical(axiomforge::corpus::texts::kHanoiDomain), ref};
  ad::LevenshteinOracle lev;
  ad::StructuralOracle structural;
  EXPECT_EQ(ad::semantic_rank(ref, cands, lev).order.front(), 1u);
  EXPECT_EQ(ad::semantic_rank(ref, cands, structural).order.front(), 1u);
}

TEST(SemanticRank, AddedConstraintCloserThanRemovedRequirement) {
  const std::string ref = canonical(kGrid);
  std::vector<std::string> cands{canonical(kGridDropClear), canonical(kGridAddAdjacent)};
  ad::StructuralOracle oracle;
  auto r = ad::semantic_rank(ref, cands, oracle);
  EXPECT_EQ(r.items(cands), (std::vector<std::string>{cands[1], cands[0]}));
  // Edit distance alone would pick the other order.
  ad::LevenshteinOracle lev;
  EXPECT_EQ(ad::semantic_rank(ref, cands, lev).order.front(), 0u);
}

TEST(SemanticRank, LevenshteinMockEqualsDirectSort) {
  std::mt19937_64 rng(3);
  const std::string ref = canonical(axiomforge::corpus::texts::kGripperDomain);
  for (int round = 0; round < 10; ++round) {
    auto cands = mutation_set(rng, ref, 3 + rng() % 14);
    ad::LevenshteinOracle oracle;
    auto r = ad::semantic_rank(ref, cands, oracle);
    EXPECT_EQ(r.items(cands), lev_sorted(ref, cands));
  }
}

TEST(SemanticRank, PermutationAndQueryBoundUnderNoise) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<std::string> cands;
    for (std::size_t i = 0; i < n; ++i) cands.push_back(random_string(rng, 8));
    // Arbitrary, possibly intransitive answers.
    std::mt19937_64 coin(rng());
    auto sampler = std::make_shared<CountingSampler>([&](auto&, auto&, auto&) {
      return ad::Votes{coin() % 17, coin() % 17};
    });
    ad::VotingOracle oracle(sampler);
    auto r = ad::semantic_rank("ref", cands, oracle);
    auto sorted = r.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(sorted[i], i);
    EXPECT_LE(r.oracle_queries, n * ad::ceil_log2(n));
  }
}

TEST(SemanticRank, TotalOrderIndependentOfInputPermutation) {
  std::mt19937_64 rng(5);
  const std::string ref = canonical(axiomforge::corpus::texts::kHanoiDomain);
  auto cands = mutation_set(rng, ref, 16);
  ad::LevenshteinOracle oracle;
  const auto expected = ad::semantic_rank(ref, cands, oracle).items(cands);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(cands.begin(), cands.end(), rng);
    EXPECT_EQ(ad::semantic_rank(ref, cands, oracle).items(cands), expected);
  }
}

TEST(VotingOracle, MajorityAndTieBreak) {
  auto prefer_second = std::make_shared<CountingSampler>([](auto&, auto&, auto&) { return ad::Votes{3, 13}; });
  ad::VotingOracle o1(prefer_second);
  // Sampler sees ("aaa", "zzz") in lexicographic order; "zzz" wins.
  EXPECT_EQ(o1.closer("r", "aaa", "zzz"), ad::Choice::B);
  EXPECT_EQ(o1.closer("r", "zzz", "aaa"), ad::Choice::A);
  EXPECT_EQ(prefer_second->calls.load(), 1u);

  auto split = std::make_shared<CountingSampler>([](auto&, auto&, auto&) { return ad::Votes{8, 8}; });
  ad::VotingOracle o2(split);
  // Even split: smaller edit distance to the reference wins.
  EXPECT_EQ(o2.closer("abcd", "zbcd", "abcd-long"), ad::Choice::A);
  EXPECT_EQ(o2.closer("abcd", "abcd-long", "zbcd"), ad::Choice::B);
  // Equal distance: lexicographically smaller wins.
  EXPECT_EQ(o2.closer("abcd", "abcx", "abcy"), ad::Choice::A);
  EXPECT_EQ(o2.closer("abcd", "abcy", "abcx"), ad::Choice::B);
}

TEST(VotingOracle, RepeatRankIssuesNoNewTransportCalls) {
  std::mt19937_64 rng(6);
  const std::string ref = canonical(axiomforge::corpus::texts::kFerryDomain);
  auto cands = mutation_set(rng, ref, 12);
  auto sampler = std::make_shared<CountingSampler>([](const std::string& r, const std::string& a, const std::string& b) {
    return ad::levenshtein(r, a) <= ad::levenshtein(r, b) ? ad::Votes{16, 0} : ad::Votes{0, 16};
  });
  ad::VotingOracle oracle(sampler);
  auto first = ad::semantic_rank(ref, cands, oracle);
  const auto calls = oracle.transport_calls();
  EXPECT_GT(calls, 0u);
  auto second = ad::semantic_rank(ref, cands, oracle);
  EXPECT_EQ(oracle.transport_calls(), calls);
  EXPECT_EQ(first.order, second.order);
  EXPECT_EQ(first.items(cands), lev_sorted(ref, cands));
}

TEST(VotingOracle, ConcurrentQueriesShareCache) {
  auto sampler = std::make_shared<CountingSampler>([](auto&, auto&, auto&) { return ad::Votes{10, 6}; });
  ad::VotingOracle oracle(sampler);
  std::vector<std::thread> ts;
  std::atomic<int> a_wins{0};
  for (int i = 0; i < 8; ++i)
    ts.emplace_back([&] {
      for (int k = 0; k < 50; ++k)
        if (oracle.closer("r", "p" + std::to_string(k % 5), "q") == ad::Choice::A) ++a_wins;
    });
  for (auto& t : ts) t.join();
  EXPECT_EQ(a_wins.load(), 400);
  EXPECT_LE(sampler->calls.load(), 5u * 8u);
  EXPECT_EQ(oracle.closer("r", "p0", "q"), ad::Choice::A);
}

TEST(HybridRank, SurvivorsAndQueryBound) {
  std::mt19937_64 rng(7);
  const std::string ref = canonical(axiomforge::corpus::texts::kBlocksworldDomain);
  auto cands = mutation_set(rng, ref, 10);
  ad::LevenshteinOracle oracle;
  auto r = ad::hybrid_rank(ref, cands, 4, oracle);
  EXPECT_EQ(r.order.size(), 10u);
  EXPECT_LE(r.oracle_queries, 8u);
  EXPECT_EQ(r.items(cands), lev_sorted(ref, cands));
}

TEST(HybridRank, KeepAllEqualsSemanticRank) {
  std::mt19937_64 rng(8);
  const std::string ref = canonical(axiomforge::corpus::texts::kMazeDomain);
  auto cands = mutation_set(rng, ref, 9);
  ad::StructuralOracle oracle;
  EXPECT_EQ(ad::hybrid_rank(ref, cands, cands.size(), oracle).order, ad::semantic_rank(ref, cands, oracle).order);
}

TEST(HybridRank, LevenshteinMockMatchesLevOrderAcrossKeeps) {
  std::mt19937_64 rng(9);
  const std::string ref = canonical(axiomforge::corpus::texts::kMonkeyDomain);
  for (int round = 0; round < 8; ++round) {
    auto cands = mutation_set(rng, ref, 2 + rng() % 12);
    const std::size_t keep = 1 + rng() % cands.size();
    ad::LevenshteinOracle oracle;
    EXPECT_EQ(ad::hybrid_rank(ref, cands, keep, oracle).items(cands), lev_sorted(ref, cands));
  }
}

TEST(HybridRank, ZeroKeepRejected) {
  ad::LevenshteinOracle oracle;
  EXPECT_THROW(ad::hybrid_rank("r", {"a"}, 0, oracle), std::invalid_argument);
}

TEST(Structural, UnparseableRanksLast) {
  const std::string ref = canonical(kGrid);
  std::vector<std::string> cands{"(define (domain", canonical(kGridDropClear)};
  ad::StructuralOracle oracle;
  EXPECT_EQ(ad::semantic_rank(ref, cands, oracle).order.front(), 1u);
}

TEST(Structural, CostOfAddedAction) {
  auto r = axiomforge::pddl::parse_domain(axiomforge::corpus::texts::kBlocksworldDomain);
  auto c = axiomforge::pddl::parse_domain(axiomforge::corpus::texts::kBlocksMidExtractDomain);
  ASSERT_TRUE(r.ok() && c.ok());
  // extract: 4 preconditions + 5 effects on top of the base cost.
  EXPECT_EQ(ad::structural_cost(*r, *c), 4u + 4u + 5u);
  EXPECT_EQ(ad::structural_cost(*r, *r), 0u);
}
