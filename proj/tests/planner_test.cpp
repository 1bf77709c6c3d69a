#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "axiomforge/corpus/corpus.hpp"
#include "axiomforge/pddl/link.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/planner/planner.hpp"
#include "support/brute_force.hpp"

namespace af = axiomforge;
namespace pl = axiomforge::planner;

namespace {

struct Loaded {
  af::pddl::DomainAst domain;
  af::pddl::ProblemAst problem;
  af::pddl::LinkedTask linked;
};

Loaded load(std::string_view domain_text, std::string_view problem_text) {
  auto d = af::pddl::parse_domain(domain_text);
  auto p = af::pddl::parse_problem(problem_text);
  EXPECT_TRUE(d.ok());
  EXPECT_TRUE(p.ok());
  auto l = af::pddl::link(*d, *p);
  EXPECT_TRUE(l.ok()) << (l.diagnostics.empty() ? "" : af::pddl::format_diagnostic(l.diagnostics[0]));
  return {*d, *p, *l};
}

pl::GroundedTask ground_corpus(const std::string& domain, const std::string& problem) {
  const auto& e = af::corpus::load(domain);
  return pl::ground(load(e.domain_text, e.find_problem(problem)->text).linked);
}

std::map<std::string, int> count_by_name(const pl::GroundedTask& t) {
  std::map<std::string, int> out;
  for (const auto& a : t.actions) ++out[a.name];
  return out;
}

pl::AtomId atom_id(const pl::GroundedTask& t, const std::string& text) {
  for (pl::AtomId i = 0; i < t.atoms.size(); ++i)
    if (t.atoms[i].text() == text) return i;
  ADD_FAILURE() << "no atom " << text;
  return 0;
}

const pl::GroundAction& action(const pl::GroundedTask& t, const std::string& text) {
  for (const auto& a : t.actions)
    if (a.text() == text) return a;
  throw std::runtime_error("no action " + text);
}

std::set<std::string> atom_texts(const pl::GroundedTask& t, const pl::State& s) {
  std::set<std::string> out;
  for (auto id : s.atoms()) out.insert(t.atoms[id].text());
  return out;
}

constexpr std::string_view kHanoiNoDiscs = R"((define (problem pegs-only)
  (:domain hanoi)
  (:objects p1 p2 p3)
  (:init (clear p1) (clear p2) (clear p3))
  (:goal (and))))";

}  // namespace

TEST(State, SetResetCount) {
  pl::State s(130);
  s.set(0);
  s.set(64);
  s.set(129);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_TRUE(s.test(129));
  s.reset(64);
  EXPECT_FALSE(s.test(64));
  EXPECT_EQ(s.atoms(), (std::vector<pl::AtomId>{0, 129}));
}

TEST(Ground, BlocksworldThreeBlocksCounts) {
  auto t = ground_corpus("blocksworld", "bw-reverse-3");
  auto c = count_by_name(t);
  EXPECT_EQ(c["pickup"], 3);
  EXPECT_EQ(c["putdown"], 3);
  // x = y tuples are kept: nothing in the schema rules them out.
  EXPECT_EQ(c["stack"], 9);
  EXPECT_EQ(c["unstack"], 9);
}

TEST(Ground, GripperOneBallHasTenActions) {
  auto t = ground_corpus("gripper", "gr-one-ball");
  auto c = count_by_name(t);
  EXPECT_EQ(c["move"], 2);
  EXPECT_EQ(c["pick"], 4);
  EXPECT_EQ(c["drop"], 4);
  EXPECT_EQ(t.actions.size(), 10u);
}

TEST(Ground, EqualityFiltersAtGroundTime) {
  auto t = ground_corpus("bulldozer", "bd-board-drive");
  for (const auto& a : t.actions)
    if (a.name == "drive" || a.name == "cross") {
      EXPECT_NE(a.args[1], a.args[2]) << a.text();
    }
}

TEST(Ground, HanoiWithoutDiscs) {
  auto l = load(af::corpus::texts::kHanoiDomain, kHanoiNoDiscs);
  auto t = pl::ground(l.linked);
  // `smaller` is static and never holds, so every triple is dropped.
  EXPECT_TRUE(t.actions.empty());
  auto r = pl::solve(t);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.plan.length(), 0u);
}

TEST(Ground, ExplosionCap) {
  auto l = load(af::corpus::texts::kBlocksworldDomain, af::corpus::texts::kBlocksFlagship);
  pl::GroundingLimits lim;
  lim.max_actions = 5;
  EXPECT_THROW(pl::ground(l.linked, lim), pl::GroundingExplosion);
  lim = {};
  lim.max_atoms = 3;
  EXPECT_THROW(pl::ground(l.linked, lim), pl::GroundingExplosion);
}

TEST(Ground, AddDeleteDisjointPerGroup) {
  for (const auto& name : af::corpus::domain_names()) {
    const auto& e = af::corpus::load(name);
    auto t = pl::ground(load(e.domain_text, e.flagship().text).linked);
    auto disjoint = [](const pl::EffectGroup& g) {
      for (auto a : g.adds)
        if (std::find(g.deletes.begin(), g.deletes.end(), a) != g.deletes.end()) return false;
      return true;
    };
    for (const auto& a : t.actions) {
      EXPECT_TRUE(disjoint(a.effect)) << name << " " << a.text();
      for (const auto& g : a.conditional) EXPECT_TRUE(disjoint(g)) << name << " " << a.text();
    }
  }
}

TEST(Apply, PickupFromTable) {
  constexpr std::string_view prob = R"((define (problem one) (:domain blocksworld) (:objects a)
    (:init (clear a) (on-table a) (arm-empty)) (:goal (holding a))))";
  auto t = pl::ground(load(af::corpus::texts::kBlocksworldDomain, prob).linked);
  auto next = pl::apply(t.init, action(t, "(pickup a)"));
  EXPECT_EQ(atom_texts(t, next), (std::set<std::string>{"(holding a)"}));
}

TEST(Apply, BriefcaseCarriesContents) {
  constexpr std::string_view prob = R"((define (problem carry) (:domain briefcase)
    (:objects home office - location doc - portable)
    (:init (is-at home) (at doc home) (in doc)) (:goal (at doc office))))";
  auto t = pl::ground(load(af::corpus::texts::kBriefcaseDomain, prob).linked);
  auto next = pl::apply(t.init, action(t, "(move home office)"));
  auto got = atom_texts(t, next);
  EXPECT_TRUE(got.count("(at doc office)"));
  EXPECT_FALSE(got.count("(at doc home)"));
  EXPECT_TRUE(got.count("(is-at office)"));
  EXPECT_TRUE(got.count("(in doc)"));
}

TEST(Apply, ConditionalUsesPreState) {
  // Without the doc inside, moving leaves it behind.
  constexpr std::string_view prob = R"((define (problem leave) (:domain briefcase)
    (:objects home office - location doc - portable)
    (:init (is-at home) (at doc home)) (:goal (at doc office))))";
  auto t = pl::ground(load(af::corpus::texts::kBriefcaseDomain, prob).linked);
  auto next = pl::apply(t.init, action(t, "(move home office)"));
  EXPECT_TRUE(atom_texts(t, next).count("(at doc home)"));
}

TEST(Apply, EmptyEffectIsIdentity) {
  pl::GroundAction a;
  a.precondition = pl::GroundFormula::constant(true);
  a.flat_precondition = true;
  pl::State s(10);
  s.set(3);
  EXPECT_EQ(pl::apply(s, a), s);
}

TEST(Apply, ThrowsOnViolatedPrecondition) {
  auto t = ground_corpus("blocksworld", "bw-flagship");
  EXPECT_THROW(pl::apply(t.init, action(t, "(pickup a)")), pl::PreconditionViolated);
}

TEST(Solve, FlagshipIsSixSteps) {
  auto t = ground_corpus("blocksworld", "bw-flagship");
  auto r = pl::solve(t);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.plan.length(), 6u);
  EXPECT_TRUE(pl::validate_plan(t, r.plan).valid);
}

TEST(Solve, GoalInInitGivesEmptyPlan) {
  constexpr std::string_view prob = R"((define (problem done) (:domain blocksworld) (:objects a)
    (:init (clear a) (on-table a) (arm-empty)) (:goal (on-table a))))";
  auto t = pl::ground(load(af::corpus::texts::kBlocksworldDomain, prob).linked);
  auto r = pl::solve(t);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.plan.length(), 0u);
  EXPECT_TRUE(pl::validate_plan(t, r.plan).valid);
}

TEST(Solve, SelfOnIsUnsolvable) {
  auto t = ground_corpus("blocksworld", "bw-self-on");
  EXPECT_EQ(pl::solve(t).status, pl::SolveStatus::Unsolvable);
}

TEST(Solve, LimitsGiveResourceExceeded) {
  auto t = ground_corpus("blocksworld", "bw-flagship");
  pl::SearchLimits lim;
  lim.max_plan_length = 5;
  EXPECT_EQ(pl::solve(t, lim).status, pl::SolveStatus::ResourceExceeded);
  lim = {};
  lim.max_expanded_states = 3;
  EXPECT_EQ(pl::solve(t, lim).status, pl::SolveStatus::ResourceExceeded);
  lim = {};
  lim.max_plan_length = 6;
  EXPECT_TRUE(pl::solve(t, lim).solved());
}

TEST(Solve, Deterministic) {
  auto t = ground_corpus("hanoi", "hn-3");
  auto a = pl::solve(t);
  auto b = pl::solve(t);
  ASSERT_TRUE(a.solved());
  EXPECT_EQ(a.plan, b.plan);
  EXPECT_EQ(a.expanded, b.expanded);
}

TEST(Solve, MonotoneInLimits) {
  auto t = ground_corpus("logistics", "lg-truck-air");
  for (std::size_t len = 1; len <= 8; ++len) {
    pl::SearchLimits lim;
    lim.max_plan_length = len;
    auto r = pl::solve(t, lim);
    EXPECT_NE(r.status, pl::SolveStatus::Unsolvable) << len;
    if (r.solved()) {
      lim.max_plan_length = len + 10;
      EXPECT_TRUE(pl::solve(t, lim).solved());
    }
  }
}

TEST(Validate, SwappedStepsFail) {
  auto t = ground_corpus("blocksworld", "bw-flagship");
  auto r = pl::solve(t);
  ASSERT_TRUE(r.solved());
  auto bad = r.plan;
  std::swap(bad.steps[0], bad.steps[1]);
  auto check = pl::validate_plan(t, bad);
  EXPECT_FALSE(check.valid);
  ASSERT_TRUE(check.failure_index.has_value());
  EXPECT_LE(*check.failure_index, 1u);
}

TEST(Validate, TruncatedPlanFailsAtEnd) {
  auto t = ground_corpus("blocksworld", "bw-flagship");
  auto plan = pl::solve(t).plan;
  plan.steps.pop_back();
  auto check = pl::validate_plan(t, plan);
  EXPECT_FALSE(check.valid);
  EXPECT_EQ(check.failure_index, plan.steps.size());
}

TEST(PlanText, FormatParseRoundTrip) {
  auto t = ground_corpus("depot", "dp-cross-site");
  auto plan = pl::solve(t).plan;
  auto text = pl::format_plan(t, plan);
  EXPECT_NE(text.find("length: 5"), std::string::npos);
  auto back = pl::parse_plan(t, text);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, plan);
  EXPECT_FALSE(pl::parse_plan(t, "(fly nowhere)\n").has_value());
  auto spaced = pl::parse_plan(t, "  ( LIFT hoist0  crate0 pallet0 depot0 )  ; first\n");
  ASSERT_TRUE(spaced.has_value());
  EXPECT_EQ(spaced->length(), 1u);
}

// Every corpus problem: recorded optimum == production planner == reference.
TEST(Oracle, CorpusOptimaAgree) {
  for (const auto& name : af::corpus::domain_names()) {
    const auto& e = af::corpus::load(name);
    for (const auto& p : e.problems) {
      auto l = load(e.domain_text, p.text);
      oracle::BruteForce bf(l.domain, l.problem);
      auto ref = bf.shortest();
      auto r = pl::solve(pl::ground(l.linked));
      EXPECT_EQ(ref, p.optimal_length) << name << "/" << p.name;
      if (p.optimal_length) {
        ASSERT_TRUE(r.solved()) << name << "/" << p.name;
        EXPECT_EQ(r.plan.length(), *p.optimal_length) << name << "/" << p.name;
      } else {
        EXPECT_EQ(r.status, pl::SolveStatus::Unsolvable) << name << "/" << p.name;
      }
    }
  }
}

TEST(Oracle, BlocksworldVariantOptima) {
  const auto& e = af::corpus::load("blocksworld");
  for (const auto& v : af::corpus::blocksworld_variants()) {
    auto l = load(v.domain_text, e.flagship().text);
    oracle::BruteForce bf(l.domain, l.problem);
    EXPECT_EQ(bf.shortest(), v.flagship_optimal_length) << v.name;
    auto r = pl::solve(pl::ground(l.linked));
    ASSERT_TRUE(r.solved()) << v.name;
    EXPECT_EQ(r.plan.length(), v.flagship_optimal_length) << v.name;
  }
}

// Random walks on the reference model: the production successor of each
// applicable action matches the reference successor set.
TEST(Oracle, SuccessorSetsAgreeOnRandomWalks) {
  std::mt19937_64 rng(7);
  for (const auto& name : af::corpus::domain_names()) {
    const auto& e = af::corpus::load(name);
    auto l = load(e.domain_text, e.flagship().text);
    oracle::BruteForce bf(l.domain, l.problem);
    auto t = pl::ground(l.linked);
    pl::State s = t.init;
    for (int step = 0; step < 12; ++step) {
      std::set<std::set<std::string>> mine;
      std::vector<pl::State> nexts;
      for (const auto& a : t.actions)
        if (pl::holds(s, a)) {
          nexts.push_back(pl::apply(s, a));
          mine.insert(atom_texts(t, nexts.back()));
        }
      // Reference states include static atoms; strip them to compare.
      std::set<std::string> fluent_names;
      for (const auto& atom : t.atoms) fluent_names.insert(atom.predicate);
      auto strip = [&](const oracle::Atoms& in) {
        std::set<std::string> out;
        for (const auto& x : in) {
          auto pred = x.substr(0, x.find(' '));
          if (fluent_names.count(pred)) out.insert("(" + x + ")");
        }
        return out;
      };
      oracle::Atoms ref_state;
      for (const auto& x : atom_texts(t, s)) ref_state.insert(x.substr(1, x.size() - 2));
      for (const auto& x : bf.init())
        if (!fluent_names.count(x.substr(0, x.find(' ')))) ref_state.insert(x);
      std::set<std::set<std::string>> ref;
      for (const auto& n : bf.successors(ref_state))
        if (strip(n) != strip(ref_state)) ref.insert(strip(n));
      mine.erase(atom_texts(t, s));
      EXPECT_EQ(mine, ref) << name << " step " << step;
      if (nexts.empty()) break;
      s = nexts[rng() % nexts.size()];
    }
  }
}

TEST(Property, SolvedPlansValidate) {
  for (const auto& name : af::corpus::domain_names()) {
    const auto& e = af::corpus::load(name);
    for (const auto& p : e.problems) {
      auto t = pl::ground(load(e.domain_text, p.text).linked);
      auto r = pl::solve(t);
      if (r.solved()) {
        EXPECT_TRUE(pl::validate_plan(t, r.plan).valid) << p.name;
      }
    }
  }
}

// Frame property: atoms outside every applied add/delete set keep their value.
TEST(Property, FrameAxiom) {
  std::mt19937_64 rng(11);
  auto t = ground_corpus("briefcase", "bc-two-docs");
  pl::State s = t.init;
  for (int step = 0; step < 40; ++step) {
    std::vector<std::size_t> app;
    for (std::size_t i = 0; i < t.actions.size(); ++i)
      if (pl::holds(s, t.actions[i])) app.push_back(i);
    ASSERT_FALSE(app.empty());
    const auto& a = t.actions[app[rng() % app.size()]];
    auto next = pl::apply(s, a);
    std::set<pl::AtomId> touched(a.effect.adds.begin(), a.effect.adds.end());
    touched.insert(a.effect.deletes.begin(), a.effect.deletes.end());
    for (const auto& g : a.conditional)
      if (g.condition.holds(s)) {
        touched.insert(g.adds.begin(), g.adds.end());
        touched.insert(g.deletes.begin(), g.deletes.end());
      }
    for (pl::AtomId i = 0; i < t.atoms.size(); ++i)
      if (!touched.count(i)) {
        EXPECT_EQ(s.test(i), next.test(i)) << t.atoms[i].text();
      }
    s = next;
  }
}

TEST(Property, AtomLookupHelper) {
  auto t = ground_corpus("gripper", "gr-one-ball");
  EXPECT_TRUE(t.init.test(atom_id(t, "(at-robby rooma)")));
}
