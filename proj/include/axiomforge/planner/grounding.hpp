#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "axiomforge/pddl/ast.hpp"
#include "axiomforge/pddl/link.hpp"
#include "axiomforge/planner/state.hpp"

namespace axiomforge::planner {

/// Variable-free condition over atom ids. Built through the make_* helpers,
/// which fold constants so a fully static condition collapses to True/False.
struct GroundFormula {
  enum class Kind { True, False, Atom, Not, And, Or };

  Kind kind = Kind::True;
  AtomId atom = 0;
  std::vector<GroundFormula> children;

  static GroundFormula constant(bool value) { return GroundFormula{value ? Kind::True : Kind::False, 0, {}}; }
  static GroundFormula make_atom(AtomId id) { return GroundFormula{Kind::Atom, id, {}}; }

  static GroundFormula make_not(GroundFormula inner) {
    if (inner.kind == Kind::True) return constant(false);
    if (inner.kind == Kind::False) return constant(true);
    if (inner.kind == Kind::Not) return std::move(inner.children.front());
    GroundFormula f{Kind::Not, 0, {}};
    f.children.push_back(std::move(inner));
    return f;
  }

  static GroundFormula make_junction(Kind kind, std::vector<GroundFormula> parts) {
    const Kind absorbing = kind == Kind::And ? Kind::False : Kind::True;
    const Kind neutral = kind == Kind::And ? Kind::True : Kind::False;
    GroundFormula f{kind, 0, {}};
    for (auto& p : parts) {
      if (p.kind == absorbing) return constant(absorbing == Kind::True);
      if (p.kind == neutral) continue;
      if (p.kind == kind) {
        for (auto& c : p.children) f.children.push_back(std::move(c));
      } else {
        f.children.push_back(std::move(p));
      }
    }
    if (f.children.empty()) return constant(neutral == Kind::True);
    if (f.children.size() == 1) return std::move(f.children.front());
    return f;
  }

  bool holds(const State& s) const {
    switch (kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: return s.test(atom);
      case Kind::Not: return !children.front().holds(s);
      case Kind::And:
        for (const auto& c : children)
          if (!c.holds(s)) return false;
        return true;
      case Kind::Or:
        for (const auto& c : children)
          if (c.holds(s)) return true;
        return false;
    }
    return false;
  }
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  std::string text() const {
    std::string out = "(" + predicate;
    for (const auto& a : args) out += " " + a;
    return out + ")";
  }
};

/// Adds and deletes that fire together. Within a group deletes are applied
/// before adds, and an atom is never in both sets.
struct EffectGroup {
  GroundFormula condition = GroundFormula::constant(true);
  std::vector<AtomId> adds;
  std::vector<AtomId> deletes;
};

struct GroundAction {
  std::string name;
  std::vector<std::string> args;
  GroundFormula precondition;
  /// Set when the precondition is a conjunction of literals; the literal
  /// lists then replace the formula walk on the hot path.
  bool flat_precondition = false;
  std::vector<AtomId> pre_positive;
  std::vector<AtomId> pre_negative;
  EffectGroup effect;
  std::vector<EffectGroup> conditional;

  std::string text() const {
    std::string out = "(" + name;
    for (const auto& a : args) out += " " + a;
    return out + ")";
  }
};

struct GroundedTask {
  std::vector<GroundAtom> atoms;
  State init;
  GroundFormula goal;
  std::vector<GroundAction> actions;

  std::size_t num_atoms() const noexcept { return atoms.size(); }
};

struct GroundingLimits {
  std::size_t max_atoms = 1'000'000;
  std::size_t max_actions = 1'000'000;
  std::size_t max_bindings = 50'000'000;
};

class GroundingExplosion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Binding = std::vector<std::pair<std::string, std::string>>;

class Grounder {
 public:
  Grounder(const pddl::LinkedTask& task, const GroundingLimits& limits) : task_(task), limits_(limits) {
    for (const auto& a : task.domain.actions) collect_fluents(a.effect);
    for (const auto& atom : task.problem.init) init_keys_.insert(key_of(atom.predicate, atom.args));
  }

  GroundedTask run() {
    GroundedTask out;
    for (const auto& schema : task_.domain.actions) ground_schema(schema, out.actions);
    out.goal = condition(task_.problem.goal, {});
    std::vector<AtomId> init_ids;
    for (const auto& atom : task_.problem.init)
      if (fluents_.contains(atom.predicate)) init_ids.push_back(intern(atom.predicate, atom.args));
    out.atoms = std::move(atoms_);
    out.init = State(out.atoms.size());
    for (auto id : init_ids) out.init.set(id);
    return out;
  }

 private:
  static std::string key_of(const std::string& predicate, const std::vector<std::string>& args) {
    std::string k = predicate;
    for (const auto& a : args) {
      k += ' ';
      k += a;
    }
    return k;
  }

  void collect_fluents(const pddl::Formula& f) {
    if (f.kind == pddl::FormulaKind::Atom) fluents_.insert(f.predicate);
    if (f.kind == pddl::FormulaKind::When) {
      collect_fluents(f.children[1]);
      return;
    }
    for (const auto& c : f.children) collect_fluents(c);
  }

  AtomId intern(const std::string& predicate, const std::vector<std::string>& args) {
    auto key = key_of(predicate, args);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    if (atoms_.size() >= limits_.max_atoms)
      throw GroundingExplosion("atom universe exceeds " + std::to_string(limits_.max_atoms));
    const auto id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back(GroundAtom{predicate, args});
    ids_.emplace(std::move(key), id);
    return id;
  }

  static const std::string& resolve(const std::string& term, const Binding& b) {
    if (!pddl::is_variable(term)) return term;
    for (auto it = b.rbegin(); it != b.rend(); ++it)
      if (it->first == term) return it->second;
    return term;
  }

  std::vector<std::string> substitute(const std::vector<std::string>& args, const Binding& b) const {
    std::vector<std::string> out;
    out.reserve(args.size());
    for (const auto& a : args) out.push_back(resolve(a, b));
    return out;
  }

  /// Calls fn(binding) for every instantiation of `vars` on top of `base`.
  template <class Fn>
  void for_each_instance(const std::vector<pddl::TypedName>& vars, Binding base, Fn&& fn) const {
    std::vector<std::vector<std::string>> choices;
    for (const auto& v : vars) {
      choices.push_back(task_.objects_of(v.type));
      if (choices.back().empty()) return;
    }
    std::vector<std::size_t> idx(vars.size(), 0);
    const std::size_t mark = base.size();
    while (true) {
      base.resize(mark);
      for (std::size_t i = 0; i < vars.size(); ++i) base.emplace_back(vars[i].name, choices[i][idx[i]]);
      fn(base);
      std::size_t k = vars.size();
      while (k > 0) {
        --k;
        if (++idx[k] < choices[k].size()) break;
        idx[k] = 0;
        if (k == 0) return;
      }
      if (vars.empty()) return;
    }
  }

  GroundFormula condition(const pddl::Formula& f, const Binding& b) {
    using K = pddl::FormulaKind;
    switch (f.kind) {
      case K::Atom: {
        auto args = substitute(f.args, b);
        if (!fluents_.contains(f.predicate)) return GroundFormula::constant(init_keys_.contains(key_of(f.predicate, args)));
        return GroundFormula::make_atom(intern(f.predicate, args));
      }
      case K::Equals:
        return GroundFormula::constant(resolve(f.args[0], b) == resolve(f.args[1], b));
      case K::Not:
        return GroundFormula::make_not(condition(f.children.front(), b));
      case K::And:
      case K::Or: {
        std::vector<GroundFormula> parts;
        for (const auto& c : f.children) parts.push_back(condition(c, b));
        return GroundFormula::make_junction(f.kind == K::And ? GroundFormula::Kind::And : GroundFormula::Kind::Or,
                                            std::move(parts));
      }
      case K::Forall: {
        std::vector<GroundFormula> parts;
        for_each_instance(f.vars, b, [&](const Binding& inner) { parts.push_back(condition(f.children.front(), inner)); });
        return GroundFormula::make_junction(GroundFormula::Kind::And, std::move(parts));
      }
      case K::When:
        break;
    }
    return GroundFormula::constant(false);
  }

  void effect(const pddl::Formula& f, const Binding& b, EffectGroup& group, std::vector<EffectGroup>& conditional) {
    using K = pddl::FormulaKind;
    switch (f.kind) {
      case K::Atom:
        group.adds.push_back(intern(f.predicate, substitute(f.args, b)));
        return;
      case K::Not: {
        const auto& inner = f.children.front();
        group.deletes.push_back(intern(inner.predicate, substitute(inner.args, b)));
        return;
      }
      case K::And:
        for (const auto& c : f.children) effect(c, b, group, conditional);
        return;
      case K::Forall:
        for_each_instance(f.vars, b, [&](const Binding& inner) { effect(f.children.front(), inner, group, conditional); });
        return;
      case K::When: {
        GroundFormula cond = condition(f.children[0], b);
        if (cond.kind == GroundFormula::Kind::False) return;
        if (cond.kind == GroundFormula::Kind::True) {
          effect(f.children[1], b, group, conditional);
          return;
        }
        EffectGroup g;
        g.condition = std::move(cond);
        std::vector<EffectGroup> nested;
        effect(f.children[1], b, g, nested);
        conditional.push_back(std::move(g));
        return;
      }
      default:
        return;
    }
  }

  static void normalize(EffectGroup& g) {
    auto uniq = [](std::vector<AtomId>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(g.adds);
    uniq(g.deletes);
    std::vector<AtomId> kept;
    std::set_difference(g.deletes.begin(), g.deletes.end(), g.adds.begin(), g.adds.end(), std::back_inserter(kept));
    g.deletes = std::move(kept);
  }

  static void flatten(GroundAction& a) {
    using GK = GroundFormula::Kind;
    auto literal = [&](const GroundFormula& f) {
      if (f.kind == GK::Atom) {
        a.pre_positive.push_back(f.atom);
        return true;
      }
      if (f.kind == GK::Not && f.children.front().kind == GK::Atom) {
        a.pre_negative.push_back(f.children.front().atom);
        return true;
      }
      return f.kind == GK::True;
    };
    bool flat = true;
    if (a.precondition.kind == GK::And) {
      for (const auto& c : a.precondition.children) flat = flat && literal(c);
    } else {
      flat = literal(a.precondition);
    }
    a.flat_precondition = flat;
    if (!flat) {
      a.pre_positive.clear();
      a.pre_negative.clear();
    }
  }

  /// True when applying `a` can never change a state that satisfies its
  /// precondition.
  static bool is_noop(const GroundAction& a) {
    if (!a.conditional.empty() || !a.flat_precondition) return false;
    auto within = [](const std::vector<AtomId>& xs, std::vector<AtomId> set) {
      std::sort(set.begin(), set.end());
      return std::all_of(xs.begin(), xs.end(), [&](AtomId x) { return std::binary_search(set.begin(), set.end(), x); });
    };
    return within(a.effect.adds, a.pre_positive) && within(a.effect.deletes, a.pre_negative);
  }

  /// A top-level precondition conjunct that only mentions static predicates
  /// or equality, checked as soon as its last parameter is bound.
  struct EarlyCheck {
    const pddl::Formula* literal;
    std::size_t ready_at;
  };

  std::vector<EarlyCheck> early_checks(const pddl::ActionSchema& schema) const {
    std::vector<EarlyCheck> out;
    std::vector<const pddl::Formula*> conjuncts;
    if (schema.precondition.kind == pddl::FormulaKind::And) {
      for (const auto& c : schema.precondition.children) conjuncts.push_back(&c);
    } else {
      conjuncts.push_back(&schema.precondition);
    }
    for (const auto* c : conjuncts) {
      const pddl::Formula* core = c->kind == pddl::FormulaKind::Not ? &c->children.front() : c;
      const bool is_static = core->kind == pddl::FormulaKind::Equals ||
                             (core->kind == pddl::FormulaKind::Atom && !fluents_.contains(core->predicate));
      if (!is_static) continue;
      std::size_t ready = 0;
      bool ok = true;
      for (const auto& arg : core->args) {
        if (!pddl::is_variable(arg)) continue;
        auto it = std::find_if(schema.params.begin(), schema.params.end(), [&](const auto& p) { return p.name == arg; });
        if (it == schema.params.end()) {
          ok = false;
          break;
        }
        ready = std::max(ready, static_cast<std::size_t>(it - schema.params.begin()) + 1);
      }
      if (ok) out.push_back(EarlyCheck{c, ready});
    }
    return out;
  }

  void ground_schema(const pddl::ActionSchema& schema, std::vector<GroundAction>& out) {
    std::vector<std::vector<std::string>> choices;
    for (const auto& p : schema.params) choices.push_back(task_.objects_of(p.type));
    const auto checks = early_checks(schema);
    Binding binding;
    binding.reserve(schema.params.size());

    auto passes = [&](std::size_t bound) {
      for (const auto& c : checks) {
        if (c.ready_at != bound) continue;
        if (condition(*c.literal, binding).kind == GroundFormula::Kind::False) return false;
      }
      return true;
    };

    auto emit = [&] {
      GroundAction a;
      a.precondition = condition(schema.precondition, binding);
      if (a.precondition.kind == GroundFormula::Kind::False) return;
      effect(schema.effect, binding, a.effect, a.conditional);
      normalize(a.effect);
      for (auto& g : a.conditional) normalize(g);
      flatten(a);
      if (is_noop(a)) return;
      a.name = schema.name;
      for (const auto& [var, obj] : binding) a.args.push_back(obj);
      if (out.size() >= limits_.max_actions)
        throw GroundingExplosion("ground actions exceed " + std::to_string(limits_.max_actions));
      out.push_back(std::move(a));
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
      if (++bindings_ > limits_.max_bindings)
        throw GroundingExplosion("parameter bindings exceed " + std::to_string(limits_.max_bindings));
      if (!passes(depth)) return;
      if (depth == schema.params.size()) {
        emit();
        return;
      }
      for (const auto& obj : choices[depth]) {
        binding.emplace_back(schema.params[depth].name, obj);
        self(self, depth + 1);
        binding.pop_back();
      }
    };
    recurse(recurse, 0);
  }

  const pddl::LinkedTask& task_;
  GroundingLimits limits_;
  std::set<std::string, std::less<>> fluents_;
  std::set<std::string, std::less<>> init_keys_;
  std::vector<GroundAtom> atoms_;
  std::unordered_map<std::string, AtomId> ids_;
  std::size_t bindings_ = 0;
};

}  // namespace detail

/// Instantiates every action schema over all type-consistent object tuples.
///
/// Static predicates (never touched by an effect) and `=` are evaluated
/// against the initial state here, so instantiations whose precondition is
/// statically false are dropped, as are instantiations that cannot change
/// any state. Tuples with repeated objects are otherwise kept.
inline GroundedTask ground(const pddl::LinkedTask& task, const GroundingLimits& limits = {}) {
  return detail::Grounder(task, limits).run();
}

}  // namespace axiomforge::planner
