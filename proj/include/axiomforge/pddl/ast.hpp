#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "axiomforge/pddl/diagnostics.hpp"

namespace axiomforge::pddl {

inline constexpr std::string_view kRootType = "object";

/// Requirement flags the front end accepts. Everything else is rejected
/// as UnsupportedConstruct.
inline const std::set<std::string, std::less<>>& supported_requirements() {
  static const std::set<std::string, std::less<>> flags = {
      ":strips",
      ":typing",
      ":equality",
      ":negative-preconditions",
      ":disjunctive-preconditions",
      ":conditional-effects",
      ":universal-preconditions",
  };
  return flags;
}

/// A type reference: a single type name, or the members of an `(either ...)`.
using TypeRef = std::vector<std::string>;

inline TypeRef root_type() { return TypeRef{std::string(kRootType)}; }

struct TypedName {
  std::string name;
  TypeRef type = root_type();
  SourcePos pos;

  bool operator==(const TypedName&) const = default;
};

struct TypeDecl {
  std::string name;
  std::string parent = std::string(kRootType);
  SourcePos pos;

  bool operator==(const TypeDecl&) const = default;
};

enum class FormulaKind { Atom, Equals, Not, And, Or, Forall, When };

/// Precondition, goal and effect formulas share one tree type.
///
///   Atom    predicate + args
///   Equals  args[0] = args[1]
///   Not     children[0]
///   And/Or  children
///   Forall  vars, children[0]
///   When    children[0] condition, children[1] effect
struct Formula {
  FormulaKind kind = FormulaKind::And;
  std::string predicate;
  std::vector<std::string> args;
  std::vector<TypedName> vars;
  std::vector<Formula> children;
  SourcePos pos;

  bool operator==(const Formula&) const = default;

  static Formula atom(std::string predicate, std::vector<std::string> args, SourcePos pos = {}) {
    Formula f;
    f.kind = FormulaKind::Atom;
    f.predicate = std::move(predicate);
    f.args = std::move(args);
    f.pos = pos;
    return f;
  }
  static Formula equals(std::string lhs, std::string rhs, SourcePos pos = {}) {
    Formula f;
    f.kind = FormulaKind::Equals;
    f.args = {std::move(lhs), std::move(rhs)};
    f.pos = pos;
    return f;
  }
  static Formula negate(Formula inner, SourcePos pos = {}) {
    Formula f;
    f.kind = FormulaKind::Not;
    f.children.push_back(std::move(inner));
    f.pos = pos;
    return f;
  }
  static Formula conjunction(std::vector<Formula> parts = {}, SourcePos pos = {}) {
    Formula f;
    f.kind = FormulaKind::And;
    f.children = std::move(parts);
    f.pos = pos;
    return f;
  }
  static Formula disjunction(std::vector<Formula> parts, SourcePos pos = {}) {
    Formula f;
    f.kind = FormulaKind::Or;
    f.children = std::move(parts);
    f.pos = pos;
    return f;
  }
  static Formula forall(std::vector<TypedName> vars, Formula body, SourcePos pos = {}) {
    Formula f;
    f.kind = FormulaKind::Forall;
    f.vars = std::move(vars);
    f.children.push_back(std::move(body));
    f.pos = pos;
    return f;
  }
  static Formula when(Formula condition, Formula effect, SourcePos pos = {}) {
    Formula f;
    f.kind = FormulaKind::When;
    f.children.push_back(std::move(condition));
    f.children.push_back(std::move(effect));
    f.pos = pos;
    return f;
  }

  bool is_literal() const {
    if (kind == FormulaKind::Atom || kind == FormulaKind::Equals) return true;
    return kind == FormulaKind::Not && children.size() == 1 &&
           (children[0].kind == FormulaKind::Atom || children[0].kind == FormulaKind::Equals);
  }
};

inline bool is_variable(std::string_view term) { return !term.empty() && term.front() == '?'; }

struct PredicateDecl {
  std::string name;
  std::vector<TypedName> params;
  SourcePos pos;

  std::size_t arity() const noexcept { return params.size(); }
  bool operator==(const PredicateDecl&) const = default;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  Formula precondition = Formula::conjunction();
  Formula effect = Formula::conjunction();
  SourcePos pos;

  bool operator==(const ActionSchema&) const = default;
};

struct DomainAst {
  std::string name;
  std::vector<std::string> requirements;
  std::vector<TypeDecl> types;
  std::vector<TypedName> constants;
  std::vector<PredicateDecl> predicates;
  std::vector<ActionSchema> actions;
  SourcePos pos;

  bool operator==(const DomainAst&) const = default;

  const PredicateDecl* find_predicate(std::string_view n) const {
    auto it = std::find_if(predicates.begin(), predicates.end(), [&](const auto& p) { return p.name == n; });
    return it == predicates.end() ? nullptr : &*it;
  }
  const ActionSchema* find_action(std::string_view n) const {
    auto it = std::find_if(actions.begin(), actions.end(), [&](const auto& a) { return a.name == n; });
    return it == actions.end() ? nullptr : &*it;
  }
  ActionSchema* find_action(std::string_view n) {
    auto it = std::find_if(actions.begin(), actions.end(), [&](const auto& a) { return a.name == n; });
    return it == actions.end() ? nullptr : &*it;
  }
};

struct ProblemAst {
  std::string name;
  std::string domain_name;
  std::vector<TypedName> objects;
  std::vector<Formula> init;  // ground atoms
  Formula goal = Formula::conjunction();
  SourcePos pos;

  bool operator==(const ProblemAst&) const = default;
};

}  // namespace axiomforge::pddl
