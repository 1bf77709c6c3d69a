#pragma once

#include <string>
#include <vector>

#include "axiomforge/pddl/ast.hpp"

namespace axiomforge::pddl {

namespace detail {

inline void print_type(std::string& out, const TypeRef& t) {
  if (t.size() == 1) {
    out += t.front();
    return;
  }
  out += "(either";
  for (const auto& m : t) {
    out += ' ';
    out += m;
  }
  out += ')';
}

/// Groups maximal runs of equal type: `?a ?b - t ?c`. A run of the root
/// type is written bare only when it ends the list; elsewhere it would
/// pick up the next run's type on re-reading.
inline void print_typed_list(std::string& out, const std::vector<TypedName>& names) {
  std::size_t i = 0;
  bool first = true;
  while (i < names.size()) {
    std::size_t j = i;
    while (j < names.size() && names[j].type == names[i].type) ++j;
    for (std::size_t k = i; k < j; ++k) {
      if (!first) out += ' ';
      first = false;
      out += names[k].name;
    }
    const bool bare = names[i].type == root_type() && j == names.size();
    if (!bare) {
      out += " - ";
      print_type(out, names[i].type);
    }
    i = j;
  }
}

inline void print_formula(std::string& out, const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Atom:
      out += '(';
      out += f.predicate;
      for (const auto& a : f.args) {
        out += ' ';
        out += a;
      }
      out += ')';
      return;
    case FormulaKind::Equals:
      out += "(= " + f.args[0] + ' ' + f.args[1] + ')';
      return;
    case FormulaKind::Not:
      out += "(not ";
      print_formula(out, f.children.front());
      out += ')';
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      out += f.kind == FormulaKind::And ? "(and" : "(or";
      for (const auto& c : f.children) {
        out += ' ';
        print_formula(out, c);
      }
      out += ')';
      return;
    case FormulaKind::Forall:
      out += "(forall (";
      print_typed_list(out, f.vars);
      out += ") ";
      print_formula(out, f.children.front());
      out += ')';
      return;
    case FormulaKind::When:
      out += "(when ";
      print_formula(out, f.children[0]);
      out += ' ';
      print_formula(out, f.children[1]);
      out += ')';
      return;
  }
}

}  // namespace detail

inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_formula(out, f);
  return out;
}

/// Deterministic text for a domain. Declaration and conjunct order are kept
/// as parsed; whitespace and comments are not.
inline std::string print_canonical(const DomainAst& d) {
  std::string out = "(define (domain " + d.name + ")\n";
  if (!d.requirements.empty()) {
    out += "  (:requirements";
    for (const auto& r : d.requirements) out += ' ' + r;
    out += ")\n";
  }
  if (!d.types.empty()) {
    std::vector<TypedName> as_list;
    for (const auto& t : d.types) as_list.push_back(TypedName{t.name, TypeRef{t.parent}, t.pos});
    out += "  (:types ";
    detail::print_typed_list(out, as_list);
    out += ")\n";
  }
  if (!d.constants.empty()) {
    out += "  (:constants ";
    detail::print_typed_list(out, d.constants);
    out += ")\n";
  }
  out += "  (:predicates";
  for (const auto& p : d.predicates) {
    out += "\n    (" + p.name;
    if (!p.params.empty()) {
      out += ' ';
      detail::print_typed_list(out, p.params);
    }
    out += ')';
  }
  out += ")\n";
  for (const auto& a : d.actions) {
    out += "  (:action " + a.name + "\n    :parameters (";
    detail::print_typed_list(out, a.params);
    out += ")\n    :precondition ";
    detail::print_formula(out, a.precondition);
    out += "\n    :effect ";
    detail::print_formula(out, a.effect);
    out += ")\n";
  }
  out += ")\n";
  return out;
}

inline std::string print_problem(const ProblemAst& p) {
  std::string out = "(define (problem " + p.name + ")\n  (:domain " + p.domain_name + ")\n";
  if (!p.objects.empty()) {
    out += "  (:objects ";
    detail::print_typed_list(out, p.objects);
    out += ")\n";
  }
  out += "  (:init";
  for (const auto& a : p.init) {
    out += "\n    ";
    detail::print_formula(out, a);
  }
  out += ")\n  (:goal ";
  detail::print_formula(out, p.goal);
  out += "))\n";
  return out;
}

}  // namespace axiomforge::pddl
