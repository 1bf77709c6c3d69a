#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "axiomforge/pddl/ast.hpp"
#include "axiomforge/pddl/diagnostics.hpp"
#include "axiomforge/pddl/parser.hpp"

namespace axiomforge::pddl {

/// Parent links for every type a domain mentions. Types that are used in
/// parameter lists but never declared hang directly off `object`.
class TypeHierarchy {
 public:
  TypeHierarchy() = default;

  explicit TypeHierarchy(const DomainAst& d) {
    parent_.emplace(std::string(kRootType), std::string());
    for (const auto& t : d.types) {
      if (t.name == kRootType) continue;
      parent_[t.name] = t.parent;
    }
    // Parents named only on the right-hand side, plus any referenced type.
    auto note = [&](const TypeRef& ref) {
      for (const auto& t : ref) parent_.try_emplace(t, std::string(kRootType));
    };
    for (const auto& t : d.types) parent_.try_emplace(t.parent, std::string(kRootType));
    for (const auto& c : d.constants) note(c.type);
    for (const auto& p : d.predicates)
      for (const auto& v : p.params) note(v.type);
    for (const auto& a : d.actions) {
      for (const auto& v : a.params) note(v.type);
      note_formula(a.precondition, note);
      note_formula(a.effect, note);
    }
  }

  bool contains(std::string_view t) const { return parent_.find(std::string(t)) != parent_.end(); }

  /// Reflexive, transitive; stops on cycles.
  bool is_subtype(std::string_view t, std::string_view ancestor) const {
    std::string cur(t);
    for (std::size_t guard = 0; guard <= parent_.size(); ++guard) {
      if (cur == ancestor) return true;
      auto it = parent_.find(cur);
      if (it == parent_.end() || it->second.empty()) return false;
      cur = it->second;
    }
    return false;
  }

  bool is_compatible(const TypeRef& object_type, const TypeRef& wanted) const {
    for (const auto& have : object_type)
      for (const auto& w : wanted)
        if (is_subtype(have, w)) return true;
    return false;
  }

 private:
  template <class Fn>
  static void note_formula(const Formula& f, Fn& note) {
    for (const auto& v : f.vars) note(v.type);
    for (const auto& c : f.children) note_formula(c, note);
  }

  std::map<std::string, std::string, std::less<>> parent_;
};

struct TypedObject {
  std::string name;
  TypeRef type;
};

/// A domain/problem pair that passed cross-validation.
struct LinkedTask {
  DomainAst domain;
  ProblemAst problem;
  TypeHierarchy types;
  std::vector<TypedObject> objects;  // domain constants first, then problem objects

  std::vector<std::string> objects_of(const TypeRef& wanted) const {
    std::vector<std::string> out;
    for (const auto& o : objects)
      if (types.is_compatible(o.type, wanted)) out.push_back(o.name);
    return out;
  }
};

namespace detail {

inline void check_ground_formula(const Formula& f, const DomainAst& d, const TypeHierarchy& types,
                                 const std::map<std::string, TypeRef, std::less<>>& objects,
                                 std::vector<std::pair<std::string, TypeRef>>& scope, std::vector<Diagnostic>& out) {
  auto type_of = [&](const std::string& term) -> const TypeRef* {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == term) return &it->second;
    auto it = objects.find(term);
    return it == objects.end() ? nullptr : &it->second;
  };
  switch (f.kind) {
    case FormulaKind::Atom: {
      const PredicateDecl* decl = d.find_predicate(f.predicate);
      if (decl == nullptr) {
        out.push_back(Diagnostic{DiagnosticKind::UndeclaredPredicate, f.pos, "predicate " + f.predicate +
                                                                                 " is not declared by the domain"});
        return;
      }
      if (decl->arity() != f.args.size()) {
        out.push_back(Diagnostic{DiagnosticKind::ArityMismatch, f.pos,
                                 f.predicate + " expects " + std::to_string(decl->arity()) + " arguments, got " +
                                     std::to_string(f.args.size())});
        return;
      }
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        const TypeRef* have = type_of(f.args[i]);
        if (have == nullptr) {
          out.push_back(Diagnostic{DiagnosticKind::UndeclaredObject, f.pos, "object " + f.args[i] + " is not declared"});
        } else if (!types.is_compatible(*have, decl->params[i].type)) {
          out.push_back(Diagnostic{DiagnosticKind::TypeError, f.pos,
                                   f.args[i] + " does not match the type of " + f.predicate + " argument " +
                                       std::to_string(i + 1)});
        }
      }
      return;
    }
    case FormulaKind::Equals:
      for (const auto& a : f.args)
        if (type_of(a) == nullptr)
          out.push_back(Diagnostic{DiagnosticKind::UndeclaredObject, f.pos, "object " + a + " is not declared"});
      return;
    case FormulaKind::Forall: {
      const std::size_t mark = scope.size();
      for (const auto& v : f.vars) scope.emplace_back(v.name, v.type);
      for (const auto& c : f.children) check_ground_formula(c, d, types, objects, scope, out);
      scope.resize(mark);
      return;
    }
    default:
      for (const auto& c : f.children) check_ground_formula(c, d, types, objects, scope, out);
  }
}

}  // namespace detail

/// Cross-checks a problem against a domain: matching domain name, declared
/// object types, declared predicates with correct arity and argument types.
inline Parsed<LinkedTask> link(const DomainAst& domain, const ProblemAst& problem) {
  Parsed<LinkedTask> result;
  auto& out = result.diagnostics;
  if (domain.name != problem.domain_name)
    out.push_back(Diagnostic{DiagnosticKind::DomainNameMismatch, problem.pos,
                             "problem targets domain " + problem.domain_name + ", got " + domain.name});

  LinkedTask task{domain, problem, TypeHierarchy(domain), {}};
  std::map<std::string, TypeRef, std::less<>> objects;
  for (const auto& c : domain.constants) {
    objects.emplace(c.name, c.type);
    task.objects.push_back(TypedObject{c.name, c.type});
  }
  for (const auto& o : problem.objects) {
    for (const auto& t : o.type)
      if (!task.types.contains(t))
        out.push_back(Diagnostic{DiagnosticKind::TypeError, o.pos, "object " + o.name + " has unknown type " + t});
    if (!objects.emplace(o.name, o.type).second) {
      out.push_back(Diagnostic{DiagnosticKind::DuplicateObject, o.pos, "object " + o.name + " declared twice"});
      continue;
    }
    task.objects.push_back(TypedObject{o.name, o.type});
  }

  std::vector<std::pair<std::string, TypeRef>> scope;
  for (const auto& a : problem.init) detail::check_ground_formula(a, domain, task.types, objects, scope, out);
  detail::check_ground_formula(problem.goal, domain, task.types, objects, scope, out);

  if (out.empty()) result.value = std::move(task);
  return result;
}

}  // namespace axiomforge::pddl
