#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "axiomforge/pddl/ast.hpp"
#include "axiomforge/pddl/diagnostics.hpp"
#include "axiomforge/pddl/sexpr.hpp"

namespace axiomforge::pddl {

namespace detail {

/// Turns s-expressions into AST nodes, collecting diagnostics instead of
/// stopping at the first problem where the structure allows it.
class AstBuilder {
 public:
  std::vector<Diagnostic> diagnostics;

  void error(DiagnosticKind kind, SourcePos pos, std::string message) {
    diagnostics.push_back(Diagnostic{kind, pos, std::move(message)});
  }

  bool expect_symbol(const SExpr& e, std::string_view what) {
    if (e.is_symbol()) return true;
    error(DiagnosticKind::SyntaxError, e.pos, "expected " + std::string(what));
    return false;
  }

  TypeRef type_ref(const SExpr& e) {
    if (e.is_symbol()) return TypeRef{e.symbol};
    if (e.has_head("either") && e.items.size() >= 2) {
      TypeRef members;
      for (std::size_t i = 1; i < e.items.size(); ++i)
        if (expect_symbol(e.items[i], "type name in (either ...)")) members.push_back(e.items[i].symbol);
      return members;
    }
    error(DiagnosticKind::SyntaxError, e.pos, "expected type name or (either ...)");
    return root_type();
  }

  /// `a b - t c - (either u v) d` → [(a,t) (b,t) (c,u|v) (d,object)].
  std::vector<TypedName> typed_list(const std::vector<SExpr>& items, std::size_t begin, bool variables) {
    std::vector<TypedName> out;
    std::size_t pending_from = 0;
    for (std::size_t i = begin; i < items.size(); ++i) {
      const SExpr& item = items[i];
      if (item.is_symbol("-")) {
        if (i + 1 >= items.size()) {
          error(DiagnosticKind::SyntaxError, item.pos, "expected type after '-'");
          break;
        }
        if (pending_from == out.size()) error(DiagnosticKind::SyntaxError, item.pos, "expected name before '-'");
        TypeRef t = type_ref(items[i + 1]);
        for (std::size_t k = pending_from; k < out.size(); ++k) out[k].type = t;
        pending_from = out.size();
        ++i;
        continue;
      }
      if (!expect_symbol(item, variables ? "variable" : "name")) continue;
      if (variables != is_variable(item.symbol)) {
        error(DiagnosticKind::SyntaxError, item.pos,
              std::string(variables ? "expected variable (?name), got '" : "expected name, got variable '") +
                  item.symbol + "'");
        continue;
      }
      out.push_back(TypedName{item.symbol, root_type(), item.pos});
    }
    return out;
  }

  std::vector<std::string> terms(const SExpr& e, std::size_t begin) {
    std::vector<std::string> out;
    for (std::size_t i = begin; i < e.items.size(); ++i)
      if (expect_symbol(e.items[i], "term")) out.push_back(e.items[i].symbol);
    return out;
  }

  Formula atom(const SExpr& e) {
    const std::string_view h = e.head();
    if (h.empty() || h.front() == '?' || h.front() == ':') {
      error(DiagnosticKind::SyntaxError, e.pos, "expected predicate name");
      return Formula::conjunction({}, e.pos);
    }
    return Formula::atom(std::string(h), terms(e, 1), e.pos);
  }

  /// Preconditions and goals: and / or / not / = / forall / atoms.
  Formula condition(const SExpr& e) {
    if (!e.is_list) {
      error(DiagnosticKind::SyntaxError, e.pos, "expected formula");
      return Formula::conjunction({}, e.pos);
    }
    if (e.items.empty()) return Formula::conjunction({}, e.pos);
    const std::string_view h = e.head();
    if (h == "and" || h == "or") {
      std::vector<Formula> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(condition(e.items[i]));
      return h == "and" ? Formula::conjunction(std::move(parts), e.pos)
                        : Formula::disjunction(std::move(parts), e.pos);
    }
    if (h == "not") {
      if (e.items.size() != 2) {
        error(DiagnosticKind::SyntaxError, e.pos, "expected exactly one operand for not");
        return Formula::conjunction({}, e.pos);
      }
      return Formula::negate(condition(e.items[1]), e.pos);
    }
    if (h == "=") {
      if (e.items.size() != 3) {
        error(DiagnosticKind::ArityMismatch, e.pos, "= expects 2 arguments, got " + std::to_string(e.items.size() - 1));
        return Formula::conjunction({}, e.pos);
      }
      auto args = terms(e, 1);
      if (args.size() != 2) return Formula::conjunction({}, e.pos);
      return Formula::equals(args[0], args[1], e.pos);
    }
    if (h == "forall") {
      if (e.items.size() != 3 || !e.items[1].is_list) {
        error(DiagnosticKind::SyntaxError, e.pos, "expected (forall (vars) formula)");
        return Formula::conjunction({}, e.pos);
      }
      return Formula::forall(typed_list(e.items[1].items, 0, true), condition(e.items[2]), e.pos);
    }
    if (h == "when") {
      error(DiagnosticKind::UnsupportedConstruct, e.pos, "when is only allowed in effects");
      return Formula::conjunction({}, e.pos);
    }
    if (h == "exists" || h == "imply" || h == "preference") {
      error(DiagnosticKind::UnsupportedConstruct, e.pos, "unsupported formula head '" + std::string(h) + "'");
      return Formula::conjunction({}, e.pos);
    }
    return atom(e);
  }

  /// Effects: and / not atom / atom / forall / when (not nested).
  Formula effect(const SExpr& e, bool inside_when) {
    if (!e.is_list) {
      error(DiagnosticKind::SyntaxError, e.pos, "expected effect");
      return Formula::conjunction({}, e.pos);
    }
    if (e.items.empty()) return Formula::conjunction({}, e.pos);
    const std::string_view h = e.head();
    if (h == "and") {
      std::vector<Formula> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(effect(e.items[i], inside_when));
      return Formula::conjunction(std::move(parts), e.pos);
    }
    if (h == "not") {
      if (e.items.size() != 2 || !e.items[1].is_list || e.items[1].items.empty()) {
        error(DiagnosticKind::SyntaxError, e.pos, "expected (not (atom ...)) in effect");
        return Formula::conjunction({}, e.pos);
      }
      const std::string_view inner = e.items[1].head();
      if (inner == "and" || inner == "or" || inner == "not" || inner == "forall" || inner == "when" || inner == "=") {
        error(DiagnosticKind::UnsupportedConstruct, e.items[1].pos, "only atoms may be negated in effects");
        return Formula::conjunction({}, e.pos);
      }
      return Formula::negate(atom(e.items[1]), e.pos);
    }
    if (h == "forall") {
      if (inside_when) {
        error(DiagnosticKind::UnsupportedConstruct, e.pos, "forall nested inside when");
        return Formula::conjunction({}, e.pos);
      }
      if (e.items.size() != 3 || !e.items[1].is_list) {
        error(DiagnosticKind::SyntaxError, e.pos, "expected (forall (vars) effect)");
        return Formula::conjunction({}, e.pos);
      }
      return Formula::forall(typed_list(e.items[1].items, 0, true), effect(e.items[2], false), e.pos);
    }
    if (h == "when") {
      if (inside_when) {
        error(DiagnosticKind::UnsupportedConstruct, e.pos, "nested when");
        return Formula::conjunction({}, e.pos);
      }
      if (e.items.size() != 3) {
        error(DiagnosticKind::SyntaxError, e.pos, "expected (when condition effect)");
        return Formula::conjunction({}, e.pos);
      }
      return Formula::when(condition(e.items[1]), effect(e.items[2], true), e.pos);
    }
    if (h == "or" || h == "exists" || h == "imply" || h == "=" || h == "increase" || h == "decrease" ||
        h == "assign" || h == "scale-up" || h == "scale-down") {
      error(DiagnosticKind::UnsupportedConstruct, e.pos, "unsupported effect head '" + std::string(h) + "'");
      return Formula::conjunction({}, e.pos);
    }
    return atom(e);
  }

  void requirements(const SExpr& section, std::vector<std::string>& out) {
    for (std::size_t i = 1; i < section.items.size(); ++i) {
      const SExpr& flag = section.items[i];
      if (!expect_symbol(flag, "requirement flag")) continue;
      if (!supported_requirements().contains(flag.symbol)) {
        error(DiagnosticKind::UnsupportedConstruct, flag.pos, "requirement " + flag.symbol);
        continue;
      }
      out.push_back(flag.symbol);
    }
  }

  /// Checks `(define (<kind> NAME) ...)` and returns NAME.
  std::string header(const SExpr& root, std::string_view kind) {
    if (!root.has_head("define")) {
      error(DiagnosticKind::SyntaxError, root.pos, "expected (define ...)");
      return {};
    }
    if (root.items.size() < 2 || !root.items[1].has_head(kind) || root.items[1].items.size() != 2 ||
        !root.items[1].items[1].is_symbol()) {
      error(DiagnosticKind::SyntaxError, root.items.size() > 1 ? root.items[1].pos : root.pos,
            "expected (" + std::string(kind) + " <name>)");
      return {};
    }
    return root.items[1].items[1].symbol;
  }

  ActionSchema action(const SExpr& section) {
    ActionSchema a;
    a.pos = section.pos;
    if (section.items.size() < 2 || !section.items[1].is_symbol()) {
      error(DiagnosticKind::SyntaxError, section.pos, "expected action name");
      return a;
    }
    a.name = section.items[1].symbol;
    for (std::size_t i = 2; i < section.items.size(); i += 2) {
      const SExpr& key = section.items[i];
      if (i + 1 >= section.items.size()) {
        error(DiagnosticKind::SyntaxError, key.pos, "expected value after " + key.symbol);
        break;
      }
      const SExpr& value = section.items[i + 1];
      if (key.is_symbol(":parameters")) {
        if (!value.is_list) {
          error(DiagnosticKind::SyntaxError, value.pos, "expected parameter list");
          continue;
        }
        a.params = typed_list(value.items, 0, true);
      } else if (key.is_symbol(":precondition")) {
        a.precondition = condition(value);
      } else if (key.is_symbol(":effect")) {
        a.effect = effect(value, false);
      } else {
        error(key.is_symbol() && !key.symbol.empty() && key.symbol.front() == ':'
                  ? DiagnosticKind::UnsupportedConstruct
                  : DiagnosticKind::SyntaxError,
              key.pos, "expected :parameters, :precondition or :effect");
      }
    }
    return a;
  }
};

/// Walks formulas with a variable scope, reporting references the domain
/// does not declare.
class ScopeChecker {
 public:
  ScopeChecker(const DomainAst& domain, std::vector<Diagnostic>& out, std::set<std::string, std::less<>> objects,
               std::string owner)
      : domain_(domain), out_(out), objects_(std::move(objects)), owner_(std::move(owner)) {}

  enum class Where { Condition, Effect, WhenEffect };

  void check(const Formula& f, std::vector<std::string>& scope, Where where) {
    switch (f.kind) {
      case FormulaKind::Atom: {
        const PredicateDecl* decl = domain_.find_predicate(f.predicate);
        if (decl == nullptr) {
          report(DiagnosticKind::UndeclaredPredicate, f.pos, "predicate " + f.predicate + " is not declared");
        } else if (decl->arity() != f.args.size()) {
          report(DiagnosticKind::ArityMismatch, f.pos,
                 f.predicate + " expects " + std::to_string(decl->arity()) + " arguments, got " +
                     std::to_string(f.args.size()));
        }
        check_terms(f, scope);
        break;
      }
      case FormulaKind::Equals:
        if (where != Where::Condition)
          report(DiagnosticKind::UnsupportedConstruct, f.pos, "= is only allowed in conditions");
        check_terms(f, scope);
        break;
      case FormulaKind::Not:
        if (where != Where::Condition && (f.children.size() != 1 || f.children[0].kind != FormulaKind::Atom))
          report(DiagnosticKind::UnsupportedConstruct, f.pos, "only atoms may be negated in effects");
        for (const auto& c : f.children) check(c, scope, where);
        break;
      case FormulaKind::And:
        for (const auto& c : f.children) check(c, scope, where);
        break;
      case FormulaKind::Or:
        if (where != Where::Condition) report(DiagnosticKind::UnsupportedConstruct, f.pos, "or in effect");
        for (const auto& c : f.children) check(c, scope, where);
        break;
      case FormulaKind::Forall: {
        if (where == Where::WhenEffect)
          report(DiagnosticKind::UnsupportedConstruct, f.pos, "forall nested inside when");
        const std::size_t mark = scope.size();
        for (const auto& v : f.vars) scope.push_back(v.name);
        for (const auto& c : f.children) check(c, scope, where);
        scope.resize(mark);
        break;
      }
      case FormulaKind::When:
        if (where != Where::Effect) {
          report(DiagnosticKind::UnsupportedConstruct, f.pos, "when is only allowed in effects");
          break;
        }
        if (f.children.size() == 2) {
          check(f.children[0], scope, Where::Condition);
          check(f.children[1], scope, Where::WhenEffect);
        }
        break;
    }
  }

 private:
  void report(DiagnosticKind kind, SourcePos pos, std::string message) {
    if (!owner_.empty()) message = owner_ + ": " + message;
    out_.push_back(Diagnostic{kind, pos, std::move(message)});
  }

  void check_terms(const Formula& f, const std::vector<std::string>& scope) {
    for (const auto& t : f.args) {
      if (is_variable(t)) {
        if (std::find(scope.begin(), scope.end(), t) == scope.end())
          report(DiagnosticKind::UnboundVariable, f.pos, "variable " + t + " is not bound");
      } else if (!objects_.contains(t)) {
        report(DiagnosticKind::UndeclaredObject, f.pos, "constant " + t + " is not declared");
      }
    }
  }

  const DomainAst& domain_;
  std::vector<Diagnostic>& out_;
  std::set<std::string, std::less<>> objects_;
  std::string owner_;
};

inline void check_distinct(const std::vector<TypedName>& names, std::string_view what, std::vector<Diagnostic>& out,
                           DiagnosticKind kind = DiagnosticKind::DuplicateDeclaration) {
  std::set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n.name).second)
      out.push_back(Diagnostic{kind, n.pos, std::string(what) + " " + n.name + " declared twice"});
}

}  // namespace detail

/// Semantic checks on a domain: supported requirements, unique names,
/// declared predicates with matching arity, bound variables, and formula
/// placement rules (`or` only in conditions, `when` only in effects).
inline std::vector<Diagnostic> validate_domain(const DomainAst& domain) {
  std::vector<Diagnostic> out;
  for (const auto& r : domain.requirements)
    if (!supported_requirements().contains(r))
      out.push_back(Diagnostic{DiagnosticKind::UnsupportedConstruct, domain.pos, "requirement " + r});

  {
    std::set<std::string_view> seen;
    for (const auto& t : domain.types)
      if (!seen.insert(t.name).second)
        out.push_back(Diagnostic{DiagnosticKind::DuplicateDeclaration, t.pos, "type " + t.name + " declared twice"});
  }
  detail::check_distinct(domain.constants, "constant", out);

  std::set<std::string_view> predicate_names;
  for (const auto& p : domain.predicates) {
    if (!predicate_names.insert(p.name).second)
      out.push_back(
          Diagnostic{DiagnosticKind::DuplicateDeclaration, p.pos, "predicate " + p.name + " declared twice"});
    detail::check_distinct(p.params, "parameter", out);
  }

  std::set<std::string, std::less<>> constants;
  for (const auto& c : domain.constants) constants.insert(c.name);

  std::set<std::string_view> action_names;
  for (const auto& a : domain.actions) {
    if (!action_names.insert(a.name).second)
      out.push_back(Diagnostic{DiagnosticKind::DuplicateDeclaration, a.pos, "action " + a.name + " declared twice"});
    detail::check_distinct(a.params, "parameter", out);
    detail::ScopeChecker checker(domain, out, constants, "action " + a.name);
    std::vector<std::string> scope;
    for (const auto& p : a.params) scope.push_back(p.name);
    checker.check(a.precondition, scope, detail::ScopeChecker::Where::Condition);
    checker.check(a.effect, scope, detail::ScopeChecker::Where::Effect);
  }
  return out;
}

/// Parses a domain file and validates it. On any diagnostic the value is
/// empty.
inline Parsed<DomainAst> parse_domain(std::string_view text) {
  Parsed<DomainAst> result;
  SExpr root;
  try {
    root = read_sexpr(text);
  } catch (const SExprError& e) {
    result.diagnostics.push_back(Diagnostic{DiagnosticKind::SyntaxError, e.pos(), e.what()});
    return result;
  }

  detail::AstBuilder b;
  DomainAst d;
  d.pos = root.pos;
  d.name = b.header(root, "domain");
  if (!b.diagnostics.empty()) {
    result.diagnostics = std::move(b.diagnostics);
    return result;
  }

  for (std::size_t i = 2; i < root.items.size(); ++i) {
    const SExpr& s = root.items[i];
    const std::string_view h = s.head();
    if (h.empty() || h.front() != ':') {
      b.error(DiagnosticKind::SyntaxError, s.pos, "expected domain section (:name ...)");
      continue;
    }
    if (h == ":requirements") {
      b.requirements(s, d.requirements);
    } else if (h == ":types") {
      for (auto& t : b.typed_list(s.items, 1, false)) {
        if (t.type.size() != 1) {
          b.error(DiagnosticKind::UnsupportedConstruct, t.pos, "either as a parent type");
          continue;
        }
        d.types.push_back(TypeDecl{t.name, t.type.front(), t.pos});
      }
    } else if (h == ":constants") {
      auto cs = b.typed_list(s.items, 1, false);
      d.constants.insert(d.constants.end(), cs.begin(), cs.end());
    } else if (h == ":predicates") {
      for (std::size_t k = 1; k < s.items.size(); ++k) {
        const SExpr& p = s.items[k];
        if (!p.is_list || p.items.empty() || !p.items.front().is_symbol() || is_variable(p.head())) {
          b.error(DiagnosticKind::SyntaxError, p.pos, "expected predicate declaration (name ?var ...)");
          continue;
        }
        d.predicates.push_back(PredicateDecl{std::string(p.head()), b.typed_list(p.items, 1, true), p.pos});
      }
    } else if (h == ":action") {
      d.actions.push_back(b.action(s));
    } else {
      b.error(DiagnosticKind::UnsupportedConstruct, s.pos, "section " + std::string(h));
    }
  }

  result.diagnostics = std::move(b.diagnostics);
  if (!result.diagnostics.empty()) return result;
  result.diagnostics = validate_domain(d);
  if (result.diagnostics.empty()) result.value = std::move(d);
  return result;
}

/// Problem-local checks: unique objects, ground init, closed goal.
/// Cross-checks against a domain happen in `link`.
inline std::vector<Diagnostic> validate_problem(const ProblemAst& problem) {
  std::vector<Diagnostic> out;
  detail::check_distinct(problem.objects, "object", out, DiagnosticKind::DuplicateObject);
  for (const auto& atom : problem.init) {
    if (atom.kind != FormulaKind::Atom) {
      out.push_back(Diagnostic{DiagnosticKind::UnsupportedConstruct, atom.pos, "init entries must be atoms"});
      continue;
    }
    for (const auto& t : atom.args)
      if (is_variable(t))
        out.push_back(Diagnostic{DiagnosticKind::UnboundVariable, atom.pos, "init atom uses variable " + t});
  }
  // Free-variable check for the goal; predicate checks need the domain.
  struct Walker {
    std::vector<Diagnostic>& out;
    void walk(const Formula& f, std::vector<std::string>& scope) {
      if (f.kind == FormulaKind::When) {
        out.push_back(Diagnostic{DiagnosticKind::UnsupportedConstruct, f.pos, "when in goal"});
        return;
      }
      for (const auto& t : f.args)
        if (is_variable(t) && std::find(scope.begin(), scope.end(), t) == scope.end())
          out.push_back(Diagnostic{DiagnosticKind::UnboundVariable, f.pos, "goal variable " + t + " is not bound"});
      const std::size_t mark = scope.size();
      for (const auto& v : f.vars) scope.push_back(v.name);
      for (const auto& c : f.children) walk(c, scope);
      scope.resize(mark);
    }
  } walker{out};
  std::vector<std::string> scope;
  walker.walk(problem.goal, scope);
  return out;
}

inline Parsed<ProblemAst> parse_problem(std::string_view text) {
  Parsed<ProblemAst> result;
  SExpr root;
  try {
    root = read_sexpr(text);
  } catch (const SExprError& e) {
    result.diagnostics.push_back(Diagnostic{DiagnosticKind::SyntaxError, e.pos(), e.what()});
    return result;
  }

  detail::AstBuilder b;
  ProblemAst p;
  p.pos = root.pos;
  p.name = b.header(root, "problem");
  if (!b.diagnostics.empty()) {
    result.diagnostics = std::move(b.diagnostics);
    return result;
  }

  bool saw_domain = false;
  for (std::size_t i = 2; i < root.items.size(); ++i) {
    const SExpr& s = root.items[i];
    const std::string_view h = s.head();
    if (h == ":domain") {
      if (s.items.size() != 2 || !s.items[1].is_symbol()) {
        b.error(DiagnosticKind::SyntaxError, s.pos, "expected (:domain <name>)");
        continue;
      }
      p.domain_name = s.items[1].symbol;
      saw_domain = true;
    } else if (h == ":requirements") {
      std::vector<std::string> ignored;
      b.requirements(s, ignored);
    } else if (h == ":objects") {
      auto os = b.typed_list(s.items, 1, false);
      p.objects.insert(p.objects.end(), os.begin(), os.end());
    } else if (h == ":init") {
      for (std::size_t k = 1; k < s.items.size(); ++k) {
        const SExpr& a = s.items[k];
        if (!a.is_list || a.items.empty()) {
          b.error(DiagnosticKind::SyntaxError, a.pos, "expected ground atom");
          continue;
        }
        if (a.has_head("not") || a.has_head("=") || a.has_head("and")) {
          b.error(DiagnosticKind::UnsupportedConstruct, a.pos, "init entries must be atoms");
          continue;
        }
        p.init.push_back(b.atom(a));
      }
    } else if (h == ":goal") {
      if (s.items.size() != 2) {
        b.error(DiagnosticKind::SyntaxError, s.pos, "expected (:goal <formula>)");
        continue;
      }
      p.goal = b.condition(s.items[1]);
    } else if (!h.empty() && h.front() == ':') {
      b.error(DiagnosticKind::UnsupportedConstruct, s.pos, "section " + std::string(h));
    } else {
      b.error(DiagnosticKind::SyntaxError, s.pos, "expected problem section (:name ...)");
    }
  }
  if (!saw_domain) b.error(DiagnosticKind::SyntaxError, root.pos, "expected (:domain <name>)");

  result.diagnostics = std::move(b.diagnostics);
  if (!result.diagnostics.empty()) return result;
  result.diagnostics = validate_problem(p);
  if (result.diagnostics.empty()) result.value = std::move(p);
  return result;
}

}  // namespace axiomforge::pddl
