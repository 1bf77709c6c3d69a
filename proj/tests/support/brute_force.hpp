#pragma once

// Reference planner for tests. Interprets the ASTs directly over string atoms
// and shares nothing with the production grounder or solver.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "axiomforge/pddl/ast.hpp"

namespace oracle {

using Atoms = std::set<std::string>;
using Env = std::map<std::string, std::string>;

class BruteForce {
 public:
  BruteForce(const axiomforge::pddl::DomainAst& d, const axiomforge::pddl::ProblemAst& p) : d_(d), p_(p) {
    for (const auto& t : d.types) parent_[t.name] = t.parent;
    for (const auto& c : d.constants) objects_.push_back({c.name, c.type});
    for (const auto& o : p.objects) objects_.push_back({o.name, o.type});
    for (const auto& a : p.init) init_.insert(key(a.predicate, a.args, {}));
  }

  /// Optimal plan length, or nullopt when the goal is unreachable within
  /// `max_states` visited states.
  std::optional<std::size_t> shortest(std::size_t max_states = 200000) const {
    std::map<Atoms, std::size_t> dist{{init_, 0}};
    std::deque<Atoms> q{init_};
    while (!q.empty()) {
      Atoms s = q.front();
      q.pop_front();
      const std::size_t g = dist[s];
      if (eval(p_.goal, {}, s)) return g;
      if (dist.size() > max_states) return std::nullopt;
      for (auto& n : successors(s)) {
        if (dist.count(n)) continue;
        dist[n] = g + 1;
        q.push_back(std::move(n));
      }
    }
    return std::nullopt;
  }

  std::size_t count_applicable_instances(const Atoms& s) const {
    std::size_t n = 0;
    for (const auto& a : d_.actions)
      for (const auto& env : bindings(a.params, {}))
        if (eval(a.precondition, env, s)) ++n;
    return n;
  }

  const Atoms& init() const { return init_; }

  std::vector<Atoms> successors(const Atoms& s) const {
    std::vector<Atoms> out;
    for (const auto& a : d_.actions) {
      for (const auto& env : bindings(a.params, {})) {
        if (!eval(a.precondition, env, s)) continue;
        std::vector<Group> groups(1);
        collect(a.effect, env, s, groups, 0);
        Atoms next = s;
        for (const auto& gr : groups) {
          for (const auto& x : gr.del)
            if (!gr.add.count(x)) next.erase(x);
          for (const auto& x : gr.add) next.insert(x);
        }
        out.push_back(std::move(next));
      }
    }
    return out;
  }

 private:
  struct Obj {
    std::string name;
    std::vector<std::string> type;
  };
  struct Group {
    std::set<std::string> add, del;
  };

  bool is_a(const std::string& t, const std::string& want) const {
    std::string cur = t;
    for (int guard = 0; guard < 64; ++guard) {
      if (cur == want) return true;
      auto it = parent_.find(cur);
      if (it == parent_.end()) return want == "object";
      cur = it->second;
    }
    return false;
  }

  bool fits(const Obj& o, const std::vector<std::string>& want) const {
    for (const auto& ot : o.type)
      for (const auto& w : want)
        if (is_a(ot, w)) return true;
    return false;
  }

  std::vector<Env> bindings(const std::vector<axiomforge::pddl::TypedName>& vars, Env base) const {
    std::vector<Env> out{base};
    for (const auto& v : vars) {
      std::vector<Env> grown;
      for (const auto& e : out)
        for (const auto& o : objects_)
          if (fits(o, v.type)) {
            Env x = e;
            x[v.name] = o.name;
            grown.push_back(std::move(x));
          }
      out = std::move(grown);
    }
    return out;
  }

  static std::string sub(const std::string& t, const Env& env) {
    auto it = env.find(t);
    return it == env.end() ? t : it->second;
  }

  static std::string key(const std::string& pred, const std::vector<std::string>& args, const Env& env) {
    std::string k = pred;
    for (const auto& a : args) k += " " + sub(a, env);
    return k;
  }

  bool eval(const axiomforge::pddl::Formula& f, const Env& env, const Atoms& s) const {
    using K = axiomforge::pddl::FormulaKind;
    switch (f.kind) {
      case K::Atom: return s.count(key(f.predicate, f.args, env)) > 0;
      case K::Equals: return sub(f.args[0], env) == sub(f.args[1], env);
      case K::Not: return !eval(f.children[0], env, s);
      case K::And:
        for (const auto& c : f.children)
          if (!eval(c, env, s)) return false;
        return true;
      case K::Or:
        for (const auto& c : f.children)
          if (eval(c, env, s)) return true;
        return false;
      case K::Forall:
        for (const auto& e : bindings(f.vars, env))
          if (!eval(f.children[0], e, s)) return false;
        return true;
      case K::When: return false;
    }
    return false;
  }

  void collect(const axiomforge::pddl::Formula& f, const Env& env, const Atoms& pre, std::vector<Group>& groups,
               std::size_t into) const {
    using K = axiomforge::pddl::FormulaKind;
    switch (f.kind) {
      case K::Atom: groups[into].add.insert(key(f.predicate, f.args, env)); break;
      case K::Not: groups[into].del.insert(key(f.children[0].predicate, f.children[0].args, env)); break;
      case K::And:
        for (const auto& c : f.children) collect(c, env, pre, groups, into);
        break;
      case K::Forall:
        for (const auto& e : bindings(f.vars, env)) collect(f.children[0], e, pre, groups, into);
        break;
      case K::When:
        if (eval(f.children[0], env, pre)) {
          groups.emplace_back();
          collect(f.children[1], env, pre, groups, groups.size() - 1);
        }
        break;
      default: break;
    }
  }

  const axiomforge::pddl::DomainAst& d_;
  const axiomforge::pddl::ProblemAst& p_;
  std::map<std::string, std::string> parent_;
  std::vector<Obj> objects_;
  Atoms init_;
};

}  // namespace oracle
