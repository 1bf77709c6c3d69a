#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace axiomforge::pddl {

/// 1-based line/column into the source text. {0,0} marks a node that was
/// built in code rather than read from text.
///
/// Positions never take part in structural equality: two ASTs that differ
/// only in where their nodes came from compare equal.
struct SourcePos {
  std::size_t line = 0;
  std::size_t col = 0;

  friend constexpr bool operator==(const SourcePos&, const SourcePos&) noexcept { return true; }
};

enum class DiagnosticKind {
  SyntaxError,
  UnsupportedConstruct,
  ArityMismatch,
  UnboundVariable,
  UndeclaredPredicate,
  UndeclaredObject,
  DuplicateDeclaration,
  DuplicateObject,
  DomainNameMismatch,
  TypeError,
};

inline std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::SyntaxError: return "SyntaxError";
    case DiagnosticKind::UnsupportedConstruct: return "UnsupportedConstruct";
    case DiagnosticKind::ArityMismatch: return "ArityMismatch";
    case DiagnosticKind::UnboundVariable: return "UnboundVariable";
    case DiagnosticKind::UndeclaredPredicate: return "UndeclaredPredicate";
    case DiagnosticKind::UndeclaredObject: return "UndeclaredObject";
    case DiagnosticKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case DiagnosticKind::DuplicateObject: return "DuplicateObject";
    case DiagnosticKind::DomainNameMismatch: return "DomainNameMismatch";
    case DiagnosticKind::TypeError: return "TypeError";
  }
  return "Unknown";
}

struct Diagnostic {
  DiagnosticKind kind;
  SourcePos pos;
  std::string message;
};

inline std::string format_diagnostic(const Diagnostic& d, std::string_view source_name = {}) {
  std::ostringstream out;
  if (!source_name.empty()) out << source_name << ':';
  out << d.pos.line << ':' << d.pos.col << ": " << to_string(d.kind) << ": " << d.message;
  return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
  return os << format_diagnostic(d);
}

/// Value-or-diagnostics outcome of a front-end stage.
template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return value.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
  const T& operator*() const& { return *value; }
  T& operator*() & { return *value; }
  T&& operator*() && { return std::move(*value); }
  const T* operator->() const { return &*value; }

  bool has(DiagnosticKind kind) const {
    for (const auto& d : diagnostics)
      if (d.kind == kind) return true;
    return false;
  }
};

}  // namespace axiomforge::pddl
