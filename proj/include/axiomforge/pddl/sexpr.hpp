#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "axiomforge/pddl/diagnostics.hpp"

namespace axiomforge::pddl {

/// A lowercased symbol or a parenthesised list, tagged with where it began.
struct SExpr {
  bool is_list = false;
  std::string symbol;
  std::vector<SExpr> items;
  SourcePos pos;

  bool is_symbol() const noexcept { return !is_list; }
  bool is_symbol(std::string_view s) const noexcept { return !is_list && symbol == s; }
  /// True for a list whose first element is the symbol `head`.
  bool has_head(std::string_view head) const noexcept {
    return is_list && !items.empty() && items.front().is_symbol(head);
  }
  std::string_view head() const noexcept {
    return is_list && !items.empty() && items.front().is_symbol() ? std::string_view(items.front().symbol)
                                                                  : std::string_view();
  }
};

class SExprError : public std::runtime_error {
 public:
  SExprError(SourcePos pos, std::string expected)
      : std::runtime_error("expected " + expected), pos_(pos), expected_(std::move(expected)) {}

  SourcePos pos() const noexcept { return pos_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  SourcePos pos_;
  std::string expected_;
};

namespace detail {

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  SExpr read_document() {
    skip_blank();
    if (at_end()) throw SExprError(here(), "'('");
    SExpr root = read();
    skip_blank();
    if (!at_end()) throw SExprError(here(), "end of input");
    return root;
  }

 private:
  bool at_end() const noexcept { return offset_ >= text_.size(); }
  SourcePos here() const noexcept { return SourcePos{line_, col_}; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++offset_;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = text_[offset_];
      if (c == ';') {
        while (!at_end() && text_[offset_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c));
  }

  SExpr read() {
    skip_blank();
    if (at_end()) throw SExprError(here(), "expression");
    SExpr node;
    node.pos = here();
    char c = text_[offset_];
    if (c == ')') throw SExprError(here(), "expression before ')'");
    if (c == '(') {
      node.is_list = true;
      advance();
      while (true) {
        skip_blank();
        if (at_end()) throw SExprError(here(), "')' closing list opened at " + std::to_string(node.pos.line) +
                                                   ":" + std::to_string(node.pos.col));
        if (text_[offset_] == ')') {
          advance();
          break;
        }
        node.items.push_back(read());
      }
      return node;
    }
    while (!at_end() && !is_delimiter(text_[offset_])) {
      node.symbol.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text_[offset_]))));
      advance();
    }
    return node;
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

/// Reads exactly one top-level expression. Comments run from `;` to end of
/// line; symbols are lowercased.
inline SExpr read_sexpr(std::string_view text) { return detail::SExprReader(text).read_document(); }

}  // namespace axiomforge::pddl
