#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "axiomforge/pddl/ast.hpp"
#include "axiomforge/pddl/diagnostics.hpp"
#include "axiomforge/pddl/link.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/pddl/printer.hpp"

namespace axiomforge::proposer {

struct DroppedBlock {
  /// Position of the block among all fenced blocks in the response.
  std::size_t index = 0;
  std::vector<pddl::Diagnostic> diagnostics;
};

struct Extraction {
  std::vector<pddl::DomainAst> candidates;
  std::vector<DroppedBlock> dropped;
};

/// Bodies of ``` fenced blocks, in order. An info string after the opening
/// fence is skipped; an unterminated final block is ignored.
inline std::vector<std::string_view> fenced_blocks(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto open = text.find("```", pos);
    if (open == std::string_view::npos) break;
    auto body = text.find('\n', open + 3);
    if (body == std::string_view::npos) break;
    ++body;
    const auto close = text.find("```", body);
    if (close == std::string_view::npos) break;
    out.push_back(text.substr(body, close - body));
    pos = close + 3;
  }
  return out;
}

/// Parses fenced domains out of a free-text response. Blocks that fail to
/// parse, validate, or (when `problem` is given) link are dropped with their
/// diagnostics. Never throws on malformed input.
inline Extraction extract_candidates(std::string_view raw, std::size_t k, const pddl::ProblemAst* problem = nullptr) {
  Extraction out;
  const auto blocks = fenced_blocks(raw);
  for (std::size_t i = 0; i < blocks.size() && out.candidates.size() < k; ++i) {
    auto parsed = pddl::parse_domain(blocks[i]);
    if (!parsed.ok()) {
      out.dropped.push_back({i, parsed.diagnostics});
      continue;
    }
    if (problem) {
      auto linked = pddl::link(*parsed, *problem);
      if (!linked.ok()) {
        out.dropped.push_back({i, linked.diagnostics});
        continue;
      }
    }
    out.candidates.push_back(std::move(*parsed.value));
  }
  return out;
}

/// Canonical texts with duplicates removed, first occurrence kept.
inline std::vector<std::string> dedup_canonical(const std::vector<pddl::DomainAst>& domains) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& d : domains) {
    auto text = pddl::print_canonical(d);
    if (seen.insert(text).second) out.push_back(std::move(text));
  }
  return out;
}

}  // namespace axiomforge::proposer
