#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "axiomforge/distance/levenshtein.hpp"
#include "axiomforge/distance/oracle.hpp"

namespace axiomforge::distance {

struct RankedList {
  /// Indices into the input candidates, nearest first.
  std::vector<std::size_t> order;
  std::size_t oracle_queries = 0;

  std::vector<std::string> items(const std::vector<std::string>& candidates) const {
    std::vector<std::string> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(candidates[i]);
    return out;
  }
};

/// ceil(log2 n) for n >= 1.
inline std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

namespace detail {

inline void merge_sort(std::vector<std::size_t>& idx, std::size_t lo, std::size_t hi, std::vector<std::size_t>& tmp,
                       const std::string& reference, const std::vector<std::string>& candidates,
                       DistanceOracle& oracle, std::size_t& queries) {
  if (hi - lo < 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort(idx, lo, mid, tmp, reference, candidates, oracle, queries);
  merge_sort(idx, mid, hi, tmp, reference, candidates, oracle, queries);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    ++queries;
    if (oracle.closer(reference, candidates[idx[i]], candidates[idx[j]]) == Choice::A) {
      tmp[k++] = idx[i++];
    } else {
      tmp[k++] = idx[j++];
    }
  }
  while (i < mid) tmp[k++] = idx[i++];
  while (j < hi) tmp[k++] = idx[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo), tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            idx.begin() + static_cast<std::ptrdiff_t>(lo));
}

}  // namespace detail

/// Merge sort with the oracle as comparator. Inconsistent answers are not
/// repaired; the sort simply runs to completion.
inline RankedList semantic_rank(const std::string& reference, const std::vector<std::string>& candidates,
                                DistanceOracle& oracle) {
  RankedList out;
  out.order.resize(candidates.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::vector<std::size_t> tmp(candidates.size());
  detail::merge_sort(out.order, 0, candidates.size(), tmp, reference, candidates, oracle, out.oracle_queries);
  return out;
}

/// Keeps the `keep` candidates nearest by edit distance (ties by text),
/// ranks those with the oracle, then appends the rest in edit-distance order.
inline RankedList hybrid_rank(const std::string& reference, const std::vector<std::string>& candidates,
                              std::size_t keep, DistanceOracle& oracle) {
  if (candidates.empty()) return {};
  if (keep == 0) throw std::invalid_argument("hybrid_rank: keep must be at least 1");
  if (keep >= candidates.size()) return semantic_rank(reference, candidates, oracle);

  std::vector<std::size_t> lev(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) lev[i] = levenshtein(reference, candidates[i]);
  std::vector<std::size_t> by_lev(candidates.size());
  std::iota(by_lev.begin(), by_lev.end(), std::size_t{0});
  std::stable_sort(by_lev.begin(), by_lev.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(lev[x], candidates[x]) < std::tie(lev[y], candidates[y]);
  });

  std::vector<std::string> survivors;
  for (std::size_t i = 0; i < keep; ++i) survivors.push_back(candidates[by_lev[i]]);
  auto inner = semantic_rank(reference, survivors, oracle);

  RankedList out;
  out.oracle_queries = inner.oracle_queries;
  for (auto i : inner.order) out.order.push_back(by_lev[i]);
  for (std::size_t i = keep; i < by_lev.size(); ++i) out.order.push_back(by_lev[i]);
  return out;
}

}  // namespace axiomforge::distance
