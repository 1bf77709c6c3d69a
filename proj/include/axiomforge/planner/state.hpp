#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace axiomforge::planner {

using AtomId = std::uint32_t;

/// Fixed-width bitset over the grounded atom universe.
class State {
 public:
  State() = default;
  explicit State(std::size_t num_atoms) : words_((num_atoms + 63) / 64, 0) {}

  bool test(AtomId i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(AtomId i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(AtomId i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::vector<AtomId> atoms() const {
    std::vector<AtomId> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
        out.push_back(static_cast<AtomId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    return out;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  bool operator==(const State&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept { return s.hash(); }
};

}  // namespace axiomforge::planner
