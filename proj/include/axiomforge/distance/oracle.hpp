#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

#include "axiomforge/distance/levenshtein.hpp"

namespace axiomforge::distance {

enum class Choice { A, B };

/// Raised when a remote oracle cannot be reached after retries.
class OracleUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Answers "which of a and b is closer to reference?".
class DistanceOracle {
 public:
  virtual ~DistanceOracle() = default;
  virtual Choice closer(const std::string& reference, const std::string& a, const std::string& b) = 0;
  /// Requests that left the process (zero for local oracles).
  virtual std::size_t transport_calls() const { return 0; }
};

namespace detail {

/// Memoized levenshtein(reference, text) shared by the tie-breaking rules.
class LevenshteinCache {
 public:
  std::size_t get(const std::string& reference, const std::string& text) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(reference, text);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto d = levenshtein(reference, text);
    memo_.emplace(std::move(key), d);
    return d;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::string, std::string>, std::size_t> memo_;
};

}  // namespace detail

/// Offline stand-in: the candidate with the smaller edit distance wins,
/// ties go to the lexicographically smaller text.
class LevenshteinOracle : public DistanceOracle {
 public:
  Choice closer(const std::string& reference, const std::string& a, const std::string& b) override {
    const auto da = lev_.get(reference, a);
    const auto db = lev_.get(reference, b);
    return std::tie(da, a) <= std::tie(db, b) ? Choice::A : Choice::B;
  }

 private:
  detail::LevenshteinCache lev_;
};

struct Votes {
  std::size_t first = 0;
  std::size_t second = 0;
};

/// One remote comparison: asks the same question `samples` times and
/// reports how often each option was preferred.
class ComparisonSampler {
 public:
  virtual ~ComparisonSampler() = default;
  virtual Votes sample(const std::string& reference, const std::string& first, const std::string& second,
                       std::size_t samples) = 0;
};

/// Majority vote over repeated samples, memoized per unordered pair.
///
/// Pairs are presented to the sampler in lexicographic order so that
/// closer(r, a, b) and closer(r, b, a) share one cache entry. An even split
/// goes to the smaller edit distance, then to the smaller text.
class VotingOracle : public DistanceOracle {
 public:
  explicit VotingOracle(std::shared_ptr<ComparisonSampler> sampler, std::size_t samples_per_query = 16)
      : sampler_(std::move(sampler)), samples_(samples_per_query) {}

  Choice closer(const std::string& reference, const std::string& a, const std::string& b) override {
    if (a == b) return Choice::A;
    const bool a_first = a < b;
    const std::string& lo = a_first ? a : b;
    const std::string& hi = a_first ? b : a;
    const bool lo_wins = lo_preferred(reference, lo, hi);
    return lo_wins == a_first ? Choice::A : Choice::B;
  }

  std::size_t transport_calls() const override {
    std::lock_guard lock(mu_);
    return calls_;
  }

  std::size_t samples_per_query() const noexcept { return samples_; }

 private:
  bool lo_preferred(const std::string& reference, const std::string& lo, const std::string& hi) {
    auto key = std::make_tuple(reference, lo, hi);
    Votes v;
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return decide(it->second, reference, lo, hi);
    }
    v = sampler_->sample(reference, lo, hi, samples_);
    {
      std::lock_guard lock(mu_);
      ++calls_;
      cache_.emplace(std::move(key), v);
    }
    return decide(v, reference, lo, hi);
  }

  bool decide(const Votes& v, const std::string& reference, const std::string& lo, const std::string& hi) {
    if (v.first != v.second) return v.first > v.second;
    return lev_.get(reference, lo) <= lev_.get(reference, hi);
  }

  std::shared_ptr<ComparisonSampler> sampler_;
  std::size_t samples_;
  mutable std::mutex mu_;
  std::map<std::tuple<std::string, std::string, std::string>, Votes> cache_;
  std::size_t calls_ = 0;
  detail::LevenshteinCache lev_;
};

}  // namespace axiomforge::distance
