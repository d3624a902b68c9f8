#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rlie/fp_linalg.hpp"

namespace rlie {

struct CheckOptions {
  /// Element-quantified checks enumerate all p^n elements when p^n <= this.
  std::uint64_t exhaustive_limit = 10000;
  /// Random elements (on top of the basis) used otherwise.
  std::size_t samples = 512;
  std::uint64_t seed = 20240601;
  /// Upper bound on enumerated data points for class sets and morphism searches.
  std::uint64_t search_limit = std::uint64_t{1} << 20;
  /// Random decompositions tried by the split-order check inside verify_restricted.
  std::size_t split_samples = 32;
};

struct CheckEntry {
  std::string name;
  bool passed = true;
  std::string detail;
};

class Report {
 public:
  void add(std::string name, bool passed, std::string detail = {});
  /// Appends other's entries with a name prefix; sampled-ness propagates.
  void merge(const Report& other, const std::string& prefix = {});
  void mark_sampled() { sampled_ = true; }

  bool passed() const;
  bool sampled() const { return sampled_; }
  const std::vector<CheckEntry>& entries() const { return entries_; }
  /// Names of the failed entries, comma separated.
  std::string failures() const;

 private:
  std::vector<CheckEntry> entries_;
  bool sampled_ = false;
};

/// Runs fn over every element of F_p^n, or over the basis plus opts.samples
/// pseudo-random elements when p^n exceeds the limit. Returns true if sampled.
/// Stops early when fn returns false.
bool for_each_element(Coeff p, std::size_t n, const CheckOptions& opts,
                      const std::function<bool(const Vec&)>& fn);

/// Deterministic pseudo-random vector source.
class VecSampler {
 public:
  VecSampler(Coeff p, std::uint64_t seed);
  Vec next(std::size_t n);
  Coeff scalar();
  std::uint64_t below(std::uint64_t bound);

 private:
  Coeff p_;
  std::uint64_t state_;
};

}  // namespace rlie
