#include "rlie/check.hpp"

#include <algorithm>

namespace rlie {

void Report::add(std::string name, bool passed, std::string detail) {
  entries_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) entries_.push_back({prefix + e.name, e.passed, e.detail});
  sampled_ = sampled_ || other.sampled_;
}

bool Report::passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.passed; });
}

std::string Report::failures() const {
  std::string out;
  for (const auto& e : entries_) {
    if (e.passed) continue;
    if (!out.empty()) out += ", ";
    out += e.name;
  }
  return out;
}

// splitmix64: tiny, portable and fully specified, so sampled runs are
// reproducible across standard libraries.
VecSampler::VecSampler(Coeff p, std::uint64_t seed) : p_(p), state_(seed) {}

std::uint64_t VecSampler::below(std::uint64_t bound) {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return bound == 0 ? z : z % bound;
}

Coeff VecSampler::scalar() { return static_cast<Coeff>(below(p_)); }

Vec VecSampler::next(std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = scalar();
  return v;
}

bool for_each_element(Coeff p, std::size_t n, const CheckOptions& opts,
                      const std::function<bool(const Vec&)>& fn) {
  if (count_vectors(p, n) <= opts.exhaustive_limit) {
    for_each_vector(p, n, fn);
    return false;
  }
  PrimeField f(p);
  for (std::size_t i = 0; i < n; ++i)
    if (!fn(f.unit(n, i))) return true;
  VecSampler sampler(p, opts.seed);
  for (std::size_t k = 0; k < opts.samples; ++k)
    if (!fn(sampler.next(n))) return true;
  return true;
}

}  // namespace rlie
