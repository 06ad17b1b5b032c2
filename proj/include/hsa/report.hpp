#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hsa {

struct CheckRecord {
  std::string id;
  std::string anchor;  // which axiom or condition the check exercises
  bool pass = true;
  std::string detail;
  std::uint64_t seed = 0;
};

class CheckReport {
 public:
  void add(std::string id, std::string anchor, bool pass, std::string detail,
           std::uint64_t seed) {
    records_.push_back({std::move(id), std::move(anchor), pass, std::move(detail), seed});
  }
  void merge(const CheckReport& o) {
    records_.insert(records_.end(), o.records_.begin(), o.records_.end());
  }

  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_pass() const;
  size_t fail_count() const;
  /// records sorted by id (stable)
  void sort();

  std::string to_jsonl() const;
  /// short human summary of the failures, for exception payloads
  std::string failure_summary(size_t limit = 8) const;

 private:
  std::vector<CheckRecord> records_;
};

/// Deterministic sampler; identical seeds give identical draws on every
/// platform (raw mt19937_64 output, no distribution objects).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed)
      : seed_(seed), state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

  std::uint64_t seed() const { return seed_; }
  size_t pick(size_t n) {
    return n == 0 ? 0 : static_cast<size_t>(next() % n);
  }
  std::uint64_t next() {
    // xorshift* keeps the stream independent of library internals
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_ = 0x9E3779B97F4A7C15ULL;
};

}  // namespace hsa
