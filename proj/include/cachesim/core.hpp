#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cachesim {

// Identity of a fixed-size cache block. Address-mode trace parsing maps raw
// addresses onto block indices; equality is by value.
using BlockId = std::uint64_t;

enum class AccessOutcome { Hit, PartialHit, Miss };

inline const char* to_string(AccessOutcome outcome) {
  switch (outcome) {
    case AccessOutcome::Hit: return "hit";
    case AccessOutcome::PartialHit: return "partial_hit";
    case AccessOutcome::Miss: return "miss";
  }
  return "unknown";
}

struct CacheConfig {
  std::size_t capacity = 1;         // cache frames
  std::size_t buffer_capacity = 0;  // victim buffer frames
  std::size_t block_size = 64;      // bytes, used only by address-mode parsing

  void validate() const {
    if (capacity == 0) throw std::invalid_argument("cache capacity must be at least 1");
    if (block_size == 0 || (block_size & (block_size - 1)) != 0)
      throw std::invalid_argument("block size must be a power of two");
  }
};

// Access counters for one run. hits + partial_hits + misses == accesses.
struct SimStats {
  std::uint64_t accesses = 0;
  std::uint64_t hits = 0;
  std::uint64_t partial_hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t evictions = 0;
};

inline void record_outcome(SimStats& stats, AccessOutcome outcome) {
  ++stats.accesses;
  switch (outcome) {
    case AccessOutcome::Hit: ++stats.hits; break;
    case AccessOutcome::PartialHit: ++stats.partial_hits; break;
    case AccessOutcome::Miss: ++stats.misses; break;
  }
}

// The two-class split puts partial hits on the miss side: miss_ratio is
// defined as 1 - hit_ratio, and partial_ratio refines it separately.
// An empty run yields all zeros.
struct Ratios {
  double hit_ratio = 0.0;
  double miss_ratio = 0.0;
  double partial_ratio = 0.0;
};

inline Ratios ratios(const SimStats& stats) {
  if (stats.accesses == 0) return {};
  const double n = static_cast<double>(stats.accesses);
  Ratios r;
  r.hit_ratio = static_cast<double>(stats.hits) / n;
  r.miss_ratio = 1.0 - r.hit_ratio;
  r.partial_ratio = static_cast<double>(stats.partial_hits) / n;
  return r;
}

// Malformed text input (trace files, energy parameter files); carries the
// 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cachesim
