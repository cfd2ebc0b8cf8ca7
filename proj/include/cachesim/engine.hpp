#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cachesim/core.hpp"
#include "cachesim/policy.hpp"
#include "cachesim/victim_buffer.hpp"

namespace cachesim {

// Drives one policy instance against an access stream. Each access is
// classified as hit (resident), partial hit (found in the victim buffer) or
// miss, and the shared buffer protocol applies to every policy: a selected
// victim moves into the buffer, and a buffered block that gets referenced is
// promoted back via a fresh insertion, exactly as if fetched from memory.
// Because promotion and miss fill take the identical insertion path, cache
// state evolution does not depend on the buffer capacity; the buffer only
// refines outcome classification.
//
// The engine does not own the policy; the caller keeps it alive and may
// inspect it between accesses. One engine per simulation loop, no sharing.
class CacheEngine {
 public:
  CacheEngine(EvictionPolicy& policy, std::size_t capacity,
              std::size_t buffer_capacity, bool log_victims = false)
      : policy_(policy),
        capacity_(capacity),
        buffer_(buffer_capacity),
        log_victims_(log_victims) {
    if (capacity == 0) throw std::invalid_argument("engine: capacity must be at least 1");
  }

  AccessOutcome access(BlockId block) {
    ++access_seq_;
    if (policy_.contains(block)) {
      policy_.on_hit(block, access_seq_);
      return AccessOutcome::Hit;
    }
    const bool promoted = buffer_.erase(block);  // promotion frees its slot first
    insert_new(block);
    return promoted ? AccessOutcome::PartialHit : AccessOutcome::Miss;
  }

  const EvictionPolicy& policy() const { return policy_; }
  const VictimBuffer& buffer() const { return buffer_; }
  std::size_t capacity() const { return capacity_; }
  std::uint64_t accesses() const { return access_seq_; }
  std::uint64_t evictions() const { return evictions_; }
  const std::vector<BlockId>& victim_log() const { return victim_log_; }

 private:
  void insert_new(BlockId block) {
    if (policy_.size() == capacity_) {
      const BlockId victim = policy_.select_victim();
      policy_.on_evict(victim);
      buffer_.push(victim);
      ++evictions_;
      if (log_victims_) victim_log_.push_back(victim);
    }
    policy_.on_insert(block, access_seq_);
  }

  EvictionPolicy& policy_;
  std::size_t capacity_;
  VictimBuffer buffer_;
  bool log_victims_;
  std::uint64_t access_seq_ = 0;
  std::uint64_t evictions_ = 0;
  std::vector<BlockId> victim_log_;
};

}  // namespace cachesim
