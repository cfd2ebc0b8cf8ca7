#pragma once

#include <tuple>

#include "cachesim/policy.hpp"

namespace cachesim {

// First-in first-out: evicts the block inserted earliest. Hits do not move a
// block in the queue.
class FifoPolicy final : public MetaPolicy {
 public:
  std::string_view name() const override { return "fifo"; }

  BlockId select_victim() const override {
    return best_by([](const PolicyMeta& a, const PolicyMeta& b) {
      return a.insert_seq < b.insert_seq;
    });
  }
};

// Least recently used: evicts the block with the oldest last access.
class LruPolicy final : public MetaPolicy {
 public:
  std::string_view name() const override { return "lru"; }

  BlockId select_victim() const override {
    return best_by([](const PolicyMeta& a, const PolicyMeta& b) {
      return a.last_access_seq < b.last_access_seq;
    });
  }
};

// Most recently used: evicts the block touched last.
class MruPolicy final : public MetaPolicy {
 public:
  std::string_view name() const override { return "mru"; }

  BlockId select_victim() const override {
    return best_by([](const PolicyMeta& a, const PolicyMeta& b) {
      return a.last_access_seq > b.last_access_seq;
    });
  }
};

// Least frequently used: evicts the block with the fewest references,
// breaking count ties in favour of the least recently used block.
class LfuPolicy final : public MetaPolicy {
 public:
  std::string_view name() const override { return "lfu"; }

  BlockId select_victim() const override {
    return best_by([](const PolicyMeta& a, const PolicyMeta& b) {
      return std::tie(a.ref_count, a.last_access_seq) <
             std::tie(b.ref_count, b.last_access_seq);
    });
  }
};

}  // namespace cachesim
