#pragma once

#include <cstddef>
#include <list>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cachesim/core.hpp"

namespace cachesim {

// Bounded FIFO of evicted block identities. Evicted blocks get a second
// chance here before being discarded for good; only identity is stored,
// weighting counters are not carried over. A zero-capacity buffer drops
// every push outright.
class VictimBuffer {
 public:
  explicit VictimBuffer(std::size_t capacity) : capacity_(capacity) {}

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return queue_.size(); }
  bool empty() const { return queue_.empty(); }
  bool contains(BlockId block) const { return index_.count(block) != 0; }

  // Appends `block`; when full the oldest entry is dropped and returned.
  std::optional<BlockId> push(BlockId block) {
    if (contains(block)) throw std::logic_error("victim buffer: duplicate push");
    if (capacity_ == 0) return block;
    std::optional<BlockId> dropped;
    if (queue_.size() == capacity_) {
      dropped = queue_.front();
      index_.erase(queue_.front());
      queue_.pop_front();
    }
    queue_.push_back(block);
    index_.emplace(block, std::prev(queue_.end()));
    return dropped;
  }

  // Removes `block` wherever it sits in the queue; false if absent.
  bool erase(BlockId block) {
    auto it = index_.find(block);
    if (it == index_.end()) return false;
    queue_.erase(it->second);
    index_.erase(it);
    return true;
  }

  // Oldest first.
  std::vector<BlockId> contents() const { return {queue_.begin(), queue_.end()}; }

 private:
  std::size_t capacity_;
  std::list<BlockId> queue_;
  std::unordered_map<BlockId, std::list<BlockId>::iterator> index_;
};

}  // namespace cachesim
