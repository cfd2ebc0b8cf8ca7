#pragma once

// Test-only oracle: a self-contained LRU simulator kept independent of the
// library's policy machinery. Recency is an explicit list with the most
// recently used block in front; the victim is always the back.

#include <cstddef>
#include <cstdint>
#include <list>
#include <unordered_map>
#include <vector>

namespace cachesim_test {

class ReferenceLru {
 public:
  explicit ReferenceLru(std::size_t capacity) : capacity_(capacity) {}

  // Returns true on hit. Evicted blocks are appended to victims().
  bool access(std::uint64_t block) {
    auto it = index_.find(block);
    if (it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return true;
    }
    if (order_.size() == capacity_) {
      victims_.push_back(order_.back());
      index_.erase(order_.back());
      order_.pop_back();
    }
    order_.push_front(block);
    index_[block] = order_.begin();
    return false;
  }

  const std::vector<std::uint64_t>& victims() const { return victims_; }

 private:
  std::size_t capacity_;
  std::list<std::uint64_t> order_;
  std::unordered_map<std::uint64_t, std::list<std::uint64_t>::iterator> index_;
  std::vector<std::uint64_t> victims_;
};

}  // namespace cachesim_test
