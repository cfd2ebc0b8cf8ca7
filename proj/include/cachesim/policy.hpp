#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cachesim/core.hpp"

namespace cachesim {

// Replacement policy contract. The simulation engine owns residency control:
// it feeds on_insert/on_hit as accesses arrive and pairs every select_victim
// with an on_evict of the returned block. select_victim is a pure query over
// current bookkeeping and must be deterministic: identical call sequences
// yield identical victims.
class EvictionPolicy {
 public:
  virtual ~EvictionPolicy() = default;

  virtual std::string_view name() const = 0;
  virtual void on_insert(BlockId block, std::uint64_t seq) = 0;
  virtual void on_hit(BlockId block, std::uint64_t seq) = 0;
  virtual BlockId select_victim() const = 0;
  virtual void on_evict(BlockId block) = 0;
  virtual bool contains(BlockId block) const = 0;
  virtual std::size_t size() const = 0;
  virtual std::vector<BlockId> resident_set() const = 0;  // sorted
};

// Per-block bookkeeping shared by the classic policies. Sequence numbers come
// from the engine's access counter and strictly increase, so last_access_seq
// and insert_seq are unique among resident blocks. Insertion counts as the
// first reference.
struct PolicyMeta {
  std::uint64_t insert_seq = 0;
  std::uint64_t last_access_seq = 0;
  std::uint64_t ref_count = 0;
};

// Common base for the classic policies: a hash map of PolicyMeta keyed by
// block. Victim selection is a linear scan under a strict total order, so the
// result does not depend on hash iteration order.
class MetaPolicy : public EvictionPolicy {
 public:
  void on_insert(BlockId block, std::uint64_t seq) override {
    auto [it, inserted] = meta_.emplace(block, PolicyMeta{seq, seq, 1});
    (void)it;
    if (!inserted) throw std::logic_error("policy: block already resident");
  }

  void on_hit(BlockId block, std::uint64_t seq) override {
    auto it = meta_.find(block);
    if (it == meta_.end()) throw std::logic_error("policy: hit on non-resident block");
    it->second.last_access_seq = seq;
    ++it->second.ref_count;
  }

  void on_evict(BlockId block) override {
    if (meta_.erase(block) == 0)
      throw std::logic_error("policy: evicting non-resident block");
  }

  bool contains(BlockId block) const override { return meta_.count(block) != 0; }
  std::size_t size() const override { return meta_.size(); }

  std::vector<BlockId> resident_set() const override {
    std::vector<BlockId> blocks;
    blocks.reserve(meta_.size());
    for (const auto& [block, meta] : meta_) {
      (void)meta;
      blocks.push_back(block);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  }

  const PolicyMeta& meta_of(BlockId block) const {
    auto it = meta_.find(block);
    if (it == meta_.end()) throw std::logic_error("policy: unknown block");
    return it->second;
  }

 protected:
  // Resident block whose meta is smallest under `better` ("a beats b").
  // `better` must induce a strict total order over resident metas.
  template <typename Better>
  BlockId best_by(Better better) const {
    if (meta_.empty())
      throw std::logic_error("policy: select_victim on empty resident set");
    auto best = meta_.begin();
    for (auto it = std::next(meta_.begin()); it != meta_.end(); ++it) {
      if (better(it->second, best->second)) best = it;
    }
    return best->first;
  }

  std::unordered_map<BlockId, PolicyMeta> meta_;
};

}  // namespace cachesim
