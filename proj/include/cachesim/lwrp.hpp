#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cachesim/policy.hpp"

namespace cachesim {

// Per-resident-block weighting state.
//
// `recency` counts accesses to other blocks since this block was last
// touched; the just-touched block is always at 0. `hit_energy` starts at 1
// and accumulates the configured per-hit energy on every hit, so it grows
// with hit count. `delta_t` is the gap, in accesses, between the block's two
// most recent touches, clamped to >= 1 so the weight denominator never
// vanishes (a back-to-back re-hit would otherwise record a gap of 0).
struct BlockState {
  std::uint64_t recency = 0;
  double hit_energy = 1.0;
  double delta_t = 1.0;
  std::uint64_t insert_seq = 0;
};

// Eviction weight: recency / (hit_energy * delta_t). Recently or frequently
// touched blocks weigh little; stale one-shot blocks weigh the most and are
// evicted first. Finite and >= 0 because the denominator is >= 1.
inline double weight(const BlockState& s) {
  return static_cast<double>(s.recency) / (s.hit_energy * s.delta_t);
}

// Diagnostic switches pinning parts of the weight at their initial value.
// With both set, weight(s) == recency and the policy degenerates to exact
// LRU; the tests use that as an oracle.
struct LwrpVariantFlags {
  bool freeze_frequency = false;  // hit_energy pinned at 1
  bool freeze_delta = false;      // delta_t pinned at 1
};

// Weight-ranked replacement.
//
// Hit on resident j:
//   1. every other resident block ages by one (recency += 1);
//   2. j records its inter-reference gap (delta_t = max(recency, 1)), adds
//      the per-hit energy to its accumulator, and resets recency to 0.
// Insertion (miss fill or promotion from the victim buffer): every
// already-resident block ages by one and the newcomer starts from the
// initial state (recency 0, hit_energy 1, delta_t 1).
// Victim: the resident block with the highest weight; ties go to the larger
// recency, then to the older insertion.
//
// Aging on every insertion keeps resident recency values pairwise distinct
// with the just-touched block at 0, i.e. they reproduce the exact LRU order.
class LwrpPolicy final : public EvictionPolicy {
 public:
  explicit LwrpPolicy(double per_hit_energy = 1.0, LwrpVariantFlags flags = {})
      : per_hit_energy_(per_hit_energy), flags_(flags) {
    if (!(per_hit_energy >= 0.0))
      throw std::invalid_argument("lwrp: per-hit energy must be >= 0");
  }

  std::string_view name() const override { return "lwrp"; }

  void on_insert(BlockId block, std::uint64_t seq) override {
    if (states_.count(block) != 0)
      throw std::logic_error("lwrp: block already resident");
    for (auto& [id, state] : states_) {
      (void)id;
      ++state.recency;
    }
    BlockState fresh;
    fresh.insert_seq = seq;
    states_.emplace(block, fresh);
    assert(distinct_recency());
  }

  void on_hit(BlockId block, std::uint64_t seq) override {
    (void)seq;
    auto it = states_.find(block);
    if (it == states_.end())
      throw std::logic_error("lwrp: hit on non-resident block");
    for (auto& [id, state] : states_) {
      if (id != block) ++state.recency;
    }
    BlockState& s = it->second;
    if (!flags_.freeze_delta)
      s.delta_t = static_cast<double>(std::max<std::uint64_t>(s.recency, 1));
    if (!flags_.freeze_frequency) s.hit_energy += per_hit_energy_;
    s.recency = 0;
    assert(distinct_recency());
  }

  BlockId select_victim() const override {
    if (states_.empty())
      throw std::logic_error("lwrp: select_victim on empty cache");
    auto best = states_.begin();
    double best_weight = weight(best->second);
    for (auto it = std::next(states_.begin()); it != states_.end(); ++it) {
      const double w = weight(it->second);
      if (w > best_weight || (w == best_weight && beats_on_tie(it->second, best->second))) {
        best = it;
        best_weight = w;
      }
    }
    return best->first;
  }

  void on_evict(BlockId block) override {
    if (states_.erase(block) == 0)
      throw std::logic_error("lwrp: evicting non-resident block");
  }

  bool contains(BlockId block) const override { return states_.count(block) != 0; }
  std::size_t size() const override { return states_.size(); }

  std::vector<BlockId> resident_set() const override {
    std::vector<BlockId> blocks;
    blocks.reserve(states_.size());
    for (const auto& [block, state] : states_) {
      (void)state;
      blocks.push_back(block);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  }

  const BlockState& state_of(BlockId block) const {
    auto it = states_.find(block);
    if (it == states_.end()) throw std::logic_error("lwrp: unknown block");
    return it->second;
  }

  const std::unordered_map<BlockId, BlockState>& states() const { return states_; }
  double per_hit_energy() const { return per_hit_energy_; }
  LwrpVariantFlags flags() const { return flags_; }

 private:
  static bool beats_on_tie(const BlockState& a, const BlockState& b) {
    if (a.recency != b.recency) return a.recency > b.recency;
    return a.insert_seq < b.insert_seq;
  }

  bool distinct_recency() const {
    std::vector<std::uint64_t> values;
    values.reserve(states_.size());
    for (const auto& [id, state] : states_) {
      (void)id;
      values.push_back(state.recency);
    }
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
  }

  double per_hit_energy_;
  LwrpVariantFlags flags_;
  std::unordered_map<BlockId, BlockState> states_;
};

}  // namespace cachesim
