#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cachesim/baselines.hpp"
#include "cachesim/core.hpp"
#include "cachesim/energy.hpp"
#include "cachesim/engine.hpp"
#include "cachesim/lwrp.hpp"
#include "cachesim/trace.hpp"

namespace cachesim {

struct RunConfig {
  std::string policy = "lwrp";
  CacheConfig cache;
  EnergyParams energy;
  LwrpVariantFlags lwrp_flags;  // lwrp only, ignored by the baselines
  bool buffered = false;        // attach the victim buffer for this run
  bool log_victims = false;
};

struct RunResult {
  RunConfig config;
  SimStats stats;
  EnergyReport energy;
  std::optional<std::vector<BlockId>> victim_log;
  double wall_time_seconds = 0.0;
  std::uint64_t trace_checksum = 0;
  std::string trace_source;
};

inline const std::vector<std::string>& policy_names() {
  static const std::vector<std::string> names = {"fifo", "lru", "lfu", "mru", "lwrp"};
  return names;
}

// The lwrp per-hit energy constant is the derived hit cost, so with default
// parameters every hit adds 1 to a block's accumulator.
inline std::unique_ptr<EvictionPolicy> make_policy(const RunConfig& config) {
  if (config.policy == "fifo") return std::make_unique<FifoPolicy>();
  if (config.policy == "lru") return std::make_unique<LruPolicy>();
  if (config.policy == "lfu") return std::make_unique<LfuPolicy>();
  if (config.policy == "mru") return std::make_unique<MruPolicy>();
  if (config.policy == "lwrp")
    return std::make_unique<LwrpPolicy>(derive_unit_costs(config.energy).e_hit,
                                        config.lwrp_flags);
  throw std::invalid_argument("unknown policy: " + config.policy);
}

// 64-bit FNV-1a over the block ids rendered as decimal text, one id per line
// ("10\n11\n..."), byte for byte. Pinned so independent implementations can
// agree on the digest of a trace.
inline std::uint64_t trace_checksum(const Trace& trace) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  auto feed = [&hash](char c) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  };
  char buf[24];
  for (const BlockId block : trace.blocks) {
    const int len = std::snprintf(buf, sizeof(buf), "%llu",
                                  static_cast<unsigned long long>(block));
    for (int i = 0; i < len; ++i) feed(buf[i]);
    feed('\n');
  }
  return hash;
}

// Effective buffer size for a run: the configured frames when the buffer is
// attached, otherwise 0.
inline std::size_t effective_buffer_capacity(const RunConfig& config) {
  return config.buffered ? config.cache.buffer_capacity : 0;
}

// One full simulation: every access dispatched through hit / buffer hit /
// miss, outcome counters accumulated, energy model applied to the final
// stats. Deterministic for fixed inputs (wall_time_seconds excepted).
inline RunResult simulate(const Trace& trace, const RunConfig& config) {
  config.cache.validate();
  config.energy.validate();
  auto policy = make_policy(config);

  RunResult result;
  result.config = config;
  result.trace_checksum = trace_checksum(trace);
  result.trace_source = trace.source;

  CacheEngine engine(*policy, config.cache.capacity, effective_buffer_capacity(config),
                     config.log_victims);
  const auto start = std::chrono::steady_clock::now();
  for (const BlockId block : trace.blocks)
    record_outcome(result.stats, engine.access(block));
  const auto stop = std::chrono::steady_clock::now();

  result.stats.evictions = engine.evictions();
  result.energy = make_energy_report(result.stats, config.energy);
  if (config.log_victims) result.victim_log = engine.victim_log();
  result.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
  return result;
}

// Runs every config against the identical trace; results keep config order.
// Each member simulation owns its engine, so failures are independent and are
// reported tagged with the failing policy.
inline std::vector<RunResult> compare(const Trace& trace,
                                      const std::vector<RunConfig>& configs) {
  if (configs.empty())
    throw std::invalid_argument("compare: need at least one run config");
  std::vector<RunResult> results;
  results.reserve(configs.size());
  for (const RunConfig& config : configs) {
    try {
      results.push_back(simulate(trace, config));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config '" + config.policy + "': " + e.what());
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("config '" + config.policy + "': " + e.what());
    }
  }
  return results;
}

enum class OutputFormat { Csv, Json };

inline OutputFormat output_format_from(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

namespace detail {

// 6 significant digits, trailing zeros stripped.
inline std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

}  // namespace detail

// Fixed column set, reals at 6 significant digits; byte-identical across
// repeated runs of the same inputs (wall time deliberately excluded).
inline std::string write_results_csv(const std::vector<RunResult>& results) {
  std::string out =
      "policy,capacity,buffer_capacity,accesses,hits,partial_hits,misses,"
      "hit_ratio,miss_ratio,paper_energy_per_access,extended_energy_per_access,"
      "total_extended_energy,total_time\n";
  for (const RunResult& r : results) {
    const Ratios ratio = ratios(r.stats);
    out += r.config.policy;
    out += ',';
    out += std::to_string(r.config.cache.capacity);
    out += ',';
    out += std::to_string(effective_buffer_capacity(r.config));
    out += ',';
    out += std::to_string(r.stats.accesses);
    out += ',';
    out += std::to_string(r.stats.hits);
    out += ',';
    out += std::to_string(r.stats.partial_hits);
    out += ',';
    out += std::to_string(r.stats.misses);
    out += ',';
    out += detail::format_real(ratio.hit_ratio);
    out += ',';
    out += detail::format_real(ratio.miss_ratio);
    out += ',';
    out += detail::format_real(r.energy.paper_energy_per_access);
    out += ',';
    out += detail::format_real(r.energy.extended_energy_per_access);
    out += ',';
    out += detail::format_real(r.energy.total_extended_energy);
    out += ',';
    out += detail::format_real(r.energy.total_time);
    out += '\n';
  }
  return out;
}

// Same fields as the CSV plus run metadata; wall time lives only here so the
// CSV stays byte-stable.
inline std::string write_results_json(const std::vector<RunResult>& results) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const RunResult& r : results) {
    const Ratios ratio = ratios(r.stats);
    nlohmann::ordered_json row;
    row["policy"] = r.config.policy;
    row["capacity"] = r.config.cache.capacity;
    row["buffer_capacity"] = effective_buffer_capacity(r.config);
    row["accesses"] = r.stats.accesses;
    row["hits"] = r.stats.hits;
    row["partial_hits"] = r.stats.partial_hits;
    row["misses"] = r.stats.misses;
    row["hit_ratio"] = ratio.hit_ratio;
    row["miss_ratio"] = ratio.miss_ratio;
    row["paper_energy_per_access"] = r.energy.paper_energy_per_access;
    row["extended_energy_per_access"] = r.energy.extended_energy_per_access;
    row["total_extended_energy"] = r.energy.total_extended_energy;
    row["total_time"] = r.energy.total_time;
    row["partial_ratio"] = ratio.partial_ratio;
    row["evictions"] = r.stats.evictions;
    row["buffered"] = r.config.buffered;
    row["buffered_extension"] = r.config.buffered && r.config.policy != "lwrp";
    row["freeze_frequency"] = r.config.lwrp_flags.freeze_frequency;
    row["freeze_delta"] = r.config.lwrp_flags.freeze_delta;
    row["trace_source"] = r.trace_source;
    row["trace_checksum"] = r.trace_checksum;
    row["wall_time_seconds"] = r.wall_time_seconds;
    if (r.victim_log) row["victim_log"] = *r.victim_log;
    array.push_back(std::move(row));
  }
  return array.dump(2) + "\n";
}

inline std::string write_results(const std::vector<RunResult>& results,
                                 OutputFormat format) {
  return format == OutputFormat::Csv ? write_results_csv(results)
                                     : write_results_json(results);
}

}  // namespace cachesim
