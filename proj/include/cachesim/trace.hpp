#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "cachesim/core.hpp"

namespace cachesim {

// A finite access stream plus provenance: where it came from (file path or
// generator spec string) and, when known, the number of distinct blocks.
struct Trace {
  std::vector<BlockId> blocks;
  std::optional<std::uint64_t> universe_hint;
  std::string source;
};

enum class TraceMode { Block, Address };

namespace detail {

inline std::string_view trim_line(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

inline std::uint64_t parse_block_value(std::string_view token, std::size_t line) {
  int base = 10;
  if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
    token.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value, base);
  if (ec != std::errc() || ptr != end || token.empty())
    throw ParseError("trace: malformed value '" + std::string(token) + "'", line);
  return value;
}

}  // namespace detail

// Line-oriented trace text: one access per line, decimal or 0x-prefixed
// hexadecimal; blank lines and lines starting with '#' are skipped. In
// address mode each value v maps to block floor(v / block_size); in block
// mode values are block ids verbatim. An empty trace is valid.
inline Trace parse_trace(std::istream& in, TraceMode mode,
                         std::size_t block_size = 64, std::string source = "") {
  if (mode == TraceMode::Address &&
      (block_size == 0 || (block_size & (block_size - 1)) != 0))
    throw std::invalid_argument("trace: block size must be a power of two");
  Trace trace;
  trace.source = std::move(source);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim_line(line);
    if (text.empty() || text.front() == '#') continue;
    const std::uint64_t value = detail::parse_block_value(text, line_no);
    trace.blocks.push_back(mode == TraceMode::Address ? value / block_size : value);
  }
  return trace;
}

inline Trace parse_trace_file(const std::string& path, TraceMode mode,
                              std::size_t block_size = 64) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  return parse_trace(in, mode, block_size, path);
}

// One block id per line; a '# source: ...' header is written when the trace
// carries provenance. parse_trace in block mode inverts this exactly.
inline void write_trace(const Trace& trace, std::ostream& out) {
  if (!trace.source.empty()) out << "# source: " << trace.source << "\n";
  for (const BlockId block : trace.blocks) out << block << "\n";
}

// SplitMix64 with the usual constants, pinned here so generated workloads are
// reproducible from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class WorkloadKind { Zipf, Loop, Scan, Uniform };

inline const char* to_string(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::Zipf: return "zipf";
    case WorkloadKind::Loop: return "loop";
    case WorkloadKind::Scan: return "scan";
    case WorkloadKind::Uniform: return "uniform";
  }
  return "unknown";
}

inline WorkloadKind workload_kind_from(std::string_view name) {
  if (name == "zipf") return WorkloadKind::Zipf;
  if (name == "loop") return WorkloadKind::Loop;
  if (name == "scan") return WorkloadKind::Scan;
  if (name == "uniform") return WorkloadKind::Uniform;
  throw std::invalid_argument("unknown workload kind: " + std::string(name));
}

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::Zipf;
  std::uint64_t universe = 1;
  std::uint64_t length = 1;
  double alpha = 0.0;  // zipf skew; ignored by the other kinds
  std::uint64_t seed = 0;

  void validate() const {
    if (universe == 0) throw std::invalid_argument("workload: universe must be at least 1");
    if (length == 0) throw std::invalid_argument("workload: length must be at least 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
      throw std::invalid_argument("workload: alpha must be a finite value >= 0");
  }
};

// kind:universe:length:alpha:seed, with alpha in shortest round-trip form.
inline std::string to_spec_string(const WorkloadSpec& spec) {
  char alpha_buf[32];
  auto [ptr, ec] = std::to_chars(alpha_buf, alpha_buf + sizeof(alpha_buf), spec.alpha);
  if (ec != std::errc()) throw std::invalid_argument("workload: alpha not representable");
  std::string out = to_string(spec.kind);
  out += ':';
  out += std::to_string(spec.universe);
  out += ':';
  out += std::to_string(spec.length);
  out += ':';
  out.append(alpha_buf, ptr);
  out += ':';
  out += std::to_string(spec.seed);
  return out;
}

// Deterministic synthetic workloads; generate(spec) is a pure function of the
// spec including its seed.
//   zipf    — block k drawn with probability proportional to 1/(k+1)^alpha
//             (1-based ranks avoid the zero-rank singularity), via inverse
//             CDF over precomputed cumulative weights;
//   uniform — zipf with alpha = 0;
//   loop    — the cyclic sequence 0..universe-1 repeated to length;
//   scan    — 0..length-1, every block fresh (universe only labels the spec).
inline Trace generate(const WorkloadSpec& spec) {
  spec.validate();
  Trace trace;
  trace.source = to_spec_string(spec);
  trace.universe_hint = spec.kind == WorkloadKind::Scan ? spec.length : spec.universe;
  trace.blocks.reserve(spec.length);
  switch (spec.kind) {
    case WorkloadKind::Loop:
      for (std::uint64_t i = 0; i < spec.length; ++i)
        trace.blocks.push_back(i % spec.universe);
      break;
    case WorkloadKind::Scan:
      for (std::uint64_t i = 0; i < spec.length; ++i) trace.blocks.push_back(i);
      break;
    case WorkloadKind::Zipf:
    case WorkloadKind::Uniform: {
      const double alpha = spec.kind == WorkloadKind::Uniform ? 0.0 : spec.alpha;
      std::vector<double> cumulative(spec.universe);
      double total = 0.0;
      for (std::uint64_t k = 0; k < spec.universe; ++k) {
        total += std::pow(static_cast<double>(k + 1), -alpha);
        cumulative[k] = total;
      }
      SplitMix64 rng(spec.seed);
      for (std::uint64_t i = 0; i < spec.length; ++i) {
        const double u = rng.next_double() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::uint64_t k = static_cast<std::uint64_t>(it - cumulative.begin());
        if (k >= spec.universe) k = spec.universe - 1;  // guards the u == total rounding edge
        trace.blocks.push_back(k);
      }
      break;
    }
  }
  return trace;
}

}  // namespace cachesim
