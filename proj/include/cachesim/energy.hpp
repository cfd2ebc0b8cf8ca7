#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cachesim/core.hpp"

namespace cachesim {

// Unitless energy constants. The defaults make a cache hit cost 1 (decoder
// and cell array at 0.5 each), a buffer access 10 and a memory access 10000,
// keeping the memory:buffer ratio at 1000. Absolute scale is arbitrary.
struct EnergyParams {
  double e_decoder = 0.5;
  double e_cell_array = 0.5;
  double e_access_memory = 10000.0;
  double e_access_buffer = 10.0;

  void validate() const {
    auto check = [](double v, const char* field) {
      if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("energy: ") + field + " must be a finite value >= 0");
    };
    check(e_decoder, "e_decoder");
    check(e_cell_array, "e_cell_array");
    check(e_access_memory, "e_access_memory");
    check(e_access_buffer, "e_access_buffer");
    if (e_access_buffer > e_access_memory)
      throw std::invalid_argument("energy: e_access_buffer must not exceed e_access_memory");
  }
};

// Per-access-class costs derived from the raw parameters:
//   e_hit     = e_decoder + e_cell_array
//   e_miss    = e_hit + e_access_memory
//   e_partial = e_hit + e_access_buffer
// so e_hit <= e_partial <= e_miss for every valid parameter set.
struct UnitCosts {
  double e_hit = 0.0;
  double e_partial = 0.0;
  double e_miss = 0.0;
};

inline UnitCosts derive_unit_costs(const EnergyParams& params) {
  params.validate();
  UnitCosts costs;
  costs.e_hit = params.e_decoder + params.e_cell_array;
  costs.e_miss = costs.e_hit + params.e_access_memory;
  costs.e_partial = costs.e_hit + params.e_access_buffer;
  return costs;
}

// Two-class energy per access: HR * e_hit + MR * e_miss with MR = 1 - HR,
// so partial hits are billed at full miss cost. Undefined on an empty run.
inline double paper_energy(const SimStats& stats, const UnitCosts& costs) {
  if (stats.accesses == 0)
    throw std::invalid_argument("paper_energy: undefined for zero accesses");
  const Ratios r = ratios(stats);
  return r.hit_ratio * costs.e_hit + r.miss_ratio * costs.e_miss;
}

struct ExtendedEnergy {
  double per_access = 0.0;
  double total = 0.0;
};

// Three-class refinement: partial hits billed at buffer cost instead of full
// memory cost. Per-access value is 0 for an empty run.
inline ExtendedEnergy extended_energy(const SimStats& stats, const UnitCosts& costs) {
  ExtendedEnergy e;
  e.total = static_cast<double>(stats.hits) * costs.e_hit +
            static_cast<double>(stats.partial_hits) * costs.e_partial +
            static_cast<double>(stats.misses) * costs.e_miss;
  e.per_access = stats.accesses == 0 ? 0.0 : e.total / static_cast<double>(stats.accesses);
  return e;
}

// Latency proxy: the model equates each access class's time with the time of
// its energy components, so the arithmetic is the extended-energy total over
// a separate cost table (which defaults to the energy-derived unit costs).
inline double total_time(const SimStats& stats, const UnitCosts& time_costs) {
  return extended_energy(stats, time_costs).total;
}

struct EnergyReport {
  double paper_energy_per_access = 0.0;
  double extended_energy_per_access = 0.0;
  double total_extended_energy = 0.0;
  double total_time = 0.0;
};

inline EnergyReport make_energy_report(const SimStats& stats, const EnergyParams& params) {
  EnergyReport report;
  if (stats.accesses == 0) return report;  // empty run reports zero energies
  const UnitCosts costs = derive_unit_costs(params);
  report.paper_energy_per_access = paper_energy(stats, costs);
  const ExtendedEnergy ext = extended_energy(stats, costs);
  report.extended_energy_per_access = ext.per_access;
  report.total_extended_energy = ext.total;
  report.total_time = total_time(stats, costs);
  return report;
}

namespace detail {

inline std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

inline double parse_double(std::string_view text, std::size_t line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("energy file: malformed number '" + std::string(text) + "'", line);
  return value;
}

}  // namespace detail

// Flat key=value parameter file. Recognized keys: e_decoder, e_cell_array,
// e_access_memory, e_access_buffer. Blank lines and '#' comments are
// skipped; keys not present keep their defaults. The result is validated.
inline EnergyParams load_energy_params(std::istream& in) {
  EnergyParams params;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("energy file: expected key=value", line_no);
    const std::string_view key = detail::trim(text.substr(0, eq));
    const std::string_view value = detail::trim(text.substr(eq + 1));
    if (key == "e_decoder")
      params.e_decoder = detail::parse_double(value, line_no);
    else if (key == "e_cell_array")
      params.e_cell_array = detail::parse_double(value, line_no);
    else if (key == "e_access_memory")
      params.e_access_memory = detail::parse_double(value, line_no);
    else if (key == "e_access_buffer")
      params.e_access_buffer = detail::parse_double(value, line_no);
    else
      throw ParseError("energy file: unknown key '" + std::string(key) + "'", line_no);
  }
  params.validate();
  return params;
}

inline EnergyParams load_energy_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open energy file: " + path);
  return load_energy_params(in);
}

}  // namespace cachesim
