#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cachesim/cachesim.hpp"

namespace {

struct CliOptions {
  // single-run / comparison
  std::string policy;
  std::string policies;
  std::size_t capacity = 0;
  std::optional<std::size_t> buffer;
  bool buffered = false;
  bool freeze_frequency = false;
  bool freeze_delta = false;
  bool log_victims = false;

  // trace input
  std::string trace_path;
  std::string mode = "block";
  std::size_t block_size = 64;

  // synthetic workload
  std::string workload;
  std::uint64_t universe = 1;
  std::uint64_t length = 1;
  double alpha = 0.8;
  std::uint64_t seed = 0;

  // energy model
  std::string energy_file;
  std::optional<double> e_decoder;
  std::optional<double> e_cell_array;
  std::optional<double> e_access_memory;
  std::optional<double> e_access_buffer;

  // output
  std::string format = "csv";
  std::string out_path;
};

void add_workload_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--workload", o.workload, "synthetic workload kind: zipf|loop|scan|uniform");
  cmd->add_option("--universe", o.universe, "number of distinct blocks (default 1)");
  cmd->add_option("--length", o.length, "number of accesses to generate");
  cmd->add_option("--alpha", o.alpha, "zipf skew exponent (default 0.8)");
  cmd->add_option("--seed", o.seed, "workload generator seed (default 0)");
}

void add_sim_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--capacity", o.capacity, "cache capacity in frames")->required();
  cmd->add_option("--buffer", o.buffer,
                  "victim buffer frames (lwrp default: capacity/4, min 1)");
  cmd->add_flag("--buffered", o.buffered,
                "attach the victim buffer to non-lwrp policies as well");
  cmd->add_flag("--freeze-frequency", o.freeze_frequency,
                "lwrp variant: pin hit_energy at 1");
  cmd->add_flag("--freeze-delta", o.freeze_delta, "lwrp variant: pin delta_t at 1");
  cmd->add_flag("--log-victims", o.log_victims,
                "record the victim sequence (json output only)");
  cmd->add_option("--trace", o.trace_path, "trace file, one access per line");
  cmd->add_option("--mode", o.mode, "trace value interpretation (default block)")
      ->check(CLI::IsMember({"block", "address"}));
  cmd->add_option("--block-size", o.block_size,
                  "block size in bytes for address mode (default 64)");
  add_workload_options(cmd, o);
  cmd->add_option("--energy-file", o.energy_file,
                  "key=value energy parameter file (env CACHESIM_ENERGY_FILE)");
  cmd->add_option("--e-decoder", o.e_decoder, "override e_decoder");
  cmd->add_option("--e-cell-array", o.e_cell_array, "override e_cell_array");
  cmd->add_option("--e-access-memory", o.e_access_memory, "override e_access_memory");
  cmd->add_option("--e-access-buffer", o.e_access_buffer, "override e_access_buffer");
  cmd->add_option("--format", o.format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "write results to this file instead of stdout");
}

cachesim::EnergyParams resolve_energy(const CliOptions& o) {
  cachesim::EnergyParams params;
  std::string file = o.energy_file;
  if (file.empty()) {
    if (const char* env = std::getenv("CACHESIM_ENERGY_FILE")) file = env;
  }
  if (!file.empty()) params = cachesim::load_energy_params_file(file);
  if (o.e_decoder) params.e_decoder = *o.e_decoder;
  if (o.e_cell_array) params.e_cell_array = *o.e_cell_array;
  if (o.e_access_memory) params.e_access_memory = *o.e_access_memory;
  if (o.e_access_buffer) params.e_access_buffer = *o.e_access_buffer;
  params.validate();
  return params;
}

cachesim::WorkloadSpec workload_spec(const CliOptions& o) {
  cachesim::WorkloadSpec spec;
  spec.kind = cachesim::workload_kind_from(o.workload);
  spec.universe = o.universe;
  spec.length = o.length;
  spec.alpha = spec.kind == cachesim::WorkloadKind::Zipf ? o.alpha : 0.0;
  spec.seed = o.seed;
  return spec;
}

cachesim::Trace resolve_trace(const CliOptions& o) {
  if (!o.trace_path.empty() && !o.workload.empty())
    throw std::invalid_argument("give either --trace or --workload, not both");
  if (!o.trace_path.empty()) {
    const auto mode = o.mode == "address" ? cachesim::TraceMode::Address
                                          : cachesim::TraceMode::Block;
    return cachesim::parse_trace_file(o.trace_path, mode, o.block_size);
  }
  if (!o.workload.empty()) return cachesim::generate(workload_spec(o));
  throw std::invalid_argument("an input is required: --trace or --workload");
}

std::vector<std::string> split_policies(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  if (names.empty()) throw std::invalid_argument("--policies: empty policy list");
  return names;
}

cachesim::RunConfig build_config(const CliOptions& o, const std::string& policy) {
  const bool known = std::find(cachesim::policy_names().begin(),
                               cachesim::policy_names().end(),
                               policy) != cachesim::policy_names().end();
  if (!known) throw std::invalid_argument("unknown policy: " + policy);

  cachesim::RunConfig config;
  config.policy = policy;
  config.cache.capacity = o.capacity;
  config.cache.block_size = o.block_size;
  config.buffered = policy == "lwrp" || o.buffered;
  std::size_t frames = 0;
  if (o.buffer) {
    frames = *o.buffer;
  } else if (policy == "lwrp") {
    frames = std::max<std::size_t>(o.capacity / 4, 1);
  }
  config.cache.buffer_capacity = frames;
  if (!config.buffered && o.buffer && *o.buffer > 0)
    std::cerr << "note: --buffer has no effect for " << policy
              << " without --buffered\n";
  config.energy = resolve_energy(o);
  config.lwrp_flags.freeze_frequency = o.freeze_frequency;
  config.lwrp_flags.freeze_delta = o.freeze_delta;
  config.log_victims = o.log_victims;
  return config;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << payload;
  if (!out) throw std::runtime_error("failed writing output file: " + out_path);
}

int run_simulations(const CliOptions& o, const std::vector<std::string>& names) {
  const cachesim::Trace trace = resolve_trace(o);
  if (trace.blocks.empty())
    std::cerr << "note: empty trace (0 accesses); all ratios and energies are zero\n";
  std::vector<cachesim::RunConfig> configs;
  configs.reserve(names.size());
  for (const std::string& name : names) configs.push_back(build_config(o, name));
  const auto results = cachesim::compare(trace, configs);
  for (const auto& r : results) {
    if (r.config.buffered && r.config.policy != "lwrp")
      std::cerr << "note: " << r.config.policy
                << " ran with a victim buffer (extension beyond the classic policy)\n";
  }
  emit(cachesim::write_results(results, cachesim::output_format_from(o.format)),
       o.out_path);
  return 0;
}

int run_gen(const CliOptions& o) {
  if (o.workload.empty()) throw std::invalid_argument("gen requires --workload");
  const cachesim::Trace trace = cachesim::generate(workload_spec(o));
  std::ostringstream payload;
  cachesim::write_trace(trace, payload);
  emit(payload.str(), o.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace-driven cache replacement simulator with energy accounting"};
  app.require_subcommand(1);

  CliOptions run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "simulate one policy over a trace");
  run_cmd->add_option("--policy", run_opts.policy, "fifo|lru|lfu|mru|lwrp")->required();
  add_sim_options(run_cmd, run_opts);

  CliOptions cmp_opts;
  CLI::App* cmp_cmd =
      app.add_subcommand("compare", "simulate several policies over one trace");
  cmp_cmd->add_option("--policies", cmp_opts.policies,
                      "comma-separated policy list, e.g. lru,lfu,lwrp")
      ->required();
  add_sim_options(cmp_cmd, cmp_opts);

  CliOptions gen_opts;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic trace file");
  add_workload_options(gen_cmd, gen_opts);
  gen_cmd->add_option("--out", gen_opts.out_path,
                      "write the trace to this file instead of stdout");
  gen_cmd->get_option("--workload")->required();
  gen_cmd->get_option("--length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(run_cmd)) return run_simulations(run_opts, {run_opts.policy});
    if (app.got_subcommand(cmp_cmd))
      return run_simulations(cmp_opts, split_policies(cmp_opts.policies));
    return run_gen(gen_opts);
  } catch (const cachesim::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
