// pireg: traffic-regulation toolkit CLI. Talks to the core exclusively
// through the C API in pireg.h.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pireg.h"

namespace {

int status_to_exit(pireg_status s) {
  switch (s) {
    case PIREG_OK: return 0;
    case PIREG_CHECK_FAILED: return 1;
    case PIREG_CONFIG_ERROR: return 3;
    case PIREG_PARSE_ERROR:
    case PIREG_INVALID_ARGUMENT:
    case PIREG_IO_ERROR:
    default: return 2;
  }
}

int fail(pireg_status s) {
  std::fprintf(stderr, "pireg: %s\n", pireg_last_error());
  return status_to_exit(s);
}

struct TraceHandle {
  pireg_trace* t = nullptr;
  ~TraceHandle() { pireg_trace_free(t); }
};

struct PipelineHandle {
  pireg_pipeline* p = nullptr;
  ~PipelineHandle() { pireg_pipeline_free(p); }
};

int cmd_regulate(const std::string& trace_path, const std::string& config_path,
                 const std::string& out_path) {
  TraceHandle in;
  if (pireg_status s = pireg_trace_read(trace_path.c_str(), &in.t); s != PIREG_OK) return fail(s);
  PipelineHandle pipe;
  if (pireg_status s = pireg_pipeline_read(config_path.c_str(), &pipe.p); s != PIREG_OK)
    return fail(s);
  TraceHandle out;
  if (pireg_status s = pireg_pipeline_run(pipe.p, in.t, &out.t); s != PIREG_OK) return fail(s);
  if (pireg_status s = pireg_trace_write(out.t, out_path.c_str()); s != PIREG_OK) return fail(s);
  return 0;
}

int cmd_delays(const std::string& in_path, const std::string& out_path, bool per_packet) {
  TraceHandle in, out;
  if (pireg_status s = pireg_trace_read(in_path.c_str(), &in.t); s != PIREG_OK) return fail(s);
  if (pireg_status s = pireg_trace_read(out_path.c_str(), &out.t); s != PIREG_OK) return fail(s);
  char* table = nullptr;
  if (pireg_status s = pireg_delays(in.t, out.t, per_packet ? 1 : 0, &table); s != PIREG_OK)
    return fail(s);
  std::fputs(table, stdout);
  pireg_string_free(table);
  return 0;
}

int cmd_check(const std::string& name, const std::vector<std::pair<std::string, std::string>>& args) {
  std::vector<const char*> keys, values;
  for (const auto& [k, v] : args) {
    keys.push_back(k.c_str());
    values.push_back(v.c_str());
  }
  pireg_report* report = nullptr;
  pireg_status s = pireg_check(name.c_str(), keys.data(), values.data(), keys.size(), &report);
  if (s != PIREG_OK && s != PIREG_CHECK_FAILED) return fail(s);
  std::fputs(pireg_report_text(report), stdout);
  pireg_report_free(report);
  return status_to_exit(s);
}

int cmd_example(long corrupt) {
  char* text = nullptr;
  pireg_status s = pireg_example(corrupt, &text);
  if (s != PIREG_OK && s != PIREG_CHECK_FAILED) return fail(s);
  std::fputs(text, stdout);
  pireg_string_free(text);
  return status_to_exit(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traffic regulation toolkit: minimal per-flow and interleaved regulators, "
               "FIFO-system models, worst-case delays and theorem checks over exact rational "
               "packet traces."};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string trace_path, config_path, out_path, in_path;
  bool per_packet = false;

  auto* regulate = app.add_subcommand("regulate", "Run a trace through a pipeline config");
  regulate->add_option("trace", trace_path, "input trace file")->required();
  regulate->add_option("config", config_path, "pipeline config file")->required();
  regulate->add_option("output", out_path, "output trace path")->required();

  auto* delays = app.add_subcommand("delays", "Worst-case delays between two matched traces");
  delays->add_option("input", in_path, "input trace file")->required();
  delays->add_option("output", out_path, "output trace file")->required();
  delays->add_flag("--per-packet", per_packet, "also print one row per packet");

  std::string check_name, opt_trace, opt_candidate, opt_sigma, opt_op, opt_ops, opt_system, opt_mode;
  std::string opt_instances, opt_seed;
  auto* check = app.add_subcommand(
      "check", "Run a named check: theorem1, regularity, minimality, shaping-for-free, dominance, "
               "c-conditions");
  check->add_option("name", check_name, "check name")->required();
  check->add_option("--trace", opt_trace, "trace file");
  check->add_option("--candidate", opt_candidate, "candidate output trace file");
  check->add_option("--sigma", opt_sigma, "arrival curve literal");
  check->add_option("--op", opt_op, "operator literal (bound to every flow)");
  check->add_option("--ops", opt_ops, "flow bindings, e.g. \"{1: ps 5, 2: ps 10}\"");
  check->add_option("--system", opt_system, "FIFO system literal");
  check->add_option("--mode", opt_mode, "per-flow or interleaved");
  check->add_option("--instances", opt_instances, "campaign size when no trace is given");
  check->add_option("--seed", opt_seed, "campaign seed");

  long corrupt = 0;
  auto* example = app.add_subcommand("example", "Reproduce the built-in worked scenario");
  example->add_option("--corrupt-golden", corrupt, "negative control: flip one reference value")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (regulate->parsed()) return cmd_regulate(trace_path, config_path, out_path);
  if (delays->parsed()) return cmd_delays(in_path, out_path, per_packet);
  if (check->parsed()) {
    std::vector<std::pair<std::string, std::string>> args;
    auto add = [&args](const char* k, const std::string& v) {
      if (!v.empty()) args.emplace_back(k, v);
    };
    add("trace", opt_trace);
    add("candidate", opt_candidate);
    add("sigma", opt_sigma);
    add("op", opt_op);
    add("ops", opt_ops);
    add("system", opt_system);
    add("mode", opt_mode);
    add("instances", opt_instances);
    add("seed", opt_seed);
    return cmd_check(check_name, args);
  }
  if (example->parsed()) return cmd_example(corrupt);
  return 2;
}
