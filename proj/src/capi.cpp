#include "pireg.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "golden.hpp"
#include "parse.hpp"
#include "verify.hpp"

using namespace pireg;

struct pireg_trace {
  Trace t;
};

struct pireg_pipeline {
  Pipeline p;
};

struct pireg_report {
  std::string text;
  bool pass = false;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
pireg_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    g_last_error = e.what();
    return PIREG_PARSE_ERROR;
  } catch (const config_error& e) {
    g_last_error = e.what();
    return PIREG_CONFIG_ERROR;
  } catch (const regulator_error& e) {
    g_last_error = e.what();
    return PIREG_CONFIG_ERROR;  // e.g. a flow with no bound operator
  } catch (const domain_error& e) {
    g_last_error = e.what();
    return PIREG_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PIREG_INTERNAL_ERROR;
  }
}

pireg_status invalid(const char* why) {
  g_last_error = why;
  return PIREG_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* pireg_version(void) { return "1.0.0"; }

const char* pireg_last_error(void) { return g_last_error.c_str(); }

void pireg_string_free(char* s) { std::free(s); }

pireg_status pireg_trace_parse(const char* text, pireg_trace** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new pireg_trace{parse_trace(text)};
    return PIREG_OK;
  });
}

pireg_status pireg_trace_read(const char* path, pireg_trace** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    *out = new pireg_trace{parse_trace(read_file(path))};
    return PIREG_OK;
  });
}

pireg_status pireg_trace_format(const pireg_trace* trace, char** out_text) {
  if (!trace || !out_text) return invalid("null argument");
  return guarded([&] {
    *out_text = dup_string(format_trace(trace->t));
    return *out_text ? PIREG_OK : PIREG_INTERNAL_ERROR;
  });
}

pireg_status pireg_trace_write(const pireg_trace* trace, const char* path) {
  if (!trace || !path) return invalid("null argument");
  return guarded([&] {
    write_file(path, format_trace(trace->t));
    return PIREG_OK;
  });
}

size_t pireg_trace_size(const pireg_trace* trace) { return trace ? trace->t.dates.size() : 0; }

void pireg_trace_free(pireg_trace* trace) { delete trace; }

pireg_status pireg_pipeline_parse(const char* text, pireg_pipeline** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new pireg_pipeline{parse_pipeline(text)};
    return PIREG_OK;
  });
}

pireg_status pireg_pipeline_read(const char* path, pireg_pipeline** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    *out = new pireg_pipeline{parse_pipeline(read_file(path))};
    return PIREG_OK;
  });
}

pireg_status pireg_pipeline_run(const pireg_pipeline* pipeline, const pireg_trace* input,
                                pireg_trace** out) {
  if (!pipeline || !input || !out) return invalid("null argument");
  return guarded([&] {
    *out = new pireg_trace{run_pipeline(pipeline->p, input->t)};
    return PIREG_OK;
  });
}

void pireg_pipeline_free(pireg_pipeline* pipeline) { delete pipeline; }

pireg_status pireg_delays(const pireg_trace* input, const pireg_trace* output, int per_packet,
                          char** out_table) {
  if (!input || !output || !out_table) return invalid("null argument");
  return guarded([&] {
    PacketSequence in = sequence_of(input->t);
    if (input->t.lengths != output->t.lengths || input->t.flows != output->t.flows)
      throw parse_error("mismatched traces: lengths or flows differ");
    const std::vector<Rat>& out_dates = output->t.dates;
    std::string table = "flow\tdelay\n";
    for (const auto& [f, d] : per_flow_worst_case_delay(in, out_dates))
      table += std::to_string(f) + "\t" + d.str() + "\n";
    table += "overall\t" + worst_case_delay(in, out_dates).str() + "\n";
    if (per_packet) {
      table += "packet\tflow\tin\tout\tdelay\n";
      for (std::size_t n = 1; n <= in.size(); ++n) {
        table += std::to_string(n) + "\t" + std::to_string(in.flow(n)) + "\t" +
                 in.date(n).str() + "\t" + out_dates[n - 1].str() + "\t" +
                 (out_dates[n - 1] - in.date(n)).str() + "\n";
      }
    }
    *out_table = dup_string(table);
    return *out_table ? PIREG_OK : PIREG_INTERNAL_ERROR;
  });
}

namespace {

struct CheckArgs {
  std::map<std::string, std::string> kv;

  const std::string* get(const char* key) const {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  }
  std::uint64_t get_u64(const char* key, std::uint64_t fallback) const {
    const std::string* v = get(key);
    if (!v) return fallback;
    auto r = Rat::parse(*v);
    if (!r || !r->is_integer() || r->sign() < 0 || !r->num().fits_ulong_p())
      throw parse_error(std::string(key) + " must be a nonnegative integer");
    return r->num().get_ui();
  }
};

PacketSequence need_trace(const CheckArgs& args) {
  const std::string* path = args.get("trace");
  if (!path) throw parse_error("this check needs --trace");
  return sequence_of(parse_trace(read_file(*path)));
}

FlowOps need_ops(const CheckArgs& args, const PacketSequence& seq) {
  if (const std::string* ops = args.get("ops")) {
    // Same {flow: op, ...} syntax as config files.
    Pipeline p = parse_pipeline("interleaved " + *ops);
    return p.stages.front().ops;
  }
  if (const std::string* op = args.get("op")) {
    FlowOps ops;
    Operator parsed = parse_operator(*op);
    for (std::uint64_t f : seq.flow_ids()) ops.emplace(f, parsed);
    if (ops.empty()) ops.emplace(1, parsed);
    return ops;
  }
  throw parse_error("this check needs --op or --ops");
}

CheckReport dispatch_check(const std::string& name, const CheckArgs& args) {
  std::uint64_t seed = args.get_u64("seed", 1);
  if (name == "theorem1") {
    if (args.get("trace")) {
      const std::string* sigma = args.get("sigma");
      if (!sigma) throw parse_error("theorem1 needs --sigma");
      return check_theorem1(need_trace(args), parse_curve(*sigma));
    }
    return run_theorem1_campaign(seed, args.get_u64("instances", 1000));
  }
  if (name == "regularity") {
    const std::string* op = args.get("op");
    if (!op) throw parse_error("regularity needs --op");
    return check_regularity(parse_operator(*op), need_trace(args));
  }
  if (name == "minimality") {
    if (args.get("trace")) {
      PacketSequence input = need_trace(args);
      const std::string* cand = args.get("candidate");
      if (!cand) throw parse_error("minimality needs --candidate");
      PacketSequence candidate = sequence_of(parse_trace(read_file(*cand)));
      return check_minimality(need_ops(args, input), input, candidate);
    }
    return run_minimality_campaign(seed, args.get_u64("instances", 1000));
  }
  if (name == "shaping-for-free") {
    ShapingMode mode = ShapingMode::Interleaved;
    if (const std::string* m = args.get("mode")) {
      if (*m == "per-flow")
        mode = ShapingMode::PerFlow;
      else if (*m != "interleaved")
        throw parse_error("mode must be per-flow or interleaved");
    }
    if (args.get("trace")) {
      PacketSequence input = need_trace(args);
      const std::string* sys = args.get("system");
      if (!sys) throw parse_error("shaping-for-free needs --system");
      return check_shaping_for_free(parse_system(*sys), need_ops(args, input), input, mode);
    }
    return run_shaping_campaign(seed, args.get_u64("instances", 1000), mode);
  }
  if (name == "dominance") {
    if (args.get("trace")) {
      PacketSequence input = need_trace(args);
      return check_dominance(need_ops(args, input), input);
    }
    return run_dominance_campaign(seed, args.get_u64("instances", 1000));
  }
  if (name == "c-conditions") {
    return run_c_conditions_campaign(seed, args.get_u64("instances", 1000));
  }
  throw parse_error("unknown check: " + name +
                    " (expected theorem1, regularity, minimality, shaping-for-free, dominance or "
                    "c-conditions)");
}

}  // namespace

pireg_status pireg_check(const char* name, const char* const* keys, const char* const* values,
                         size_t nargs, pireg_report** out) {
  if (!name || !out || (nargs > 0 && (!keys || !values))) return invalid("null argument");
  return guarded([&] {
    CheckArgs args;
    for (size_t i = 0; i < nargs; ++i) {
      if (!keys[i] || !values[i]) throw parse_error("null check argument");
      args.kv[keys[i]] = values[i];
    }
    CheckReport report = dispatch_check(name, args);
    *out = new pireg_report{report.line() + "\n", report.pass};
    return report.pass ? PIREG_OK : PIREG_CHECK_FAILED;
  });
}

const char* pireg_report_text(const pireg_report* report) {
  return report ? report->text.c_str() : "";
}

int pireg_report_passed(const pireg_report* report) { return report && report->pass ? 1 : 0; }

void pireg_report_free(pireg_report* report) { delete report; }

pireg_status pireg_example(long corrupt_index, char** out_text) {
  if (!out_text) return invalid("null argument");
  return guarded([&] {
    bool ok = false;
    std::optional<std::size_t> corrupt;
    if (corrupt_index > 0) corrupt = static_cast<std::size_t>(corrupt_index);
    std::string text = example_report(corrupt, ok);
    *out_text = dup_string(text);
    if (!*out_text) return PIREG_INTERNAL_ERROR;
    return ok ? PIREG_OK : PIREG_CHECK_FAILED;
  });
}

}  // extern "C"
