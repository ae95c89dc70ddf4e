#include "parse.hpp"

#include <fstream>
#include <sstream>

namespace pireg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Split on top-level commas, ignoring commas nested in (), [] or {}.
std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

Rat parse_rat(std::string_view s, const char* what) {
  auto r = Rat::parse(trim(s));
  if (!r) throw parse_error(std::string("expected a rational for ") + what + ", got '" + std::string(s) + "'");
  return *r;
}

std::int64_t parse_int(std::string_view s, const char* what) {
  Rat r = parse_rat(s, what);
  if (!r.is_integer() || !r.num().fits_slong_p())
    throw parse_error(std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
  return r.num().get_si();
}

ExtRat parse_ext(std::string_view s, const char* what) {
  std::string_view t = trim(s);
  if (t == "inf" || t == "+inf") return ExtRat::pos_inf();
  return ExtRat(parse_rat(t, what));
}

}  // namespace

Trace parse_trace(std::string_view text) {
  Trace t;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fields = split_ws(line);
    if (fields.size() != 2 && fields.size() != 3)
      throw parse_error("trace line " + std::to_string(lineno) + ": expected <date> <length> [<flow>]");
    t.dates.push_back(parse_rat(fields[0], "date"));
    std::int64_t len = parse_int(fields[1], "length");
    if (len < 1) throw parse_error("trace line " + std::to_string(lineno) + ": length must be >= 1");
    t.lengths.push_back(len);
    if (fields.size() == 3) {
      std::int64_t f = parse_int(fields[2], "flow");
      if (f < 1) throw parse_error("trace line " + std::to_string(lineno) + ": flow id must be >= 1");
      t.flows.push_back(static_cast<std::uint64_t>(f));
    } else {
      t.flows.push_back(1);
    }
  }
  return t;
}

std::string format_trace(const Trace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.dates.size(); ++i)
    os << trace.dates[i].str() << " " << trace.lengths[i] << " " << trace.flows[i] << "\n";
  return os.str();
}

Trace trace_of(const PacketSequence& seq) {
  return Trace{seq.dates(), seq.lengths(), seq.flows()};
}

PacketSequence sequence_of(const Trace& trace) {
  try {
    return PacketSequence::make(trace.dates, trace.lengths, trace.flows);
  } catch (const sequence_error& e) {
    throw parse_error(std::string("invalid trace: ") + e.what());
  }
}

Curve parse_curve(std::string_view text) {
  std::string_view t = trim(text);
  try {
    if (t.rfind("affine", 0) == 0) {
      auto args = split_ws(t.substr(6));
      if (args.size() != 2) throw parse_error("affine needs: affine r b");
      return Curve::affine(parse_rat(args[0], "rate"), parse_rat(args[1], "burst"));
    }
    if (t.rfind("staircase", 0) == 0) {
      auto args = split_ws(t.substr(9));
      if (args.size() != 2) throw parse_error("staircase needs: staircase tau b");
      return Curve::staircase(parse_rat(args[0], "tau"), parse_rat(args[1], "burst"));
    }
    if (t.rfind("points", 0) == 0) {
      std::string_view body = trim(t.substr(6));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw parse_error("points needs a bracketed list: points [(x, y_left, y, slope), ...]");
      body = trim(body.substr(1, body.size() - 2));
      std::vector<Curve::Point> pts;
      for (std::string_view item : split_commas(body)) {
        item = trim(item);
        if (item.empty()) continue;
        if (item.front() != '(' || item.back() != ')')
          throw parse_error("each point is a 4-tuple: (x, y_left, y, slope)");
        auto parts = split_commas(item.substr(1, item.size() - 2));
        if (parts.size() != 4) throw parse_error("each point is a 4-tuple: (x, y_left, y, slope)");
        pts.push_back({parse_rat(parts[0], "x"), parse_ext(parts[1], "y_left"),
                       parse_ext(parts[2], "y"), parse_rat(parts[3], "slope")});
      }
      if (pts.empty()) throw parse_error("points needs at least one point");
      return Curve::from_points(pts);
    }
  } catch (const curve_error& e) {
    throw parse_error(std::string("invalid curve: ") + e.what());
  } catch (const domain_error& e) {
    throw parse_error(std::string("invalid curve: ") + e.what());
  }
  throw parse_error("unknown curve literal: '" + std::string(t) + "'");
}

Operator parse_operator(std::string_view text) {
  std::string_view t = trim(text);
  try {
    if (t.rfind("max(", 0) == 0 && t.back() == ')') {
      auto parts = split_commas(t.substr(4, t.size() - 5));
      if (parts.size() != 2) throw parse_error("max needs two operators: max(<op>, <op>)");
      return Operator::max_of(parse_operator(parts[0]), parse_operator(parts[1]));
    }
    if (t.rfind("lrq", 0) == 0) {
      auto args = split_ws(t.substr(3));
      if (args.size() != 1) throw parse_error("lrq needs: lrq r");
      return Operator::lrq(parse_rat(args[0], "rate"));
    }
    if (t.rfind("lb", 0) == 0) {
      auto args = split_ws(t.substr(2));
      if (args.size() != 2) throw parse_error("lb needs: lb r b");
      return Operator::leaky_bucket(parse_rat(args[0], "rate"), parse_rat(args[1], "burst"));
    }
    if (t.rfind("sc", 0) == 0) {
      auto args = split_ws(t.substr(2));
      if (args.size() != 2) throw parse_error("sc needs: sc tau b");
      return Operator::staircase(parse_rat(args[0], "tau"), parse_int(args[1], "burst"));
    }
    if (t.rfind("tsn", 0) == 0) {
      auto args = split_ws(t.substr(3));
      if (args.size() != 2) throw parse_error("tsn needs: tsn tau K");
      return Operator::tsn_packet_rate(parse_rat(args[0], "tau"), parse_int(args[1], "K"));
    }
    if (t.rfind("ps", 0) == 0) {
      auto args = split_ws(t.substr(2));
      if (args.size() != 1) throw parse_error("ps needs: ps tau");
      return Operator::packet_spacing(parse_rat(args[0], "tau"));
    }
    if (t.rfind("pb", 0) == 0) {
      auto args = split_ws(t.substr(2));
      if (args.size() != 2) throw parse_error("pb needs: pb rho K");
      return Operator::packet_burstiness(parse_rat(args[0], "rho"), parse_int(args[1], "K"));
    }
    if (t.rfind("lambda-nu", 0) == 0) {
      auto args = split_ws(t.substr(9));
      if (args.size() != 2) throw parse_error("lambda-nu needs: lambda-nu lambda nu");
      return Operator::jiang_lambda_nu(parse_rat(args[0], "lambda"), parse_rat(args[1], "nu"));
    }
    if (t.rfind("g ", 0) == 0) return Operator::g_regulation(parse_curve(t.substr(2)));
    if (t.rfind("ac ", 0) == 0) return Operator::arrival_curve(parse_curve(t.substr(3)));
  } catch (const operator_error& e) {
    throw parse_error(std::string("invalid operator: ") + e.what());
  }
  throw parse_error("unknown operator literal: '" + std::string(t) + "'");
}

FifoSystem parse_system(std::string_view text) {
  std::string_view t = trim(text);
  try {
    if (t == "identity") return FifoSystem::identity();
    if (t.rfind("damper", 0) == 0) {
      auto args = split_ws(t.substr(6));
      if (args.size() != 1) throw parse_error("damper needs: damper d");
      return FifoSystem::damper(parse_rat(args[0], "d"));
    }
    if (t.rfind("pserver", 0) == 0) {
      auto args = split_ws(t.substr(7));
      if (args.empty()) throw parse_error("pserver needs: pserver rate [s1,e1] ...");
      Rat rate = parse_rat(args[0], "rate");
      std::vector<TimeWindow> windows;
      for (std::size_t i = 1; i < args.size(); ++i) {
        std::string_view w = args[i];
        if (w.size() < 2 || w.front() != '[' || w.back() != ']')
          throw parse_error("preemption windows are written [start,end]");
        auto parts = split_commas(w.substr(1, w.size() - 2));
        if (parts.size() != 2) throw parse_error("preemption windows are written [start,end]");
        windows.push_back({parse_rat(parts[0], "window start"), parse_rat(parts[1], "window end")});
      }
      return FifoSystem::preemptive_server(rate, std::move(windows));
    }
    if (t.rfind("jitter", 0) == 0) {
      auto args = split_ws(t.substr(6));
      if (args.size() != 2) throw parse_error("jitter needs: jitter seed dmax");
      std::int64_t seed = parse_int(args[0], "seed");
      if (seed < 0) throw parse_error("jitter seed must be nonnegative");
      return FifoSystem::bounded_jitter(static_cast<std::uint64_t>(seed), parse_rat(args[1], "dmax"));
    }
  } catch (const system_error& e) {
    throw parse_error(std::string("invalid system: ") + e.what());
  }
  throw parse_error("unknown system literal: '" + std::string(t) + "'");
}

namespace {

FlowOps parse_flow_ops(std::string_view body) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw parse_error("flow bindings are written {flow: op, flow: op, ...}");
  FlowOps ops;
  for (std::string_view item : split_commas(body.substr(1, body.size() - 2))) {
    item = trim(item);
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw parse_error("flow binding needs 'flow: op'");
    std::int64_t f = parse_int(item.substr(0, colon), "flow id");
    if (f < 1) throw parse_error("flow id must be >= 1");
    if (!ops.emplace(static_cast<std::uint64_t>(f), parse_operator(item.substr(colon + 1))).second)
      throw parse_error("duplicate binding for flow " + std::to_string(f));
  }
  if (ops.empty()) throw parse_error("flow bindings must not be empty");
  return ops;
}

}  // namespace

Pipeline parse_pipeline(std::string_view text) {
  Pipeline p;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    PipelineStage stage;
    try {
      if (line.rfind("interleaved", 0) == 0) {
        stage.kind = PipelineStage::Kind::Interleaved;
        stage.ops = parse_flow_ops(line.substr(11));
      } else if (line.rfind("regulator", 0) == 0) {
        stage.kind = PipelineStage::Kind::PerFlowRegulator;
        stage.ops = parse_flow_ops(line.substr(9));
      } else if (line.rfind("bank", 0) == 0) {
        stage.kind = PipelineStage::Kind::Bank;
        stage.ops = parse_flow_ops(line.substr(4));
      } else {
        stage.kind = PipelineStage::Kind::System;
        stage.system = parse_system(line);
      }
    } catch (const parse_error& e) {
      throw parse_error("config line " + std::to_string(lineno) + ": " + e.what());
    }
    p.stages.push_back(std::move(stage));
  }
  if (p.stages.empty()) throw parse_error("config has no stages");
  for (std::size_t i = 0; i + 1 < p.stages.size(); ++i)
    if (p.stages[i].kind == PipelineStage::Kind::Bank)
      throw config_error("a bank stage emits a non-FIFO trace and must be the final stage");
  return p;
}

Trace run_pipeline(const Pipeline& pipeline, const Trace& input) {
  PacketSequence seq = sequence_of(input);
  for (std::size_t i = 0; i < pipeline.stages.size(); ++i) {
    const PipelineStage& stage = pipeline.stages[i];
    try {
      switch (stage.kind) {
        case PipelineStage::Kind::System:
          seq = stage.system.apply(seq);
          break;
        case PipelineStage::Kind::PerFlowRegulator: {
          if (!seq.is_single_flow())
            throw config_error("a per-flow regulator stage needs a single-flow trace");
          if (!seq.empty()) {
            auto it = stage.ops.find(seq.flow(1));
            if (it == stage.ops.end())
              throw config_error("no operator bound to flow " + std::to_string(seq.flow(1)));
            seq = minimal_regulate(it->second, seq);
          }
          break;
        }
        case PipelineStage::Kind::Interleaved:
          seq = minimal_interleaved_regulate(stage.ops, seq);
          break;
        case PipelineStage::Kind::Bank: {
          std::vector<Rat> dates = per_flow_bank(stage.ops, seq);
          return Trace{std::move(dates), seq.lengths(), seq.flows()};
        }
      }
    } catch (const regulator_error& e) {
      throw config_error(std::string("stage ") + std::to_string(i + 1) + ": " + e.what());
    } catch (const system_error& e) {
      throw config_error(std::string("stage ") + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return trace_of(seq);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw parse_error("failed writing file: " + path);
}

}  // namespace pireg
