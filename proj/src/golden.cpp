#include "golden.hpp"

#include <sstream>

namespace pireg {

namespace appendix {

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

PacketSequence input() {
  // Flow 1 sends 2 data units every 5 time units, flow 2 one data unit every
  // 10, just after the even packets of flow 1.
  return PacketSequence::make(rats({0, 5, 5, 10, 15, 15, 20, 25, 25}),
                              {2, 2, 1, 2, 2, 1, 2, 2, 1}, {1, 1, 2, 1, 1, 2, 1, 1, 2});
}

FifoSystem server() {
  return FifoSystem::preemptive_server(
      Rat(1), {{Rat(0), Rat(3)}, {Rat(10), Rat(13)}, {Rat(20), Rat(23)}});
}

FlowOps operators() {
  FlowOps ops;
  ops.emplace(1, Operator::packet_spacing(Rat(5)));
  ops.emplace(2, Operator::packet_spacing(Rat(10)));
  return ops;
}

const std::vector<Rat>& expected_d() {
  static const std::vector<Rat> d = rats({5, 7, 8, 15, 17, 18, 25, 27, 28});
  return d;
}

const std::vector<Rat>& expected_e() {
  static const std::vector<Rat> e = rats({5, 10, 10, 15, 20, 20, 25, 30, 30});
  return e;
}

const std::vector<Rat>& expected_e_bank() {
  static const std::vector<Rat> e = rats({5, 10, 8, 15, 20, 18, 25, 30, 28});
  return e;
}

}  // namespace appendix

namespace {

void print_row(std::ostringstream& os, const char* label, const std::vector<Rat>& xs) {
  os << label;
  for (const Rat& x : xs) os << "\t" << x.str();
  os << "\n";
}

bool diff_row(std::ostringstream& os, const char* label, const std::vector<Rat>& got,
              std::vector<Rat> want, std::optional<std::size_t>& corrupt, std::size_t base) {
  if (corrupt && *corrupt > base && *corrupt <= base + want.size())
    want[*corrupt - base - 1] += Rat(1);
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (got[i] != want[i]) {
      os << "MISMATCH " << label << " at packet " << (i + 1) << ": computed " << got[i].str()
         << ", reference " << want[i].str() << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace

std::string example_report(std::optional<std::size_t> corrupt_index, bool& ok) {
  std::ostringstream os;
  PacketSequence a = appendix::input();
  FifoSystem s = appendix::server();
  FlowOps ops = appendix::operators();

  PacketSequence d = s.apply(a);
  PacketSequence e = minimal_interleaved_regulate(ops, d);
  std::vector<Rat> e_bank = per_flow_bank(ops, d);

  print_row(os, "A", a.dates());
  print_row(os, "D", d.dates());
  print_row(os, "E", e.dates());
  print_row(os, "E'", e_bank);

  auto d_flow = per_flow_worst_case_delay(a, d);
  auto e_flow = per_flow_worst_case_delay(a, e);
  os << "d1=" << d_flow.at(1).str() << " d2=" << d_flow.at(2).str()
     << " d=" << worst_case_delay(a, d).str() << "\n";
  os << "d1_tot=" << e_flow.at(1).str() << " d2_tot=" << e_flow.at(2).str()
     << " d_tot=" << worst_case_delay(a, e).str() << "\n";

  ok = diff_row(os, "D", d.dates(), appendix::expected_d(), corrupt_index, 0) &&
       diff_row(os, "E", e.dates(), appendix::expected_e(), corrupt_index, 9) &&
       diff_row(os, "E'", e_bank, appendix::expected_e_bank(), corrupt_index, 18);

  if (ok) {
    Rat five(5), three(3);
    ok = d_flow.at(1) == five && d_flow.at(2) == three && worst_case_delay(a, d) == five &&
         e_flow.at(1) == five && e_flow.at(2) == five && worst_case_delay(a, e) == five;
    if (!ok) os << "MISMATCH in delay figures\n";
  }
  os << (ok ? "example: all values match\n" : "example: mismatch\n");
  return os.str();
}

}  // namespace pireg
