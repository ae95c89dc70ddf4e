#include "verify.hpp"

#include <sstream>

#include "random_gen.hpp"

namespace pireg {

namespace {

std::string index_witness(std::size_t n, const ExtRat& lhs, const ExtRat& rhs) {
  std::ostringstream os;
  os << "n=" << n << " lhs=" << lhs.str() << " rhs=" << rhs.str();
  return os.str();
}

CheckReport passed(std::string name, std::string note = {}) {
  CheckReport r;
  r.name = std::move(name);
  r.pass = true;
  r.note = std::move(note);
  return r;
}

CheckReport failed(std::string name, std::string witness) {
  CheckReport r;
  r.name = std::move(name);
  r.pass = false;
  r.witness = std::move(witness);
  return r;
}

CheckReport precondition(std::string name, std::string why) {
  CheckReport r = failed(std::move(name), std::move(why));
  r.precondition_failure = true;
  return r;
}

mpz_class length_sum(const PacketSequence& seq, std::size_t m, std::size_t n) {
  mpz_class s = 0;
  for (std::size_t j = m; j <= n; ++j) s += seq.length(j);
  return s;
}

}  // namespace

std::string CheckReport::line() const {
  std::string out = "CHECK " + name + (pass ? " PASS" : " FAIL");
  if (witness)
    out += std::string(" [witness: ") + (precondition_failure ? "precondition: " : "") + *witness + "]";
  if (pass && !note.empty()) out += " (" + note + ")";
  return out;
}

bool theorem1_cond2(const PacketSequence& seq, const Curve& sigma) {
  for (std::size_t m = 1; m <= seq.size(); ++m) {
    for (std::size_t n = m; n <= seq.size(); ++n) {
      ExtRat lhs{Rat(mpq_class(length_sum(seq, m, n)))};
      ExtRat rhs = sigma.limit(seq.date(n) - seq.date(m), Side::Right);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

bool theorem1_cond3(const PacketSequence& seq, const Curve& sigma_lower) {
  for (std::size_t m = 1; m <= seq.size(); ++m) {
    for (std::size_t n = m; n <= seq.size(); ++n) {
      ExtRat gap{seq.date(n) - seq.date(m)};
      ExtRat rhs = sigma_lower.eval(Rat(mpq_class(length_sum(seq, m, n))));
      if (gap < rhs) return false;
    }
  }
  return true;
}

CheckReport check_theorem1(const PacketSequence& seq, const Curve& sigma) {
  if (!seq.is_single_flow()) return precondition("theorem1", "sequence is not single-flow");
  bool c1 = arrival_curve_check(seq, sigma);
  bool c2 = theorem1_cond2(seq, sigma);
  bool c3 = theorem1_cond3(seq, sigma.lower_pseudo_inverse());
  if (c1 == c2 && c2 == c3) {
    std::string note = std::string("conditions agree, all ") + (c1 ? "true" : "false");
    if (!c1) {
      // Locate one packet pair behind the common violation.
      for (std::size_t m = 1; m <= seq.size(); ++m) {
        for (std::size_t n = m; n <= seq.size(); ++n) {
          ExtRat sum{Rat(mpq_class(length_sum(seq, m, n)))};
          ExtRat bound = sigma.limit(seq.date(n) - seq.date(m), Side::Right);
          if (sum > bound) {
            note += ", violated at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                    " lhs=" + sum.str() + " rhs=" + bound.str();
            return passed("theorem1", note);
          }
        }
      }
    }
    return passed("theorem1", note);
  }
  std::ostringstream os;
  os << "cond1=" << (c1 ? "true" : "false") << " cond2=" << (c2 ? "true" : "false")
     << " cond3=" << (c3 ? "true" : "false");
  return failed("theorem1", os.str());
}

CheckReport check_regularity(const Operator& op, const PacketSequence& seq) {
  if (!seq.is_single_flow()) return precondition("regularity", "sequence is not single-flow");
  std::span<const Rat> dates(seq.dates());
  std::span<const std::int64_t> lengths(seq.lengths());
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    ExtRat pi = op.evaluate(dates, lengths, n);
    if (ExtRat(seq.date(n)) < pi)
      return failed("regularity", index_witness(n, ExtRat(seq.date(n)), pi));
  }
  return passed("regularity");
}

namespace {

// Candidate validity shared by both minimality checks: a regulator output is
// FIFO (monotone, dominates the input, same lengths/flows) and regular on
// every flow.
std::optional<std::string> candidate_defect(const FlowOps& ops, const PacketSequence& input,
                                            const PacketSequence& candidate) {
  if (candidate.size() != input.size() || candidate.lengths() != input.lengths() ||
      candidate.flows() != input.flows())
    return "candidate does not carry the input's lengths and flows";
  for (std::size_t n = 1; n <= input.size(); ++n)
    if (candidate.date(n) < input.date(n)) return "candidate is not a FIFO system output (D < A at n=" +
                                                  std::to_string(n) + ")";
  for (std::uint64_t f : candidate.flow_ids()) {
    auto it = ops.find(f);
    if (it == ops.end()) return "no operator bound to flow " + std::to_string(f);
    FlowView v = candidate.flow_view(f);
    PacketSequence sub = PacketSequence::make(v.dates, v.lengths);
    if (!it->second.is_regular(sub)) return "candidate flow " + std::to_string(f) + " is not regular";
  }
  return std::nullopt;
}

CheckReport minimality_verdict(const PacketSequence& minimal, const PacketSequence& candidate) {
  for (std::size_t n = 1; n <= minimal.size(); ++n) {
    if (candidate.date(n) < minimal.date(n))
      return failed("minimality",
                    index_witness(n, ExtRat(candidate.date(n)), ExtRat(minimal.date(n))));
  }
  return passed("minimality");
}

}  // namespace

CheckReport check_minimality(const Operator& op, const PacketSequence& input,
                             const PacketSequence& candidate) {
  if (!input.is_single_flow()) return precondition("minimality", "input is not single-flow");
  FlowOps ops;
  for (std::uint64_t f : input.flow_ids()) ops.emplace(f, op);
  if (input.empty()) return passed("minimality");
  if (auto defect = candidate_defect(ops, input, candidate))
    return precondition("minimality", *defect);
  return minimality_verdict(minimal_regulate(op, input), candidate);
}

CheckReport check_minimality(const FlowOps& ops, const PacketSequence& input,
                             const PacketSequence& candidate) {
  if (auto defect = candidate_defect(ops, input, candidate))
    return precondition("minimality", *defect);
  return minimality_verdict(minimal_interleaved_regulate(ops, input), candidate);
}

namespace {

std::optional<std::string> irregular_flow(const FlowOps& ops, const PacketSequence& seq) {
  for (std::uint64_t f : seq.flow_ids()) {
    auto it = ops.find(f);
    if (it == ops.end()) return "no operator bound to flow " + std::to_string(f);
    FlowView v = seq.flow_view(f);
    if (!it->second.is_regular(PacketSequence::make(v.dates, v.lengths)))
      return "input flow " + std::to_string(f) + " is not regular";
  }
  return std::nullopt;
}

}  // namespace

CheckReport check_shaping_for_free(const FifoSystem& sys, const FlowOps& ops,
                                   const PacketSequence& input, ShapingMode mode) {
  const char* name = mode == ShapingMode::Interleaved ? "shaping-for-free" : "shaping-for-free-per-flow";
  if (auto defect = irregular_flow(ops, input)) return precondition(name, *defect);
  PacketSequence through = sys.apply(input);
  if (mode == ShapingMode::Interleaved) {
    PacketSequence shaped = minimal_interleaved_regulate(ops, through);
    Rat before = worst_case_delay(input, through);
    Rat after = worst_case_delay(input, shaped);
    if (before != after)
      return failed(name, "sup delay " + before.str() + " through the system, " + after.str() +
                              " with the regulator");
    return passed(name, "sup delay " + before.str());
  }
  std::vector<Rat> shaped = per_flow_bank(ops, through);
  auto before = per_flow_worst_case_delay(input, through);
  auto after = per_flow_worst_case_delay(input, shaped);
  for (const auto& [f, d] : before) {
    if (after.at(f) != d)
      return failed(name, "flow " + std::to_string(f) + ": sup delay " + d.str() +
                              " through the system, " + after.at(f).str() + " with the bank");
  }
  return passed(name);
}

CheckReport check_dominance(const FlowOps& ops, const PacketSequence& input) {
  PacketSequence inter = minimal_interleaved_regulate(ops, input);
  std::vector<Rat> bank = per_flow_bank(ops, input);
  std::size_t strict = 0;
  for (std::size_t n = 1; n <= input.size(); ++n) {
    if (inter.date(n) < bank[n - 1])
      return failed("dominance", index_witness(n, ExtRat(inter.date(n)), ExtRat(bank[n - 1])));
    if (bank[n - 1] < inter.date(n)) ++strict;
  }
  return passed("dominance", "strict at " + std::to_string(strict) + " of " +
                                 std::to_string(input.size()) + " packets");
}

// ---------------------------------------------------------------------------
// Campaigns

namespace {

FlowOps random_flow_ops(SplitMix64& rng, const PacketSequence& seq) {
  FlowOps ops;
  for (std::uint64_t f : seq.flow_ids()) ops.emplace(f, random_operator(rng));
  // Flows absent from the prefix may still be bound; harmless.
  return ops;
}

PacketSequence regularize(const FlowOps& ops, const PacketSequence& seq) {
  return minimal_interleaved_regulate(ops, seq);
}

CheckReport campaign_pass(const std::string& name, std::size_t instances) {
  return passed(name, std::to_string(instances) + " instances");
}

std::string tag(const char* what, std::size_t instance) {
  return std::string(what) + " (instance " + std::to_string(instance) + ")";
}

}  // namespace

CheckReport run_theorem1_campaign(std::uint64_t seed, std::size_t instances) {
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    PacketSequence seq = random_trace(rng, 12, 1);
    Curve sigmas[2] = {Curve::affine(random_positive_rat(rng), random_positive_rat(rng)),
                       Curve::staircase(random_positive_rat(rng), random_positive_rat(rng))};
    for (const Curve& sigma : sigmas) {
      CheckReport r = check_theorem1(seq, sigma);
      if (!r.pass) {
        r.witness = tag(r.witness->c_str(), i);
        return r;
      }

      // Pi-regularity under the arrival-curve operator is the m < n part of
      // condition (3); the m = n terms additionally require each packet to
      // fit the burst (sigma-down(L_n) = 0), and only then do all four
      // verdicts coincide.
      Curve sigma_lower = sigma.lower_pseudo_inverse();
      bool regular = Operator::arrival_curve(sigma).is_regular(seq);
      bool pairs_below = true;
      bool packets_fit = true;
      for (std::size_t n = 1; n <= seq.size(); ++n) {
        if (sigma_lower.eval(Rat(static_cast<long>(seq.length(n)))) != ExtRat(0)) packets_fit = false;
        for (std::size_t m = 1; m < n; ++m) {
          mpz_class sum = 0;
          for (std::size_t j = m; j <= n; ++j) sum += seq.length(j);
          if (ExtRat(seq.date(n) - seq.date(m)) < sigma_lower.eval(Rat(mpq_class(sum))))
            pairs_below = false;
        }
      }
      if (regular != pairs_below)
        return failed("theorem1-campaign", tag("Pi-regularity differs from pairwise m<n gaps", i));
      bool c3 = theorem1_cond3(seq, sigma_lower);
      if (c3 != (regular && packets_fit))
        return failed("theorem1-campaign",
                      tag("condition (3) differs from regularity + packet fit", i));
    }
  }
  return campaign_pass("theorem1-campaign", instances);
}

CheckReport run_shaping_campaign(std::uint64_t seed, std::size_t instances, ShapingMode mode) {
  SplitMix64 rng(seed);
  const char* name =
      mode == ShapingMode::Interleaved ? "shaping-campaign-interleaved" : "shaping-campaign-per-flow";
  for (std::size_t i = 0; i < instances; ++i) {
    PacketSequence raw =
        random_trace(rng, 10, mode == ShapingMode::Interleaved ? 3 : 1);
    FlowOps ops = random_flow_ops(rng, raw);
    PacketSequence input = regularize(ops, raw);
    FifoSystem sys = random_system(rng);

    CheckReport r = check_shaping_for_free(sys, ops, input, mode);
    if (!r.pass) {
      r.witness = tag(r.witness->c_str(), i);
      return r;
    }

    if (input.empty()) continue;
    PacketSequence through = sys.apply(input);
    Rat d = worst_case_delay(input, through);

    // Damper candidate: releasing every packet at A + d is a valid
    // regulator output for the system's output and must dominate the
    // minimal one.
    std::vector<Rat> damped;
    damped.reserve(input.size());
    for (const Rat& a : input.dates()) damped.push_back(a + d);
    PacketSequence candidate = input.with_dates(std::move(damped));
    CheckReport m = mode == ShapingMode::Interleaved
                        ? check_minimality(ops, through, candidate)
                        : check_minimality(ops.begin()->second, through, candidate);
    if (!m.pass) {
      m.witness = tag(("damper candidate: " + *m.witness).c_str(), i);
      m.name = name;
      return m;
    }

    if (mode == ShapingMode::Interleaved) {
      // Per-flow delays through system + interleaved regulator never exceed
      // the overall worst case.
      PacketSequence shaped = minimal_interleaved_regulate(ops, through);
      for (const auto& [f, df] : per_flow_worst_case_delay(input, shaped)) {
        if (df > d)
          return failed(name, tag(("per-flow delay " + df.str() + " exceeds overall " + d.str())
                                      .c_str(),
                                  i));
      }
    }
  }
  return campaign_pass(name, instances);
}

namespace {

// D' built by injecting nonnegative slack into the minimal recursion stays a
// valid regulator output, so it must dominate the minimal one elementwise.
PacketSequence slack_candidate(SplitMix64& rng, const FlowOps& ops, const PacketSequence& input) {
  InterleavedRegulator reg(ops);
  std::vector<Rat> out;
  out.reserve(input.size());
  for (std::size_t n = 1; n <= input.size(); ++n) {
    Rat slack = rng.below(3) == 0 ? Rat(0) : random_gap(rng);
    out.push_back(reg.push(input.date(n) + slack, input.length(n), input.flow(n)));
  }
  return input.with_dates(std::move(out));
}

}  // namespace

CheckReport run_minimality_campaign(std::uint64_t seed, std::size_t instances) {
  SplitMix64 rng(seed);
  const char* name = "minimality-campaign";
  for (std::size_t i = 0; i < instances; ++i) {
    bool interleaved = rng.coin();
    PacketSequence input = random_trace(rng, 10, interleaved ? 3 : 1);
    FlowOps ops = random_flow_ops(rng, input);
    PacketSequence minimal =
        interleaved ? minimal_interleaved_regulate(ops, input)
                    : (input.empty() ? input : minimal_regulate(ops.begin()->second, input));

    // Local tightness: every release date is exactly the three-way max.
    for (std::size_t n = 1; n <= input.size(); ++n) {
      std::uint64_t f = input.flow(n);
      FlowView v = minimal.flow_view(f);
      std::size_t idx = minimal.flow_index(n);
      ExtRat pi = ops.at(f).evaluate(std::span<const Rat>(v.dates),
                                     std::span<const std::int64_t>(v.lengths), idx);
      ExtRat expect = ExtRat(input.date(n));
      if (n > 1) expect = ExtRat::max(expect, ExtRat(minimal.date(n - 1)));
      expect = ExtRat::max(expect, pi);
      if (ExtRat(minimal.date(n)) != expect)
        return failed(name, tag(("local tightness: " +
                                 index_witness(n, ExtRat(minimal.date(n)), expect))
                                    .c_str(),
                                i));
    }

    // Idempotence: a minimal output is already regular, so regulating it
    // again must not move any date.
    PacketSequence again = interleaved
                               ? minimal_interleaved_regulate(ops, minimal)
                               : (minimal.empty() ? minimal : minimal_regulate(ops.begin()->second, minimal));
    if (again.dates() != minimal.dates())
      return failed(name, tag("regulating a regulated output moved a date", i));

    // Slack-injected candidates dominate the minimal output.
    for (int k = 0; k < 3; ++k) {
      PacketSequence candidate = slack_candidate(rng, ops, input);
      CheckReport r = interleaved ? check_minimality(ops, input, candidate)
                                  : (input.empty() ? passed("minimality")
                                                   : check_minimality(ops.begin()->second, input, candidate));
      if (!r.pass) {
        r.witness = tag(r.witness->c_str(), i);
        r.name = name;
        return r;
      }
    }

    // The head-of-line implementation agrees exactly.
    if (interleaved) {
      std::vector<Release> hol = head_of_line_schedule(ops, input);
      for (std::size_t n = 0; n < hol.size(); ++n) {
        if (hol[n].packet != n + 1 || hol[n].time != minimal.date(n + 1))
          return failed(name, tag("head-of-line schedule diverged from the recursion", i));
      }
    }
  }
  return campaign_pass(name, instances);
}

CheckReport run_dominance_campaign(std::uint64_t seed, std::size_t instances) {
  SplitMix64 rng(seed);
  std::size_t strict_instances = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    PacketSequence input = random_trace(rng, 10, 3);
    FlowOps ops = random_flow_ops(rng, input);
    CheckReport r = check_dominance(ops, input);
    if (!r.pass) {
      r.witness = tag(r.witness->c_str(), i);
      return r;
    }
    if (r.note.rfind("strict at 0 ", 0) != 0) ++strict_instances;
  }
  if (strict_instances == 0)
    return failed("dominance-campaign", "no instance with a strictly larger interleaved output");
  return passed("dominance-campaign", std::to_string(instances) + " instances, " +
                                          std::to_string(strict_instances) + " strict");
}

CheckReport run_c_conditions_campaign(std::uint64_t seed, std::size_t instances_per_operator) {
  SplitMix64 rng(seed);
  const char* name = "c-conditions";
  for (std::size_t i = 0; i < instances_per_operator; ++i) {
    for (int kind = 0; kind < 10; ++kind) {
      Operator op = [&] {
        switch (kind) {
          case 0: return Operator::lrq(random_positive_rat(rng));
          case 1: return Operator::leaky_bucket(random_positive_rat(rng), random_positive_rat(rng));
          case 2: return Operator::staircase(random_positive_rat(rng),
                                             static_cast<std::int64_t>(rng.below(4)) + 1);
          case 3: return Operator::tsn_packet_rate(random_gap(rng),
                                                   static_cast<std::int64_t>(rng.below(4)) + 1);
          case 4: return Operator::packet_spacing(random_gap(rng));
          case 5: return Operator::packet_burstiness(random_positive_rat(rng),
                                                     static_cast<std::int64_t>(rng.below(4)) + 1);
          case 6: return Operator::g_regulation(Curve::staircase(random_positive_rat(rng),
                                                                 random_positive_rat(rng)));
          case 7: return Operator::arrival_curve(random_sigma(rng));
          case 8: return Operator::max_of(random_operator(rng, 2), random_operator(rng, 2));
          default: {
            std::vector<std::vector<ExtRat>> table(6);
            for (std::size_t n = 0; n < table.size(); ++n)
              for (std::size_t m = 0; m + 1 < n + 1; ++m)
                table[n].push_back(rng.below(4) == 0 ? ExtRat::neg_inf()
                                                     : ExtRat(random_gap(rng) - Rat(1)));
            return Operator::max_plus_linear(std::move(table));
          }
        }
      }();

      PacketSequence seq = random_trace(rng, 8, 1);
      std::span<const Rat> dates(seq.dates());
      std::span<const std::int64_t> lengths(seq.lengths());

      // C3: homogeneity under a common (possibly negative) shift.
      Rat h = random_gap(rng) - Rat(static_cast<long>(rng.below(5)), 2);
      std::vector<Rat> shifted;
      for (const Rat& a : seq.dates()) shifted.push_back(a + h);
      for (std::size_t n = 1; n <= seq.size(); ++n) {
        ExtRat base = op.evaluate(dates, lengths, n);
        ExtRat moved = op.evaluate(std::span<const Rat>(shifted), lengths, n);
        ExtRat expect = n == 1 ? ExtRat::neg_inf() : base + h;
        if (n == 1 && (!base.is_neg_inf() || !moved.is_neg_inf()))
          return failed(name, tag("Pi at index 1 must be -inf", i));
        if (n > 1 && moved != expect)
          return failed(name, tag(("C3: " + index_witness(n, moved, expect)).c_str(), i));
      }

      // C4: isotonicity for A <= A'.
      std::vector<Rat> later;
      for (const Rat& a : seq.dates()) {
        Rat cand = a + random_gap(rng);
        if (!later.empty()) cand = Rat::max(cand, later.back());
        later.push_back(cand);
      }
      for (std::size_t n = 1; n <= seq.size(); ++n) {
        if (op.evaluate(dates, lengths, n) > op.evaluate(std::span<const Rat>(later), lengths, n))
          return failed(name, tag("C4: evaluation decreased on a later input", i));
      }

      // C2: the value at n only reads dates[1..n-1] and lengths[1..n].
      for (std::size_t n = 1; n <= seq.size(); ++n) {
        std::vector<Rat> tail_dates(seq.dates().begin(), seq.dates().begin() + (n - 1));
        std::vector<std::int64_t> tail_lengths(seq.lengths().begin(), seq.lengths().begin() + n);
        Rat t = n >= 2 ? tail_dates.back() : Rat(0);
        for (std::size_t j = n; j <= seq.size(); ++j) {
          t += random_gap(rng);
          tail_dates.push_back(t);
        }
        for (std::size_t j = n + 1; j <= seq.size(); ++j)
          tail_lengths.push_back(static_cast<std::int64_t>(rng.below(4)) + 1);
        if (op.evaluate(dates, lengths, n) !=
            op.evaluate(std::span<const Rat>(tail_dates), std::span<const std::int64_t>(tail_lengths), n))
          return failed(name, tag("C2: evaluation read beyond its causal prefix", i));
      }

      // The closed forms agree with the generic max-plus expansion.
      for (std::size_t n = 1; n <= seq.size(); ++n) {
        ExtRat generic = ExtRat::neg_inf();
        for (std::size_t m = 1; m < n; ++m)
          generic = ExtRat::max(generic, ExtRat(seq.date(m)) + op.h_coefficient(m, n, lengths));
        if (generic != op.evaluate(dates, lengths, n))
          return failed(name, tag("max-plus expansion disagrees with evaluate", i));
      }
    }
  }
  return campaign_pass(name, instances_per_operator);
}

CheckReport run_lemma_campaign(std::uint64_t seed, std::size_t curves) {
  SplitMix64 rng(seed);
  const char* name = "pseudo-inverse-lemmas";
  for (std::size_t i = 0; i < curves; ++i) {
    Curve f = random_curve(rng);
    Curve lower = f.lower_pseudo_inverse();
    Curve upper = f.upper_pseudo_inverse();

    if (lower.eval(Rat(0)) != ExtRat(0))
      return failed(name, tag("lower pseudo-inverse must vanish at 0", i));

    // Lemma: f-down = (f+)-down and f-up = (f-)-up.
    if (lower != f.right_continuous().lower_pseudo_inverse())
      return failed(name, tag("f-down != (f+)-down", i));
    if (upper != f.left_continuous().upper_pseudo_inverse())
      return failed(name, tag("f-up != (f-)-up", i));

    // Lemma: (f-up)- = f-down and (f-down)+ = f-up. The first identity is
    // compared with the origin pinned to f-down(0) = 0, since no left limit
    // exists at 0.
    {
      Curve up_left = upper.left_continuous();
      auto bps = up_left.breakpoints();
      bps.front().left = bps.front().value = ExtRat(0);
      if (Curve::from_breakpoints(std::move(bps), up_left.periodic()) != lower)
        return failed(name, tag("(f-up)- != f-down", i));
    }
    if (lower.right_continuous() != upper) return failed(name, tag("(f-down)+ != f-up", i));

    // Abscissae and ordinate levels probed: breakpoints plus random points.
    Rat horizon = f.breakpoints().back().x + Rat(8);
    std::vector<Rat> ts = f.knots_up_to(horizon);
    std::vector<Rat> xs;
    for (const Rat& t : ts) {
      ExtRat v = f.eval(t);
      if (v.is_finite()) xs.push_back(v.finite());
    }
    for (int k = 0; k < 50; ++k) {
      ts.push_back(random_gap(rng) * Rat(3));
      xs.push_back(random_gap(rng) * Rat(3));
    }

    // Implications valid for every wide-sense increasing f, and the
    // equivalence for right-continuous f. The mirrored pair ties the upper
    // pseudo-inverse directly to evaluation as well.
    Curve rc = f.right_continuous();
    Curve rc_lower = rc.lower_pseudo_inverse();
    for (const Rat& t : ts) {
      for (const Rat& x : xs) {
        ExtRat ft = f.eval(t);
        ExtRat fdx = lower.eval(x);
        ExtRat fux = upper.eval(x);
        if (ft >= ExtRat(x) && ExtRat(t) < fdx)
          return failed(name, tag("f(t) >= x must force t >= f-down(x)", i));
        if (ExtRat(t) > fdx && ft < ExtRat(x))
          return failed(name, tag("t > f-down(x) must force f(t) >= x", i));
        if (ft <= ExtRat(x) && ExtRat(t) > fux)
          return failed(name, tag("f(t) <= x must force t <= f-up(x)", i));
        if (ExtRat(t) < fux && ft > ExtRat(x))
          return failed(name, tag("t < f-up(x) must force f(t) <= x", i));
        bool lhs = ExtRat(t) >= rc_lower.eval(x);
        bool rhs = rc.eval(t) >= ExtRat(x);
        if (lhs != rhs)
          return failed(name, tag("right-continuous equivalence t >= f-down(x) <=> f(t) >= x", i));
      }
    }

    // Closed forms for the two catalog shapes against symbolic inversion.
    Rat rate = random_positive_rat(rng);
    Rat burst = random_positive_rat(rng);
    Rat tau = random_positive_rat(rng);
    Curve aff = Curve::affine(rate, burst);
    Curve aff_inv = Curve::from_breakpoints(
        {{Rat(0), ExtRat(0), ExtRat(0), ExtRat(0), Rat(0)},
         {burst, ExtRat(0), ExtRat(0), ExtRat(0), Rat(1) / rate}});
    if (aff.lower_pseudo_inverse() != aff_inv)
      return failed(name, tag("affine sigma-down differs from 0 v (x-b)/r", i));
    if (aff.upper_pseudo_inverse() != aff_inv)
      return failed(name, tag("affine sigma-up differs from 0 v (x-b)/r", i));

    Curve sc = Curve::staircase(tau, burst);
    Curve sc_down = Curve::from_breakpoints(
        {{Rat(0), ExtRat(0), ExtRat(0), ExtRat(0), Rat(0)},
         {burst, ExtRat(0), ExtRat(0), ExtRat(tau), Rat(0)}},
        PeriodicTail{burst, burst, tau});
    if (sc.lower_pseudo_inverse() != sc_down)
      return failed(name, tag("staircase sigma-down differs from tau*ceil(x/b - 1)", i));
    Curve sc_plus = Curve::from_breakpoints({{Rat(0), ExtRat(burst), ExtRat(burst), ExtRat(burst), Rat(0)}},
                                            PeriodicTail{Rat(0), tau, burst});
    if (sc.right_continuous() != sc_plus)
      return failed(name, tag("staircase sigma-plus differs from b*floor(t/tau + 1)", i));
    Curve sc_up = Curve::from_breakpoints({{Rat(0), ExtRat(0), ExtRat(0), ExtRat(0), Rat(0)}},
                                          PeriodicTail{Rat(0), burst, tau});
    if (sc.upper_pseudo_inverse() != sc_up)
      return failed(name, tag("staircase sigma-up differs from tau*floor(x/b)", i));
  }
  return campaign_pass(name, curves);
}

CheckReport find_nonequivalence_witness() {
  const char* name = "non-equivalence-witness";
  // Search small traces for one satisfying the g-style condition
  // sum_{j=m}^{n-1} L_j <= sigma(A_n - A_m) for all m <= n while violating
  // the arrival curve constraint.
  Curve sigma = Curve::affine(Rat(1), Rat(1));
  std::vector<std::vector<std::int64_t>> length_choices = {{2}, {1, 2}, {2, 1}, {1, 1, 2}, {2, 2}};
  std::vector<std::vector<Rat>> date_choices = {
      {Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(2)}};
  for (const auto& lengths : length_choices) {
    for (const auto& dates : date_choices) {
      if (dates.size() != lengths.size()) continue;
      PacketSequence seq = PacketSequence::make(dates, lengths);
      bool g_style = true;
      for (std::size_t m = 1; m <= seq.size() && g_style; ++m) {
        for (std::size_t n = m; n <= seq.size() && g_style; ++n) {
          mpz_class sum = 0;
          for (std::size_t j = m; j + 1 <= n; ++j) sum += seq.length(j);
          if (ExtRat(Rat(mpq_class(sum))) > sigma.eval(seq.date(n) - seq.date(m))) g_style = false;
        }
      }
      if (g_style && !arrival_curve_check(seq, sigma)) {
        std::string desc = "sigma=affine 1 1, dates=";
        for (const Rat& d : dates) desc += d.str() + " ";
        desc += "lengths=";
        for (auto l : lengths) desc += std::to_string(l) + " ";
        return passed(name, desc);
      }
    }
  }
  return failed(name, "no witness found in the search space");
}

}  // namespace pireg
