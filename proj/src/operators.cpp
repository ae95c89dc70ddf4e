#include "operators.hpp"

#include <sstream>

namespace pireg {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw operator_error(msg);
}

Rat rat_of(const mpz_class& z) { return Rat(mpq_class(z)); }

}  // namespace

Operator Operator::lrq(Rat rate) {
  require(rate.sign() > 0, "lrq needs rate > 0");
  Operator op;
  op.kind_ = Kind::Lrq;
  op.rate_ = std::move(rate);
  return op;
}

Operator Operator::leaky_bucket(Rat rate, Rat burst) {
  require(rate.sign() > 0 && burst.sign() > 0, "lb needs rate > 0 and burst > 0");
  Operator op;
  op.kind_ = Kind::LeakyBucket;
  op.rate_ = std::move(rate);
  op.burst_ = std::move(burst);
  return op;
}

Operator Operator::staircase(Rat tau, std::int64_t burst) {
  require(tau.sign() > 0 && burst >= 1, "sc needs tau > 0 and integer burst >= 1");
  Operator op;
  op.kind_ = Kind::Staircase;
  op.tau_ = std::move(tau);
  op.count_ = burst;
  return op;
}

Operator Operator::tsn_packet_rate(Rat tau, std::int64_t k) {
  require(tau.sign() >= 0 && k >= 1, "tsn needs tau >= 0 and integer K >= 1");
  Operator op;
  op.kind_ = Kind::TsnPacketRate;
  op.tau_ = std::move(tau);
  op.count_ = k;
  return op;
}

Operator Operator::packet_spacing(Rat tau) {
  require(tau.sign() >= 0, "ps needs tau >= 0");
  Operator op;
  op.kind_ = Kind::PacketSpacing;
  op.tau_ = std::move(tau);
  return op;
}

Operator Operator::packet_burstiness(Rat rho, std::int64_t k) {
  require(rho.sign() > 0 && k >= 1, "pb needs rho > 0 and integer K >= 1");
  Operator op;
  op.kind_ = Kind::PacketBurstiness;
  op.rate_ = std::move(rho);
  op.count_ = k;
  return op;
}

Operator Operator::jiang_lambda_nu(Rat lambda, Rat nu) {
  require(nu.sign() >= 0 && nu.is_integer(), "lambda-nu needs integer nu >= 0");
  require(nu.num().fits_slong_p(), "nu out of range");
  return packet_burstiness(std::move(lambda), nu.num().get_si() + 1);
}

Operator Operator::g_regulation(Curve g) {
  require(g.eval(Rat(0)) == ExtRat(0), "g-regulation needs g(0) = 0");
  Operator op;
  op.kind_ = Kind::GRegulation;
  op.curve_ = std::move(g);
  return op;
}

Operator Operator::arrival_curve(Curve sigma) {
  Operator op;
  op.kind_ = Kind::ArrivalCurve;
  op.sigma_lower_ = sigma.lower_pseudo_inverse();
  op.curve_ = std::move(sigma);
  return op;
}

Operator Operator::max_of(Operator left, Operator right) {
  Operator op;
  op.kind_ = Kind::MaxOf;
  op.left_ = std::make_shared<const Operator>(std::move(left));
  op.right_ = std::make_shared<const Operator>(std::move(right));
  return op;
}

Operator Operator::max_plus_linear(std::vector<std::vector<ExtRat>> table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    require(table[i].size() <= i, "table row for index n may hold at most n-1 coefficients");
    for (const ExtRat& h : table[i]) require(!h.is_pos_inf(), "H coefficients live in [-inf, inf)");
  }
  Operator op;
  op.kind_ = Kind::MaxPlusLinear;
  op.table_ = std::move(table);
  return op;
}

ExtRat Operator::h_coefficient(std::size_t m, std::size_t n,
                               std::span<const std::int64_t> lengths) const {
  require(m >= 1 && m < n, "h_coefficient needs 1 <= m < n");
  switch (kind_) {
    case Kind::MaxPlusLinear: {
      if (n - 1 < table_.size() && m - 1 < table_[n - 1].size()) return table_[n - 1][m - 1];
      return ExtRat::neg_inf();
    }
    case Kind::GRegulation: {
      require(lengths.size() >= n - 1, "insufficient length prefix");
      mpz_class sum = 0;
      for (std::size_t j = m; j <= n - 1; ++j) sum += lengths[j - 1];
      return curve_.eval(rat_of(sum));
    }
    case Kind::ArrivalCurve: {
      require(lengths.size() >= n, "insufficient length prefix");
      mpz_class sum = 0;
      for (std::size_t j = m; j <= n; ++j) sum += lengths[j - 1];
      return sigma_lower_.eval(rat_of(sum));
    }
    case Kind::Lrq: {
      require(lengths.size() >= n - 1, "insufficient length prefix");
      if (m != n - 1) return ExtRat::neg_inf();
      return ExtRat(rat_of(mpz_class(lengths[n - 2])) / rate_);
    }
    case Kind::LeakyBucket: {
      require(lengths.size() >= n, "insufficient length prefix");
      mpz_class sum = 0;
      for (std::size_t j = m; j <= n; ++j) sum += lengths[j - 1];
      return ExtRat((rat_of(sum) - burst_) / rate_);
    }
    case Kind::Staircase: {
      require(lengths.size() >= n, "insufficient length prefix");
      mpz_class sum = 0;
      for (std::size_t j = m; j <= n; ++j) sum += lengths[j - 1];
      Rat q = (rat_of(sum) - Rat(count_)) / Rat(count_);
      return ExtRat(tau_ * rat_of(q.ceil()));
    }
    case Kind::TsnPacketRate: {
      Rat q = Rat(static_cast<long>(n - m + 1) - count_) / Rat(count_);
      return ExtRat(tau_ * rat_of(q.ceil()));
    }
    case Kind::PacketSpacing:
      return m == n - 1 ? ExtRat(tau_) : ExtRat::neg_inf();
    case Kind::PacketBurstiness:
      return ExtRat(Rat(static_cast<long>(n - m + 1) - count_) / rate_);
    case Kind::MaxOf:
      return ExtRat::max(left_->h_coefficient(m, n, lengths), right_->h_coefficient(m, n, lengths));
  }
  throw operator_error("unknown operator kind");
}

ExtRat Operator::evaluate(std::span<const Rat> dates, std::span<const std::int64_t> lengths,
                          std::size_t n) const {
  require(n >= 1, "packet index is 1-based");
  if (n == 1) return ExtRat::neg_inf();
  require(dates.size() >= n - 1, "insufficient date prefix");
  require(lengths.size() >= n, "insufficient length prefix");

  switch (kind_) {
    case Kind::Lrq:
      return ExtRat(dates[n - 2] + rat_of(mpz_class(lengths[n - 2])) / rate_);
    case Kind::PacketSpacing:
      return ExtRat(dates[n - 2] + tau_);
    case Kind::MaxOf:
      return ExtRat::max(left_->evaluate(dates, lengths, n), right_->evaluate(dates, lengths, n));
    default: {
      ExtRat best = ExtRat::neg_inf();
      for (std::size_t m = 1; m <= n - 1; ++m) {
        ExtRat h = h_coefficient(m, n, lengths);
        if (h.is_neg_inf()) continue;
        best = ExtRat::max(best, ExtRat(dates[m - 1]) + h);
      }
      return best;
    }
  }
}

bool Operator::is_regular(const PacketSequence& seq) const {
  require(seq.is_single_flow(), "regularity is defined on a single-flow sequence");
  std::span<const Rat> dates(seq.dates());
  std::span<const std::int64_t> lengths(seq.lengths());
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    if (ExtRat(dates[n - 1]) < evaluate(dates, lengths, n)) return false;
  }
  return true;
}

std::string Operator::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Lrq: os << "lrq " << rate_.str(); break;
    case Kind::LeakyBucket: os << "lb " << rate_.str() << " " << burst_.str(); break;
    case Kind::Staircase: os << "sc " << tau_.str() << " " << count_; break;
    case Kind::TsnPacketRate: os << "tsn " << tau_.str() << " " << count_; break;
    case Kind::PacketSpacing: os << "ps " << tau_.str(); break;
    case Kind::PacketBurstiness: os << "pb " << rate_.str() << " " << count_; break;
    case Kind::GRegulation: os << "g " << curve_.str(); break;
    case Kind::ArrivalCurve: os << "ac " << curve_.str(); break;
    case Kind::MaxOf: os << "max(" << left_->str() << ", " << right_->str() << ")"; break;
    case Kind::MaxPlusLinear: os << "mpl[" << table_.size() << " rows]"; break;
  }
  return os.str();
}

bool arrival_curve_check(const PacketSequence& seq, const Curve& sigma) {
  Curve r = seq.cumulative_arrivals();
  std::vector<Rat> dates;
  for (const Rat& d : seq.dates())
    if (dates.empty() || d != dates.back()) dates.push_back(d);

  for (std::size_t i = 0; i < dates.size(); ++i) {
    Rat rs = r.eval(dates[i]).finite();
    Rat rsp = r.limit(dates[i], Side::Right).finite();
    for (std::size_t j = i; j < dates.size(); ++j) {
      Rat rt = r.eval(dates[j]).finite();
      Rat rtp = r.limit(dates[j], Side::Right).finite();
      Rat gap = dates[j] - dates[i];
      ExtRat s_exact = sigma.eval(gap);
      ExtRat s_plus = sigma.limit(gap, Side::Right);
      if (ExtRat(rt - rs) > s_exact) return false;
      if (ExtRat(rtp - rs) > s_plus) return false;
      if (ExtRat(rtp - rsp) > s_plus) return false;
      if (gap.sign() > 0 && ExtRat(rt - rsp) > sigma.limit(gap, Side::Left)) return false;
    }
  }
  return true;
}

}  // namespace pireg
