#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "curve.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace pireg {

class operator_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Regulation operator Pi: causal (the value at index n reads only
// dates[1..n-1] and lengths[1..n]), homogeneous and isotone in the dates.
// Every catalog kind is max-plus-linear:
//   Pi(A, L)_n = max over 1 <= m <= n-1 of { A_m + H_{m,n}(L) }
// so evaluation at index 1 is -inf (empty max). Operators are immutable
// values, freely shareable.
class Operator {
 public:
  enum class Kind {
    MaxPlusLinear,
    GRegulation,
    ArrivalCurve,
    Lrq,
    LeakyBucket,
    Staircase,
    TsnPacketRate,
    PacketSpacing,
    PacketBurstiness,
    MaxOf,
  };

  static Operator lrq(Rat rate);
  static Operator leaky_bucket(Rat rate, Rat burst);
  static Operator staircase(Rat tau, std::int64_t burst);
  static Operator tsn_packet_rate(Rat tau, std::int64_t k);
  static Operator packet_spacing(Rat tau);
  static Operator packet_burstiness(Rat rho, std::int64_t k);
  // Jiang's (lambda, nu) constraint, an alias for PB(lambda, nu + 1).
  static Operator jiang_lambda_nu(Rat lambda, Rat nu);
  static Operator g_regulation(Curve g);       // requires g(0) = 0
  static Operator arrival_curve(Curve sigma);  // H uses the lower pseudo-inverse of sigma
  static Operator max_of(Operator left, Operator right);
  // Constant coefficient table: h[n-1][m-1] = H_{m,n}, -inf outside.
  static Operator max_plus_linear(std::vector<std::vector<ExtRat>> table);

  Kind kind() const { return kind_; }
  const Operator& left() const { return *left_; }
  const Operator& right() const { return *right_; }

  // Pi(A, L)_n. dates must hold at least n-1 entries, lengths at least n.
  ExtRat evaluate(std::span<const Rat> dates, std::span<const std::int64_t> lengths,
                  std::size_t n) const;

  // H_{m,n}(L) for 1 <= m < n.
  ExtRat h_coefficient(std::size_t m, std::size_t n, std::span<const std::int64_t> lengths) const;

  // A >= Pi(A, L) on the whole (single-flow) prefix.
  bool is_regular(const PacketSequence& seq) const;

  std::string str() const;  // config-file literal form

 private:
  Operator() = default;

  Kind kind_ = Kind::PacketSpacing;
  Rat rate_;          // lrq rate, lb rate, pb rho
  Rat tau_;           // sc/tsn/ps tau
  Rat burst_;         // lb burst
  std::int64_t count_ = 0;  // sc burst, tsn K, pb K
  Curve curve_ = Curve::zero();       // g / sigma
  Curve sigma_lower_ = Curve::zero(); // cached lower pseudo-inverse of sigma
  std::vector<std::vector<ExtRat>> table_;
  std::shared_ptr<const Operator> left_, right_;
};

// Independent min-plus oracle for the arrival curve constraint
// R(t) - R(s) <= sigma(t - s) over all 0 <= s <= t. Enumerates packet date
// pairs and the four one-sided limit combinations around each pair; never
// touches the max-plus pairwise conditions it is used to cross-check.
bool arrival_curve_check(const PacketSequence& seq, const Curve& sigma);

}  // namespace pireg
