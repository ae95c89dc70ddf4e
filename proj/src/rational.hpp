#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pireg {

class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1.
// All arithmetic is exact; there is no floating point anywhere in the core.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, integers embed
  Rat(long num, long den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "-p", "p/q". No whitespace, no decimals.
  static std::optional<Rat> parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  mpz_class floor() const;
  mpz_class ceil() const;

  // Canonical rendering: "p/q", integers without "/1".
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
  Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }
  Rat& operator*=(const Rat& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  static Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
  static Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

  // Least common multiple of two positive rationals (both must be > 0).
  static Rat lcm(const Rat& a, const Rat& b);

 private:
  mpq_class q_;
};

// Rational extended with -inf / +inf sentinels.
//   NEG_INF < every Rat < POS_INF
//   NEG_INF + finite = NEG_INF, POS_INF + finite = POS_INF
//   max over an empty set is NEG_INF, min over an empty set is POS_INF
class ExtRat {
 public:
  ExtRat() : kind_(Kind::Finite), v_() {}
  ExtRat(Rat v) : kind_(Kind::Finite), v_(std::move(v)) {}  // NOLINT: implicit
  ExtRat(long v) : kind_(Kind::Finite), v_(v) {}            // NOLINT: implicit

  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  // Finite value; throws if infinite.
  const Rat& finite() const;

  std::string str() const;

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend ExtRat operator+(const ExtRat& a, const Rat& b) { return a + ExtRat(b); }
  friend ExtRat operator+(const Rat& a, const ExtRat& b) { return ExtRat(a) + b; }
  friend ExtRat operator-(const ExtRat& a, const Rat& b) { return a + ExtRat(-b); }

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b);
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

  static ExtRat max(const ExtRat& a, const ExtRat& b) { return a >= b ? a : b; }
  static ExtRat min(const ExtRat& a, const ExtRat& b) { return a <= b ? a : b; }

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit ExtRat(Kind k) : kind_(k), v_() {}

  Kind kind_;
  Rat v_;
};

}  // namespace pireg
