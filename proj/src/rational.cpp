#include "rational.hpp"

namespace pireg {

Rat::Rat(long num, long den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw domain_error("division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string t(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!is_int(t)) return std::nullopt;
    return Rat(mpq_class(mpz_class(t, 10)));
  }
  std::string num = t.substr(0, slash);
  std::string den = t.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  mpz_class d(den, 10);
  if (sgn(d) <= 0) return std::nullopt;
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return Rat(q);
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat Rat::lcm(const Rat& a, const Rat& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw domain_error("lcm of non-positive rationals");
  // lcm(a/b, c/d) = lcm(a*d, c*b) / (b*d)
  mpz_class x = a.num() * b.den();
  mpz_class y = b.num() * a.den();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  mpq_class q(l, a.den() * b.den());
  q.canonicalize();
  return Rat(q);
}

const Rat& ExtRat::finite() const {
  if (kind_ != Kind::Finite) throw domain_error("infinite value where a finite rational is required");
  return v_;
}

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return v_.str();
  }
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    if (a.is_pos_inf() || b.is_pos_inf()) throw domain_error("adding -inf and +inf");
    return ExtRat::neg_inf();
  }
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtRat::pos_inf();
  return ExtRat(a.v_ + b.v_);
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != ExtRat::Kind::Finite) return true;
  return a.v_ == b.v_;
}

bool operator<(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ == ExtRat::Kind::NegInf) return b.kind_ != ExtRat::Kind::NegInf;
  if (a.kind_ == ExtRat::Kind::PosInf) return false;
  if (b.kind_ == ExtRat::Kind::PosInf) return true;
  if (b.kind_ == ExtRat::Kind::NegInf) return false;
  return a.v_ < b.v_;
}

}  // namespace pireg
