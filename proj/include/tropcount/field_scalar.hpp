#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "tropcount/bigint.hpp"

namespace tropcount {

inline bool is_squarefree(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

/// An element rat + irr * sqrt(D) of Q(sqrt D). D == 0 encodes plain Q
/// (irr is then always zero). Arithmetic between different D throws.
class FieldScalar {
public:
  FieldScalar() = default;
  FieldScalar(Rational rat, std::int64_t D = 0) : rat_(std::move(rat)), D_(D) { check_disc(D); }
  FieldScalar(Rational rat, Rational irr, std::int64_t D) : rat_(std::move(rat)), irr_(std::move(irr)), D_(D) {
    check_disc(D);
    if (D == 0 && irr_ != 0) raise(ErrorKind::InvalidArgument, "irrational part requires D > 0");
  }
  static FieldScalar integer(const Int &v, std::int64_t D = 0) { return FieldScalar(Rational(v), D); }

  const Rational &rat() const { return rat_; }
  const Rational &irr() const { return irr_; }
  std::int64_t disc() const { return D_; }

  bool is_zero() const { return rat_ == 0 && irr_ == 0; }
  bool is_rational() const { return irr_ == 0; }

  /// Exact sign of rat + irr*sqrt(D): -1, 0 or 1.
  int sign() const {
    int a = rat_.sign();
    int b = irr_.sign();
    if (b == 0) return a;
    if (a == 0 || a == b) return b;
    // opposite signs: compare rat^2 with D*irr^2
    Rational lhs = rat_ * rat_;
    Rational rhs = Rational(D_) * irr_ * irr_;
    if (lhs > rhs) return a;
    if (lhs < rhs) return b;
    return 0; // unreachable for squarefree D > 1
  }

  /// Galois conjugate rat - irr*sqrt(D).
  FieldScalar conjugate() const { return FieldScalar(rat_, -irr_, D_); }
  /// Field norm rat^2 - D*irr^2 (rational).
  Rational norm() const { return rat_ * rat_ - Rational(D_) * irr_ * irr_; }

  FieldScalar inverse() const {
    if (is_zero()) raise(ErrorKind::SingularMatrix, "division by zero in Q(sqrt D)");
    Rational n = norm();
    return FieldScalar(rat_ / n, -irr_ / n, D_);
  }

  FieldScalar operator-() const { return FieldScalar(-rat_, -irr_, D_); }

  FieldScalar &operator+=(const FieldScalar &o) {
    same_field(o);
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
  }
  FieldScalar &operator-=(const FieldScalar &o) {
    same_field(o);
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
  }
  FieldScalar &operator*=(const FieldScalar &o) {
    same_field(o);
    Rational r = rat_ * o.rat_ + Rational(D_) * irr_ * o.irr_;
    Rational i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(i);
    return *this;
  }
  FieldScalar &operator/=(const FieldScalar &o) {
    same_field(o);
    return *this *= o.inverse();
  }
  FieldScalar &operator*=(const Rational &q) {
    rat_ *= q;
    irr_ *= q;
    return *this;
  }

  friend FieldScalar operator+(FieldScalar a, const FieldScalar &b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar &b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar &b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar &b) { return a /= b; }
  friend FieldScalar operator*(FieldScalar a, const Rational &q) { return a *= q; }
  friend FieldScalar operator*(const Rational &q, FieldScalar a) { return a *= q; }

  friend bool operator==(const FieldScalar &a, const FieldScalar &b) {
    a.same_field(b);
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator!=(const FieldScalar &a, const FieldScalar &b) { return !(a == b); }
  friend bool operator<(const FieldScalar &a, const FieldScalar &b) { return (a - b).sign() < 0; }
  friend bool operator>(const FieldScalar &a, const FieldScalar &b) { return (a - b).sign() > 0; }
  friend bool operator<=(const FieldScalar &a, const FieldScalar &b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const FieldScalar &a, const FieldScalar &b) { return (a - b).sign() >= 0; }

  std::string str() const {
    if (irr_ == 0) return to_string(rat_);
    std::string s = rat_ == 0 ? "" : to_string(rat_) + (irr_ > 0 ? "+" : "");
    return s + to_string(irr_) + "*sqrt(" + std::to_string(D_) + ")";
  }

  friend std::ostream &operator<<(std::ostream &os, const FieldScalar &x) { return os << x.str(); }

private:
  static void check_disc(std::int64_t D) {
    if (D != 0 && !is_squarefree(D))
      raise(ErrorKind::InvalidArgument, "discriminant " + std::to_string(D) + " must be 0 or squarefree > 1");
  }
  void same_field(const FieldScalar &o) const {
    if (D_ != o.D_)
      raise(ErrorKind::MixedDiscriminant,
            "D=" + std::to_string(D_) + " vs D=" + std::to_string(o.D_));
  }

  Rational rat_{0};
  Rational irr_{0};
  std::int64_t D_ = 0;
};

} // namespace tropcount
