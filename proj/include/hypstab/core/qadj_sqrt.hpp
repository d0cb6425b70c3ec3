#pragma once

#include <string>

#include "hypstab/core/rational.hpp"

namespace hypstab {

// a + b·√q with a, b rational. When q is a perfect square the root is rational and b stays 0.
class QAdjSqrt {
 public:
  QAdjSqrt() = default;
  explicit QAdjSqrt(const Integer& q, const Rational& a = 0, const Rational& b = 0);

  const Integer& q() const { return q_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  // q^{k/2} for any integer k
  static QAdjSqrt sqrt_q_power(const Integer& q, long k);

  QAdjSqrt& operator+=(const QAdjSqrt& o);
  QAdjSqrt& operator-=(const QAdjSqrt& o);
  QAdjSqrt& operator*=(const QAdjSqrt& o);
  QAdjSqrt& operator*=(const Rational& c);
  QAdjSqrt operator-() const;
  bool operator==(const QAdjSqrt& o) const;
  QAdjSqrt pow(unsigned long e) const;

  double to_double() const;
  std::string str() const;  // "a + b*sqrt(q)"

 private:
  void fold();
  void unify(const QAdjSqrt& o);
  Integer q_ = 0;
  Integer root_ = -1;  // integer square root of q when q is a square, else -1
  Rational a_ = 0, b_ = 0;
};

QAdjSqrt operator+(QAdjSqrt x, const QAdjSqrt& y);
QAdjSqrt operator-(QAdjSqrt x, const QAdjSqrt& y);
QAdjSqrt operator*(QAdjSqrt x, const QAdjSqrt& y);
QAdjSqrt operator*(QAdjSqrt x, const Rational& c);
QAdjSqrt operator*(const Rational& c, QAdjSqrt x);

}  // namespace hypstab
