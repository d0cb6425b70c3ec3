#include "hypstab/core/qadj_sqrt.hpp"

#include <cmath>

#include "hypstab/core/errors.hpp"

namespace hypstab {

QAdjSqrt::QAdjSqrt(const Integer& q, const Rational& a, const Rational& b) : q_(q), a_(a), b_(b) {
  if (q_ < 0) throw InvalidField("QAdjSqrt needs q >= 0");
  if (mpz_perfect_square_p(q_.get_mpz_t())) root_ = sqrt(q_);
  fold();
}

void QAdjSqrt::fold() {
  if (root_ >= 0 && b_ != 0) {
    a_ += b_ * root_;
    b_ = 0;
  }
}

// a bare constant (q = 0, b = 0) adopts the other operand's q
void QAdjSqrt::unify(const QAdjSqrt& o) {
  if (q_ == o.q_) return;
  if (q_ == 0 && b_ == 0) {
    q_ = o.q_;
    root_ = o.root_;
    return;
  }
  if (o.q_ == 0 && o.b_ == 0) return;
  throw InvalidField("QAdjSqrt arithmetic across different q");
}

QAdjSqrt QAdjSqrt::sqrt_q_power(const Integer& q, long k) {
  long hf = (k >= 0) ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
  Rational base = rpow(Rational(q), hf);
  if ((k - 2 * hf) == 0) return QAdjSqrt(q, base, 0);
  return QAdjSqrt(q, 0, base);
}

QAdjSqrt& QAdjSqrt::operator+=(const QAdjSqrt& o) {
  unify(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QAdjSqrt& QAdjSqrt::operator-=(const QAdjSqrt& o) { return *this += -o; }

QAdjSqrt& QAdjSqrt::operator*=(const QAdjSqrt& o) {
  unify(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(q_);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QAdjSqrt& QAdjSqrt::operator*=(const Rational& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

QAdjSqrt QAdjSqrt::operator-() const {
  QAdjSqrt r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool QAdjSqrt::operator==(const QAdjSqrt& o) const {
  if (b_ == 0 && o.b_ == 0) return a_ == o.a_;
  return q_ == o.q_ && a_ == o.a_ && b_ == o.b_;
}

QAdjSqrt QAdjSqrt::pow(unsigned long e) const {
  QAdjSqrt r(q_, 1, 0), base(*this);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

double QAdjSqrt::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(q_.get_d()); }

std::string QAdjSqrt::str() const {
  if (b_ == 0) return to_string(a_);
  return to_string(a_) + " + " + to_string(b_) + "*sqrt(" + q_.get_str() + ")";
}

QAdjSqrt operator+(QAdjSqrt x, const QAdjSqrt& y) { return x += y; }
QAdjSqrt operator-(QAdjSqrt x, const QAdjSqrt& y) { return x -= y; }
QAdjSqrt operator*(QAdjSqrt x, const QAdjSqrt& y) { return x *= y; }
QAdjSqrt operator*(QAdjSqrt x, const Rational& c) { return x *= c; }
QAdjSqrt operator*(const Rational& c, QAdjSqrt x) { return x *= c; }

}  // namespace hypstab
