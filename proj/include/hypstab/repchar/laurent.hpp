#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypstab/core/rational.hpp"

namespace hypstab {

// Laurent polynomial over Q in a fixed number of variables.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly variable(int nvars, int i, int power = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // value with every variable set to 1
  Rational at_ones() const;
  std::string str() const;

 private:
  int nvars_;
  std::map<Exponent, Rational> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Rational& c);

}  // namespace hypstab
