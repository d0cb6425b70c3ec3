#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypstab/core/rational.hpp"
#include "hypstab/symfunc/partition.hpp"

namespace hypstab {

enum class Basis { PowerSum, Schur, Complete, Elementary, Monomial };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

using Terms = std::map<Partition, Rational>;

// Finite element of Λ in a tagged basis, truncated to weight <= max_arity.
class SymFunc {
 public:
  explicit SymFunc(Basis basis = Basis::PowerSum, int max_arity = 0);
  SymFunc(Basis basis, int max_arity, Terms terms);

  static SymFunc constant(const Rational& c, int max_arity, Basis basis = Basis::PowerSum);
  static SymFunc basis_element(Basis basis, const Partition& lambda, int max_arity);
  static SymFunc p(int n, int max_arity) { return basis_element(Basis::PowerSum, Partition({n}), max_arity); }
  static SymFunc h(int n, int max_arity);
  static SymFunc e(int n, int max_arity);
  static SymFunc s(const Partition& lambda, int max_arity) { return basis_element(Basis::Schur, lambda, max_arity); }

  Basis basis() const { return basis_; }
  int max_arity() const { return max_arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;

  // adds c to the coefficient; silently ignores weights above max_arity
  void add(const Partition& lambda, const Rational& c);

  SymFunc truncated(int max_arity) const;
  SymFunc homogeneous(int n) const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Rational& c);

  // exact equality as elements of Λ (basis-independent), up to common arity
  bool operator==(const SymFunc& o) const;

  std::string str() const;

 private:
  Basis basis_;
  int max_arity_;
  Terms terms_;
};

SymFunc operator+(SymFunc a, const SymFunc& b);
SymFunc operator-(SymFunc a, const SymFunc& b);
SymFunc operator*(SymFunc a, const Rational& c);
SymFunc operator*(const Rational& c, SymFunc a);
SymFunc operator*(const SymFunc& a, const SymFunc& b);

SymFunc convert_basis(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);
Rational inner_product(const SymFunc& f, const SymFunc& g);
SymFunc skew(const SymFunc& f, const Partition& by);
SymFunc adams(int n, const SymFunc& g);
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// Power-sum expansion of one basis element of weight |λ|.
const Terms& to_power_sum(Basis basis, const Partition& lambda);
// Expansion of a power-sum product p_ρ in the target basis.
const Terms& from_power_sum(Basis target, const Partition& rho);

// Low-level helpers on power-sum term maps.
void add_scaled(Terms& acc, const Terms& x, const Rational& c);
Terms pterm_product(const Terms& a, const Terms& b, int max_arity);
Terms in_power_sum(Basis basis, const Terms& t);
Terms out_of_power_sum(Basis target, const Terms& t);

}  // namespace hypstab
