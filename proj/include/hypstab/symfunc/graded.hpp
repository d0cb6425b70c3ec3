#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypstab/symfunc/symfunc.hpp"

namespace hypstab {

// Stored terms are exact for z_min <= k <= z_max and |λ| <= max_arity.
struct Window {
  int z_min = 0;
  int z_max = 0;
  int max_arity = 0;
  bool operator==(const Window&) const = default;
};

Window intersect(const Window& a, const Window& b);

struct Monomial {
  int z = 0;
  Partition lambda;
  int weight() const { return z + lambda.weight(); }
  auto operator<=>(const Monomial&) const = default;
};

using GTerms = std::map<Monomial, Rational>;

// Element of Λ((z)) truncated to a window.
class GradedElement {
 public:
  explicit GradedElement(Window w = {}, Basis basis = Basis::PowerSum);
  GradedElement(Window w, Basis basis, const GTerms& terms);

  static GradedElement from_symfunc(const SymFunc& f, Window w);
  static GradedElement monomial(int z, const SymFunc& f, Window w);
  static GradedElement z_power(int k, Window w) { return monomial(k, SymFunc::constant(1, w.max_arity), w); }
  static GradedElement constant(const Rational& c, Window w) { return monomial(0, SymFunc::constant(c, w.max_arity), w); }

  const Window& window() const { return window_; }
  Basis basis() const { return basis_; }
  const GTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(int z, const Partition& lambda) const;
  // silently drops terms outside the window
  void add(int z, const Partition& lambda, const Rational& c);

  // coefficient of z^k as an element of Λ in this basis
  SymFunc z_slice(int k) const;
  // coefficients of z^{z_min}..z^{z_max} for fixed λ
  std::vector<Rational> series(const Partition& lambda) const;
  // smallest z with a nonzero term; z_max+1 if zero
  int valuation() const;
  // smallest k + |λ| among stored terms
  int min_weight() const;

  GradedElement in_basis(Basis b) const;
  GradedElement restricted(Window w) const;  // intersection with w
  // multiply by z^k; the window moves with it
  GradedElement shift_z(int k) const;

  GradedElement operator-() const;
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Rational& c);

  // same window and same element of Λ((z))
  bool operator==(const GradedElement& o) const;

  std::string str() const;

 private:
  Window window_;
  Basis basis_;
  GTerms terms_;
};

GradedElement operator+(GradedElement a, const GradedElement& b);
GradedElement operator-(GradedElement a, const GradedElement& b);
GradedElement operator*(GradedElement a, const Rational& c);
GradedElement operator*(const GradedElement& a, const GradedElement& b);

// equality on the common window
bool agree_on_common_window(const GradedElement& a, const GradedElement& b);

GradedElement adams(int n, const GradedElement& g);
GradedElement plethysm(const SymFunc& f, const GradedElement& g);
GradedElement pleth_exp(const GradedElement& x);
GradedElement pleth_log(const GradedElement& y);

}  // namespace hypstab
