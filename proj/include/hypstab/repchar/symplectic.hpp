#pragma once

#include <map>
#include <vector>

#include "hypstab/core/errors.hpp"
#include "hypstab/repchar/laurent.hpp"
#include "hypstab/symfunc/symfunc.hpp"

namespace hypstab {

// s_λ evaluated at the alphabet with the given power sums: Σ_ρ χ^λ(ρ) p_ρ / z_ρ.
// V needs +=, *, and multiplication by Rational; V() must act as zero.
template <class V>
V schur_eval(const Partition& lambda, const std::map<int, V>& powersums, const V& one) {
  for (int k = 1; k <= lambda.weight(); ++k)
    if (!powersums.count(k)) throw MissingPowerSum("p_" + std::to_string(k) + " not supplied");
  V total = one * Rational(0);
  for (const auto& [rho, c] : to_power_sum(Basis::Schur, lambda)) {
    V t = one * c;
    for (int part : rho.parts()) t = t * powersums.at(part);
    total += t;
  }
  return total;
}

inline Rational schur_eval(const Partition& lambda, const std::map<int, Rational>& powersums) {
  return schur_eval<Rational>(lambda, powersums, Rational(1));
}

// s_⟨λ⟩ in the Schur basis (terms of weight |λ|, |λ|-2, ...)
SymFunc symplectic_to_schur(const Partition& lambda, int max_weight);

template <class V>
V symplectic_eval(const Partition& lambda, const std::map<int, V>& powersums, const V& one) {
  V total = one * Rational(0);
  SymFunc expansion = symplectic_to_schur(lambda, lambda.weight());
  for (const auto& [mu, c] : expansion.terms())
    total += schur_eval<V>(mu, powersums, one) * c;
  return total;
}

// p_k(x_1^{±1}, ..., x_g^{±1}) as Laurent polynomials in variables offset..offset+g-1
std::map<int, LaurentPoly> symplectic_alphabet(int nvars, int offset, int g, int max_k);

// floating-point Weyl character formula (ratio of bialternants); needs ℓ(λ) <= x.size()
double symplectic_bialternant(const Partition& lambda, const std::vector<double>& x);

struct SignedWeight {
  std::vector<int> weight;
  int sign = 0;          // -1, 0, +1
  Partition dominant;    // meaningful when sign != 0
};

// (g-λ'_r, ..., g-λ'_1), moved to the dominant chamber of Sp(2r) by the ρ-shifted action
SignedWeight lambda_dagger(const Partition& lambda, int g, int r);

// dim of the irreducible Sp(2r)-representation with highest weight λ
Integer weyl_dim_sp(const Partition& lambda, int r);

// ∏_{i<=g, j<=r} (x_i + 1/x_i + t_j + 1/t_j) = Σ_{λ ⊆ (r^g)} s_⟨λ⟩(x^±) s_⟨λ†⟩(t^±)
bool jimbo_miwa_check(int g, int r);

}  // namespace hypstab
