#include "hypstab/repchar/symplectic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <memory>
#include <mutex>

namespace hypstab {

namespace {

// β with β' even: parts come in equal adjacent pairs
bool even_columns(const Partition& beta) {
  if (beta.length() % 2) return false;
  for (int i = 0; i < beta.length(); i += 2)
    if (beta.part(i) != beta.part(i + 1)) return false;
  return true;
}

std::mutex sp_mutex;
std::map<Partition, Terms> sp_cache;

const Terms& sp_locked(const Partition& lambda) {
  auto it = sp_cache.find(lambda);
  if (it != sp_cache.end()) return it->second;
  // s_λ = Σ_μ K[λ][μ] s_⟨μ⟩ with K[λ][μ] = Σ_{β' even} ⟨s_{λ/μ}, s_β⟩ and K[λ][λ] = 1
  int n = lambda.weight();
  Terms result{{lambda, 1}};
  SymFunc sl = SymFunc::s(lambda, n);
  for (int m = n - 2; m >= 0; m -= 2)
    for (const auto& mu : partitions_of(m)) {
      if (!lambda.contains_diagram(mu)) continue;
      SymFunc sk = convert_basis(skew(sl, mu), Basis::Schur);
      Rational k = 0;
      for (const auto& [beta, c] : sk.terms())
        if (even_columns(beta)) k += c;
      if (k == 0) continue;
      add_scaled(result, sp_locked(mu), -k);
    }
  return sp_cache.emplace(lambda, std::move(result)).first->second;
}

}  // namespace

SymFunc symplectic_to_schur(const Partition& lambda, int max_weight) {
  if (lambda.weight() > max_weight) throw WindowTooSmall("max_weight below |lambda|");
  std::lock_guard<std::mutex> lock(sp_mutex);
  return SymFunc(Basis::Schur, max_weight, sp_locked(lambda));
}

std::map<int, LaurentPoly> symplectic_alphabet(int nvars, int offset, int g, int max_k) {
  std::map<int, LaurentPoly> p;
  for (int k = 1; k <= max_k; ++k) {
    LaurentPoly s(nvars);
    for (int i = 0; i < g; ++i) {
      s += LaurentPoly::variable(nvars, offset + i, k);
      s += LaurentPoly::variable(nvars, offset + i, -k);
    }
    p.emplace(k, s);
  }
  return p;
}

double symplectic_bialternant(const Partition& lambda, const std::vector<double>& x) {
  int g = static_cast<int>(x.size());
  if (lambda.length() > g) throw ShapeTooLong("bialternant needs length <= number of variables");
  Eigen::MatrixXd num(g, g), den(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      int a = lambda.part(i) + g - i, b = g - i;
      num(i, j) = std::pow(x[j], a) - std::pow(x[j], -a);
      den(i, j) = std::pow(x[j], b) - std::pow(x[j], -b);
    }
  return num.determinant() / den.determinant();
}

SignedWeight lambda_dagger(const Partition& lambda, int g, int r) {
  if (lambda.largest() > r) throw ShapeTooWide("lambda_1 = " + std::to_string(lambda.largest()) + " > r = " + std::to_string(r));
  Partition c = lambda.conjugate();
  SignedWeight sw;
  for (int i = 0; i < r; ++i) sw.weight.push_back(g - c.part(r - 1 - i));
  // ρ = (r, ..., 1); Weyl group of type C acts by signed permutations
  std::vector<int> shifted(r);
  int negatives = 0;
  for (int i = 0; i < r; ++i) {
    shifted[i] = sw.weight[i] + (r - i);
    if (shifted[i] == 0) return sw;
    if (shifted[i] < 0) {
      ++negatives;
      shifted[i] = -shifted[i];
    }
  }
  // sign of the sorting permutation (descending) by counting inversions
  int inversions = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      if (shifted[i] == shifted[j]) return sw;
      if (shifted[i] < shifted[j]) ++inversions;
    }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  std::vector<int> dom(r);
  for (int i = 0; i < r; ++i) dom[i] = shifted[i] - (r - i);
  sw.sign = ((inversions + negatives) % 2) ? -1 : 1;
  sw.dominant = Partition::from_unsorted(dom);
  return sw;
}

Integer weyl_dim_sp(const Partition& lambda, int r) {
  if (lambda.length() > r) throw ShapeTooLong("length " + std::to_string(lambda.length()) + " > r = " + std::to_string(r));
  auto product = [r](const Partition& lam) {
    std::vector<Integer> l(r);
    for (int i = 0; i < r; ++i) l[i] = lam.part(i) + r - i;
    Integer p = 1;
    for (int i = 0; i < r; ++i) {
      p *= l[i];
      for (int j = i + 1; j < r; ++j) p *= l[i] * l[i] - l[j] * l[j];
    }
    return p;
  };
  return product(lambda) / product(Partition());
}

bool jimbo_miwa_check(int g, int r) {
  int nv = g + r;
  LaurentPoly lhs = LaurentPoly::constant(nv, 1);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < r; ++j) {
      LaurentPoly f = LaurentPoly::variable(nv, i) + LaurentPoly::variable(nv, i, -1) +
                      LaurentPoly::variable(nv, g + j) + LaurentPoly::variable(nv, g + j, -1);
      lhs = lhs * f;
    }
  auto px = symplectic_alphabet(nv, 0, g, std::max(1, g * r));
  auto pt = symplectic_alphabet(nv, g, r, std::max(1, g * r));
  LaurentPoly one = LaurentPoly::constant(nv, 1);
  LaurentPoly rhs(nv);
  for (const auto& lam : partitions_in_box(g, r)) {
    SignedWeight d = lambda_dagger(lam, g, r);
    if (d.sign == 0) continue;
    rhs += symplectic_eval<LaurentPoly>(lam, px, one) * symplectic_eval<LaurentPoly>(d.dominant, pt, one) *
           Rational(d.sign);
  }
  return lhs == rhs;
}

}  // namespace hypstab
