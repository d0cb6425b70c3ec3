// Independent reference computations used only by the tests.
#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "hypstab/symfunc/graded.hpp"

namespace oracle {

using hypstab::Partition;
using hypstab::Rational;

// polynomial in a fixed number of commuting variables
using Poly = std::map<std::vector<int>, Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly poly_one(int nvars) { return Poly{{std::vector<int>(nvars, 0), 1}}; }

inline void poly_add(Poly& acc, const Poly& x, const Rational& c = 1) {
  for (const auto& [e, v] : x) acc[e] += c * v;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

inline Poly power_sum_poly(int k, int nvars) {
  Poly p;
  for (int i = 0; i < nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = k;
    p[e] += 1;
  }
  return p;
}

// evaluates a symmetric function at x_1..x_n through its power-sum expansion
inline Poly to_poly(const hypstab::SymFunc& f, int nvars) {
  Poly out;
  for (const auto& [rho, c] : hypstab::in_power_sum(f.basis(), f.terms())) {
    Poly t = poly_one(nvars);
    for (int part : rho.parts()) t = poly_mul(t, power_sum_poly(part, nvars));
    poly_add(out, t, c);
  }
  return out;
}

// Schur polynomial by enumerating semistandard tableaux
inline Poly schur_ssyt(const Partition& lam, int nvars) {
  std::vector<std::vector<int>> T;
  for (int r : lam.parts()) T.emplace_back(r, 0);
  Poly out;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.part(i); ++j) cells.push_back({i, j});
  std::function<void(size_t)> fill = [&](size_t idx) {
    if (idx == cells.size()) {
      std::vector<int> e(nvars, 0);
      for (auto& row : T)
        for (int v : row) ++e[v];
      out[e] += 1;
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 0;
    if (j > 0) lo = std::max(lo, T[i][j - 1]);
    if (i > 0) lo = std::max(lo, T[i - 1][j] + 1);
    for (int v = lo; v < nvars; ++v) {
      T[i][j] = v;
      fill(idx + 1);
    }
  };
  fill(0);
  return out;
}

// random rational with small numerator/denominator
inline Rational rand_q(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline hypstab::SymFunc random_symfunc(std::mt19937& rng, int max_arity, int nterms, bool allow_const = true) {
  hypstab::SymFunc f(hypstab::Basis::PowerSum, max_arity);
  auto all = hypstab::partitions_up_to(max_arity);
  std::uniform_int_distribution<size_t> pick(allow_const ? 0 : 1, all.size() - 1);
  for (int i = 0; i < nterms; ++i) f.add(all[pick(rng)], rand_q(rng));
  return f;
}

// random element with every monomial of weight >= 1 (inside Λ̂^gr_0)
inline hypstab::GradedElement random_graded(std::mt19937& rng, hypstab::Window w, int nterms, int zspan) {
  hypstab::GradedElement g(w);
  auto all = hypstab::partitions_up_to(w.max_arity);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> zd(0, zspan);
  for (int i = 0; i < nterms; ++i) {
    const Partition& lam = all[pick(rng)];
    int z = zd(rng);
    if (lam.empty() && z == 0) z = 1;
    g.add(z, lam, rand_q(rng));
  }
  return g;
}

}  // namespace oracle

#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<hypstab::SymFunc> {
  static String convert(const hypstab::SymFunc& f) { return f.str().c_str(); }
};
template <>
struct StringMaker<hypstab::GradedElement> {
  static String convert(const hypstab::GradedElement& g) {
    auto w = g.window();
    std::string s = "[" + std::to_string(w.z_min) + "," + std::to_string(w.z_max) + ";" +
                    std::to_string(w.max_arity) + "] " + g.in_basis(hypstab::Basis::PowerSum).str();
    return s.c_str();
  }
};
template <>
struct StringMaker<hypstab::Terms> {
  static String convert(const hypstab::Terms& t) {
    return hypstab::SymFunc(hypstab::Basis::PowerSum, 1000, t).str().c_str();
  }
};
}  // namespace doctest
