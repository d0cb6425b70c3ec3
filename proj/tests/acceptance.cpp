// One PASS/FAIL line per acceptance criterion. Criterion 12 is a known
// failure (see README); it is printed as FAIL and does not affect the exit code.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "hypstab/arithstat/arithstat.hpp"
#include "hypstab/core/errors.hpp"
#include "hypstab/ffcurves/curves.hpp"
#include "hypstab/io/reports.hpp"
#include "hypstab/repchar/symplectic.hpp"
#include "hypstab/series/stable_series.hpp"
#include "hypstab/symfunc/graded.hpp"

using namespace hypstab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  return frac(n, den(rng));
}

// low-weight terms so that Exp and Log fill the whole window
GradedElement random_positive(std::mt19937& rng, Window w, int nterms) {
  GradedElement g(w);
  auto all = partitions_up_to(3);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> zd(0, 2);
  for (int i = 0; i < nterms; ++i) {
    const Partition& lam = all[pick(rng)];
    int z = zd(rng);
    if (lam.empty() && z == 0) z = 1;
    g.add(z, lam, small_rational(rng));
  }
  return g;
}

SymFunc random_nonconstant(std::mt19937& rng, int A, int nterms) {
  SymFunc f(Basis::Schur, A);
  auto all = partitions_up_to(A);
  std::uniform_int_distribution<size_t> pick(1, all.size() - 1);
  for (int i = 0; i < nterms; ++i) f.add(all[pick(rng)], small_rational(rng));
  return f;
}

Outcome c1() {
  const int A = 10;
  Window w{0, 10, A};
  std::mt19937 rng(1);
  int checks = 0;
  GradedElement one = GradedElement::constant(1, w);
  for (int t = 0; t < 3; ++t) {
    GradedElement x = random_positive(rng, w, 5), y = random_positive(rng, w, 5);
    if (!(pleth_log(pleth_exp(x)) == x)) return {false, "Log(Exp(x)) != x"};
    if (!(pleth_exp(pleth_log(one + x)) == one + x)) return {false, "Exp(Log(1+x)) != 1+x"};
    if (!(pleth_exp(x + y) == pleth_exp(x) * pleth_exp(y))) return {false, "Exp(x+y) != Exp(x)Exp(y)"};
    SymFunc f = random_nonconstant(rng, A, 2), g = random_nonconstant(rng, 5, 2), h = random_nonconstant(rng, 2, 2);
    f = f.truncated(A);
    if (!(plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h)))) return {false, "plethysm not associative"};
    checks += 4;
  }
  SymFunc E(Basis::Complete, A);
  for (int r = 1; r <= A; ++r) E.add(Partition{r}, 1);
  Window w0{0, 0, A};
  SymFunc L = pleth_log(GradedElement::constant(1, w0) + GradedElement::from_symfunc(SymFunc::h(1, A), w0)).z_slice(0);
  if (!(plethysm(E, L) == SymFunc::h(1, A))) return {false, "(E-1)∘L != h1"};
  if (!(plethysm(L, E) == SymFunc::h(1, A))) return {false, "L∘(E-1) != h1"};
  return {true, std::to_string(checks + 2) + " identities, arity <= 10, z <= 10"};
}

Outcome c2() {
  auto s = braid_series(SeriesBasis::Schur, 12, 12).series(Partition());
  bool ok = s.size() == 13 && s[0] == 1 && s[1] == -1;
  for (size_t k = 2; k < s.size(); ++k) ok = ok && s[k] == 0;
  return {ok, "arity-0 part through z^12"};
}

Outcome c3() {
  bool ok = product_form_series(12, 12) == braid_series(SeriesBasis::Schur, 12, 12);
  return {ok, "arity 12, z <= 12"};
}

Outcome c4() {
  auto v = vanishing_report(braid_series(SeriesBasis::Symplectic, 10, 12));
  return {v.empty(), std::to_string(v.size()) + " violations, arity <= 10, z <= 12"};
}

Outcome c5() {
  auto rows = series_rows(Family::BraidSchur, {Partition{1, 1}, Partition{2}}, 12, 6);
  bool ok = rows[0].rational_fit == "(1 - z)/(1 + z)" && rows[1].rational_fit == "0";
  return {ok, "(1,1): " + rows[0].rational_fit + "; (2): " + rows[1].rational_fit};
}

Outcome c6() {
  long curves = 0, bad = 0;
  for (std::uint64_t q : {3, 5}) {
    auto F = make_field(q);
    for (int n = 1; n <= 6; ++n)
      for (const auto& d : enumerate_squarefree(F, n)) {
        ++curves;
        if (lfunction_charsum(d) != frobenius_data(d, 0).lpoly()) ++bad;
      }
  }
  return {bad == 0, std::to_string(curves) + " curves, " + std::to_string(bad) + " mismatches"};
}

Outcome c7() {
  long curves = 0, fe_bad = 0;
  double worst = 0;
  std::mutex m;
  for (auto [q, top] : std::vector<std::pair<std::uint64_t, int>>{{3, 9}, {5, 7}}) {
    for (int n = 1; n <= top; ++n) {
      std::set<std::vector<long long>> polys;
      run_curve_blocks(*make_field(q), n, 1, 0, [&](std::size_t, const CurveData& c) {
        std::lock_guard<std::mutex> lock(m);
        ++curves;
        if (!functional_equation_holds(c.charpoly, q)) ++fe_bad;
        polys.insert(c.charpoly);
      });
      for (const auto& p : polys) worst = std::max(worst, rh_deviation(p, q));
    }
  }
  std::ostringstream d;
  d << curves << " curves (q=3 n<=9, q=5 n<=7), FE failures " << fe_bad << ", max deviation " << std::scientific
    << std::setprecision(2) << worst;
  return {fe_bad == 0 && worst <= 1e-9, d.str()};
}

Outcome c8() {
  int rows = 0, failed = 0;
  for (int n = 5; n <= 9; ++n) {
    auto rep = trace_report(*make_field(3), n, 4);
    for (const auto& r : rep.rows) {
      ++rows;
      failed += !r.pass;
    }
  }
  // not vacuous: the bound at n=9, |λ|=2 is below the a priori scale of the coefficient
  PowerBound bound = zn_bound(3, 2, 9).scaled(2);
  PowerBound scale = trivial_scale(3, Partition{1, 1}, 9);
  bool nonvac = bound.below(scale);
  std::ostringstream d;
  d << rows << " rows, " << failed << " outside 2*5^|λ|*3^(|λ|-n/2); n=9 |λ|=2 bound " << std::setprecision(4) << bound.to_double()
    << " vs scale " << scale.to_double();
  return {failed == 0 && nonvac, d.str()};
}

Outcome c9() {
  std::string d;
  for (int g = 1; g <= 2; ++g)
    for (int r = 1; r <= 3; ++r) {
      auto m = moment_sum(*make_field(3), g, r);
      if (!m.identity_holds() || !m.rational())
        return {false, "g=" + std::to_string(g) + " r=" + std::to_string(r) + ": " + m.moment.str() + " vs " + m.identity_rhs.str()};
      d += (d.empty() ? "" : " ") + to_string(m.moment.a());
    }
  return {true, "moments " + d};
}

Outcome c10() {
  for (int g = 1; g <= 4; ++g)
    for (int r = 1; r <= 4; ++r) {
      Integer sum = 0;
      for (const auto& lam : partitions_in_box(g, r)) {
        SignedWeight sw = lambda_dagger(lam, g, r);
        sum += weyl_dim_sp(lam, g) * weyl_dim_sp(sw.dominant, r) * sw.sign;
      }
      if (sum != ipow(4, static_cast<unsigned long>(g * r)))
        return {false, "g=" + std::to_string(g) + " r=" + std::to_string(r) + ": " + to_string(sum)};
    }
  for (int g = 1; g <= 2; ++g)
    for (int r = 1; r <= 2; ++r)
      if (!jimbo_miwa_check(g, r)) return {false, "Jimbo-Miwa g=" + std::to_string(g) + " r=" + std::to_string(r)};
  return {true, "4^{gr} for g,r <= 4; Jimbo-Miwa for g,r <= 2"};
}

Outcome c11() {
  int checks = 0;
  for (int q : {3, 5}) {
    auto G = convert_basis(stable_trace_genfunc(q, 4), Basis::Monomial);
    for (int w = 0; w <= 4; ++w)
      for (const auto& mu : partitions_of(w)) {
        auto comp = mu.parts();
        std::sort(comp.begin(), comp.end());
        do {
          ++checks;
          if (mainterm_oracle(q, comp) != G.coefficient(mu)) return {false, "q=" + std::to_string(q) + " " + mu.str()};
        } while (std::next_permutation(comp.begin(), comp.end()));
      }
  }
  return {true, std::to_string(checks) + " compositions"};
}

Outcome c12() {
  auto T = stable_traces(3, 8);
  std::map<int, Rational> mx;
  bool bounded = true;
  for (const auto& [lam, t] : T) {
    if (lam.weight() < 2) continue;
    Rational a = abs(t);
    bounded = bounded && a <= 1;
    mx[lam.weight()] = std::max(mx[lam.weight()], a);
  }
  bool mono = true;
  std::ostringstream d;
  d << "max|T| by weight:";
  // odd weights vanish identically
  for (int w = 2; w <= 8; w += 2) {
    d << " " << w << ":" << std::setprecision(4) << mx[w].get_d();
    if (w + 2 <= 8 && mx[w + 2] > mx[w]) mono = false;
  }
  d << (bounded ? "; bounded by 1" : "; exceeds 1") << (mono ? "; nonincreasing" : "; not nonincreasing (weight 4 > weight 2)");
  return {bounded && mono, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::function<Outcome()> run;
    double budget;  // seconds, 0 = none
    bool known_failure;
  };
  std::vector<Criterion> cs{{1, c1, 60, false},  {2, c2, 0, false},   {3, c3, 600, false},  {4, c4, 0, false},
                            {5, c5, 0, false},   {6, c6, 300, false}, {7, c7, 0, false},    {8, c8, 1200, false},
                            {9, c9, 0, false},   {10, c10, 0, false}, {11, c11, 0, false},  {12, c12, 0, true}};
  int unexpected = 0;
  for (const auto& c : cs) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_budget = c.budget == 0 || secs < c.budget;
    bool pass = o.pass && in_budget;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " " << c.id << "  " << o.detail << "  [" << std::fixed << std::setprecision(2) << secs << " s";
    if (c.budget > 0) line << " / budget " << c.budget << " s";
    line << "]";
    if (!pass && c.known_failure) line << "  (known failure, documented)";
    std::cout << line.str() << std::endl;
    if (!pass && !c.known_failure) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
