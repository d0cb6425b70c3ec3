#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "hypstab/cli/app.hpp"
#include "hypstab/core/errors.hpp"
#include "hypstab/repchar/symplectic.hpp"

namespace hypstab {

namespace {

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  int n = 0;
  while (n == 0) n = num(rng);
  return frac(n, den(rng));
}

GradedElement random_positive(std::mt19937& rng, Window w, int nterms) {
  GradedElement g(w);
  auto all = partitions_up_to(w.max_arity);
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

struct Suite {
  std::string name;
  std::function<std::pair<bool, std::string>()> body;
};

std::string join_ints(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::vector<VerifyRow> run_verify(Profile profile, const EnumOptions& opt, std::ostream& log) {
  const bool full = profile == Profile::Full;
  const int A = full ? 12 : 8;
  const int nmax = full ? 9 : 7;
  const std::vector<std::uint64_t> qs = full ? std::vector<std::uint64_t>{3, 5} : std::vector<std::uint64_t>{3};
  std::vector<Suite> suites;

  suites.push_back({"plethystic-identities", [&] {
    int a = full ? 8 : 6;
    Window w{0, a, a};
    std::mt19937 rng(20240601);
    int checks = 0;
    for (int t = 0; t < 3; ++t) {
      GradedElement x = random_positive(rng, w, 3), y = random_positive(rng, w, 3);
      GradedElement one = GradedElement::constant(1, w);
      if (!(pleth_log(pleth_exp(x)) == x)) return std::make_pair(false, std::string("Log(Exp(x)) != x"));
      if (!(pleth_exp(pleth_log(one + x)) == one + x)) return std::make_pair(false, std::string("Exp(Log(1+x)) != 1+x"));
      if (!(pleth_exp(x + y) == pleth_exp(x) * pleth_exp(y))) return std::make_pair(false, std::string("Exp not additive"));
      SymFunc f = random_nonconstant(rng, a, 3), g = random_nonconstant(rng, a, 3), h = random_nonconstant(rng, a, 3);
      if (!(plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h)))) return std::make_pair(false, std::string("plethysm not associative"));
      checks += 4;
    }
    SymFunc E(Basis::Complete, a);
    for (int r = 1; r <= a; ++r) E.add(Partition{r}, 1);
    SymFunc L = pleth_log(GradedElement::constant(1, {0, 0, a}) + GradedElement::from_symfunc(SymFunc::h(1, a), {0, 0, a})).z_slice(0);
    if (!(plethysm(E, L) == SymFunc::h(1, a))) return std::make_pair(false, std::string("(E-1)∘L != h1"));
    return std::make_pair(true, std::to_string(checks + 1) + " identities at arity " + std::to_string(a));
  }});

  suites.push_back({"braid-arity-zero", [&] {
    auto s = braid_series(SeriesBasis::Schur, A, A).series(Partition());
    bool ok = s.size() > 1 && s[0] == 1 && s[1] == -1;
    for (size_t k = 2; k < s.size(); ++k) ok = ok && s[k] == 0;
    return std::make_pair(ok, std::string("arity-0 part is 1 - z"));
  }});

  suites.push_back({"product-form", [&] {
    bool ok = product_form_series(A, A) == braid_series(SeriesBasis::Schur, A, A);
    return std::make_pair(ok, "arity " + std::to_string(A) + ", z <= " + std::to_string(A));
  }});

  suites.push_back({"vanishing", [&] {
    auto v = vanishing_report(braid_series(SeriesBasis::Symplectic, A, A));
    auto c = vanishing_report(closed_series(std::min(A, 10), std::min(A, 10)), VanishingRules::ParityOnly);
    return std::make_pair(v.empty() && c.empty(), std::to_string(v.size() + c.size()) + " violations");
  }});

  suites.push_back({"rational-fit", [&] {
    auto rows = series_rows(Family::BraidSchur, {Partition{1, 1}, Partition{2}}, 12);
    bool ok = rows[0].rational_fit == "(1 - z)/(1 + z)" && rows[1].rational_fit == "0";
    return std::make_pair(ok, "(1,1): " + rows[0].rational_fit + "; (2): " + rows[1].rational_fit);
  }});

  suites.push_back({"dimension-identities", [&] {
    int top = full ? 4 : 3;
    for (int g = 1; g <= top; ++g)
      for (int r = 1; r <= top; ++r) {
        Integer sum = 0;
        for (const auto& lam : partitions_in_box(g, r)) {
          SignedWeight sw = lambda_dagger(lam, g, r);
          sum += weyl_dim_sp(lam, g) * weyl_dim_sp(sw.dominant, r) * sw.sign;
        }
        if (sum != ipow(4, static_cast<unsigned long>(g * r)))
          return std::make_pair(false, "sum of dim products != 4^{gr} at g=" + std::to_string(g) + " r=" + std::to_string(r));
      }
    for (int g = 1; g <= 2; ++g)
      for (int r = 1; r <= 2; ++r)
        if (!jimbo_miwa_check(g, r)) return std::make_pair(false, std::string("Jimbo-Miwa identity"));
    return std::make_pair(true, "g, r <= " + std::to_string(top));
  }});

  suites.push_back({"dual-method-L", [&] {
    long curves = 0, bad = 0;
    for (auto q : qs) {
      auto F = make_field(q);
      int top = q == 3 ? (full ? 8 : 7) : 6;
      for (int n = 1; n <= top; ++n)
        for (const auto& d : enumerate_squarefree(F, n)) {
          ++curves;
          if (lfunction_charsum(d) != frobenius_data(d, 0).lpoly()) ++bad;
        }
    }
    return std::make_pair(bad == 0, std::to_string(curves) + " curves, " + std::to_string(bad) + " mismatches");
  }});

  suites.push_back({"rh-functional-equation", [&] {
    long curves = 0, fe_bad = 0;
    double worst = 0;
    for (auto q : qs)
      for (int n = 3; n <= nmax; ++n) {
        std::set<std::vector<long long>> polys;
        run_curve_blocks(*make_field(q), n, opt.workers, 0, [&](std::size_t, const CurveData& c) {
          // one thread per block; polys is shared, so serialize
          static std::mutex m;
          std::lock_guard<std::mutex> lock(m);
          ++curves;
          if (!functional_equation_holds(c.charpoly, q)) ++fe_bad;
          polys.insert(c.charpoly);
        });
        for (const auto& p : polys) worst = std::max(worst, rh_deviation(p, q));
      }
    std::ostringstream d;
    d << curves << " curves, max | |w|/sqrt(q) - 1 | = " << std::scientific << std::setprecision(2) << worst;
    return std::make_pair(fe_bad == 0 && worst <= 1e-9, d.str());
  }});

  suites.push_back({"zn-vs-stable", [&] {
    int rows = 0, failed = 0;
    for (auto q : qs)
      for (int n = 3; n <= nmax; ++n) {
        auto rep = trace_report(*make_field(q), n, 4, opt);
        for (const auto& r : rep.rows) {
          ++rows;
          failed += !r.pass;
        }
      }
    return std::make_pair(failed == 0, std::to_string(rows) + " rows, slack 2, q in {" + join_ints(qs) + "}");
  }});

  suites.push_back({"moment-identity", [&] {
    int cases = 0;
    for (auto q : qs)
      for (int g = 1; g <= 2; ++g)
        for (int r = 1; r <= 3; ++r) {
          auto m = moment_sum(*make_field(q), g, r, opt);
          ++cases;
          if (!m.identity_holds() || !m.rational())
            return std::make_pair(false, "q=" + std::to_string(q) + " g=" + std::to_string(g) + " r=" + std::to_string(r));
        }
    return std::make_pair(true, std::to_string(cases) + " exact identities");
  }});

  suites.push_back({"mainterm-monomial", [&] {
    int checks = 0;
    for (auto q : qs) {
      auto G = convert_basis(stable_trace_genfunc(q, 4), Basis::Monomial);
      for (int w = 0; w <= 4; ++w)
        for (const auto& mu : partitions_of(w)) {
          auto comp = mu.parts();
          std::sort(comp.begin(), comp.end());
          do {
            ++checks;
            if (mainterm_oracle(q, comp) != G.coefficient(mu))
              return std::make_pair(false, "q=" + std::to_string(q) + " composition of " + mu.str());
          } while (std::next_permutation(comp.begin(), comp.end()));
        }
    }
    return std::make_pair(true, std::to_string(checks) + " compositions");
  }});

  suites.push_back({"stable-trace-decay", [&] {
    std::ostringstream d;
    bool ok = true;
    for (auto q : qs) {
      auto T = stable_traces(q, 8);
      std::map<int, Rational> mx;
      for (const auto& [lam, t] : T)
        if (lam.weight() >= 2) mx[lam.weight()] = std::max(mx[lam.weight()], Rational(abs(t)));
      if (q != qs.front()) d << "; ";
      d << "q=" << q << " max|T|:";
      for (const auto& [w, m] : mx)
        if (w % 2 == 0) d << " w" << w << "=" << std::setprecision(4) << m.get_d();
      for (const auto& [w, m] : mx) ok = ok && m <= 1;
      // nonincreasing beyond weight 2
      for (int w = 4; w + 2 <= 8; w += 2) ok = ok && mx[w + 2] <= mx[w];
    }
    return std::make_pair(ok, d.str());
  }});

  std::vector<VerifyRow> out;
  for (auto& s : suites) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyRow row;
    row.suite = s.name;
    try {
      auto [ok, detail] = s.body();
      row.pass = ok;
      row.detail = detail;
    } catch (const std::exception& e) {
      row.pass = false;
      row.detail = std::string("error: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << "[verify] " << s.name << " " << (row.pass ? "pass" : "FAIL") << " (" << std::fixed << std::setprecision(2) << row.seconds
        << " s)\n";
    out.push_back(row);
  }
  return out;
}

}  // namespace hypstab
