#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "hypstab/core/errors.hpp"
#include "hypstab/ffcurves/curves.hpp"

using namespace hypstab;
using Elem = GaloisField::Elem;

namespace {

std::shared_ptr<const FqContext> field(std::uint32_t p, int e = 1) { return std::make_shared<const FqContext>(p, e); }

FqPoly poly(const std::shared_ptr<const FqContext>& F, std::vector<Elem> c) { return FqPoly(F, std::move(c)); }

FqPoly random_poly(std::mt19937& rng, const std::shared_ptr<const FqContext>& F, int deg, bool monic) {
  std::uniform_int_distribution<Elem> u(0, static_cast<Elem>(F->size() - 1));
  std::vector<Elem> c(deg + 1);
  for (auto& v : c) v = u(rng);
  c[deg] = monic ? 1 : std::max<Elem>(1, c[deg]);
  return FqPoly(F, c);
}

FqPoly powmod(FqPoly b, std::uint64_t e, const FqPoly& m) {
  FqPoly r = FqPoly::constant(b.context(), 1).mod(m);
  b = b.mod(m);
  while (e) {
    if (e & 1) r = (r * b).mod(m);
    b = (b * b).mod(m);
    e >>= 1;
  }
  return r;
}

// Euler's criterion on each monic irreducible factor found by trial division
int jacobi_oracle(const FqPoly& d, FqPoly m) {
  auto F = d.context();
  m = m.monic();
  int result = 1;
  for (int k = 1; m.degree() >= 1; ++k) {
    bool found = true;
    while (found && m.degree() >= k) {
      found = false;
      for (auto& P : enumerate_squarefree(F, k)) {
        bool irreducible = true;
        for (int j = 1; j <= k / 2 && irreducible; ++j)
          for (auto& f : enumerate_squarefree(F, j))
            if (P.mod(f).is_zero()) irreducible = false;
        if (!irreducible || !m.mod(P).is_zero()) continue;
        std::uint64_t norm = 1;
        for (int i = 0; i < k; ++i) norm *= F->size();
        FqPoly v = powmod(d, (norm - 1) / 2, P);
        if (v.is_zero()) return 0;
        result *= v == FqPoly::constant(F, 1) ? 1 : -1;
        m = m.div(P);
        found = true;
        break;
      }
    }
    if (m.degree() < k) break;
  }
  return result;
}

// affine solutions of y^2 = d(x) counted pairwise, plus the points at infinity
long long brute_count(const FqPoly& d, int k) {
  const auto& ext = d.field().extension(k);
  const GaloisField& E = *ext.field;
  std::vector<long long> squares(E.size(), 0);
  for (Elem y = 0; y < E.size(); ++y) squares[E.mul(y, y)]++;
  long long count = d.degree() % 2 ? 1 : 2;
  for (Elem x = 0; x < E.size(); ++x) {
    Elem v = 0;
    for (int i = d.degree(); i >= 0; --i) v = E.add(E.mul(v, x), ext.embed[d.coeffs()[i]]);
    count += squares[v];
  }
  return count;
}

std::vector<long long> lpoly_neg(std::vector<long long> v) {
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return v;
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
  auto F9 = field(3, 2);
  CHECK(F9->size() == 9);
  CHECK(F9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(field(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK_THROWS_AS(FqContext(2, 1), InvalidField);
  CHECK_THROWS_AS(FqContext(9, 1), InvalidField);
  CHECK_THROWS_AS(FqContext(3, std::vector<std::uint32_t>{2, 0, 1}), InvalidField);  // x^2 - 1

  std::mt19937 rng(11);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 1}, {97, 1}, {3, 11}}) {
    FqContext F(p, e);
    std::uniform_int_distribution<Elem> u(0, static_cast<Elem>(F.size() - 1));
    for (int t = 0; t < 200; ++t) {
      Elem a = u(rng), b = u(rng), c = u(rng);
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.sub(F.add(a, b), b) == a);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.chi(F.mul(a, a)) == (a ? 1 : 0));
    }
    // exactly half the units are squares
    if (F.size() < 5000) {
      long long s = 0;
      for (Elem a = 1; a < F.size(); ++a) s += F.chi(a);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("extension embeddings are ring maps") {
  std::mt19937 rng(12);
  for (auto [p, e, k] : std::vector<std::tuple<int, int, int>>{{3, 1, 3}, {3, 2, 2}, {5, 2, 2}, {3, 3, 2}}) {
    FqContext F(p, e);
    const auto& ext = F.extension(k);
    const GaloisField& E = *ext.field;
    CHECK(E.size() == static_cast<std::uint64_t>(std::pow(F.size(), k)));
    std::uniform_int_distribution<Elem> u(0, static_cast<Elem>(F.size() - 1));
    for (int t = 0; t < 100; ++t) {
      Elem a = u(rng), b = u(rng);
      CHECK(ext.embed[F.add(a, b)] == E.add(ext.embed[a], ext.embed[b]));
      CHECK(ext.embed[F.mul(a, b)] == E.mul(ext.embed[a], ext.embed[b]));
    }
  }
}

TEST_CASE("polynomial parsing and arithmetic") {
  auto F3 = field(3);
  auto d = FqPoly::parse(F3, "x^3 - x");
  CHECK(d.coeffs() == std::vector<Elem>{0, 2, 0, 1});
  CHECK(FqPoly::parse(F3, "0,2,0,1") == d);
  CHECK(FqPoly::parse(F3, "x^3 + 2*x") == d);
  CHECK_THROWS_AS(FqPoly::parse(F3, "x^^2"), ParseError);
  CHECK_THROWS_AS(FqPoly::parse(F3, ""), ParseError);
  std::mt19937 rng(13);
  auto F9 = field(3, 2);
  for (int t = 0; t < 50; ++t) {
    auto a = random_poly(rng, F9, 5, false), b = random_poly(rng, F9, 3, false);
    auto qt = a.div(b), r = a.mod(b);
    CHECK(qt * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("jacobi symbol examples") {
  auto F3 = field(3);
  CHECK(jacobi_symbol(FqPoly::x(F3), FqPoly::parse(F3, "x + 1")) == -1);
  CHECK_THROWS_AS(jacobi_symbol(FqPoly::x(F3), FqPoly::constant(F3, 2)), ConstantModulus);
  std::mt19937 rng(14);
  for (auto F : {F3, field(5), field(3, 2)}) {
    for (int t = 0; t < 60; ++t) {
      auto d = random_poly(rng, F, 1 + t % 4, false);
      auto m = random_poly(rng, F, 1 + t % 3, t % 2 == 0);
      if (gcd(d, m).degree() == 0) CHECK(jacobi_symbol(d * d, m) == 1);
      CHECK(jacobi_symbol(d * m, m) == 0);
    }
  }
}

TEST_CASE("jacobi symbol agrees with Euler's criterion and is multiplicative") {
  std::mt19937 rng(15);
  for (auto F : {field(3), field(5), field(7), field(3, 2)}) {
    for (int t = 0; t < 80; ++t) {
      auto d = random_poly(rng, F, t % 5, false);
      auto m = random_poly(rng, F, 1 + t % 4, t % 3 != 0);
      CHECK(jacobi_symbol(d, m) == jacobi_oracle(d, m));
      auto d2 = random_poly(rng, F, 1 + t % 3, false);
      auto m2 = random_poly(rng, F, 1 + t % 2, true);
      CHECK(jacobi_symbol(d * d2, m) == jacobi_symbol(d, m) * jacobi_symbol(d2, m));
      CHECK(jacobi_symbol(d, m * m2) == jacobi_symbol(d, m) * jacobi_symbol(d, m2));
    }
  }
}

TEST_CASE("squarefree test and enumeration") {
  auto F3 = field(3), F5 = field(5);
  CHECK(is_squarefree(FqPoly::parse(F3, "x^3 - x")));
  CHECK_FALSE(is_squarefree(FqPoly::parse(F3, "x^2")));
  CHECK_FALSE(is_squarefree(FqPoly::parse(F5, "x^3 + 4*x^2 + 5*x + 2")));  // (x+1)^2 (x+2)
  CHECK_FALSE(is_squarefree(FqPoly::parse(F3, "x^3 + 1")));                   // (x+1)^3, zero derivative
  CHECK_THROWS_AS(is_squarefree(FqPoly::constant(F3, 1)), InvalidField);

  CHECK(enumerate_squarefree(F3, 2).size() == 6);
  CHECK(enumerate_squarefree(F3, 1).size() == 3);
  CHECK(enumerate_squarefree(F5, 3).size() == 100);
  auto F9 = field(3, 2);
  for (auto F : {F3, F5, F9})
    for (int n = 2; n <= 4; ++n) {
      auto all = enumerate_squarefree(F, n);
      std::uint64_t q = F->size(), qn = 1;
      for (int i = 0; i < n; ++i) qn *= q;
      CHECK(all.size() == qn - qn / q);
      // brute check: no square of a monic nonconstant factor
      for (size_t i = 0; i < all.size(); i += 7)
        for (int k = 1; 2 * k <= n; ++k)
          for (auto& f : enumerate_squarefree(F, k)) CHECK_FALSE((all[i].mod(f * f)).is_zero());
      // lexicographic in (c_{n-1}, ..., c_0)
      for (size_t i = 1; i < all.size(); ++i) {
        auto a = all[i - 1].coeffs(), b = all[i].coeffs();
        CHECK(std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend()));
      }
    }
}

TEST_CASE("point counts") {
  auto F3 = field(3), F5 = field(5);
  CHECK(curve_point_counts(FqPoly::parse(F3, "x^3 - x"), 1) == std::vector<long long>{4});
  CHECK(curve_point_counts(FqPoly::x(F5), 3) == std::vector<long long>{6, 26, 126});
  auto d = FqPoly::parse(F5, "x^3 + x");
  CHECK(curve_point_counts(d, 2) == std::vector<long long>{brute_count(d, 1), brute_count(d, 2)});
  CHECK_THROWS_AS(curve_point_counts(FqPoly::parse(F3, "x^2"), 1), NotSquarefree);
  std::mt19937 rng(16);
  for (auto F : {F3, F5, field(3, 2), field(7)}) {
    for (int t = 0; t < 10; ++t) {
      auto d = random_poly(rng, F, 3 + t % 4, true);
      if (!is_squarefree(d)) continue;
      auto N = curve_point_counts(d, 2);
      CHECK(N[0] == brute_count(d, 1));
      CHECK(N[1] == brute_count(d, 2));
    }
  }
}

TEST_CASE("frobenius data and L-functions") {
  auto F3 = field(3);
  auto d = FqPoly::parse(F3, "x^3 - x");
  auto c = frobenius_data(d);
  CHECK(c.charpoly == std::vector<long long>{1, 0, 3});
  CHECK(lfunction_charsum(d) == std::vector<long long>{1, 0, 3});
  CHECK(central_value(d, 1) == QAdjSqrt(3, 2));
  CHECK(central_value(d, 0) == QAdjSqrt(3, 1));

  auto d2 = FqPoly::parse(F3, "x^2 + 1");
  auto c2 = frobenius_data(d2);
  CHECK(c2.theta[0] == 1);
  CHECK(c2.theta[1] == 1);
  CHECK(c2.lpoly() == std::vector<long long>{1, -1});
  CHECK(lfunction_charsum(d2) == std::vector<long long>{1, -1});
  CHECK(central_value(d2, 1) == QAdjSqrt(3, 1, frac(-1, 3)));
  for (auto& e : enumerate_squarefree(F3, 2)) CHECK(lfunction_charsum(e) == std::vector<long long>{1, -1});

  auto c1 = frobenius_data(FqPoly::parse(F3, "x + 2"));
  CHECK(c1.theta[0] == 0);
  CHECK(c1.lpoly() == std::vector<long long>{1});
  CHECK(lfunction_charsum(FqPoly::parse(F3, "x + 2")) == std::vector<long long>{1});

  // power sums are consistent with the counts at every k, including k > g
  auto F5 = field(5);
  auto d5 = FqPoly::parse(F5, "x^5 + 2*x + 1");
  auto c5 = frobenius_data(d5, 4);
  auto N = curve_point_counts(d5, 4);
  for (int k = 1; k <= 4; ++k) {
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= 5;
    CHECK(c5.theta[k] == qk + 1 - N[k - 1]);
  }
}

TEST_CASE("dual-method L-functions, RH and functional equation") {
  for (auto F : {field(3), field(5), field(3, 2)}) {
    int top = F->size() == 3 ? 6 : 4;
    for (int n = 1; n <= top; ++n)
      for (auto& d : enumerate_squarefree(F, n)) {
        auto c = frobenius_data(d);
        CHECK(lfunction_charsum(d) == c.lpoly());
        CHECK(functional_equation_holds(c.charpoly, F->size()));
        CHECK(rh_deviation(c.charpoly, F->size()) < 1e-9);
      }
  }
}

TEST_CASE("RH check handles repeated roots and rejects off-circle polynomials") {
  CHECK(rh_deviation({1, 0, 6, 0, 9}, 3) < 1e-12);  // (1 + 3t^2)^2
  CHECK(rh_deviation({1, 2, 1}, 3) > 0.1);
  CHECK_FALSE(functional_equation_holds({1, 1, 2}, 3));
  CHECK(functional_equation_holds({1, 1, 3}, 3));
}

TEST_CASE("pairing negates odd coefficients") {
  for (auto F : {field(3), field(5), field(3, 2)}) {
    Elem c = 1;
    while (F->chi(c) != -1) ++c;
    for (int n = 3; n <= (F->size() == 9 ? 4 : 5); ++n) {
      int seen = 0;
      for (auto& d : enumerate_squarefree(F, n)) {
        if (++seen % 5) continue;
        auto L = lfunction_charsum(d);
        auto Lt = lfunction_charsum(d.twisted(c));
        if (n % 2) CHECK(Lt == lpoly_neg(L));
        else CHECK(Lt == L);  // even degree: the twist is an isomorphism over F_q
      }
    }
  }
}

TEST_CASE("fault injection breaks the dual-method equality") {
  auto F3 = field(3);
  int mismatches = 0;
  for (auto& d : enumerate_squarefree(F3, 4)) {
    g_flip_reciprocity = true;
    auto broken = lfunction_charsum(d);
    g_flip_reciprocity = false;
    CHECK(lfunction_charsum(d) == frobenius_data(d).lpoly());
    mismatches += broken != frobenius_data(d).lpoly();
  }
  CHECK(mismatches > 0);
}

TEST_CASE("bulk enumeration matches single-curve data") {
  for (auto [F, n] : std::vector<std::pair<std::shared_ptr<const FqContext>, int>>{
           {field(3), 5}, {field(3), 6}, {field(5), 5}, {field(3, 2), 4}, {field(3), 1}, {field(5), 2}}) {
    auto bulk = all_curves(*F, n, 1, 6);
    auto single = enumerate_squarefree(F, n);
    REQUIRE(bulk.size() == single.size());
    for (size_t i = 0; i < bulk.size(); ++i) {
      CHECK(bulk[i].d == single[i].coeffs());
      auto c = frobenius_data(single[i], 6);
      CHECK(bulk[i].charpoly == c.charpoly);
      CHECK(bulk[i].counts == c.counts);
      CHECK(bulk[i].theta == c.theta);
    }
  }
}

TEST_CASE("reductions do not depend on the worker count") {
  FqContext F(3, 1);
  auto sum = [&](int workers) {
    return reduce_curves(
        F, 7, workers, 4, std::vector<long long>(5, 0),
        [](std::vector<long long>& acc, const CurveData& c) {
          for (int k = 0; k <= 4; ++k) acc[k] += c.theta[k] * c.theta[k];
        },
        [](std::vector<long long>& a, const std::vector<long long>& b) {
          for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        });
  };
  CHECK(sum(1) == sum(3));
  auto a = all_curves(F, 6, 1, 4), b = all_curves(F, 6, 4, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].d == b[i].d);
}

TEST_CASE("curve cache round trip") {
  FqContext F(3, 1);
  std::string path = "test_cache_q3_n5.bin";
  std::remove(path.c_str());
  auto fresh = cached_curves(path, F, 5, 1, 4);
  auto loaded = load_curve_cache(path, F, 5, 4);
  REQUIRE(fresh.size() == loaded.size());
  for (size_t i = 0; i < fresh.size(); ++i) {
    CHECK(fresh[i].d == loaded[i].d);
    CHECK(fresh[i].charpoly == loaded[i].charpoly);
    CHECK(fresh[i].counts == loaded[i].counts);
    CHECK(fresh[i].theta == loaded[i].theta);
  }
  std::ifstream is(path, std::ios::binary);
  char magic[9] = {};
  is.read(magic, 8);
  CHECK(std::string(magic) == "HWCACHE1");
  CHECK_THROWS_AS(load_curve_cache(path, F, 6, 4), ParseError);
  {
    std::ofstream bad(path, std::ios::binary | std::ios::trunc);
    bad << "NOTCACHE";
  }
  CHECK_THROWS_AS(load_curve_cache(path, F, 5, 4), ParseError);
  std::remove(path.c_str());
}
