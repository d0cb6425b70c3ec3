#include <numeric>
#include <random>

#include "doctest.h"
#include "hypstab/core/errors.hpp"
#include "hypstab/symfunc/graded.hpp"
#include "oracle.hpp"

using namespace hypstab;

namespace {

SymFunc P(const Partition& lam, int a) { return SymFunc::basis_element(Basis::PowerSum, lam, a); }
SymFunc S(const Partition& lam, int a) { return SymFunc::s(lam, a); }

GradedElement zpow(int k, Window w) { return GradedElement::z_power(k, w); }

}  // namespace

TEST_CASE("partition basics") {
  Partition l{3, 1, 1};
  CHECK(l.weight() == 5);
  CHECK(l.length() == 3);
  CHECK(l.conjugate() == Partition{3, 1, 1});
  CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition{2, 2, 1}.z() == 8);  // 2^2·2!·1
  CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
  CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
  CHECK(parse_partition("∅").empty());
  auto ls = parse_partition_list("2,1,1;4;∅");
  REQUIRE(ls.size() == 3);
  CHECK(ls[1] == Partition{4});
  CHECK(ls[2].empty());
  CHECK_THROWS_AS(parse_partition("1,x"), ParseError);
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
  CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("z_rho is the centralizer order") {
  // Σ_ρ n!/z_ρ = n!
  for (int n = 1; n <= 9; ++n) {
    Rational s = 0;
    for (const auto& rho : partitions_of(n)) s += frac(1, rho.z());
    CHECK(s == 1);
  }
}

TEST_CASE("convert_basis examples") {
  SymFunc h2 = convert_basis(SymFunc::h(2, 4), Basis::PowerSum);
  CHECK(h2.coefficient(Partition{1, 1}) == frac(1, 2));
  CHECK(h2.coefficient(Partition{2}) == frac(1, 2));
  CHECK(h2.terms().size() == 2);
  for (Basis b : {Basis::PowerSum, Basis::Schur, Basis::Complete, Basis::Elementary, Basis::Monomial})
    CHECK(convert_basis(S(Partition(), 3), b).terms() == Terms{{Partition(), 1}});
  SymFunc p3 = convert_basis(P(Partition{3}, 3), Basis::Schur);
  CHECK(p3.terms() == Terms{{Partition{3}, 1}, {Partition{2, 1}, -1}, {Partition{1, 1, 1}, 1}});
}

TEST_CASE("Schur functions agree with semistandard tableaux") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) CHECK(oracle::to_poly(S(lam, n), n) == oracle::schur_ssyt(lam, n));
}

TEST_CASE("h, e, m agree with their polynomial definitions") {
  int N = 4;
  // h_2 in 4 variables: all degree-2 monomials; e_2: squarefree ones; m_{21}
  oracle::Poly h2 = oracle::to_poly(SymFunc::h(2, 4), N), e2 = oracle::to_poly(SymFunc::e(2, 4), N);
  CHECK(h2.size() == 10);
  CHECK(e2.size() == 6);
  for (auto& [e, c] : h2) CHECK(c == 1);
  oracle::Poly m21 = oracle::to_poly(SymFunc::basis_element(Basis::Monomial, Partition{2, 1}, 3), N);
  CHECK(m21.size() == 12);
  for (auto& [e, c] : m21) {
    CHECK(c == 1);
    std::vector<int> s(e);
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<int>{0, 0, 1, 2});
  }
}

TEST_CASE("basis round trips") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    SymFunc f = oracle::random_symfunc(rng, 6, 8);
    for (Basis b : {Basis::Schur, Basis::Complete, Basis::Elementary, Basis::Monomial}) {
      SymFunc g = convert_basis(f, b);
      CHECK(convert_basis(g, Basis::PowerSum).terms() == f.terms());
      for (Basis c : {Basis::Schur, Basis::Complete, Basis::Elementary, Basis::Monomial})
        CHECK(convert_basis(convert_basis(g, c), b).terms() == g.terms());
    }
  }
}

TEST_CASE("multiply examples") {
  CHECK((S({1}, 4) * S({1}, 4)).terms() == Terms{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  CHECK((SymFunc::e(2, 4) * SymFunc::constant(1, 4)).terms() == Terms{{Partition{2}, 1}});
  SymFunc lr = S({2, 1}, 4) * S({1}, 4);
  CHECK(lr.terms() == Terms{{Partition{3, 1}, 1}, {Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}});
  // oracle: product of tableaux polynomials
  CHECK(oracle::to_poly(lr, 4) == oracle::poly_mul(oracle::schur_ssyt({2, 1}, 4), oracle::schur_ssyt({1}, 4)));
}

TEST_CASE("multiplication agrees across bases") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    SymFunc f = oracle::random_symfunc(rng, 6, 5), g = oracle::random_symfunc(rng, 6, 5);
    SymFunc ref = f * g;
    for (Basis b : {Basis::Schur, Basis::Complete, Basis::Monomial})
      CHECK(convert_basis(convert_basis(f, b) * convert_basis(g, b), Basis::PowerSum).terms() == ref.terms());
    oracle::Poly full = oracle::poly_mul(oracle::to_poly(f, 6), oracle::to_poly(g, 6));
    std::erase_if(full, [](const auto& kv) { return std::accumulate(kv.first.begin(), kv.first.end(), 0) > 6; });
    CHECK(oracle::to_poly(ref, 6) == full);
  }
}

TEST_CASE("omega") {
  CHECK(convert_basis(omega(SymFunc::e(3, 3)), Basis::Complete).terms() == Terms{{Partition{3}, 1}});
  CHECK(omega(S({2, 1}, 3)).terms() == Terms{{Partition{2, 1}, 1}});
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) CHECK(omega(S(lam, n)).terms() == Terms{{lam.conjugate(), 1}});
  std::mt19937 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    SymFunc f = oracle::random_symfunc(rng, 7, 6);
    CHECK(omega(omega(f)).terms() == f.terms());
  }
}

TEST_CASE("inner product") {
  CHECK(inner_product(S({2}, 2), S({2}, 2)) == 1);
  CHECK(inner_product(S({2}, 2), S({1, 1}, 2)) == 0);
  CHECK(inner_product(P({2}, 2), P({2}, 2)) == 2);
  for (int n = 0; n <= 6; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) CHECK(inner_product(S(a, n), S(b, n)) == (a == b ? 1 : 0));
  // ⟨h_λ, m_μ⟩ = δ
  for (const auto& a : partitions_of(5))
    for (const auto& b : partitions_of(5))
      CHECK(inner_product(SymFunc::basis_element(Basis::Complete, a, 5), SymFunc::basis_element(Basis::Monomial, b, 5)) ==
            (a == b ? 1 : 0));
}

TEST_CASE("skew") {
  CHECK(skew(S({2, 1}, 3), Partition{1}).terms() == Terms{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  CHECK(skew(S({2}, 2), Partition{3}).is_zero());
  std::mt19937 rng(14);
  SymFunc f = oracle::random_symfunc(rng, 6, 6);
  CHECK(skew(f, Partition()).terms() == f.terms());
  // adjointness: ⟨s_μ^⊥ f, g⟩ = ⟨f, s_μ g⟩
  for (int trial = 0; trial < 6; ++trial) {
    SymFunc a = oracle::random_symfunc(rng, 7, 8);
    SymFunc b(Basis::PowerSum, 7, oracle::random_symfunc(rng, 4, 5).terms());
    for (const auto& mu : partitions_up_to(3))
      CHECK(inner_product(skew(a, mu), b) == inner_product(a, S(mu, 7) * b.truncated(7)));
  }
}

TEST_CASE("adams and plethysm examples") {
  SymFunc h2 = SymFunc::h(2, 4);
  SymFunc expect = SymFunc(Basis::PowerSum, 4, Terms{{Partition{2, 2}, frac(1, 2)}, {Partition{4}, frac(1, 2)}});
  CHECK(plethysm(P({2}, 4), h2) == expect);
  CHECK(adams(2, h2) == expect);
  CHECK(adams(1, h2) == h2);
  Window w{0, 6, 4};
  GradedElement hz = plethysm(SymFunc::h(2, 2), zpow(1, {0, 6, 0}));
  CHECK(hz.terms() == GTerms{{Monomial{2, Partition()}, 1}});
  GradedElement zh = zpow(1, w) + GradedElement::from_symfunc(h2, w);
  GradedElement az = adams(2, zh);
  CHECK(az == zpow(2, w) + GradedElement::from_symfunc(expect, w));
}

TEST_CASE("plethysm domain") {
  Window w{0, 3, 3};
  CHECK_THROWS_AS(pleth_exp(GradedElement::constant(1, w)), PlethysmDomain);
  CHECK_THROWS_AS(pleth_log(GradedElement::constant(2, w)), PlethysmDomain);
  CHECK_THROWS_AS(plethysm(SymFunc::h(2, 3), GradedElement::constant(1, w)), PlethysmDomain);
}

TEST_CASE("Exp examples") {
  Window w{0, 8, 0};
  CHECK(pleth_exp(-zpow(1, w)) == GradedElement::constant(1, w) - zpow(1, w));
  Window w3{0, 0, 3};
  GradedElement e = pleth_exp(GradedElement::from_symfunc(SymFunc::h(1, 3), w3));
  GradedElement sum(w3, Basis::Complete);
  for (int r = 0; r <= 3; ++r) sum += GradedElement::from_symfunc(SymFunc::h(r, 3), w3);
  CHECK(e == sum);
  Window w4{0, 5, 4};
  GradedElement z = zpow(1, w4), h1 = GradedElement::from_symfunc(SymFunc::h(1, 4), w4);
  CHECK(pleth_exp(z + h1) == pleth_exp(z) * pleth_exp(h1));
}

TEST_CASE("Log examples") {
  Window w{0, 8, 0};
  GradedElement one = GradedElement::constant(1, w), z = zpow(1, w);
  CHECK(pleth_log(one + z) == z - zpow(2, w));
  CHECK(pleth_exp(z - zpow(2, w)) == one + z);
  Window w4{0, 0, 6};
  GradedElement h2 = GradedElement::from_symfunc(SymFunc::h(2, 6), w4);
  CHECK(pleth_log(pleth_exp(h2)) == h2);
  Window w3{0, 0, 3};
  GradedElement l = pleth_log(GradedElement::constant(1, w3) + GradedElement::from_symfunc(SymFunc::h(1, 3), w3));
  SymFunc expect(Basis::Schur, 3, Terms{{Partition{1}, 1}, {Partition{2}, -1}, {Partition{2, 1}, 1}});
  CHECK(l.z_slice(0) == expect);
  // oracle: L = Σ μ(k)/k log(1+p_k) expanded directly as Σ_m (-1)^{m+1} p_k^m / m
  SymFunc direct(Basis::PowerSum, 3);
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; k * m <= 3; ++m) {
      Partition pk(std::vector<int>(m, k));
      direct.add(pk, frac(mobius(k) * ((m % 2) ? 1 : -1), k * m));
    }
  CHECK(direct == expect);
}

TEST_CASE("(E-1)∘L = h1 and the inverse pair") {
  for (int a : {4, 6}) {
    SymFunc E(Basis::Complete, a), L(Basis::PowerSum, a);
    for (int r = 1; r <= a; ++r) E.add(Partition{r}, 1);
    GradedElement one = GradedElement::constant(1, {0, 0, a});
    L = pleth_log(one + GradedElement::from_symfunc(SymFunc::h(1, a), {0, 0, a})).z_slice(0);
    CHECK(plethysm(E, L) == SymFunc::h(1, a));
    CHECK(plethysm(L, E) == SymFunc::h(1, a));
  }
}

TEST_CASE("plethysm algebra on random elements") {
  std::mt19937 rng(21);
  int A = 6;
  for (int trial = 0; trial < 4; ++trial) {
    SymFunc f = oracle::random_symfunc(rng, A, 4);
    SymFunc g = oracle::random_symfunc(rng, A, 4, false);
    SymFunc h = oracle::random_symfunc(rng, A, 4, false);
    CHECK(plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h)));
    CHECK(plethysm(f, SymFunc::h(1, A)) == f);
    CHECK(plethysm(SymFunc::h(1, A), g) == g);
    SymFunc f2 = oracle::random_symfunc(rng, A, 4);
    CHECK(plethysm(f * f2, g) == plethysm(f, g) * plethysm(f2, g));
  }
}

TEST_CASE("plethysm of a sum via the skew coproduct") {
  // s_λ∘(x+y) = Σ_μ (s_μ∘x)(s_{λ/μ}∘y)
  std::mt19937 rng(22);
  int A = 6;
  SymFunc x = oracle::random_symfunc(rng, A, 3, false), y = oracle::random_symfunc(rng, A, 3, false);
  for (const auto& lam : partitions_up_to(4)) {
    SymFunc lhs = plethysm(S(lam, A), x + y);
    SymFunc rhs(Basis::PowerSum, A);
    for (const auto& mu : partitions_up_to(lam.weight())) {
      if (!lam.contains_diagram(mu)) continue;
      SymFunc sk = skew(S(lam, A), mu);
      rhs += plethysm(S(mu, A), x) * plethysm(sk, y);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Exp/Log inverse and additivity on random graded elements") {
  std::mt19937 rng(23);
  Window w{0, 5, 5};
  for (int trial = 0; trial < 4; ++trial) {
    GradedElement x = oracle::random_graded(rng, w, 5, 3);
    GradedElement y = oracle::random_graded(rng, w, 5, 3);
    GradedElement one = GradedElement::constant(1, w);
    CHECK(pleth_log(pleth_exp(x)) == x);
    CHECK(pleth_exp(pleth_log(one + x)) == one + x);
    CHECK(pleth_exp(x + y) == pleth_exp(x) * pleth_exp(y));
  }
}

namespace {

// ordinary (non-plethystic) exp/log on graded power-sum elements with zero constant term
GradedElement ordinary_exp(const GradedElement& u, int order) {
  Window w = u.window();
  GradedElement acc = GradedElement::constant(1, w), pw = GradedElement::constant(1, w);
  for (int m = 1; m <= order; ++m) {
    pw = pw * u * frac(1, m);
    acc += pw;
  }
  return acc;
}
GradedElement ordinary_log1p(const GradedElement& u, int order) {
  Window w = u.window();
  GradedElement acc(w), pw = GradedElement::constant(1, w);
  for (int m = 1; m <= order; ++m) {
    pw = pw * u;
    acc += pw * frac((m % 2) ? 1 : -1, m);
  }
  return acc;
}

}  // namespace

TEST_CASE("Exp(x·Log(1+y)) as a product over Adams operations") {
  // x = z^a; exponent of the n-th factor is (1/n) Σ_{d|n} μ(n/d) z^{ad}
  std::mt19937 rng(24);
  for (int a : {1, 2}) {
    Window w{0, 6, 4};
    GradedElement y = oracle::random_graded(rng, w, 4, 2);
    y.add(0, Partition(), 0);
    GradedElement lhs = pleth_exp(zpow(a, w) * pleth_log(GradedElement::constant(1, w) + y));
    int order = w.z_max + w.max_arity;
    GradedElement rhs = GradedElement::constant(1, w);
    for (int n = 1; n <= order; ++n) {
      GradedElement ex(w);
      for (long d : divisors(n)) ex += zpow(a * d, w) * frac(mobius(n / d), n);
      GradedElement factor = ordinary_exp(ex * ordinary_log1p(adams(n, y), order), order);
      rhs = rhs * factor;
    }
    CHECK(agree_on_common_window(lhs, rhs));
    CHECK(lhs.window() == rhs.window());
  }
}

TEST_CASE("negative z exponents in windows") {
  // z^{-1}·(z h_2) has no negative terms; Exp of it is well defined
  Window w{0, 4, 4};
  GradedElement x = zpow(1, w) * GradedElement::from_symfunc(SymFunc::h(2, 4), w);
  GradedElement y = x.shift_z(-1);
  CHECK(y.window().z_min == -1);
  CHECK(y.valuation() == 0);
  GradedElement e = pleth_exp(y);
  CHECK(e.coefficient(0, Partition()) == 1);
  // negative valuation: z^{-1} h_2 has weight 1 and is allowed
  GradedElement neg = GradedElement::from_symfunc(SymFunc::h(2, 4), w).shift_z(-1);
  GradedElement en = pleth_exp(neg);
  CHECK(en.window().z_max == w.z_max - 1 - 4);
}
