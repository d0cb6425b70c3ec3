#include "hypstab/series/stable_series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hypstab/core/errors.hpp"

namespace hypstab {

std::string family_name(Family f) {
  switch (f) {
    case Family::BraidSchur: return "braid-schur";
    case Family::BraidSymplectic: return "braid-symplectic";
    case Family::HyperellipticClosed: return "hyperelliptic-closed";
    case Family::MCGOpen: return "mcg-open";
    case Family::MCGClosed: return "mcg-closed";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::BraidSchur, Family::BraidSymplectic, Family::HyperellipticClosed, Family::MCGOpen,
                   Family::MCGClosed})
    if (family_name(f) == s) return f;
  throw ParseError("unknown family '" + s + "'");
}

namespace {

void require_arity(int max_arity, int z_max) {
  if (max_arity < 2) throw WindowTooSmall("series need max_arity >= 2");
  if (z_max < 0) throw WindowTooSmall("z_max must be nonnegative");
}

GradedElement zh(int j, int n, Window w) { return GradedElement::monomial(j, SymFunc::h(n, w.max_arity), w); }

// z + Σ_{j>=0} z^j h_{2j}
GradedElement koszul_argument(Window w) {
  GradedElement x = GradedElement::z_power(1, w);
  for (int j = 0; 2 * j <= w.max_arity && j <= w.z_max; ++j) x += zh(j, 2 * j, w);
  return x;
}

// z^{-s}·y on the window shifted by -s; terms that would land below z^0 must cancel
GradedElement shift_down_checked(const GradedElement& y, int s, const char* what) {
  GradedElement r = y.shift_z(-s);
  if (r.valuation() < 0) throw InternalError(std::string(what) + ": negative z-exponent survived");
  return r.restricted({0, r.window().z_max, r.window().max_arity});
}

// z^{-1} Log(z + Σ z^j h_{2j}) - 1 on [0, z_max]
GradedElement braid_exponent(int max_arity, int z_max) {
  Window w{0, z_max + 1, max_arity};
  GradedElement inner = shift_down_checked(pleth_log(koszul_argument(w)), 1, "braid_series");
  inner -= GradedElement::constant(1, inner.window());
  return inner;
}

}  // namespace

GradedElement braid_series(SeriesBasis basis, int max_arity, int z_max) {
  require_arity(max_arity, z_max);
  GradedElement x = braid_exponent(max_arity, z_max);
  if (basis == SeriesBasis::Symplectic) x -= zh(0, 2, x.window());
  return pleth_exp(x).in_basis(Basis::Schur);
}

GradedElement closed_series(int max_arity, int z_max) {
  require_arity(max_arity, z_max);
  Window w{0, z_max, max_arity};
  GradedElement geo(w);
  for (int m = 0; 2 * m <= z_max; ++m) geo += GradedElement::z_power(2 * m, w);
  return (koszul_argument(w) * geo * braid_series(SeriesBasis::Symplectic, max_arity, z_max)).in_basis(Basis::Schur);
}

GradedElement mcg_series(bool closed, int max_arity, int z_max) {
  require_arity(max_arity, z_max);
  Window w{0, z_max + 2, max_arity};
  GradedElement u = GradedElement::z_power(2, w) - zh(1, 1, w);  // z^2 - z h_1
  GradedElement y = pleth_exp(u) - GradedElement::constant(1, w) - u;
  GradedElement x = shift_down_checked(y, 2, "mcg_series");
  Window wx = x.window();
  x -= GradedElement::from_symfunc(SymFunc::e(2, max_arity), wx);
  if (closed) x += zh(1, 1, wx);
  return pleth_exp(x).in_basis(Basis::Schur);
}

GradedElement product_form_series(int max_arity, int z_max) {
  require_arity(max_arity, z_max);
  Window w{0, z_max, max_arity};
  GradedElement result = GradedElement::constant(1, w) - GradedElement::z_power(1, w);
  for (int n = 1; 2 * n <= max_arity; ++n) {
    int m_max = max_arity / (2 * n);
    // u_n = (1/(1+z^n)) Σ_{k>0} z^{nk} ψ_n(h_{2k}), needed to z^{z_max + n·m_max}
    Window wu{0, z_max + n * m_max, max_arity};
    GradedElement s(wu);
    for (int k = 1; 2 * k * n <= max_arity; ++k)
      s += GradedElement::monomial(n * k, adams(n, SymFunc::h(2 * k, max_arity)), wu);
    GradedElement inv(wu);
    for (int j = 0; n * j <= wu.z_max; ++j) inv += GradedElement::z_power(n * j, wu) * Rational(j % 2 ? -1 : 1);
    GradedElement u = inv * s;
    // exponent i_n(z^{-1}) = (1/n) Σ_{d|n} μ(n/d) z^{-d}
    Window we{-n * m_max, wu.z_max, max_arity};
    GradedElement e(we);
    for (long d : divisors(n)) e += GradedElement::z_power(-static_cast<int>(d), we) * frac(mobius(n / d), n);
    // (1 + u)^e = Σ_m binom(e, m) u^m
    GradedElement factor = GradedElement::constant(1, w);
    GradedElement binom = GradedElement::constant(1, we);
    GradedElement upow = GradedElement::constant(1, wu);
    for (int m = 1; m <= m_max; ++m) {
      binom = binom * (e - GradedElement::constant(m - 1, we)) * frac(1, m);
      binom = binom.restricted(we);
      upow = upow * u;
      GradedElement term = binom * upow;
      if (term.valuation() < 0) throw InternalError("product_form_series: negative z-exponent survived");
      factor += term.restricted(w);
    }
    result = result * factor;
  }
  return result.in_basis(Basis::Schur);
}

GradedElement family_series(Family f, int max_arity, int z_max) {
  switch (f) {
    case Family::BraidSchur: return braid_series(SeriesBasis::Schur, max_arity, z_max);
    case Family::BraidSymplectic: return braid_series(SeriesBasis::Symplectic, max_arity, z_max);
    case Family::HyperellipticClosed: return closed_series(max_arity, z_max);
    case Family::MCGOpen: return mcg_series(false, max_arity, z_max);
    case Family::MCGClosed: return mcg_series(true, max_arity, z_max);
  }
  throw InternalError("unknown family");
}

Partition slot_for(Family f, const Partition& lambda) {
  return f == Family::MCGOpen ? lambda : lambda.conjugate();
}

std::vector<Integer> BettiTable::row(const Partition& lambda) const {
  std::vector<Integer> r;
  for (int k = 0; k <= k_max; ++k) {
    auto it = entries.find({lambda, k});
    r.push_back(it == entries.end() ? Integer(0) : it->second);
  }
  return r;
}

BettiTable betti_from_series(Family f, const GradedElement& series, const std::vector<Partition>& partitions,
                             int k_max) {
  GradedElement s = series.in_basis(Basis::Schur);
  BettiTable t;
  t.family = f;
  t.max_arity = s.window().max_arity;
  t.k_max = std::min(k_max, s.window().z_max);
  for (const auto& lam : partitions) {
    if (lam.weight() > t.max_arity) throw WindowTooSmall("partition " + lam.str() + " beyond series arity");
    Partition slot = slot_for(f, lam);
    for (int k = 0; k <= t.k_max; ++k) {
      Rational c = s.coefficient(k, slot);
      if (k % 2) c = -c;
      if (c.get_den() != 1) throw InternalError("non-integral Betti number at " + lam.str());
      if (c < 0)
        throw NegativeCoefficient("dim H_" + std::to_string(k) + " for " + lam.str() + " resolves to " + to_string(c));
      t.entries[{lam, k}] = c.get_num();
    }
  }
  return t;
}

BettiTable betti_table(Family f, const std::vector<Partition>& partitions, int k_max) {
  int a = 2;
  for (const auto& p : partitions) a = std::max(a, p.weight());
  return betti_from_series(f, family_series(f, a, k_max), partitions, k_max);
}

std::vector<Violation> vanishing_report(const GradedElement& series, VanishingRules rules) {
  std::vector<Violation> out;
  GradedElement s = series.in_basis(Basis::Schur);
  for (const auto& [m, c] : s.terms()) {
    int w = m.lambda.weight();
    auto flag = [&](const char* rule) { out.push_back({m.z, m.lambda, c, rule}); };
    if (w % 2) flag("|mu| even");
    if (rules == VanishingRules::ParityOnly) continue;
    if (4 * m.z < w) flag("k >= |mu|/4");
    if (2 * m.z < m.lambda.largest()) flag("k >= mu_1/2");
    if (2 * m.lambda.length() > w) flag("l(mu) <= |mu|/2");
  }
  return out;
}

// ---- rational fitting ----

std::vector<Integer> cyclotomic_poly(int m) {
  // z^m - 1 divided by Φ_d for every proper divisor d
  std::vector<Integer> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (long d : divisors(m)) {
    if (d == m) continue;
    std::vector<Integer> q = cyclotomic_poly(static_cast<int>(d));
    if (d == 1) q = {-1, 1};  // undo the sign convention for the division
    // exact division of p by monic q
    std::vector<Integer> quo(p.size() - q.size() + 1, 0);
    for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
      quo[i] = p[i + q.size() - 1];
      for (size_t j = 0; j < q.size(); ++j) p[i + j] -= quo[i] * q[j];
    }
    p = quo;
  }
  if (m == 1) p = {1, -1};
  return p;
}

namespace {

int euler_phi(int m) {
  int r = m;
  for (int p = 2, n = m; n > 1; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r = r / p * (p - 1);
  }
  return r;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::string poly_str(const std::vector<Rational>& p) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    bool unit = c == 1 && i > 0;
    if (!unit) os << to_string(c);
    if (i > 0) os << (unit ? "" : "*") << "z" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string RationalFit::str() const {
  if (!conclusive) return "inconclusive";
  std::string num = poly_str(numerator);
  if (numerator.empty() || denominator.size() <= 1) return num;
  std::vector<Rational> den(denominator.begin(), denominator.end());
  return "(" + num + ")/(" + poly_str(den) + ")";
}

RationalFit fit_rational(const std::vector<Rational>& coefficients, int guard) {
  int N = static_cast<int>(coefficients.size());
  if (guard < 0 || N < guard + 1) throw InsufficientData("need at least guard+1 coefficients");
  RationalFit fit;
  for (int D = 0; D + guard + 1 <= N; ++D) {
    // all multisets of cyclotomic indices with Σ φ(m) = D, indices nondecreasing
    std::vector<int> cur;
    bool found = false;
    int best_deg = N;
    std::function<void(int, int)> search = [&](int remaining, int min_m) {
      if (remaining == 0) {
        std::vector<Integer> q{1};
        for (int m : cur) q = poly_mul(q, cyclotomic_poly(m));
        std::vector<Rational> p(N, 0);
        for (int i = 0; i < N; ++i)
          for (int j = 0; j <= i && j < static_cast<int>(q.size()); ++j) p[i] += coefficients[i - j] * Rational(q[j]);
        int deg = N - 1;
        while (deg >= 0 && p[deg] == 0) --deg;
        if (N - 1 - deg < D + guard || deg >= best_deg) return;
        best_deg = deg;
        found = true;
        fit.conclusive = true;
        fit.numerator.assign(p.begin(), p.begin() + (deg + 1));
        fit.cyclotomic = cur;
        fit.denominator = deg < 0 ? std::vector<Integer>{1} : q;
        if (deg < 0) fit.cyclotomic.clear();
        return;
      }
      for (int m = min_m; m <= 4 * remaining + 6; ++m) {
        int ph = euler_phi(m);
        if (ph > remaining) continue;
        cur.push_back(m);
        search(remaining - ph, m);
        cur.pop_back();
      }
    };
    search(D, 1);
    if (found) return fit;
  }
  return fit;
}

}  // namespace hypstab
