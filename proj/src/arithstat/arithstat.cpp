#include "hypstab/arithstat/arithstat.hpp"

#include <cmath>
#include <functional>

#include "hypstab/core/errors.hpp"
#include "hypstab/repchar/characters.hpp"
#include "hypstab/repchar/symplectic.hpp"

namespace hypstab {

using Elem = GaloisField::Elem;

std::shared_ptr<const FqContext> make_field(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw InvalidField("q must be an odd prime power, got " + std::to_string(q));
  std::uint64_t p = 3;
  while (q % p) p += 2;
  int e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1 || !is_prime(p)) throw InvalidField("q must be an odd prime power, got " + std::to_string(q));
  return std::make_shared<const FqContext>(static_cast<std::uint32_t>(p), e);
}

namespace {

Integer from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

// |x|^b compared against coeff^b q^a, with exponent a/b
Rational bound_power(const PowerBound& pb, long b) {
  Rational e = pb.exponent * b;
  if (e.get_den() != 1) throw InternalError("bound exponent denominator");
  return rpow(pb.coeff, b) * rpow(Rational(pb.q), e.get_num().get_si());
}

long common_den(const Rational& a, const Rational& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return l.get_si();
}

template <class Acc, class Add, class Merge>
Acc gather(const FqContext& F, int n, const EnumOptions& opt, int theta_max, const Acc& init, Add add, Merge merge) {
  if (opt.cache_dir.empty()) return reduce_curves(F, n, opt.workers, theta_max, init, add, merge);
  std::string path = opt.cache_dir + "/hwcache_p" + std::to_string(F.p()) + "_e" + std::to_string(F.degree()) + "_n" +
                     std::to_string(n) + ".bin";
  Acc acc = init;
  for (const auto& c : cached_curves(path, F, n, opt.workers, theta_max)) add(acc, c);
  return acc;
}

}  // namespace

bool PowerBound::admits(const Rational& x) const {
  long b = exponent.get_den().get_si();
  return rpow(Rational(abs(x)), b) <= bound_power(*this, b);
}

bool PowerBound::below(const PowerBound& o) const {
  long b = common_den(exponent, o.exponent);
  return bound_power(*this, b) < bound_power(o, b);
}

bool PowerBound::operator==(const PowerBound& o) const {
  long b = common_den(exponent, o.exponent);
  return bound_power(*this, b) == bound_power(o, b);
}

double PowerBound::to_double() const { return coeff.get_d() * std::pow(q.get_d(), exponent.get_d()); }

std::string PowerBound::str() const {
  if (exponent.get_den() == 1) return to_string(coeff * rpow(Rational(q), exponent.get_num().get_si()));
  return to_string(coeff) + "*" + to_string(q) + "^(" + to_string(exponent) + ")";
}

PowerBound PowerBound::parse(const std::string& s) {
  auto star = s.find('*');
  if (star == std::string::npos) return {parse_rational(s), 1, 0};
  auto caret = s.find("^(", star);
  if (caret == std::string::npos || s.back() != ')') throw ParseError("bad bound '" + s + "'");
  PowerBound pb;
  pb.coeff = parse_rational(s.substr(0, star));
  pb.q = Integer(s.substr(star + 1, caret - star - 1));
  pb.exponent = parse_rational(s.substr(caret + 2, s.size() - caret - 3));
  return pb;
}

std::map<Partition, Integer> powersum_totals(const FqContext& F, int n, int max_weight, const EnumOptions& opt) {
  std::vector<Partition> rhos = partitions_up_to(max_weight);
  using Acc = std::vector<__int128>;
  Acc total = gather(
      F, n, opt, std::max(max_weight, 1), Acc(rhos.size(), 0),
      [&](Acc& acc, const CurveData& c) {
        for (size_t i = 0; i < rhos.size(); ++i) {
          __int128 v = 1;
          for (int part : rhos[i].parts()) v *= c.theta[part];
          acc[i] += v;
        }
      },
      [](Acc& a, const Acc& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  std::map<Partition, Integer> out;
  for (size_t i = 0; i < rhos.size(); ++i) out[rhos[i]] = from_i128(total[i]);
  return out;
}

std::map<Partition, Rational> zn_coefficients(const FqContext& F, int n, int max_weight, const EnumOptions& opt) {
  auto totals = powersum_totals(F, n, max_weight, opt);
  Rational scale = rpow(Rational(static_cast<unsigned long>(F.size())), -n);
  std::map<Partition, Rational> out;
  for (const auto& lam : partitions_up_to(max_weight)) {
    Rational v = 0;
    for (const auto& [rho, c] : to_power_sum(Basis::Schur, lam)) v += c * totals.at(rho);
    out[lam] = v * scale;
  }
  return out;
}

namespace {

Integer big_binomial(const Integer& n, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

SymFunc stable_trace_genfunc(const Integer& q, int A) {
  if (q < 3 || q % 2 == 0) throw InvalidField("q must be odd and >= 3");
  SymFunc total = SymFunc::constant(1, A);
  for (int n = 1; 2 * n <= A; ++n) {
    SymFunc X(Basis::PowerSum, A);
    for (int k = 1; 2 * k * n <= A; ++k) X += adams(n, SymFunc::h(2 * k, A));
    X *= 1 / (1 + rpow(Rational(q), -n));
    Integer N = necklace(q, n);
    SymFunc factor = SymFunc::constant(1, A), power = SymFunc::constant(1, A);
    for (long j = 1; 2 * n * j <= A; ++j) {
      power = multiply(power, X);
      factor += power * Rational(big_binomial(N, j));
    }
    total = multiply(total, factor);
  }
  total *= 1 - 1 / Rational(q);
  return convert_basis(total, Basis::Schur);
}

namespace {

SymFunc unitarized(const SymFunc& f, const Integer& q) {
  SymFunc out(f.basis(), f.max_arity());
  for (const auto& [lam, c] : f.terms()) {
    if (lam.weight() % 2) throw InternalError("odd weight in the stable trace series");
    out.add(lam, c * rpow(Rational(q), -lam.weight() / 2));
  }
  return out;
}

// Exp(-h_2) = exp(-Σ_m ψ_m(h_2)/m)
SymFunc exp_minus_h2(int A) {
  SymFunc Y(Basis::PowerSum, A);
  for (int m = 1; 2 * m <= A; ++m) Y -= adams(m, SymFunc::h(2, A)) * frac(1, m);
  SymFunc out = SymFunc::constant(1, A), term = SymFunc::constant(1, A);
  for (int j = 1; 2 * j <= A; ++j) {
    term = multiply(term, Y) * frac(1, j);
    out += term;
  }
  return out;
}

}  // namespace

Rational stable_trace_gl(const Partition& lambda, const Integer& q, int max_arity) {
  if (lambda.weight() % 2) return 0;
  return stable_trace_genfunc(q, max_arity).coefficient(lambda.conjugate()) * rpow(Rational(q), -lambda.weight() / 2);
}

std::map<Partition, Rational> stable_traces(const Integer& q, int max_weight) {
  SymFunc G = convert_basis(multiply(exp_minus_h2(max_weight), unitarized(stable_trace_genfunc(q, max_weight), q)), Basis::Schur);
  std::map<Partition, Rational> out;
  for (const auto& lam : partitions_up_to(max_weight)) out[lam] = G.coefficient(lam.conjugate());
  return out;
}

Rational stable_trace_T(const Partition& lambda, const Integer& q, int max_arity) {
  if (lambda.weight() % 2) return 0;
  if (lambda.weight() > max_arity) throw WindowTooSmall("T_" + lambda.str() + " needs arity " + std::to_string(lambda.weight()));
  return stable_traces(q, max_arity).at(lambda);
}

std::map<Partition, QAdjSqrt> tr_lambda_box(const FqContext& F, int g, int r, const EnumOptions& opt) {
  if (g < 1) throw InvalidField("genus must be >= 1");
  int n = 2 * g + 1;
  auto box = partitions_in_box(g, r);
  int w = 0;
  for (const auto& lam : box) w = std::max(w, lam.weight());
  auto totals = powersum_totals(F, n, w, opt);
  Integer Q(static_cast<unsigned long>(F.size()));
  Rational scale = rpow(Rational(Q), -n);
  std::map<Partition, QAdjSqrt> out;
  for (const auto& lam : box) {
    SymFunc sp = symplectic_to_schur(lam, lam.weight());
    QAdjSqrt v(Q);
    for (const auto& [rho, c] : in_power_sum(Basis::Schur, sp.terms()))
      v += QAdjSqrt::sqrt_q_power(Q, -rho.weight()) * (c * totals.at(rho) * scale);
    out.emplace(lam, v);
  }
  return out;
}

QAdjSqrt tr_lambda_g(const FqContext& F, const Partition& lambda, int g, const EnumOptions& opt) {
  int n = 2 * g + 1;
  auto totals = powersum_totals(F, n, lambda.weight(), opt);
  Integer Q(static_cast<unsigned long>(F.size()));
  Rational scale = rpow(Rational(Q), -n);
  SymFunc sp = symplectic_to_schur(lambda, lambda.weight());
  QAdjSqrt v(Q);
  for (const auto& [rho, c] : in_power_sum(Basis::Schur, sp.terms()))
    v += QAdjSqrt::sqrt_q_power(Q, -rho.weight()) * (c * totals.at(rho) * scale);
  return v;
}

PowerBound zn_bound(const Integer& q, int weight, int n) {
  return {Rational(ipow(5, weight)), q, Rational(weight) - frac(n, 2)};
}

PowerBound thmc_bound(const Integer& q, int g, int r) {
  Rational theta = frac(2 * g + 1 + 11, 12);
  return {Rational(ipow(4, static_cast<unsigned long>(g * (r + 1)))), q, -theta / 2};
}

Integer fuks_bound(int n, int k, const Integer& dim) { return binomial(n - 1, k) * dim; }

PowerBound trivial_scale(const Integer& q, const Partition& lambda, int n) {
  // dim of the GL(n-1) irreducible: s_λ(1^{n-1}) via hook contents
  Rational dim = 1;
  auto conj = lambda.conjugate();
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) {
      int hook = lambda.part(i) - j + conj.part(j) - i - 1;
      dim *= frac(n - 1 + j - i, hook);
    }
  return {(1 - 1 / Rational(q)) * dim, q, frac(lambda.weight(), 2)};
}

namespace {

// partitions of w with every part <= r
void bounded_partitions(int w, int r, std::vector<int>& cur, const std::function<void(const Partition&)>& fn) {
  if (w == 0) {
    fn(Partition(cur));
    return;
  }
  for (int part = std::min(w, r); part >= 1; --part) {
    if (!cur.empty() && part > cur.back()) continue;
    cur.push_back(part);
    bounded_partitions(w - part, r, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

Q1Prediction q1_prediction(const Integer& q, int g, int r, int cutoff) {
  if (r < 0 || g < 0 || cutoff < 0) throw InvalidField("q1_prediction needs g, r, cutoff >= 0");
  auto T = stable_traces(q, cutoff);
  Q1Prediction out;
  for (const auto& [lam, t] : T) {
    if (t == 0 || lam.largest() > r) continue;
    SignedWeight sw = lambda_dagger(lam, g, r);
    if (sw.sign == 0) continue;
    out.value += t * sw.sign * weyl_dim_sp(sw.dominant, r);
  }
  // tail: |T_λ| <= C q^{-|λ|/5}, C measured on the computed range
  double C = 0;
  for (const auto& [lam, t] : T)
    if (lam.weight() >= 2) C = std::max(C, std::fabs(t.get_d()) * std::pow(q.get_d(), lam.weight() / 5.0));
  out.decay_constant = C;
  out.tail_terms = 40;
  std::vector<int> cur;
  for (int w = cutoff + 1; w <= cutoff + out.tail_terms; ++w) {
    if (w % 2) continue;
    double dims = 0;
    bounded_partitions(w, r, cur, [&](const Partition& lam) {
      SignedWeight sw = lambda_dagger(lam, g, r);
      if (sw.sign != 0) dims += weyl_dim_sp(sw.dominant, r).get_d();
    });
    out.tail_bound += C * std::pow(q.get_d(), -w / 5.0) * dims;
  }
  return out;
}

MomentReport moment_sum(const FqContext& F, int g, int r, const EnumOptions& opt, int weight_cutoff) {
  if (g < 1 || r < 0) throw InvalidField("moment_sum needs g >= 1, r >= 0");
  int n = 2 * g + 1;
  Integer Q(static_cast<unsigned long>(F.size()));
  // Σ_d L(t)^r as an integer polynomial, evaluated once at t = q^{-1/2}
  using Acc = std::vector<__int128>;
  Acc sum = gather(
      F, n, opt, 1, Acc(2 * g * r + 1, 0),
      [&](Acc& acc, const CurveData& c) {
        std::vector<__int128> pw{1};
        auto L = c.lpoly();
        for (int i = 0; i < r; ++i) {
          std::vector<__int128> next(pw.size() + L.size() - 1, 0);
          for (size_t a = 0; a < pw.size(); ++a)
            for (size_t b = 0; b < L.size(); ++b) next[a + b] += pw[a] * L[b];
          pw = std::move(next);
        }
        for (size_t i = 0; i < pw.size(); ++i) acc[i] += pw[i];
      },
      [](Acc& a, const Acc& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  MomentReport rep;
  rep.q = Q;
  rep.g = g;
  rep.r = r;
  Rational scale = rpow(Rational(Q), -n);
  rep.moment = QAdjSqrt(Q);
  for (size_t i = 0; i < sum.size(); ++i)
    rep.moment += QAdjSqrt::sqrt_q_power(Q, -static_cast<long>(i)) * (Rational(from_i128(sum[i])) * scale);
  rep.identity_rhs = QAdjSqrt(Q);
  if (r == 0) {
    rep.identity_rhs += QAdjSqrt(Q, tr_lambda_g(F, Partition(), g, opt).a());
  } else {
    for (const auto& [lam, tr] : tr_lambda_box(F, g, r, opt)) {
      SignedWeight sw = lambda_dagger(lam, g, r);
      if (sw.sign == 0) continue;
      rep.identity_rhs += tr * Rational(weyl_dim_sp(sw.dominant, r) * sw.sign);
    }
  }
  rep.prediction = q1_prediction(Q, g, r, weight_cutoff).value;
  rep.thmc_bound = thmc_bound(Q, g, r);
  return rep;
}

Rational mainterm_oracle(const Integer& q, const std::vector<int>& composition) {
  auto F = make_field(q.get_ui());
  int total = 0;
  for (int d : composition) {
    if (d < 0) throw InvalidField("composition entries must be >= 0");
    total += d;
  }
  if (total % 2) return 0;
  // monic irreducibles up to degree total/2
  std::vector<FqPoly> irr;
  const Elem qe = static_cast<Elem>(F->size());
  auto each_monic = [&](int deg, const std::function<void(const FqPoly&)>& fn) {
    std::vector<Elem> c(deg + 1, 0);
    c[deg] = 1;
    for (;;) {
      fn(FqPoly(F, c));
      int i = 0;
      while (i < deg && ++c[i] == qe) c[i++] = 0;
      if (i == deg) break;
    }
  };
  for (int k = 1; 2 * k <= total; ++k)
    each_monic(k, [&](const FqPoly& P) {
      for (const auto& f : irr)
        if (2 * f.degree() <= k && P.mod(f).is_zero()) return;
      irr.push_back(P);
    });
  Rational sum = 0;
  std::vector<FqPoly> chosen;
  std::function<void(size_t, const FqPoly&)> rec = [&](size_t i, const FqPoly& prod) {
    if (i == composition.size()) {
      FqPoly m = prod;
      Rational w = 1;
      for (const auto& P : irr) {
        int e = 0;
        while (m.degree() >= P.degree() && m.mod(P).is_zero()) {
          m = m.div(P);
          ++e;
        }
        if (e % 2) return;
        if (e) w /= 1 + rpow(Rational(q), -P.degree());
      }
      if (m.degree() > 0) return;  // leftover irreducible to the first power
      sum += w;
      return;
    }
    each_monic(composition[i], [&](const FqPoly& mi) { rec(i + 1, prod * mi); });
  };
  rec(0, FqPoly::constant(F, 1));
  return sum * (1 - 1 / Rational(q));
}

bool TraceReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

TraceReport trace_report(const FqContext& F, int n, int max_weight, const EnumOptions& opt, const Rational& slack) {
  Integer Q(static_cast<unsigned long>(F.size()));
  TraceReport rep;
  rep.q = Q;
  rep.n = n;
  rep.max_weight = max_weight;
  rep.slack = slack;
  auto brute = zn_coefficients(F, n, max_weight, opt);
  SymFunc stable = stable_trace_genfunc(Q, max_weight);
  for (const auto& lam : partitions_up_to(max_weight)) {
    TraceRow row;
    row.lambda = lam;
    row.brute = brute.at(lam);
    row.stable = stable.coefficient(lam.conjugate());
    row.bound = zn_bound(Q, lam.weight(), n);
    row.pass = row.bound.scaled(slack).admits(row.brute - row.stable);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace hypstab
