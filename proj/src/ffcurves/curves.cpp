#include "hypstab/ffcurves/curves.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <cstring>
#include <fstream>
#include <thread>
#include <unsupported/Eigen/Polynomials>

#include "hypstab/core/errors.hpp"

namespace hypstab {

using Elem = GaloisField::Elem;

namespace {

long long narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw InternalError("64-bit overflow in Frobenius data");
  return static_cast<long long>(v);
}

__int128 ipow128(std::uint64_t q, int k) {
  __int128 r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

// eigenvalue power sums s_1..s_kmax from P(t) = Σ c_i t^i = prod(1 - w t)
std::vector<__int128> power_sums(const std::vector<long long>& c, int kmax) {
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<__int128> s(kmax + 1, 0);
  auto e = [&](int i) -> __int128 { return i <= deg ? ((i % 2) ? -c[i] : c[i]) : 0; };
  for (int k = 1; k <= kmax; ++k) {
    __int128 v = (k % 2 ? 1 : -1) * static_cast<__int128>(k) * e(k);
    for (int i = 1; i < k; ++i) v += (i % 2 ? 1 : -1) * e(i) * s[k - i];
    s[k] = v;
  }
  return s;
}

}  // namespace

std::vector<long long> CurveData::lpoly() const {
  std::vector<long long> out = charpoly;
  if (n % 2 == 0) {
    out.push_back(0);
    for (size_t i = out.size() - 1; i > 0; --i) out[i] -= out[i - 1];
  }
  return out;
}

void fill_from_charpoly(CurveData& c, int theta_max) {
  int kmax = std::max(theta_max, c.g);
  auto s = power_sums(c.charpoly, kmax);
  c.counts.assign(c.g, 0);
  for (int k = 1; k <= c.g; ++k) c.counts[k - 1] = narrow(ipow128(c.q, k) + 1 - s[k]);
  c.theta.assign(theta_max + 1, 0);
  for (int k = 0; k <= theta_max; ++k) c.theta[k] = k == 0 ? c.n - 1 : narrow(s[k] + (c.n % 2 == 0 ? 1 : 0));
}

void fill_from_traces(CurveData& c, const std::vector<long long>& a, int theta_max) {
  int g = c.g;
  std::vector<__int128> e(g + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= g; ++i) {
    __int128 v = 0;
    for (int j = 1; j <= i; ++j) v += (j % 2 ? 1 : -1) * e[i - j] * a[j - 1];
    if (v % i != 0) throw InternalError("Newton identity produced a non-integer");
    e[i] = v / i;
  }
  c.charpoly.assign(2 * g + 1, 0);
  for (int i = 0; i <= g; ++i) c.charpoly[i] = narrow(i % 2 ? -e[i] : e[i]);
  for (int i = 0; i < g; ++i) c.charpoly[2 * g - i] = narrow(ipow128(c.q, g - i) * c.charpoly[i]);
  fill_from_charpoly(c, theta_max);
}

void for_each_squarefree(const FqContext& F, int n, const std::function<void(const std::vector<Elem>&)>& fn) {
  if (n < 1) throw InvalidField("degree must be >= 1");
  std::vector<Elem> d(n + 1, 0);
  d[n] = 1;
  const Elem q = static_cast<Elem>(F.size());
  // odometer with d[n-1] most significant
  for (;;) {
    if (kernel::squarefree(F, d.data(), n)) fn(d);
    int i = 0;
    while (i < n && ++d[i] == q) d[i++] = 0;
    if (i == n) break;
  }
}

std::vector<FqPoly> enumerate_squarefree(const std::shared_ptr<const FqContext>& ctx, int n) {
  std::vector<FqPoly> out;
  for_each_squarefree(*ctx, n, [&](const std::vector<Elem>& d) { out.emplace_back(ctx, d); });
  return out;
}

std::vector<long long> curve_point_counts(const FqPoly& d, int k_max) {
  const FqContext& F = d.field();
  int n = d.degree();
  if (n < 1) throw InvalidField("curve needs a nonconstant polynomial");
  if (!is_squarefree(d)) throw NotSquarefree(d.str() + " is not squarefree");
  if (!d.is_monic()) throw InvalidField("curve polynomial must be monic");
  std::vector<long long> out;
  for (int k = 1; k <= k_max; ++k) {
    const auto& ext = F.extension(k);
    const GaloisField& E = *ext.field;
    std::vector<Elem> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = ext.embed[d.coeffs()[i]];
    long long count = n % 2 ? 1 : 2;
    for (Elem x = 0; x < E.size(); ++x) {
      Elem v = 0;
      for (int i = n; i >= 0; --i) v = E.add(E.mul(v, x), c[i]);
      count += 1 + E.chi(v);
    }
    out.push_back(count);
  }
  return out;
}

CurveData frobenius_data(const FqPoly& d, int theta_max) {
  CurveData c;
  c.d = d.coeffs();
  c.n = d.degree();
  c.g = (c.n - 1) / 2;
  c.q = d.field().size();
  if (theta_max < 0) theta_max = 2 * c.g + 2;
  auto N = curve_point_counts(d, c.g);
  std::vector<long long> a(c.g);
  for (int k = 1; k <= c.g; ++k) a[k - 1] = narrow(ipow128(c.q, k) + 1 - N[k - 1]);
  fill_from_traces(c, a, theta_max);
  return c;
}

std::vector<long long> lfunction_charsum(const FqPoly& d) {
  const FqContext& F = d.field();
  int n = d.degree();
  if (n < 1) throw InvalidField("character needs a nonconstant polynomial");
  const Elem q = static_cast<Elem>(F.size());
  std::vector<long long> L(n, 0);
  L[0] = 1;
  std::vector<Elem> m;
  for (int i = 1; i < n; ++i) {
    m.assign(i + 1, 0);
    m[i] = 1;
    long long sum = 0;
    for (;;) {
      sum += kernel::jacobi(F, d.coeffs().data(), n, m.data(), i);
      int j = 0;
      while (j < i && ++m[j] == q) m[j++] = 0;
      if (j == i) break;
    }
    L[i] = sum;
  }
  return L;
}

QAdjSqrt lvalue_at_center(const std::vector<long long>& lpoly, std::uint64_t q, unsigned r) {
  Integer Q(static_cast<unsigned long>(q));
  QAdjSqrt v(Q);
  for (size_t i = 0; i < lpoly.size(); ++i)
    if (lpoly[i] != 0) v += QAdjSqrt::sqrt_q_power(Q, -static_cast<long>(i)) * Rational(static_cast<long>(lpoly[i]));
  return v.pow(r);
}

QAdjSqrt central_value(const FqPoly& d, unsigned r) { return lvalue_at_center(frobenius_data(d, 0).lpoly(), d.field().size(), r); }

namespace {

using RPoly = std::vector<Rational>;

void rtrim(RPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly rmod(RPoly a, const RPoly& m, RPoly* quot = nullptr) {
  rtrim(a);
  if (quot) quot->assign(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
  while (a.size() >= m.size()) {
    Rational f = a.back() / m.back();
    size_t shift = a.size() - m.size();
    if (quot) (*quot)[shift] = f;
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= f * m[i];
    rtrim(a);
  }
  return a;
}

}  // namespace

double rh_deviation(const std::vector<long long>& charpoly, std::uint64_t q) {
  RPoly P;
  for (auto v : charpoly) P.push_back(Rational(static_cast<long>(v)));
  rtrim(P);
  if (P.size() <= 1) return 0.0;
  RPoly dP;
  for (size_t i = 1; i < P.size(); ++i) dP.push_back(P[i] * static_cast<long>(i));
  RPoly a = P, b = dP;
  while (!b.empty()) {
    RPoly r = rmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  RPoly sqf;
  rmod(P, a, &sqf);
  int deg = static_cast<int>(sqf.size()) - 1;
  if (deg < 1) return 0.0;
  std::vector<long double> ld(deg + 1);
  Eigen::VectorXd coeffs(deg + 1);
  for (int i = 0; i <= deg; ++i) {
    Rational v = sqf[i] / sqf[deg];
    ld[i] = static_cast<long double>(v.get_d());
    coeffs[i] = v.get_d();
  }
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
  double worst = 0.0;
  const long double sq = std::sqrt(static_cast<long double>(q));
  for (int j = 0; j < solver.roots().size(); ++j) {
    std::complex<long double> t(solver.roots()[j].real(), solver.roots()[j].imag());
    for (int it = 0; it < 4; ++it) {
      std::complex<long double> f = 0, df = 0;
      for (int i = deg; i >= 0; --i) {
        df = df * t + f;
        f = f * t + ld[i];
      }
      if (std::abs(df) == 0) break;
      t -= f / df;
    }
    // |w| / sqrt(q) with w = 1/t
    double dev = static_cast<double>(std::fabs(1.0L / (std::abs(t) * sq) - 1.0L));
    worst = std::max(worst, dev);
  }
  return worst;
}

bool functional_equation_holds(const std::vector<long long>& c, std::uint64_t q) {
  if (c.empty() || c[0] != 1 || c.size() % 2 == 0) return false;
  int g = static_cast<int>(c.size() - 1) / 2;
  for (int i = 0; i <= g; ++i)
    if (static_cast<__int128>(c[2 * g - i]) != ipow128(q, g - i) * c[i]) return false;
  return true;
}

namespace {

struct KTable {
  const GaloisField* E = nullptr;
  std::uint32_t Q = 0;
  std::vector<Elem> term;      // [(x*(n+1) + i)*q + c] = c·x^i in F_{q^k}
  std::vector<std::int8_t> chiadd;  // [v*q + c] = chi(v + c)
};

struct Tables {
  int n, g;
  std::uint32_t q;
  std::vector<KTable> k;  // k[0] is F_{q^1}
};

Tables build_tables(const FqContext& F, int n) {
  Tables T;
  T.n = n;
  T.g = (n - 1) / 2;
  T.q = static_cast<std::uint32_t>(F.size());
  for (int k = 1; k <= T.g; ++k) {
    const auto& ext = F.extension(k);
    KTable kt;
    kt.E = ext.field.get();
    if (kt.E->size() > (1u << 24)) throw InvalidField("extension field too large for enumeration");
    kt.Q = static_cast<std::uint32_t>(kt.E->size());
    const GaloisField& E = *kt.E;
    kt.term.assign(static_cast<size_t>(kt.Q) * (n + 1) * T.q, 0);
    for (Elem x = 0; x < kt.Q; ++x) {
      Elem xp = 1;
      for (int i = 0; i <= n; ++i) {
        for (Elem c = 0; c < T.q; ++c) kt.term[(static_cast<size_t>(x) * (n + 1) + i) * T.q + c] = E.mul(ext.embed[c], xp);
        xp = E.mul(xp, x);
      }
    }
    kt.chiadd.assign(static_cast<size_t>(kt.Q) * T.q, 0);
    for (Elem v = 0; v < kt.Q; ++v)
      for (Elem c = 0; c < T.q; ++c) kt.chiadd[static_cast<size_t>(v) * T.q + c] = static_cast<std::int8_t>(E.chi(E.add(v, ext.embed[c])));
    T.k.push_back(std::move(kt));
  }
  return T;
}

class Walker {
 public:
  Walker(const FqContext& F, const Tables& T, int theta_max, const std::function<void(std::size_t, const CurveData&)>& visit)
      : F_(F), T_(T), theta_max_(theta_max), visit_(visit) {
    int n = T.n;
    levels_.assign(n + 1, std::vector<std::vector<Elem>>(T.g));
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < T.g; ++k) levels_[i][k].assign(T.k[k].Q, 0);
    for (int k = 0; k < T.g; ++k)
      for (Elem x = 0; x < T.k[k].Q; ++x) levels_[n][k][x] = T.k[k].term[(static_cast<size_t>(x) * (n + 1) + n) * T.q + 1];
    coef_.assign(n + 1, 0);
    coef_[n] = 1;
    S_.assign(T.g, std::vector<long long>(T.q, 0));
    a_.assign(T.g, 0);
    cur_.n = n;
    cur_.g = T.g;
    cur_.q = T.q;
  }

  void run_block(Elem top) {
    block_ = top;
    descend(T_.n - 1);
  }

 private:
  void descend(int i) {
    const int n = T_.n;
    Elem lo = 0, hi = T_.q;
    if (i == n - 1) {
      lo = block_;
      hi = block_ + 1;
    }
    if (i == 0) {
      leaf(lo, hi);
      return;
    }
    for (Elem c = lo; c < hi; ++c) {
      coef_[i] = c;
      for (int k = 0; k < T_.g; ++k) {
        const KTable& kt = T_.k[k];
        const GaloisField& E = *kt.E;
        const auto& up = levels_[i + 1][k];
        auto& here = levels_[i][k];
        for (Elem x = 0; x < kt.Q; ++x) here[x] = E.add(up[x], kt.term[(static_cast<size_t>(x) * (n + 1) + i) * T_.q + c]);
      }
      descend(i - 1);
    }
  }

  void leaf(Elem lo, Elem hi) {
    const int n = T_.n;
    const std::uint32_t q = T_.q;
    for (int k = 0; k < T_.g; ++k) {
      const KTable& kt = T_.k[k];
      auto& S = S_[k];
      std::fill(S.begin(), S.end(), 0);
      const auto& base = levels_[1][k];
      for (Elem x = 0; x < kt.Q; ++x) {
        const std::int8_t* row = &kt.chiadd[static_cast<size_t>(base[x]) * q];
        for (Elem c = lo; c < hi; ++c) S[c] += row[c];
      }
    }
    const long long inf = n % 2 ? 1 : 2;
    for (Elem c = lo; c < hi; ++c) {
      coef_[0] = c;
      if (!kernel::squarefree(F_, coef_.data(), n)) continue;
      for (int k = 0; k < T_.g; ++k) {
        long long N = static_cast<long long>(T_.k[k].Q) + S_[k][c] + inf;
        a_[k] = static_cast<long long>(T_.k[k].Q) + 1 - N;
      }
      cur_.d = coef_;
      fill_from_traces(cur_, a_, theta_max_);
      visit_(block_, cur_);
    }
  }

  const FqContext& F_;
  const Tables& T_;
  int theta_max_;
  const std::function<void(std::size_t, const CurveData&)>& visit_;
  std::vector<std::vector<std::vector<Elem>>> levels_;  // levels_[i][k][x]: x^n + Σ_{j>=i} c_j x^j
  std::vector<Elem> coef_;
  std::vector<std::vector<long long>> S_;
  std::vector<long long> a_;
  CurveData cur_;
  Elem block_ = 0;
};

}  // namespace

void run_curve_blocks(const FqContext& F, int n, int workers, int theta_max,
                      const std::function<void(std::size_t, const CurveData&)>& visit) {
  if (n < 1) throw InvalidField("degree must be >= 1");
  if (workers < 1) throw InvalidField("worker count must be >= 1");
  if (n > kernel::kMaxDeg) throw InvalidField("degree too large");
  if (theta_max < 0) theta_max = 2 * ((n - 1) / 2) + 2;
  Tables T = build_tables(F, n);
  const std::size_t blocks = F.size();
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Walker w(F, T, theta_max, visit);
    for (std::size_t b; (b = next.fetch_add(1)) < blocks;) w.run_block(static_cast<Elem>(b));
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mutex;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        next = blocks;
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

std::vector<CurveData> all_curves(const FqContext& F, int n, int workers, int theta_max) {
  std::vector<std::vector<CurveData>> parts(F.size());
  run_curve_blocks(F, n, workers, theta_max, [&](std::size_t b, const CurveData& c) { parts[b].push_back(c); });
  std::vector<CurveData> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

namespace {

constexpr char kMagic[8] = {'H', 'W', 'C', 'A', 'C', 'H', 'E', '1'};

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) throw ParseError("truncated curve cache");
  return v;
}

}  // namespace

void save_curve_cache(const std::string& path, const FqContext& F, int n, const std::vector<CurveData>& curves) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw ParseError("cannot write cache " + path);
  os.write(kMagic, 8);
  put<std::uint32_t>(os, F.p());
  put<std::uint32_t>(os, static_cast<std::uint32_t>(F.degree()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(n));
  put<std::uint64_t>(os, curves.size());
  for (const auto& c : curves) {
    put<std::uint32_t>(os, static_cast<std::uint32_t>(c.n));
    for (auto v : c.d) put<std::uint32_t>(os, v);
    for (int i = 1; i <= 2 * c.g; ++i) put<std::int64_t>(os, c.charpoly[i]);
  }
  if (!os) throw ParseError("error writing cache " + path);
}

std::vector<CurveData> load_curve_cache(const std::string& path, const FqContext& F, int n, int theta_max) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("cannot read cache " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0) throw ParseError("bad cache header in " + path);
  auto p = get<std::uint32_t>(is);
  auto e = get<std::uint32_t>(is);
  auto nn = get<std::uint32_t>(is);
  auto count = get<std::uint64_t>(is);
  if (p != F.p() || e != static_cast<std::uint32_t>(F.degree()) || nn != static_cast<std::uint32_t>(n))
    throw ParseError("cache " + path + " is for a different field or degree");
  if (theta_max < 0) theta_max = 2 * ((n - 1) / 2) + 2;
  std::vector<CurveData> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    CurveData c;
    c.n = static_cast<int>(get<std::uint32_t>(is));
    if (c.n != n) throw ParseError("cache record with wrong degree");
    c.g = (n - 1) / 2;
    c.q = F.size();
    c.d.resize(n + 1);
    for (auto& v : c.d) v = get<std::uint32_t>(is);
    c.charpoly.assign(2 * c.g + 1, 1);
    for (int i = 1; i <= 2 * c.g; ++i) c.charpoly[i] = get<std::int64_t>(is);
    fill_from_charpoly(c, theta_max);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CurveData> cached_curves(const std::string& path, const FqContext& F, int n, int workers, int theta_max) {
  if (!path.empty()) {
    std::ifstream probe(path, std::ios::binary);
    if (probe) {
      try {
        return load_curve_cache(path, F, n, theta_max);
      } catch (const ParseError&) {
        // stale or foreign file: recompute and overwrite
      }
    }
  }
  auto curves = all_curves(F, n, workers, theta_max);
  if (!path.empty()) save_curve_cache(path, F, n, curves);
  return curves;
}

}  // namespace hypstab
