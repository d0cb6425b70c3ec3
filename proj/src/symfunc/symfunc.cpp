#include "hypstab/symfunc/symfunc.hpp"

#include <memory>
#include <mutex>
#include <sstream>

#include "hypstab/core/errors.hpp"
#include "hypstab/repchar/characters.hpp"

namespace hypstab {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::PowerSum: return "power";
    case Basis::Schur: return "schur";
    case Basis::Complete: return "complete";
    case Basis::Elementary: return "elementary";
    case Basis::Monomial: return "monomial";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  for (Basis b : {Basis::PowerSum, Basis::Schur, Basis::Complete, Basis::Elementary, Basis::Monomial})
    if (basis_name(b) == s) return b;
  throw ParseError("unknown basis '" + s + "'");
}

void add_scaled(Terms& acc, const Terms& x, const Rational& c) {
  for (const auto& [lam, v] : x) {
    auto [it, fresh] = acc.try_emplace(lam, 0);
    it->second += c * v;
    if (it->second == 0) acc.erase(it);
  }
}

Terms pterm_product(const Terms& a, const Terms& b, int max_arity) {
  Terms out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      if (la.weight() + lb.weight() > max_arity) continue;
      auto [it, fresh] = out.try_emplace(la.join(lb), 0);
      it->second += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(Matrix a) {
  size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        if (a[col][j] != 0) a[r][j] -= f * a[col][j];
        if (inv[col][j] != 0) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// coefficient of x^λ in p_ρ: ways to send parts of ρ to rows of λ with exact row sums
long monomial_count(const std::vector<int>& rho, size_t i, std::vector<int>& room) {
  if (i == rho.size()) {
    for (int r : room)
      if (r) return 0;
    return 1;
  }
  long total = 0;
  for (size_t j = 0; j < room.size(); ++j) {
    if (room[j] < rho[i]) continue;
    room[j] -= rho[i];
    total += monomial_count(rho, i + 1, room);
    room[j] += rho[i];
  }
  return total;
}

struct Transition {
  std::map<Partition, Terms> to_p;
  std::map<Partition, Terms> from_p;
};

std::mutex trans_mutex;
std::map<std::pair<int, int>, std::unique_ptr<Transition>> trans_cache;

Terms single(const Partition& p, const Rational& c) { return Terms{{p, c}}; }

Terms row_terms(const std::vector<Partition>& ps, const std::vector<Rational>& row) {
  Terms t;
  for (size_t j = 0; j < ps.size(); ++j)
    if (row[j] != 0) t.emplace(ps[j], row[j]);
  return t;
}

// power-sum expansion of h_n (sign=false) or e_n (sign=true)
Terms one_row(int n, bool sign) {
  Terms t;
  for (const auto& rho : partitions_of(n)) {
    Rational c(1, rho.z());
    c.canonicalize();
    if (sign && rho.sign() < 0) c = -c;
    t.emplace(rho, c);
  }
  return t;
}

std::unique_ptr<Transition> build(Basis basis, int n) {
  auto tr = std::make_unique<Transition>();
  const auto& ps = partitions_of(n);
  size_t N = ps.size();
  Matrix m(N, std::vector<Rational>(N, 0));  // m[λ][ρ]: coefficient of p_ρ in b_λ
  switch (basis) {
    case Basis::PowerSum:
      for (size_t i = 0; i < N; ++i) m[i][i] = 1;
      break;
    case Basis::Schur: {
      const auto& ct = character_table(n);
      for (size_t l = 0; l < N; ++l)
        for (size_t r = 0; r < N; ++r) {
          m[l][r] = Rational(ct.chi[l][r], ps[r].z());
          m[l][r].canonicalize();
        }
      break;
    }
    case Basis::Complete:
    case Basis::Elementary: {
      bool sgn = basis == Basis::Elementary;
      for (size_t l = 0; l < N; ++l) {
        Terms acc = single(Partition(), 1);
        for (int part : ps[l].parts()) acc = pterm_product(acc, one_row(part, sgn), n);
        for (size_t r = 0; r < N; ++r) {
          auto it = acc.find(ps[r]);
          if (it != acc.end()) m[l][r] = it->second;
        }
      }
      break;
    }
    case Basis::Monomial: {
      // R[ρ][λ] = coefficient of m_λ in p_ρ; m = R^{-1}
      Matrix R(N, std::vector<Rational>(N, 0));
      for (size_t r = 0; r < N; ++r)
        for (size_t l = 0; l < N; ++l) {
          std::vector<int> room(ps[l].parts());
          R[r][l] = monomial_count(ps[r].parts(), 0, room);
        }
      Matrix Rinv = invert(R);
      for (size_t l = 0; l < N; ++l)
        for (size_t r = 0; r < N; ++r) m[l][r] = Rinv[l][r];
      break;
    }
  }
  Matrix inv;
  if (basis == Basis::Schur) {
    // p_ρ = Σ_λ χ^λ(ρ) s_λ
    const auto& ct = character_table(n);
    inv.assign(N, std::vector<Rational>(N, 0));
    for (size_t r = 0; r < N; ++r)
      for (size_t l = 0; l < N; ++l) inv[r][l] = ct.chi[l][r];
  } else {
    // b = m p  =>  p = m^{-1} b ; inv[ρ][λ]
    inv = invert(m);
  }
  for (size_t i = 0; i < N; ++i) {
    tr->to_p[ps[i]] = row_terms(ps, m[i]);
    tr->from_p[ps[i]] = row_terms(ps, inv[i]);
  }
  return tr;
}

const Transition& transition(Basis basis, int n) {
  std::lock_guard<std::mutex> lock(trans_mutex);
  auto& slot = trans_cache[{static_cast<int>(basis), n}];
  if (!slot) slot = build(basis, n);
  return *slot;
}

}  // namespace

const Terms& to_power_sum(Basis basis, const Partition& lambda) {
  return transition(basis, lambda.weight()).to_p.at(lambda);
}

const Terms& from_power_sum(Basis target, const Partition& rho) {
  return transition(target, rho.weight()).from_p.at(rho);
}

Terms in_power_sum(Basis basis, const Terms& t) {
  if (basis == Basis::PowerSum) return t;
  Terms out;
  for (const auto& [lam, c] : t) add_scaled(out, to_power_sum(basis, lam), c);
  return out;
}

Terms out_of_power_sum(Basis target, const Terms& t) {
  if (target == Basis::PowerSum) return t;
  Terms out;
  for (const auto& [rho, c] : t) add_scaled(out, from_power_sum(target, rho), c);
  return out;
}

SymFunc::SymFunc(Basis basis, int max_arity) : basis_(basis), max_arity_(max_arity) {
  if (max_arity < 0) throw WindowTooSmall("negative max_arity");
}

SymFunc::SymFunc(Basis basis, int max_arity, Terms terms) : SymFunc(basis, max_arity) {
  for (auto& [lam, c] : terms) add(lam, c);
}

SymFunc SymFunc::constant(const Rational& c, int max_arity, Basis basis) {
  SymFunc f(basis, max_arity);
  f.add(Partition(), c);
  return f;
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda, int max_arity) {
  SymFunc f(basis, max_arity);
  f.add(lambda, 1);
  return f;
}

SymFunc SymFunc::h(int n, int max_arity) {
  return basis_element(Basis::Complete, n ? Partition({n}) : Partition(), max_arity);
}

SymFunc SymFunc::e(int n, int max_arity) {
  return basis_element(Basis::Elementary, n ? Partition({n}) : Partition(), max_arity);
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Rational& c) {
  if (lambda.weight() > max_arity_ || c == 0) return;
  auto [it, fresh] = terms_.try_emplace(lambda, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymFunc SymFunc::truncated(int max_arity) const {
  SymFunc f(basis_, std::min(max_arity, max_arity_));
  for (const auto& [lam, c] : terms_) f.add(lam, c);
  return f;
}

SymFunc SymFunc::homogeneous(int n) const {
  SymFunc f(basis_, max_arity_);
  for (const auto& [lam, c] : terms_)
    if (lam.weight() == n) f.add(lam, c);
  return f;
}

SymFunc SymFunc::operator-() const {
  SymFunc f(*this);
  for (auto& kv : f.terms_) kv.second = -kv.second;
  return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  max_arity_ = std::min(max_arity_, o.max_arity_);
  std::erase_if(terms_, [&](const auto& kv) { return kv.first.weight() > max_arity_; });
  SymFunc other = convert_basis(o, basis_);
  for (const auto& [lam, c] : other.terms_) add(lam, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

bool SymFunc::operator==(const SymFunc& o) const {
  int a = std::min(max_arity_, o.max_arity_);
  return in_power_sum(basis_, truncated(a).terms_) == in_power_sum(o.basis_, o.truncated(a).terms_);
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::string prefix = basis_ == Basis::PowerSum ? "p" : basis_ == Basis::Schur ? "s"
                       : basis_ == Basis::Complete ? "h" : basis_ == Basis::Elementary ? "e" : "m";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")" << prefix << "[" << lam.str() << "]";
  }
  return os.str();
}

SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

SymFunc convert_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return SymFunc(target, f.max_arity(), out_of_power_sum(target, in_power_sum(f.basis(), f.terms())));
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  int a = std::min(f.max_arity(), g.max_arity());
  Terms prod = pterm_product(in_power_sum(f.basis(), f.terms()), in_power_sum(g.basis(), g.terms()), a);
  return SymFunc(f.basis(), a, out_of_power_sum(f.basis(), prod));
}

SymFunc omega(const SymFunc& f) {
  Terms p = in_power_sum(f.basis(), f.terms());
  for (auto& [rho, c] : p)
    if (rho.sign() < 0) c = -c;
  return SymFunc(f.basis(), f.max_arity(), out_of_power_sum(f.basis(), p));
}

Rational inner_product(const SymFunc& f, const SymFunc& g) {
  Terms a = in_power_sum(f.basis(), f.terms());
  Terms b = in_power_sum(g.basis(), g.terms());
  Rational s = 0;
  for (const auto& [rho, c] : a) {
    auto it = b.find(rho);
    if (it != b.end()) s += c * it->second * Rational(rho.z());
  }
  return s;
}

namespace {

// p_σ^⊥ p_τ = (∏_i i^{m_i(σ)} m_i(τ)!/(m_i(τ)-m_i(σ))!) p_{τ∖σ}, zero unless σ ⊆ τ
bool pperp(const Partition& sigma, const Partition& tau, Partition& rest, Integer& coeff) {
  coeff = 1;
  std::map<int, int> ms, mt;
  for (int x : sigma.parts()) ++ms[x];
  for (int x : tau.parts()) ++mt[x];
  for (auto [i, m] : ms) {
    int mti = mt.count(i) ? mt[i] : 0;
    if (mti < m) return false;
    coeff *= ipow(i, m) * factorial(mti) / factorial(mti - m);
  }
  rest = tau.remove_parts(sigma);
  return true;
}

}  // namespace

SymFunc skew(const SymFunc& f, const Partition& by) {
  int a = f.max_arity() - by.weight();
  if (a < 0) return SymFunc(f.basis(), 0);
  Terms p = in_power_sum(f.basis(), f.terms());
  const Terms& op = to_power_sum(Basis::Schur, by);  // s_μ = Σ χ/z p_σ
  Terms out;
  for (const auto& [sigma, cs] : op)
    for (const auto& [tau, ct] : p) {
      Partition rest;
      Integer k;
      if (!pperp(sigma, tau, rest, k)) continue;
      auto [it, fresh] = out.try_emplace(rest, 0);
      it->second += cs * ct * Rational(k);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return SymFunc(f.basis(), a, out_of_power_sum(f.basis(), out));
}

SymFunc adams(int n, const SymFunc& g) {
  if (n < 1) throw PlethysmDomain("adams index must be positive");
  Terms p;
  for (const auto& [lam, c] : in_power_sum(g.basis(), g.terms()))
    if (lam.weight() * n <= g.max_arity()) p.emplace(lam.scaled(n), c);
  return SymFunc(g.basis(), g.max_arity(), out_of_power_sum(g.basis(), p));
}

}  // namespace hypstab
