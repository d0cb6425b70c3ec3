#include "hypstab/symfunc/graded.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

#include "hypstab/core/errors.hpp"

namespace hypstab {

Window intersect(const Window& a, const Window& b) {
  return {std::min(a.z_min, b.z_min), std::min(a.z_max, b.z_max), std::min(a.max_arity, b.max_arity)};
}

GradedElement::GradedElement(Window w, Basis basis) : window_(w), basis_(basis) {
  if (w.max_arity < 0) throw WindowTooSmall("negative max_arity");
}

GradedElement::GradedElement(Window w, Basis basis, const GTerms& terms) : GradedElement(w, basis) {
  for (const auto& [m, c] : terms) add(m.z, m.lambda, c);
}

GradedElement GradedElement::from_symfunc(const SymFunc& f, Window w) {
  return monomial(0, f, w);
}

GradedElement GradedElement::monomial(int z, const SymFunc& f, Window w) {
  w.max_arity = std::min(w.max_arity, f.max_arity());
  GradedElement g(w, f.basis());
  for (const auto& [lam, c] : f.terms()) g.add(z, lam, c);
  return g;
}

Rational GradedElement::coefficient(int z, const Partition& lambda) const {
  auto it = terms_.find(Monomial{z, lambda});
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedElement::add(int z, const Partition& lambda, const Rational& c) {
  if (c == 0 || z < window_.z_min || z > window_.z_max || lambda.weight() > window_.max_arity) return;
  auto [it, fresh] = terms_.try_emplace(Monomial{z, lambda}, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymFunc GradedElement::z_slice(int k) const {
  SymFunc f(basis_, window_.max_arity);
  for (const auto& [m, c] : terms_)
    if (m.z == k) f.add(m.lambda, c);
  return f;
}

std::vector<Rational> GradedElement::series(const Partition& lambda) const {
  std::vector<Rational> out;
  for (int k = window_.z_min; k <= window_.z_max; ++k) out.push_back(coefficient(k, lambda));
  return out;
}

int GradedElement::valuation() const {
  int v = window_.z_max + 1;
  for (const auto& kv : terms_) v = std::min(v, kv.first.z);
  return v;
}

int GradedElement::min_weight() const {
  int v = INT_MAX;
  for (const auto& kv : terms_) v = std::min(v, kv.first.weight());
  return v;
}

namespace {

// group terms by z, convert each slice
GTerms convert_terms(const GTerms& t, Basis from, Basis to) {
  if (from == to) return t;
  std::map<int, Terms> slices;
  for (const auto& [m, c] : t) slices[m.z].emplace(m.lambda, c);
  GTerms out;
  for (const auto& [z, s] : slices)
    for (const auto& [lam, c] : out_of_power_sum(to, in_power_sum(from, s))) out.emplace(Monomial{z, lam}, c);
  return out;
}

}  // namespace

GradedElement GradedElement::in_basis(Basis b) const {
  GradedElement g(window_, b);
  g.terms_ = convert_terms(terms_, basis_, b);
  return g;
}

GradedElement GradedElement::restricted(Window w) const {
  Window r{std::max(w.z_min, window_.z_min), std::min(w.z_max, window_.z_max),
           std::min(w.max_arity, window_.max_arity)};
  return GradedElement(r, basis_, terms_);
}

GradedElement GradedElement::shift_z(int k) const {
  GradedElement g({window_.z_min + k, window_.z_max + k, window_.max_arity}, basis_);
  for (const auto& [m, c] : terms_) g.terms_.emplace(Monomial{m.z + k, m.lambda}, c);
  return g;
}

GradedElement GradedElement::operator-() const {
  GradedElement g(*this);
  for (auto& kv : g.terms_) kv.second = -kv.second;
  return g;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  Window w = intersect(window_, o.window_);
  GTerms mine = std::move(terms_);
  terms_.clear();
  window_ = w;
  for (const auto& [m, c] : mine) add(m.z, m.lambda, c);
  for (const auto& [m, c] : convert_terms(o.terms_, o.basis_, basis_)) add(m.z, m.lambda, c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) { return *this += -o; }

GradedElement& GradedElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

bool GradedElement::operator==(const GradedElement& o) const {
  return window_ == o.window_ &&
         convert_terms(terms_, basis_, Basis::PowerSum) == convert_terms(o.terms_, o.basis_, Basis::PowerSum);
}

bool agree_on_common_window(const GradedElement& a, const GradedElement& b) {
  Window w{std::max(a.window().z_min, b.window().z_min), std::min(a.window().z_max, b.window().z_max),
           std::min(a.window().max_arity, b.window().max_arity)};
  GradedElement ra = a.restricted(w).in_basis(Basis::PowerSum);
  GradedElement rb = b.restricted(w).in_basis(Basis::PowerSum);
  return ra.terms() == rb.terms();
}

std::string GradedElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")z^" << m.z << "[" << m.lambda.str() << "]";
  }
  return os.str();
}

GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
GradedElement operator*(GradedElement a, const Rational& c) { return a *= c; }

// ---- weight-bucketed power-sum arithmetic ----

namespace {

using Buckets = std::vector<GTerms>;  // index = weight k + |λ|

struct Caps {
  int weight;   // keep weight <= this
  int arity;    // keep |λ| <= this
  int z_cap;    // keep z <= this (only safe when no negative z occurs)
};

void accumulate(GTerms& acc, const Monomial& m, const Rational& c) {
  auto [it, fresh] = acc.try_emplace(m, 0);
  it->second += c;
}

void clean(GTerms& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

Buckets bucketize(const GTerms& t, const Caps& caps) {
  Buckets b(caps.weight + 1);
  for (const auto& [m, c] : t) {
    int w = m.weight();
    if (w < 0 || w > caps.weight || m.lambda.weight() > caps.arity || m.z > caps.z_cap) continue;
    b[w].emplace(m, c);
  }
  return b;
}

// acc += c * a * b, restricted to the caps; a and b are single weight components
void mul_add(GTerms& acc, const GTerms& a, const GTerms& b, const Rational& c, const Caps& caps) {
  for (const auto& [ma, ca] : a) {
    int aa = ma.lambda.weight();
    for (const auto& [mb, cb] : b) {
      if (aa + mb.lambda.weight() > caps.arity || ma.z + mb.z > caps.z_cap) continue;
      accumulate(acc, Monomial{ma.z + mb.z, ma.lambda.join(mb.lambda)}, c * ca * cb);
    }
  }
}

Buckets bmul(const Buckets& a, const Buckets& b, const Caps& caps) {
  Buckets out(caps.weight + 1);
  for (int i = 0; i < static_cast<int>(a.size()) && i <= caps.weight; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; j < static_cast<int>(b.size()) && i + j <= caps.weight; ++j) {
      if (b[j].empty()) continue;
      mul_add(out[i + j], a[i], b[j], 1, caps);
    }
  }
  for (auto& t : out) clean(t);
  return out;
}

// ψ_n on a bucketed series
Buckets badams(const Buckets& a, int n, const Caps& caps, const Rational& scale = 1) {
  Buckets out(caps.weight + 1);
  for (int w = 0; w < static_cast<int>(a.size()) && w * n <= caps.weight; ++w)
    for (const auto& [m, c] : a[w]) {
      if (m.lambda.weight() * n > caps.arity || m.z * n > caps.z_cap) continue;
      out[w * n].emplace(Monomial{m.z * n, m.lambda.scaled(n)}, c * scale);
    }
  return out;
}

void badd(Buckets& acc, const Buckets& x) {
  for (size_t w = 0; w < x.size() && w < acc.size(); ++w) {
    for (const auto& [m, c] : x[w]) accumulate(acc[w], m, c);
    clean(acc[w]);
  }
}

void check_domain(const GTerms& t, const char* what) {
  for (const auto& [m, c] : t) {
    if (m.weight() < 1 || (m.lambda.empty() && m.z < 1))
      throw PlethysmDomain(std::string(what) + ": monomial z^" + std::to_string(m.z) + " p[" + m.lambda.str() +
                           "] has weight < 1");
  }
}

struct Plan {
  Window out;
  Caps caps;
};

// Output window for an operation whose outer series is unknown-free and whose inner argument
// x has window w and effective valuation v.
Plan plan_for(const Window& w, int v) {
  int A = w.max_arity;
  Plan pl;
  if (v >= 0) {
    pl.out = {std::min(0, w.z_min), w.z_max, A};
    pl.caps = {w.z_max + A, A, w.z_max};
  } else {
    int zmax = w.z_max + A * v;
    pl.out = {-A, zmax, A};
    pl.caps = {zmax + A, A, INT_MAX};
  }
  if (pl.out.z_max < pl.out.z_min) throw WindowTooSmall("truncation window empty after negative z-shift");
  return pl;
}

GradedElement collect(const Buckets& b, const Window& out) {
  GradedElement g(out, Basis::PowerSum);
  for (const auto& t : b)
    for (const auto& [m, c] : t) g.add(m.z, m.lambda, c);
  return g;
}

}  // namespace

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  const Window& wa = a.window();
  const Window& wb = b.window();
  int va = a.valuation(), vb = b.valuation();
  Window w{std::min({wa.z_min, wb.z_min, wa.z_min + wb.z_min}),
           std::min({wa.z_max, wb.z_max, wa.z_max + vb, wb.z_max + va}), std::min(wa.max_arity, wb.max_arity)};
  GradedElement pa = a.in_basis(Basis::PowerSum), pb = b.in_basis(Basis::PowerSum);
  GTerms acc;
  for (const auto& [ma, ca] : pa.terms())
    for (const auto& [mb, cb] : pb.terms()) {
      int z = ma.z + mb.z;
      if (z > w.z_max || ma.lambda.weight() + mb.lambda.weight() > w.max_arity) continue;
      accumulate(acc, Monomial{z, ma.lambda.join(mb.lambda)}, ca * cb);
    }
  clean(acc);
  return GradedElement(w, Basis::PowerSum, acc).in_basis(a.basis());
}

GradedElement adams(int n, const GradedElement& g) {
  if (n < 1) throw PlethysmDomain("adams index must be positive");
  Window w = g.window();
  if (w.z_min < 0) w.z_min *= n;
  GradedElement out(w, Basis::PowerSum);
  GradedElement pg = g.in_basis(Basis::PowerSum);
  for (const auto& [m, c] : pg.terms()) out.add(m.z * n, m.lambda.scaled(n), c);
  return out.in_basis(g.basis());
}

GradedElement pleth_exp(const GradedElement& x) {
  GradedElement px = x.in_basis(Basis::PowerSum);
  check_domain(px.terms(), "Exp");
  Plan pl = plan_for(px.window(), std::min(0, px.valuation()));
  const Caps& caps = pl.caps;
  int W = caps.weight;
  Buckets xb = bucketize(px.terms(), caps);
  // y = Σ_m ψ_m(x)/m
  Buckets y(W + 1);
  for (int m = 1; m <= W; ++m) badd(y, badams(xb, m, caps, frac(1, m)));
  Buckets E(W + 1);
  E[0].emplace(Monomial{0, Partition()}, 1);
  for (int w = 1; w <= W; ++w) {
    GTerms acc;
    for (int j = 1; j <= w; ++j)
      if (!y[j].empty() && !E[w - j].empty()) mul_add(acc, y[j], E[w - j], frac(j, w), caps);
    clean(acc);
    E[w] = std::move(acc);
  }
  return collect(E, pl.out).in_basis(x.basis());
}

GradedElement pleth_log(const GradedElement& y) {
  GradedElement px = y.in_basis(Basis::PowerSum);
  if (px.coefficient(0, Partition()) != 1) throw PlethysmDomain("Log: constant term must be 1");
  px.add(0, Partition(), -1);
  check_domain(px.terms(), "Log");
  Plan pl = plan_for(px.window(), std::min(0, px.valuation()));
  const Caps& caps = pl.caps;
  int W = caps.weight;
  Buckets xb = bucketize(px.terms(), caps);
  // ℓ = log(1+x): ℓ_w = x_w - (1/w) Σ_{j<w} (w-j) x_j ℓ_{w-j}
  Buckets l(W + 1);
  for (int w = 1; w <= W; ++w) {
    GTerms acc = xb[w];
    for (int j = 1; j < w; ++j)
      if (!xb[j].empty() && !l[w - j].empty()) mul_add(acc, xb[j], l[w - j], frac(-(w - j), w), caps);
    clean(acc);
    l[w] = std::move(acc);
  }
  Buckets out(W + 1);
  for (int k = 1; k <= W; ++k) {
    int mu = mobius(k);
    if (mu) badd(out, badams(l, k, caps, frac(mu, k)));
  }
  return collect(out, pl.out).in_basis(y.basis());
}

GradedElement plethysm(const SymFunc& f, const GradedElement& g) {
  GradedElement pg = g.in_basis(Basis::PowerSum);
  check_domain(pg.terms(), "plethysm");
  Plan pl = plan_for(pg.window(), std::min(0, pg.valuation()));
  int vw = pg.is_zero() ? INT_MAX / 4 : pg.min_weight();
  // components of f above its max_arity would first contribute at weight (F+1)·vw
  long valid = static_cast<long>(f.max_arity() + 1) * vw - 1;
  if (valid < pl.caps.weight) {
    int zlow = std::max(pl.out.z_min, 0);
    int A = static_cast<int>(std::min<long>(pl.out.max_arity, valid - zlow));
    if (A < 0) throw WindowTooSmall("outer function truncated too early for this window");
    pl.out.max_arity = A;
    pl.out.z_max = static_cast<int>(std::min<long>(pl.out.z_max, valid - A));
    pl.caps = {pl.out.z_max + A, A, pl.caps.z_cap == INT_MAX ? INT_MAX : pl.out.z_max};
  }
  const Caps& caps = pl.caps;
  Buckets gb = bucketize(pg.terms(), caps);
  std::map<int, Buckets> psi;
  std::map<Partition, Buckets> prod;
  Buckets one(caps.weight + 1);
  one[0].emplace(Monomial{0, Partition()}, 1);
  prod.emplace(Partition(), one);
  // p_ρ∘g, built from p_{ρ minus its last part}∘g
  std::function<const Buckets&(const Partition&)> eval = [&](const Partition& rho) -> const Buckets& {
    auto it = prod.find(rho);
    if (it != prod.end()) return it->second;
    int last = rho.parts().back();
    Partition head(std::vector<int>(rho.parts().begin(), rho.parts().end() - 1));
    const Buckets& h = eval(head);
    auto ps = psi.find(last);
    if (ps == psi.end()) ps = psi.emplace(last, badams(gb, last, caps)).first;
    return prod.emplace(rho, bmul(h, ps->second, caps)).first->second;
  };
  Buckets acc(caps.weight + 1);
  for (const auto& [rho, c] : in_power_sum(f.basis(), f.terms())) {
    if (static_cast<long>(rho.weight()) * vw > caps.weight && !rho.empty()) continue;
    const Buckets& b = eval(rho);
    for (size_t w = 0; w < b.size(); ++w)
      for (const auto& [m, v] : b[w]) accumulate(acc[w], m, c * v);
  }
  for (auto& t : acc) clean(t);
  return collect(acc, pl.out).in_basis(g.basis());
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  GradedElement gg = GradedElement::from_symfunc(g, {0, 0, g.max_arity()});
  GradedElement r = plethysm(f, gg);
  return r.z_slice(0);
}

}  // namespace hypstab
