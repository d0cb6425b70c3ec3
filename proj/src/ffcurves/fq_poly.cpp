#include "hypstab/ffcurves/fq_poly.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "hypstab/core/errors.hpp"

namespace hypstab {

std::atomic<bool> g_flip_reciprocity{false};

FqPoly::FqPoly(std::shared_ptr<const FqContext> ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (auto v : c_)
    if (v >= ctx_->size()) throw InvalidField("coefficient " + std::to_string(v) + " outside F_" + std::to_string(ctx_->size()));
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::parse(std::shared_ptr<const FqContext> ctx, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<long long> coeffs;
  auto put = [&](int e, long long v) {
    if (e < 0 || e > 4096) throw ParseError("bad exponent in '" + text + "'");
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, 0);
    coeffs[e] += v;
  };
  if (s.find('x') == std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    int e = 0;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw ParseError("bad coefficient '" + tok + "'");
        put(e++, v);
      } catch (const std::logic_error&) {
        throw ParseError("bad coefficient '" + tok + "'");
      }
    }
  } else {
    static const std::regex term(R"(([+-]?)(\d*)\*?(x(\^(\d+))?)?)");
    size_t pos = 0;
    while (pos < s.size()) {
      std::smatch m;
      std::string rest = s.substr(pos);
      if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0)
        throw ParseError("cannot parse polynomial '" + text + "'");
      if (pos > 0 && m[1].length() == 0) throw ParseError("missing sign in '" + text + "'");
      if (m[2].length() == 0 && m[3].length() == 0) throw ParseError("empty term in '" + text + "'");
      long long v = m[2].length() ? std::stoll(m[2].str()) : 1;
      if (m[1] == "-") v = -v;
      int e = m[3].length() ? (m[5].length() ? std::stoi(m[5].str()) : 1) : 0;
      put(e, v);
      pos += m.length(0);
    }
  }
  std::vector<Elem> c;
  for (auto v : coeffs) {
    if (ctx->degree() == 1) {
      c.push_back(ctx->from_int(v));
    } else {
      if (v < 0 || static_cast<std::uint64_t>(v) >= ctx->size())
        throw ParseError("coefficient " + std::to_string(v) + " is not an element code of F_" + std::to_string(ctx->size()));
      c.push_back(static_cast<Elem>(v));
    }
  }
  return FqPoly(std::move(ctx), std::move(c));
}

FqPoly FqPoly::scaled(Elem a) const {
  std::vector<Elem> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = ctx_->mul(c_[i], a);
  return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(ctx_->inv(lc()));
}

FqPoly FqPoly::derivative() const {
  std::vector<Elem> c;
  for (size_t i = 1; i < c_.size(); ++i) c.push_back(ctx_->mul(ctx_->from_int(static_cast<long long>(i)), c_[i]));
  return FqPoly(ctx_, std::move(c));
}

FqPoly::Elem FqPoly::eval(Elem x) const {
  Elem v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = ctx_->add(ctx_->mul(v, x), c_[i]);
  return v;
}

FqPoly FqPoly::twisted(Elem c) const {
  if (c == 0) throw InvalidField("twist by zero");
  int n = degree();
  Elem ci = ctx_->inv(c);
  std::vector<Elem> out(c_.size());
  for (int i = 0; i <= n; ++i) out[i] = ctx_->mul(c_[i], ctx_->pow(ci, static_cast<std::uint64_t>(n - i)));
  return FqPoly(ctx_, std::move(out));
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  const auto& F = *a.ctx_;
  std::vector<FqPoly::Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(a.ctx_, std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  const auto& F = *a.ctx_;
  std::vector<FqPoly::Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(a.ctx_, std::move(c));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.ctx_);
  const auto& F = *a.ctx_;
  std::vector<FqPoly::Elem> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
  return FqPoly(a.ctx_, std::move(c));
}

namespace {

// long division; returns quotient, leaves remainder in r
std::vector<FqPoly::Elem> divide(const FqContext& F, std::vector<FqPoly::Elem>& r, const std::vector<FqPoly::Elem>& m) {
  if (m.empty()) throw InvalidField("division by zero polynomial");
  auto li = F.inv(m.back());
  std::vector<FqPoly::Elem> q(r.size() >= m.size() ? r.size() - m.size() + 1 : 0, 0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  while (r.size() >= m.size()) {
    auto f = F.mul(r.back(), li);
    size_t shift = r.size() - m.size();
    q[shift] = f;
    for (size_t i = 0; i < m.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(f, m[i]));
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return q;
}

}  // namespace

FqPoly FqPoly::mod(const FqPoly& m) const {
  auto r = c_;
  divide(*ctx_, r, m.c_);
  return FqPoly(ctx_, std::move(r));
}

FqPoly FqPoly::div(const FqPoly& m) const {
  auto r = c_;
  return FqPoly(ctx_, divide(*ctx_, r, m.c_));
}

FqPoly gcd(const FqPoly& a0, const FqPoly& b0) {
  FqPoly a = a0, b = b0;
  while (!b.is_zero()) {
    FqPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string FqPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i] << (i ? "*" : "");
    if (i) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

namespace kernel {

using Elem = GaloisField::Elem;

namespace {

// a <- a mod m (m monic); returns new degree of a (-1 for zero)
int reduce(const FqContext& F, Elem* a, int da, const Elem* m, int dm) {
  while (da >= dm) {
    Elem f = a[da];
    if (f != 0) {
      int shift = da - dm;
      for (int i = 0; i < dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(f, m[i]));
    }
    a[da] = 0;
    --da;
    while (da >= 0 && a[da] == 0) --da;
  }
  while (da >= 0 && a[da] == 0) --da;
  return da;
}

int make_monic(const FqContext& F, Elem* a, int da) {
  Elem c = a[da];
  if (c == 1) return 1;
  Elem ci = F.inv(c);
  for (int i = 0; i <= da; ++i) a[i] = F.mul(a[i], ci);
  return F.chi(c);
}

}  // namespace

int jacobi(const FqContext& F, const Elem* d, int dd, const Elem* m, int dm) {
  if (dm < 1) throw ConstantModulus("modulus must be nonconstant");
  if (dd > kMaxDeg || dm > kMaxDeg) throw InvalidField("degree too large for the Jacobi kernel");
  Elem A[kMaxDeg + 1], B[kMaxDeg + 1];
  std::copy(d, d + dd + 1, A);
  std::copy(m, m + dm + 1, B);
  int da = dd, db = dm;
  while (da >= 0 && A[da] == 0) --da;
  const bool half_odd = ((F.size() - 1) / 2) % 2 == 1;
  const bool flip = g_flip_reciprocity.load(std::memory_order_relaxed);
  int sign = 1;
  // the symbol only sees the ideal (m)
  make_monic(F, B, db);
  Elem* a = A;
  Elem* b = B;
  for (;;) {
    // (a / b) with b monic, deg b >= 1
    da = reduce(F, a, da, b, db);
    if (da < 0) return 0;
    int c = make_monic(F, a, da);
    if (c == -1 && (db % 2 == 1)) sign = -sign;
    if (da == 0) return sign;
    // reciprocity between monic a and b
    if (half_odd && (da % 2 == 1) && (db % 2 == 1)) sign = -sign;
    if (flip) sign = -sign;
    std::swap(a, b);
    std::swap(da, db);
  }
}

bool squarefree(const FqContext& F, const Elem* d, int dd) {
  if (dd < 1) throw InvalidField("squarefree test needs a nonconstant polynomial");
  if (dd > kMaxDeg) throw InvalidField("degree too large");
  Elem A[kMaxDeg + 1], B[kMaxDeg + 1];
  std::copy(d, d + dd + 1, A);
  int da = dd, db = dd - 1;
  for (int i = 1; i <= dd; ++i) B[i - 1] = F.mul(F.from_int(i), d[i]);
  while (db >= 0 && B[db] == 0) --db;
  if (db < 0) return false;  // d' = 0: d is a p-th power
  Elem* a = A;
  Elem* b = B;
  make_monic(F, a, da);
  while (db > 0) {
    make_monic(F, b, db);
    da = reduce(F, a, da, b, db);
    std::swap(a, b);
    std::swap(da, db);
  }
  // b is a nonzero constant (coprime) or zero (b-previous divides a)
  return db == 0;
}

}  // namespace kernel

int jacobi_symbol(const FqPoly& d, const FqPoly& m) {
  if (m.degree() < 1) throw ConstantModulus("modulus " + m.str() + " is constant");
  if (d.is_zero()) return 0;
  return kernel::jacobi(d.field(), d.coeffs().data(), d.degree(), m.coeffs().data(), m.degree());
}

bool is_squarefree(const FqPoly& d) {
  if (d.degree() < 1) throw InvalidField("squarefree test needs a nonconstant polynomial");
  return kernel::squarefree(d.field(), d.coeffs().data(), d.degree());
}

}  // namespace hypstab
