#include "hypstab/ffcurves/galois_field.hpp"

#include <sstream>

#include "hypstab/core/errors.hpp"

namespace hypstab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, ascending

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Poly pmod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  std::uint64_t li = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t f = a.back() * li % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - f * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  trim(c);
  return c;
}

Poly pgcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const Poly& f0, std::uint32_t p) {
  Poly f(f0);
  trim(f);
  int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  // Ben-Or: gcd(x^{p^i} - x, f) = 1 for i <= m/2
  Poly xp{0, 1};
  for (int i = 1; i <= m / 2; ++i) {
    // xp <- xp^p mod f
    Poly r{1}, base = xp;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) r = pmod(pmul(r, base, p), f, p);
      base = pmod(pmul(base, base, p), f, p);
    }
    xp = r;
    Poly t = xp;
    t.resize(std::max<size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (pgcd(f, t, p).size() != 1) return false;
  }
  return true;
}

GaloisField::GaloisField(std::uint32_t p, int degree) : p_(p), degree_(degree) {
  if (p < 3 || !is_prime(p)) throw InvalidField("characteristic must be an odd prime, got " + std::to_string(p));
  if (degree < 1) throw InvalidField("degree must be >= 1");
  size_ = 1;
  for (int i = 0; i < degree; ++i) {
    size_ *= p;
    if (size_ > (1ull << 31)) throw InvalidField("field too large");
  }
  // smallest monic irreducible in the encoding Σ c_i p^i
  for (std::uint64_t code = 0;; ++code) {
    Poly f(degree + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < degree; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[degree] = 1;
    if (is_irreducible_mod_p(f, p)) {
      modulus_ = f;
      break;
    }
  }
  build_tables();
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (p < 3 || !is_prime(p)) throw InvalidField("characteristic must be an odd prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw InvalidField("modulus must be monic of degree >= 1");
  for (auto c : modulus_)
    if (c >= p) throw InvalidField("modulus coefficient out of range");
  if (!is_irreducible_mod_p(modulus_, p)) throw InvalidField("modulus is reducible");
  degree_ = static_cast<int>(modulus_.size()) - 1;
  size_ = 1;
  for (int i = 0; i < degree_; ++i) size_ *= p;
  build_tables();
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint32_t> d(degree_);
  for (int i = 0; i < degree_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

GaloisField::Elem GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p_ + d[i] % p_;
  return a;
}

GaloisField::Elem GaloisField::add_digits(Elem a, Elem b, bool subtract) const {
  Elem r = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    std::uint32_t x = a % p_, y = b % p_;
    a /= p_;
    b /= p_;
    r += ((subtract ? x + p_ - y : x + y) % p_) * scale;
    scale *= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  Poly x = digits(a), y = digits(b);
  Poly r = pmod(pmul(x, y, p_), modulus_, p_);
  r.resize(degree_, 0);
  return from_digits(r);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (!log_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (size_ - 1))) % (size_ - 1)];
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw InvalidField("inverse of zero");
  if (!log_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

void GaloisField::build_tables() {
  if (size_ > (1u << 16)) return;
  std::uint64_t n = size_ - 1;
  // smallest generator of the multiplicative group
  for (Elem g = 1; g < size_; ++g) {
    Elem x = 1;
    std::uint64_t order = 0;
    do {
      x = mul_slow(x, g);
      ++order;
    } while (x != 1);
    if (order != n) continue;
    exp_.assign(2 * n, 0);
    log_.assign(size_, 0);
    chi_.assign(size_, 0);
    x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = exp_[i + n] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      chi_[x] = (i % 2) ? -1 : 1;
      x = mul_slow(x, g);
    }
    break;
  }
  if (degree_ > 1 && size_ <= 1024) {
    add_.assign(size_ * size_, 0);
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b) add_[a * size_ + b] = static_cast<std::uint16_t>(add_digits(a, b, false));
  }
}

std::string GaloisField::str() const {
  std::ostringstream os;
  os << "F_" << size_;
  if (degree_ > 1) {
    os << " = F_" << p_ << "[t]/(";
    for (int i = degree_; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (i != degree_) os << " + ";
      os << modulus_[i];
      if (i) os << "*t^" << i;
    }
    os << ")";
  }
  return os.str();
}

const GaloisField::Extension& GaloisField::extension(int k) const {
  std::lock_guard<std::mutex> lock(ext_mutex_);
  auto& slot = ext_[k];
  if (slot) return *slot;
  auto ext = std::make_unique<Extension>();
  ext->field = std::make_shared<GaloisField>(p_, degree_ * k);
  const GaloisField& big = *ext->field;
  // image of t: the smallest root in the big field of this field's modulus
  Elem root = 0;
  if (degree_ > 1) {
    bool found = false;
    for (Elem r = 0; r < big.size() && !found; ++r) {
      Elem v = 0;
      for (int i = degree_; i >= 0; --i) v = big.add(big.mul(v, r), modulus_[i]);
      if (v == 0) {
        root = r;
        found = true;
      }
    }
    if (!found) throw InternalError("no root of the base modulus in the extension");
  }
  ext->embed.resize(size_);
  for (Elem a = 0; a < size_; ++a) {
    if (degree_ == 1) {
      ext->embed[a] = a;
      continue;
    }
    auto d = digits(a);
    Elem v = 0;
    for (int i = degree_ - 1; i >= 0; --i) v = big.add(big.mul(v, root), d[i]);
    ext->embed[a] = v;
  }
  slot = std::move(ext);
  return *slot;
}

}  // namespace hypstab
