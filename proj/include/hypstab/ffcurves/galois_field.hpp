#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hypstab {

// F_{p^m} with elements encoded as integers Σ c_i p^i (c_i the coefficients in F_p[t]/(modulus)).
class GaloisField {
 public:
  using Elem = std::uint32_t;

  // modulus: the smallest monic irreducible of degree m in the integer encoding
  GaloisField(std::uint32_t p, int degree);
  // explicit monic modulus (ascending, length degree+1); verified irreducible
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool tabled() const { return !log_.empty(); }

  Elem add(Elem a, Elem b) const {
    if (degree_ == 1) return (a + b) % p_;
    if (!add_.empty()) return add_[a * size_ + b];
    return add_digits(a, b, false);
  }
  Elem sub(Elem a, Elem b) const {
    if (degree_ == 1) return (a + p_ - b) % p_;
    return add_digits(a, b, true);
  }
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // quadratic character: 0, +1, -1
  int chi(Elem a) const {
    if (a == 0) return 0;
    if (!chi_.empty()) return chi_[a];
    return pow(a, (size_ - 1) / 2) == 1 ? 1 : -1;
  }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;
  std::string str() const;

  // F_{size^k} as a degree m·k extension of F_p, with the embedding of this field
  struct Extension {
    std::shared_ptr<const GaloisField> field;
    std::vector<Elem> embed;  // image of every element of this field
  };
  const Extension& extension(int k) const;

 private:
  Elem add_digits(Elem a, Elem b, bool subtract) const;
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  int degree_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;           // length 2(size-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::int8_t> chi_;
  std::vector<std::uint16_t> add_;  // full addition table for small fields
  mutable std::mutex ext_mutex_;
  mutable std::map<int, std::unique_ptr<Extension>> ext_;
};

using FqContext = GaloisField;

bool is_prime(std::uint64_t n);
// Irreducibility over F_p of a monic polynomial (ascending coefficients).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);

}  // namespace hypstab
