#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hypstab/ffcurves/galois_field.hpp"

namespace hypstab {

class FqPoly {
 public:
  using Elem = GaloisField::Elem;

  FqPoly() = default;
  FqPoly(std::shared_ptr<const FqContext> ctx, std::vector<Elem> coeffs);  // ascending
  static FqPoly zero(std::shared_ptr<const FqContext> ctx) { return FqPoly(std::move(ctx), {}); }
  static FqPoly constant(std::shared_ptr<const FqContext> ctx, Elem c) { return FqPoly(std::move(ctx), {c}); }
  static FqPoly x(std::shared_ptr<const FqContext> ctx) { return FqPoly(std::move(ctx), {0, 1}); }
  // parse "x^3 + 2*x + 1" or a coefficient list "1,2,0,1" (ascending); coefficients are integers < q
  static FqPoly parse(std::shared_ptr<const FqContext> ctx, const std::string& text);

  const FqContext& field() const { return *ctx_; }
  const std::shared_ptr<const FqContext>& context() const { return ctx_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lc() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }

  FqPoly monic() const;
  FqPoly derivative() const;
  FqPoly scaled(Elem a) const;
  Elem eval(Elem x) const;
  // c^{-n} d(c x), the pairing partner of a monic d
  FqPoly twisted(Elem c) const;

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
  FqPoly mod(const FqPoly& m) const;
  FqPoly div(const FqPoly& m) const;
  std::string str() const;

 private:
  void trim();
  std::shared_ptr<const FqContext> ctx_;
  std::vector<Elem> c_;
};

FqPoly gcd(const FqPoly& a, const FqPoly& b);  // monic, or zero

// Fault injection for negative controls: flips the reciprocity sign.
extern std::atomic<bool> g_flip_reciprocity;

int jacobi_symbol(const FqPoly& d, const FqPoly& m);
bool is_squarefree(const FqPoly& d);

// Raw kernels on ascending coefficient buffers, used on hot paths.
namespace kernel {
constexpr int kMaxDeg = 63;
int jacobi(const FqContext& F, const GaloisField::Elem* d, int dd, const GaloisField::Elem* m, int dm);
bool squarefree(const FqContext& F, const GaloisField::Elem* d, int dd);
}  // namespace kernel

}  // namespace hypstab
