#include "hypstab/repchar/laurent.hpp"

#include <sstream>

#include "hypstab/core/errors.hpp"

namespace hypstab {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power) {
  LaurentPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = power;
  p.add(e, 1);
  return p;
}

void LaurentPoly::add(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw SizeMismatch("Laurent exponent length");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw SizeMismatch("Laurent variable count");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& kv : p.terms_) kv.second = -kv.second;
  return p;
}

Rational LaurentPoly::at_ones() const {
  Rational s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) os << "*x" << i << "^" << e[i];
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw SizeMismatch("Laurent variable count");
  LaurentPoly out(a.nvars());
  LaurentPoly::Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

LaurentPoly operator*(LaurentPoly a, const Rational& c) {
  LaurentPoly out(a.nvars());
  for (const auto& [e, v] : a.terms()) out.add(e, v * c);
  return out;
}

}  // namespace hypstab
