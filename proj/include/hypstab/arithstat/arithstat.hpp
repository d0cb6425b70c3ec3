#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypstab/core/qadj_sqrt.hpp"
#include "hypstab/ffcurves/curves.hpp"
#include "hypstab/symfunc/symfunc.hpp"

namespace hypstab {

// how curves are obtained: worker threads, and an optional directory of HWCACHE1 files
struct EnumOptions {
  EnumOptions(int w = 1, std::string dir = "") : workers(w), cache_dir(std::move(dir)) {}
  int workers;
  std::string cache_dir;
};

// odd prime power q = p^e
std::shared_ptr<const FqContext> make_field(std::uint64_t q);

// coeff · q^exponent, compared exactly against rationals
struct PowerBound {
  Rational coeff;
  Integer q;
  Rational exponent;

  bool admits(const Rational& x) const;  // |x| <= value
  bool below(const PowerBound& other) const;  // value < other.value
  PowerBound scaled(const Rational& c) const { return {coeff * c, q, exponent}; }
  double to_double() const;
  std::string str() const;  // "num/den" when rational, else "c*q^(a/b)"
  static PowerBound parse(const std::string& s);
  bool operator==(const PowerBound& o) const;  // equal values
};

// Σ_{d ∈ P_n} p_ρ(Θ_d) for every ρ with |ρ| <= max_weight
std::map<Partition, Integer> powersum_totals(const FqContext& F, int n, int max_weight, const EnumOptions& opt = {});

// coefficient of s_{λ'} in Z_n, keyed by λ
std::map<Partition, Rational> zn_coefficients(const FqContext& F, int n, int max_weight, const EnumOptions& opt = {});

// (1 - 1/q) ∏_n (1 + (1 + q^{-n})^{-1} Σ_k ψ_n(h_{2k}))^{i_n(q)} in the Schur basis
SymFunc stable_trace_genfunc(const Integer& q, int max_arity);
// its s_{λ'} coefficient rescaled by q^{-|λ|/2} (no symplectic correction)
Rational stable_trace_gl(const Partition& lambda, const Integer& q, int max_arity);
// T_λ = lim tr_λ(g): s_{λ'} coefficient of Exp(-h_2) · (unitarized genfunc)
Rational stable_trace_T(const Partition& lambda, const Integer& q, int max_arity);
std::map<Partition, Rational> stable_traces(const Integer& q, int max_weight);

QAdjSqrt tr_lambda_g(const FqContext& F, const Partition& lambda, int g, const EnumOptions& opt = {});
// all λ ⊆ (r^g) at once, sharing one enumeration
std::map<Partition, QAdjSqrt> tr_lambda_box(const FqContext& F, int g, int r, const EnumOptions& opt = {});

PowerBound zn_bound(const Integer& q, int weight, int n);        // 5^w q^{w - n/2}
PowerBound thmc_bound(const Integer& q, int g, int r);           // 4^{g(r+1)} q^{-θ(2g+1)/2}
Integer fuks_bound(int n, int k, const Integer& dim);            // C(n-1, k) dim

struct MomentReport {
  Integer q;
  int g = 0, r = 0;
  QAdjSqrt moment;
  QAdjSqrt identity_rhs;
  Rational prediction;
  PowerBound thmc_bound;
  bool identity_holds() const { return moment == identity_rhs; }
  bool rational() const { return moment.is_rational() && identity_rhs.is_rational(); }
};

MomentReport moment_sum(const FqContext& F, int g, int r, const EnumOptions& opt = {}, int weight_cutoff = 8);

struct Q1Prediction {
  Rational value;
  double decay_constant = 0;  // max |T_λ| q^{|λ|/5} over the computed range
  double tail_bound = 0;
  int tail_terms = 0;       // weights summed explicitly beyond the cutoff
};
Q1Prediction q1_prediction(const Integer& q, int g, int r, int weight_cutoff);

Rational mainterm_oracle(const Integer& q, const std::vector<int>& composition);

struct TraceRow {
  Partition lambda;
  Rational brute, stable;
  PowerBound bound;
  bool pass = false;
  bool operator==(const TraceRow&) const = default;
};

struct TraceReport {
  Integer q;
  int n = 0;
  int max_weight = 0;
  Rational slack = 2;
  std::vector<TraceRow> rows;
  bool all_pass() const;
  bool operator==(const TraceReport&) const = default;
};

TraceReport trace_report(const FqContext& F, int n, int max_weight, const EnumOptions& opt = {}, const Rational& slack = 2);

// a priori size of |Z_n coefficient| from RH: (1 - 1/q) dim_{GL(n-1)}(λ) q^{|λ|/2}
PowerBound trivial_scale(const Integer& q, const Partition& lambda, int n);

}  // namespace hypstab
