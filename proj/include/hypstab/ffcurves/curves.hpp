#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypstab/core/qadj_sqrt.hpp"
#include "hypstab/ffcurves/fq_poly.hpp"

namespace hypstab {

// One curve y^2 = d(x), d monic squarefree of degree n.
struct CurveData {
  std::vector<GaloisField::Elem> d;  // ascending, d[n] = 1
  int n = 0;
  int g = 0;
  std::uint64_t q = 0;
  std::vector<long long> counts;    // N_1..N_g
  std::vector<long long> charpoly;  // c_0..c_{2g} of P(t) = prod (1 - w t)
  std::vector<long long> theta;     // theta[k] = p_k(Theta_d); theta[0] = n - 1

  std::vector<long long> lpoly() const;  // (1 - t)^{delta} P(t)
};

// Frobenius data from a_1..a_g (a_k = q^k + 1 - N_k); theta filled up to theta_max.
void fill_from_traces(CurveData& c, const std::vector<long long>& a, int theta_max);
// Inverse direction, for the cache: counts and theta from a charpoly.
void fill_from_charpoly(CurveData& c, int theta_max);

std::vector<FqPoly> enumerate_squarefree(const std::shared_ptr<const FqContext>& ctx, int n);
void for_each_squarefree(const FqContext& F, int n, const std::function<void(const std::vector<GaloisField::Elem>&)>& fn);

std::vector<long long> curve_point_counts(const FqPoly& d, int k_max);
CurveData frobenius_data(const FqPoly& d, int theta_max = -1);  // default bound 2g + 2
std::vector<long long> lfunction_charsum(const FqPoly& d);
QAdjSqrt lvalue_at_center(const std::vector<long long>& lpoly, std::uint64_t q, unsigned r);
QAdjSqrt central_value(const FqPoly& d, unsigned r);

// max over roots of | |w|/sqrt(q) - 1 |, roots taken from the squarefree part of P
double rh_deviation(const std::vector<long long>& charpoly, std::uint64_t q);
// c_{2g-i} = q^{g-i} c_i and c_0 = 1
bool functional_equation_holds(const std::vector<long long>& charpoly, std::uint64_t q);

// Visits every curve in P_n. Blocks are the values of the x^{n-1} coefficient; with
// workers > 1 blocks run concurrently, and visit(block, curve) is called from the owning
// thread. Within a block curves arrive in lexicographic order.
void run_curve_blocks(const FqContext& F, int n, int workers, int theta_max,
                      const std::function<void(std::size_t block, const CurveData&)>& visit);

// Exact reductions: one accumulator per block, merged in block order.
template <class Acc, class Add, class Merge>
Acc reduce_curves(const FqContext& F, int n, int workers, int theta_max, const Acc& init, Add add, Merge merge) {
  std::vector<Acc> parts(F.size(), init);
  run_curve_blocks(F, n, workers, theta_max, [&](std::size_t b, const CurveData& c) { add(parts[b], c); });
  Acc total = init;
  for (auto& p : parts) merge(total, p);
  return total;
}

std::vector<CurveData> all_curves(const FqContext& F, int n, int workers, int theta_max);

// Binary cache "HWCACHE1": header, then per curve [n:u32][n+1 coeffs:u32][2g charpoly i64].
void save_curve_cache(const std::string& path, const FqContext& F, int n, const std::vector<CurveData>& curves);
std::vector<CurveData> load_curve_cache(const std::string& path, const FqContext& F, int n, int theta_max);
// Loads when the file exists and matches, otherwise computes and writes it.
std::vector<CurveData> cached_curves(const std::string& path, const FqContext& F, int n, int workers, int theta_max);

}  // namespace hypstab
