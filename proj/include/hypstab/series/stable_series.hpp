#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypstab/symfunc/graded.hpp"

namespace hypstab {

enum class Family { BraidSchur, BraidSymplectic, HyperellipticClosed, MCGOpen, MCGClosed };
enum class SeriesBasis { Schur, Symplectic };

std::string family_name(Family f);  // "braid-schur", ...
Family parse_family(const std::string& s);

// Raw series are returned in the Schur basis on the window [0, z_max] x arity <= max_arity.
GradedElement braid_series(SeriesBasis basis, int max_arity, int z_max);
GradedElement closed_series(int max_arity, int z_max);
GradedElement mcg_series(bool closed, int max_arity, int z_max);
GradedElement product_form_series(int max_arity, int z_max);
GradedElement family_series(Family f, int max_arity, int z_max);

// Partition whose Schur slot carries the coefficient system λ for the family.
Partition slot_for(Family f, const Partition& lambda);

struct BettiTable {
  Family family = Family::BraidSchur;
  int max_arity = 0;
  int k_max = 0;
  std::map<std::pair<Partition, int>, Integer> entries;  // (λ, k) -> dim H_k
  std::vector<Integer> row(const Partition& lambda) const;
};

BettiTable betti_table(Family f, const std::vector<Partition>& partitions, int k_max);
// same extraction from an already computed series (throws NegativeCoefficient)
BettiTable betti_from_series(Family f, const GradedElement& series, const std::vector<Partition>& partitions, int k_max);

struct Violation {
  int k;
  Partition mu;
  Rational coefficient;
  std::string rule;
};

enum class VanishingRules { Symplectic, ParityOnly };
std::vector<Violation> vanishing_report(const GradedElement& series, VanishingRules rules = VanishingRules::Symplectic);

// P(z)/Q(z), Q a product of cyclotomic polynomials (Φ_1 taken as 1 - z)
struct RationalFit {
  bool conclusive = false;
  std::vector<Rational> numerator;    // ascending; empty means 0
  std::vector<int> cyclotomic;        // indices m of the factors Φ_m, with repetition
  std::vector<Integer> denominator;   // expanded product, ascending
  std::string str() const;
};

RationalFit fit_rational(const std::vector<Rational>& coefficients, int guard);

// Φ_m with the sign convention Φ_1 = 1 - z, ascending coefficients
std::vector<Integer> cyclotomic_poly(int m);

}  // namespace hypstab
