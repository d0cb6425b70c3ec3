#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypstab/symfunc/partition.hpp"

namespace hypstab {

// χ^λ(ρ) by border-strip removal; throws SizeMismatch if |λ| != |ρ|
std::int64_t sn_character(const Partition& lambda, const Partition& rho);

// rows and columns indexed as partitions_of(n)
struct CharacterTable {
  int n = 0;
  std::vector<std::vector<std::int64_t>> chi;  // chi[λ index][ρ index]
  int index(const Partition& p) const;
  std::map<Partition, int> idx;
};
const CharacterTable& character_table(int n);

}  // namespace hypstab
