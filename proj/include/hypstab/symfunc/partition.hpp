#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hypstab/core/rational.hpp"

namespace hypstab {

class Partition {
 public:
  Partition() = default;
  // parts must be positive and weakly decreasing
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // sorts, drops zeros; rejects negatives
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part (0-based), 0 beyond the length
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_[0]; }
  int multiplicity(int i) const;

  Partition conjugate() const;
  // multiset union of parts (p_λ p_μ = p_{λ∪μ})
  Partition join(const Partition& other) const;
  Partition scaled(int n) const;
  // removes one copy of each part of sub; caller guarantees containment as multisets
  Partition remove_parts(const Partition& sub) const;
  bool contains_diagram(const Partition& mu) const;

  // z_λ = ∏ i^{m_i} m_i!
  Integer z() const;
  // ε_λ = (-1)^{|λ| - ℓ(λ)}
  int sign() const { return ((weight_ - length()) % 2) ? -1 : 1; }

  std::string str() const;  // "2,1,1" or "∅"

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// all partitions of n, in reverse lexicographic order ((n) first)
const std::vector<Partition>& partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);
// partitions whose diagram fits inside rows x cols
std::vector<Partition> partitions_in_box(int rows, int cols);
// "2,1,1" ; "" or "∅" is the empty partition
Partition parse_partition(const std::string& s);
// "2,1,1;4;∅"
std::vector<Partition> parse_partition_list(const std::string& s);

struct PartitionHash {
  size_t operator()(const Partition& p) const;
};

}  // namespace hypstab
