#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gelfand/bigint.hpp"

namespace gelfand {

// A partition of k: weakly decreasing positive parts. The empty partition is
// the unique partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses the dotted form "3.1.1". The empty string is the empty partition.
  static Partition parse(const std::string& dotted);

  int weight() const { return weight_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  Partition conjugate() const;
  std::string str() const;  // dotted form

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Fixed total order used wherever a deterministic partition order is needed:
// weight first, then reverse-lexicographic within a weight, so (k) comes
// first and (1^k) last.
bool partition_precedes(const Partition& a, const Partition& b);

// A cycle type is a partition of k read as cycle lengths.
using CycleType = Partition;

// All partitions of k in the fixed order. k <= 60.
std::vector<Partition> enumerate_partitions(int k);

// Streaming flavour of the same enumeration, in the same order.
void for_each_partition(int k, const std::function<void(const Partition&)>& fn);

// p(k) by the pentagonal-number recurrence. 0 <= k <= 10^4.
BigInt partition_count(int k);

// Conjugacy class size k!/z_t for cycle type t in S_k.
BigInt class_size(const CycleType& t);

// Cycle type of sigma^m given the cycle type of sigma: a cycle of length L
// splits into gcd(L,m) cycles of length L/gcd(L,m). m >= 1.
CycleType power_cycle_type(const CycleType& t, long long m);

// Irreducible dimension by the hook length formula. weight <= 60.
BigInt hook_dimension(const Partition& lam);

struct MaxDimension {
  std::vector<Partition> argmax;  // all maximizers, in the fixed order
  BigInt dim;
};

// Largest irreducible dimension of S_k and every partition achieving it.
// 1 <= k <= 60.
MaxDimension max_dimension(int k);

// Number of involutions in S_m (equals the sum of irreducible dimensions).
// 0 <= m <= 40.
BigInt involution_count(int m);

}  // namespace gelfand
