#pragma once

#include <string>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

// The Young product S_{m_1} x ... x S_{m_r}. Classes and irreps are both
// tuples of partitions (one of each m_j), enumerated in the product of the
// fixed partition orders with the leftmost block most significant. Tuple
// labels join the dotted partitions with '|', e.g. "2.1|1".
class YoungProduct {
public:
  explicit YoungProduct(std::vector<int> block_sizes);

  const std::vector<int>& block_sizes() const { return block_sizes_; }
  int num_blocks() const { return static_cast<int>(block_sizes_.size()); }
  const BigInt& order() const { return order_; }

  // Class tuples and irrep tuples range over the same index set.
  long long num_tuples() const { return num_tuples_; }

  std::vector<Partition> tuple(long long idx) const;
  std::string tuple_label(long long idx) const;
  long long tuple_index(const std::vector<Partition>& parts) const;

  BigInt class_tuple_size(long long cls) const;
  BigInt character(long long irrep, long long cls) const;
  BigInt irrep_dimension(long long irrep) const;

private:
  std::vector<int> block_sizes_;
  std::vector<std::vector<Partition>> block_parts_;
  std::vector<long long> strides_;
  BigInt order_;
  long long num_tuples_ = 1;
};

}  // namespace gelfand
