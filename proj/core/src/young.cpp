#include "gelfand/young.hpp"

#include <algorithm>

#include "gelfand/character_table.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {

namespace {
constexpr int kBlockCap = 30;
constexpr long long kTupleCap = 1000000;
}  // namespace

YoungProduct::YoungProduct(std::vector<int> block_sizes)
    : block_sizes_(std::move(block_sizes)) {
  if (block_sizes_.empty()) {
    throw ValidationError("Young product needs at least one block");
  }
  order_ = 1;
  for (int m : block_sizes_) {
    if (m < 1) throw ValidationError("Young product block sizes must be >= 1");
    if (m > kBlockCap) {
      throw SizeLimitError("Young product block size " + std::to_string(m) +
                           " exceeds " + std::to_string(kBlockCap));
    }
    block_parts_.push_back(enumerate_partitions(m));
    order_ *= factorial(m);
    long long count = static_cast<long long>(block_parts_.back().size());
    if (num_tuples_ > kTupleCap / count) {
      throw SizeLimitError("Young product tuple count exceeds " +
                           std::to_string(kTupleCap));
    }
    num_tuples_ *= count;
  }
  strides_.assign(block_parts_.size(), 1);
  for (int j = num_blocks() - 2; j >= 0; --j) {
    strides_[j] =
        strides_[j + 1] * static_cast<long long>(block_parts_[j + 1].size());
  }
}

std::vector<Partition> YoungProduct::tuple(long long idx) const {
  if (idx < 0 || idx >= num_tuples_) {
    throw ValidationError("tuple index out of range");
  }
  std::vector<Partition> out;
  out.reserve(block_parts_.size());
  for (int j = 0; j < num_blocks(); ++j) {
    long long digit = (idx / strides_[j]) %
                      static_cast<long long>(block_parts_[j].size());
    out.push_back(block_parts_[j][static_cast<size_t>(digit)]);
  }
  return out;
}

std::string YoungProduct::tuple_label(long long idx) const {
  std::vector<Partition> parts = tuple(idx);
  std::string out;
  for (size_t j = 0; j < parts.size(); ++j) {
    if (j > 0) out += '|';
    out += parts[j].str();
  }
  return out;
}

long long YoungProduct::tuple_index(const std::vector<Partition>& parts) const {
  if (parts.size() != block_parts_.size()) {
    throw ValidationError("tuple has " + std::to_string(parts.size()) +
                          " entries, expected " +
                          std::to_string(block_parts_.size()));
  }
  long long idx = 0;
  for (int j = 0; j < num_blocks(); ++j) {
    if (parts[j].weight() != block_sizes_[j]) {
      throw ValidationError("tuple entry " + parts[j].str() +
                            " is not a partition of " +
                            std::to_string(block_sizes_[j]));
    }
    auto it = std::find(block_parts_[j].begin(), block_parts_[j].end(),
                        parts[j]);
    idx += strides_[j] * (it - block_parts_[j].begin());
  }
  return idx;
}

BigInt YoungProduct::class_tuple_size(long long cls) const {
  BigInt size = 1;
  for (const Partition& t : tuple(cls)) size *= class_size(t);
  return size;
}

BigInt YoungProduct::character(long long irrep, long long cls) const {
  std::vector<Partition> lams = tuple(irrep);
  std::vector<Partition> cts = tuple(cls);
  BigInt value = 1;
  for (size_t j = 0; j < lams.size(); ++j) {
    value *= mn_character(lams[j], cts[j]);
  }
  return value;
}

BigInt YoungProduct::irrep_dimension(long long irrep) const {
  BigInt dim = 1;
  for (const Partition& lam : tuple(irrep)) dim *= hook_dimension(lam);
  return dim;
}

}  // namespace gelfand
