#include "gelfand/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

constexpr int kEnumerationCap = 60;
constexpr int kCountCap = 10000;
constexpr int kInvolutionCap = 40;

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw ParseError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ParseError("partition parts must be weakly decreasing");
    }
    weight_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& dotted) {
  std::vector<int> parts;
  if (!dotted.empty()) {
    std::stringstream ss(dotted);
    std::string piece;
    while (std::getline(ss, piece, '.')) {
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(piece, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad partition label: " + dotted);
      }
      if (pos != piece.size()) {
        throw ParseError("bad partition label: " + dotted);
      }
      parts.push_back(v);
    }
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    out.resize(static_cast<size_t>(parts_[0]));
    for (int j = 0; j < parts_[0]; ++j) {
      out[static_cast<size_t>(j)] =
          static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                         [j](int r) { return r > j; }));
    }
  }
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool partition_precedes(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  auto ap = a.parts(), bp = b.parts();
  // reverse-lexicographic: the lexicographically larger parts vector first
  return std::lexicographical_compare(bp.begin(), bp.end(), ap.begin(), ap.end());
}

void for_each_partition(int k, const std::function<void(const Partition&)>& fn) {
  if (k < 0) throw ValidationError("negative partition weight");
  if (k > kEnumerationCap) {
    throw SizeLimitError("partition enumeration capped at weight " +
                         std::to_string(kEnumerationCap));
  }
  std::vector<int> prefix;
  // descending first parts yield the fixed (reverse-lexicographic) order
  std::function<void(int, int)> gen = [&](int rem, int maxp) {
    if (rem == 0) {
      fn(Partition(prefix));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      prefix.push_back(p);
      gen(rem - p, p);
      prefix.pop_back();
    }
  };
  gen(k, k);
}

std::vector<Partition> enumerate_partitions(int k) {
  std::vector<Partition> out;
  for_each_partition(k, [&out](const Partition& p) { out.push_back(p); });
  return out;
}

BigInt partition_count(int k) {
  if (k < 0) throw ValidationError("negative partition weight");
  if (k > kCountCap) {
    throw SizeLimitError("partition counting capped at " + std::to_string(kCountCap));
  }
  std::vector<BigInt> p(static_cast<size_t>(k) + 1);
  p[0] = 1;
  for (int m = 1; m <= k; ++m) {
    BigInt s = 0;
    for (int j = 1;; ++j) {
      long long g1 = static_cast<long long>(j) * (3 * j - 1) / 2;
      long long g2 = static_cast<long long>(j) * (3 * j + 1) / 2;
      if (g1 > m && g2 > m) break;
      int sign = (j % 2 == 0) ? -1 : 1;
      if (g1 <= m) s += sign * p[static_cast<size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<size_t>(m - g2)];
    }
    p[static_cast<size_t>(m)] = s;
  }
  return p[static_cast<size_t>(k)];
}

BigInt class_size(const CycleType& t) {
  BigInt z = 1;
  auto parts = t.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    // z_t contribution l^e * e! for e cycles of length l
    long long e = static_cast<long long>(j - i);
    for (long long q = 0; q < e; ++q) z *= parts[i];
    z *= factorial(static_cast<int>(e));
    i = j;
  }
  return factorial(t.weight()) / z;
}

CycleType power_cycle_type(const CycleType& t, long long m) {
  if (m < 1) throw ValidationError("power must be >= 1");
  std::vector<int> out;
  for (int L : t.parts()) {
    long long g = std::gcd(static_cast<long long>(L), m);
    for (long long q = 0; q < g; ++q) out.push_back(static_cast<int>(L / g));
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return CycleType(std::move(out));
}

BigInt hook_dimension(const Partition& lam) {
  if (lam.weight() > kEnumerationCap) {
    throw SizeLimitError("hook dimensions capped at weight " +
                         std::to_string(kEnumerationCap));
  }
  if (lam.rows() == 0) return 1;
  Partition conj = lam.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lam.rows(); ++i) {
    for (int j = 0; j < lam[i]; ++j) {
      hooks *= (lam[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  return factorial(lam.weight()) / hooks;
}

MaxDimension max_dimension(int k) {
  if (k < 1) throw ValidationError("k must be >= 1");
  // Log-space prescreen; candidates within a generous margin of the best
  // log-dimension get exact evaluation. FP error across <= 60 hook factors
  // stays far below the margin.
  double best_log = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, Partition>> scored;
  for_each_partition(k, [&](const Partition& lam) {
    Partition conj = lam.conjugate();
    double s = 0.0;
    for (int i = 0; i < lam.rows(); ++i) {
      for (int j = 0; j < lam[i]; ++j) {
        s += std::log(static_cast<double>((lam[i] - j - 1) + (conj[j] - i - 1) + 1));
      }
    }
    best_log = std::min(best_log, s);
    scored.emplace_back(s, lam);
  });
  MaxDimension result;
  result.dim = 0;
  for (auto& [s, lam] : scored) {
    if (s > best_log + 1e-6) continue;
    BigInt d = hook_dimension(lam);
    if (d > result.dim) {
      result.dim = d;
      result.argmax.clear();
    }
    if (d == result.dim) result.argmax.push_back(lam);
  }
  return result;
}

BigInt involution_count(int m) {
  if (m < 0) throw ValidationError("negative symmetric rank");
  if (m > kInvolutionCap) {
    throw SizeLimitError("involution counts capped at " + std::to_string(kInvolutionCap));
  }
  BigInt prev2 = 1, prev1 = 1;  // I(0), I(1)
  if (m <= 1) return 1;
  for (int i = 2; i <= m; ++i) {
    BigInt cur = prev1 + (i - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

}  // namespace gelfand
