#include "gelfand/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

constexpr int kMnWeightCap = 30;
constexpr int kSymmetricCap = 30;
constexpr int kAbelianCap = 1000;
constexpr double kRealnessTol = 1e-9;

// Memo key: lambda parts, a zero byte, then the remaining mu parts. All
// parts are <= 30, so one byte each is enough.
std::string mn_key(const std::vector<int>& lam, std::span<const int> mu,
                   size_t mu_from) {
  std::string key;
  key.reserve(lam.size() + (mu.size() - mu_from) + 1);
  for (int p : lam) key.push_back(static_cast<char>(p));
  key.push_back('\0');
  for (size_t i = mu_from; i < mu.size(); ++i) {
    key.push_back(static_cast<char>(mu[i]));
  }
  return key;
}

// Border-strip recursion on beta numbers: B = {lam_i + (L-1-i)} is a strictly
// decreasing set; removing a strip of size r moves one b to b-r (legal iff
// b >= r and b-r is free), and the strip height is the number of beta values
// strictly between b-r and b.
long long mn_impl(const std::vector<int>& lam, std::span<const int> mu,
                  size_t mu_from,
                  std::unordered_map<std::string, long long>& memo) {
  if (lam.empty()) return 1;
  std::string key = mn_key(lam, mu, mu_from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[mu_from];
  const int rows = static_cast<int>(lam.size());
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lam[i] + (rows - 1 - i);

  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    const int b = beta[i];
    if (b < r) continue;
    const int moved = b - r;
    if (std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
    int between = 0;
    for (int v : beta) {
      if (v > moved && v < b) ++between;
    }
    std::vector<int> nb = beta;
    nb[i] = moved;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> nl;
    nl.reserve(nb.size());
    for (int j = 0; j < rows; ++j) {
      int part = nb[j] - (rows - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    long long sub = mn_impl(nl, mu, mu_from + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

long long lcm_up_to(int k) {
  long long e = 1;
  for (int m = 2; m <= k; ++m) e = std::lcm(e, static_cast<long long>(m));
  return e;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw ValidationError("weight mismatch: chi_" + lambda.str() + " at " +
                          mu.str());
  }
  if (lambda.weight() > kMnWeightCap) {
    throw SizeLimitError("character weight exceeds " +
                         std::to_string(kMnWeightCap));
  }
  thread_local std::unordered_map<std::string, long long> memo;
  std::vector<int> lam(lambda.parts().begin(), lambda.parts().end());
  return mn_impl(lam, mu.parts(), 0, memo);
}

CharacterTable::CharacterTable(std::string name, BigInt order,
                               long long exponent, Backend backend,
                               std::vector<std::string> class_labels,
                               std::vector<BigInt> class_sizes,
                               std::vector<std::vector<int>> stored_power_maps,
                               std::vector<std::string> irrep_labels,
                               std::vector<long long> exact_values,
                               std::vector<std::complex<double>> approx_values)
    : name_(std::move(name)),
      order_(std::move(order)),
      exponent_(exponent),
      backend_(backend),
      kind_(PowerKind::stored),
      class_labels_(std::move(class_labels)),
      class_sizes_(std::move(class_sizes)),
      stored_power_maps_(std::move(stored_power_maps)),
      irrep_labels_(std::move(irrep_labels)),
      exact_values_(std::move(exact_values)),
      approx_values_(std::move(approx_values)) {
  finish_construction();
}

void CharacterTable::finish_construction() {
  const size_t classes = class_labels_.size();
  const size_t irreps = irrep_labels_.size();
  if (classes == 0 || irreps == 0) {
    throw ParseError("table '" + name_ + "': no classes or no irreps");
  }
  if (class_sizes_.size() != classes) {
    throw ParseError("table '" + name_ + "': class size count mismatch");
  }
  if (order_ < 1) throw ParseError("table '" + name_ + "': order must be >= 1");
  if (exponent_ < 1) {
    throw ParseError("table '" + name_ + "': exponent must be >= 1");
  }
  const size_t want = irreps * classes;
  if (backend_ == Backend::exact) {
    if (exact_values_.size() != want || !approx_values_.empty()) {
      throw ParseError("table '" + name_ + "': exact value storage mismatch");
    }
  } else {
    if (approx_values_.size() != want || !exact_values_.empty()) {
      throw ParseError("table '" + name_ +
                       "': approximate value storage mismatch");
    }
  }
  if (kind_ == PowerKind::stored) {
    if (stored_power_maps_.size() != static_cast<size_t>(exponent_ - 1)) {
      throw ParseError("table '" + name_ + "': power maps must cover 2.." +
                       std::to_string(exponent_));
    }
    for (const auto& pm : stored_power_maps_) {
      if (pm.size() != classes) {
        throw ParseError("table '" + name_ + "': power map length mismatch");
      }
      for (int c : pm) {
        if (c < 0 || static_cast<size_t>(c) >= classes) {
          throw ParseError("table '" + name_ +
                           "': power map index out of range");
        }
      }
    }
  } else if (!stored_power_maps_.empty()) {
    throw ParseError("table '" + name_ + "': unexpected stored power maps");
  }
  for (size_t c = 0; c < classes; ++c) {
    if (!class_index_.emplace(class_labels_[c], static_cast<int>(c)).second) {
      throw ParseError("table '" + name_ + "': duplicate class label '" +
                       class_labels_[c] + "'");
    }
  }
  for (size_t i = 0; i < irreps; ++i) {
    if (!irrep_index_.emplace(irrep_labels_[i], static_cast<int>(i)).second) {
      throw ParseError("table '" + name_ + "': duplicate irrep label '" +
                       irrep_labels_[i] + "'");
    }
  }
  dims_.resize(irreps);
  real_.resize(irreps);
  for (size_t i = 0; i < irreps; ++i) {
    if (backend_ == Backend::exact) {
      dims_[i] = exact_values_[i * classes];
      real_[i] = true;
    } else {
      dims_[i] = std::llround(approx_values_[i * classes].real());
      bool real = true;
      for (size_t c = 0; c < classes; ++c) {
        if (std::abs(approx_values_[i * classes + c].imag()) >= kRealnessTol) {
          real = false;
          break;
        }
      }
      real_[i] = real;
    }
  }
}

CharacterTable CharacterTable::symmetric(int k) {
  if (k < 1 || k > kSymmetricCap) {
    throw SizeLimitError("symmetric table needs 1 <= k <= " +
                         std::to_string(kSymmetricCap) + ", got " +
                         std::to_string(k));
  }
  std::vector<Partition> irreps = enumerate_partitions(k);
  std::vector<Partition> classes(irreps.rbegin(), irreps.rend());

  CharacterTable t;
  t.name_ = "S" + std::to_string(k);
  t.order_ = factorial(k);
  t.exponent_ = lcm_up_to(k);
  t.backend_ = Backend::exact;
  t.kind_ = PowerKind::symmetric_group;
  t.group_param_ = k;
  t.class_cycle_types_ = classes;
  for (const Partition& ct : classes) {
    t.class_labels_.push_back(ct.str());
    t.class_sizes_.push_back(class_size(ct));
  }
  for (const Partition& lam : irreps) t.irrep_labels_.push_back(lam.str());
  t.exact_values_.reserve(irreps.size() * classes.size());
  for (const Partition& lam : irreps) {
    for (const Partition& ct : classes) {
      t.exact_values_.push_back(mn_character(lam, ct));
    }
  }
  t.finish_construction();
  return t;
}

CharacterTable CharacterTable::cyclic(int m) {
  if (m < 1 || m > kAbelianCap) {
    throw SizeLimitError("cyclic table needs 1 <= m <= " +
                         std::to_string(kAbelianCap) + ", got " +
                         std::to_string(m));
  }
  CharacterTable t;
  t.name_ = "C" + std::to_string(m);
  t.order_ = m;
  t.exponent_ = m;
  t.backend_ = Backend::approx;
  t.kind_ = PowerKind::cyclic_group;
  t.group_param_ = m;
  for (int c = 0; c < m; ++c) {
    t.class_labels_.push_back("g" + std::to_string(c));
    t.class_sizes_.push_back(1);
  }
  for (int j = 0; j < m; ++j) {
    t.irrep_labels_.push_back("chi" + std::to_string(j));
  }
  t.approx_values_.reserve(static_cast<size_t>(m) * m);
  for (int j = 0; j < m; ++j) {
    for (int c = 0; c < m; ++c) {
      long long rem = (static_cast<long long>(j) * c) % m;
      double angle = 2.0 * std::numbers::pi * static_cast<double>(rem) / m;
      t.approx_values_.emplace_back(std::cos(angle), std::sin(angle));
    }
  }
  t.finish_construction();
  return t;
}

CharacterTable CharacterTable::dihedral(int m) {
  if (m < 3 || m > kAbelianCap) {
    throw SizeLimitError("dihedral table needs 3 <= m <= " +
                         std::to_string(kAbelianCap) + ", got " +
                         std::to_string(m));
  }
  const bool even = (m % 2 == 0);
  const int h = even ? m / 2 : (m - 1) / 2;

  CharacterTable t;
  t.name_ = "D" + std::to_string(m);
  t.order_ = 2 * m;
  t.exponent_ = even ? m : 2LL * m;
  t.backend_ = Backend::approx;
  t.kind_ = PowerKind::dihedral_group;
  t.group_param_ = m;

  t.class_labels_.push_back("e");
  t.class_sizes_.push_back(1);
  for (int j = 1; j <= h; ++j) {
    t.class_labels_.push_back("r" + std::to_string(j));
    t.class_sizes_.push_back(even && j == h ? 1 : 2);
  }
  if (even) {
    t.class_labels_.push_back("s0");
    t.class_sizes_.push_back(h);
    t.class_labels_.push_back("s1");
    t.class_sizes_.push_back(h);
  } else {
    t.class_labels_.push_back("s");
    t.class_sizes_.push_back(m);
  }
  const int classes = static_cast<int>(t.class_labels_.size());

  auto push_linear = [&](const std::string& label, int rot_sign,
                         double s0_val, double s1_val) {
    t.irrep_labels_.push_back(label);
    t.approx_values_.emplace_back(1.0, 0.0);
    for (int j = 1; j <= h; ++j) {
      double v = (rot_sign == 1) ? 1.0 : ((j % 2 == 0) ? 1.0 : -1.0);
      t.approx_values_.emplace_back(v, 0.0);
    }
    if (even) {
      t.approx_values_.emplace_back(s0_val, 0.0);
      t.approx_values_.emplace_back(s1_val, 0.0);
    } else {
      t.approx_values_.emplace_back(s0_val, 0.0);
    }
  };
  push_linear("triv", 1, 1.0, 1.0);
  push_linear("det", 1, -1.0, -1.0);
  if (even) {
    push_linear("alt", -1, 1.0, -1.0);
    push_linear("altdet", -1, -1.0, 1.0);
  }
  const int two_dim_count = even ? h - 1 : h;
  for (int j = 1; j <= two_dim_count; ++j) {
    t.irrep_labels_.push_back("rho" + std::to_string(j));
    t.approx_values_.emplace_back(2.0, 0.0);
    for (int c = 1; c <= h; ++c) {
      double angle =
          2.0 * std::numbers::pi * static_cast<double>(j) * c / m;
      t.approx_values_.emplace_back(2.0 * std::cos(angle), 0.0);
    }
    t.approx_values_.emplace_back(0.0, 0.0);
    if (even) t.approx_values_.emplace_back(0.0, 0.0);
  }
  if (t.approx_values_.size() !=
      t.irrep_labels_.size() * static_cast<size_t>(classes)) {
    throw Error("dihedral table construction out of shape");
  }
  t.finish_construction();
  return t;
}

std::optional<int> CharacterTable::find_class(const std::string& label) const {
  auto it = class_index_.find(label);
  if (it == class_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CharacterTable::find_irrep(const std::string& label) const {
  auto it = irrep_index_.find(label);
  if (it == irrep_index_.end()) return std::nullopt;
  return it->second;
}

long long CharacterTable::exact_value(int irrep, int cls) const {
  if (backend_ != Backend::exact) {
    throw Error("table '" + name_ + "' has no exact values");
  }
  return exact_values_[static_cast<size_t>(irrep) * class_labels_.size() + cls];
}

std::complex<double> CharacterTable::approx_value(int irrep, int cls) const {
  const size_t idx =
      static_cast<size_t>(irrep) * class_labels_.size() + cls;
  if (backend_ == Backend::exact) {
    return {static_cast<double>(exact_values_[idx]), 0.0};
  }
  return approx_values_[idx];
}

Scalar CharacterTable::value(int irrep, int cls) const {
  const size_t idx =
      static_cast<size_t>(irrep) * class_labels_.size() + cls;
  if (backend_ == Backend::exact) return Scalar(BigRat(exact_values_[idx]));
  return Scalar(approx_values_[idx]);
}

std::vector<Scalar> CharacterTable::character_row(int irrep) const {
  std::vector<Scalar> row;
  row.reserve(class_labels_.size());
  for (int c = 0; c < num_classes(); ++c) row.push_back(value(irrep, c));
  return row;
}

bool CharacterTable::is_abelian() const {
  return std::all_of(dims_.begin(), dims_.end(),
                     [](long long d) { return d == 1; });
}

int CharacterTable::power_class(int cls, long long m) const {
  if (m < 1) throw ValidationError("power map needs m >= 1");
  if (cls < 0 || cls >= num_classes()) {
    throw ValidationError("power map class index out of range");
  }
  switch (kind_) {
    case PowerKind::stored: {
      long long r = m % exponent_;
      if (r == 0) return 0;
      if (r == 1) return cls;
      return stored_power_maps_[static_cast<size_t>(r - 2)][cls];
    }
    case PowerKind::symmetric_group: {
      CycleType powered = power_cycle_type(class_cycle_types_[cls], m);
      return class_index_.at(powered.str());
    }
    case PowerKind::cyclic_group: {
      long long r = (static_cast<long long>(cls) * (m % group_param_)) %
                    group_param_;
      return static_cast<int>(r);
    }
    case PowerKind::dihedral_group: {
      const int mm = group_param_;
      const int h = (mm % 2 == 0) ? mm / 2 : (mm - 1) / 2;
      if (cls == 0) return 0;
      if (cls <= h) {
        long long e = (static_cast<long long>(cls) * (m % mm)) % mm;
        if (e == 0) return 0;
        return static_cast<int>(std::min(e, mm - e));
      }
      return (m % 2 == 0) ? 0 : cls;
    }
  }
  throw Error("unreachable power kind");
}

Scalar CharacterTable::inner_product(const std::vector<Scalar>& f,
                                     const std::vector<Scalar>& g) const {
  const size_t classes = class_labels_.size();
  if (f.size() != classes || g.size() != classes) {
    throw ValidationError("class-value length mismatch: table '" + name_ +
                          "' has " + std::to_string(classes) + " classes");
  }
  if (backend_ == Backend::exact) {
    BigRat acc = 0;
    for (size_t c = 0; c < classes; ++c) {
      if (!f[c].exact() || !g[c].exact()) {
        throw Error("mixed exact/approximate scalars over exact table '" +
                    name_ + "'");
      }
      acc += BigRat(class_sizes_[c]) * f[c].rational() * g[c].rational();
    }
    return Scalar(acc / BigRat(order_));
  }
  std::complex<double> acc = 0.0;
  for (size_t c = 0; c < classes; ++c) {
    acc += to_double(class_sizes_[c]) * f[c].as_complex() *
           std::conj(g[c].as_complex());
  }
  return Scalar(acc / to_double(order_));
}

ValidationReport CharacterTable::validate(double tol) const {
  ValidationReport rep;
  const int classes = num_classes();
  const int irreps = num_irreps();

  rep.identity_ok = true;
  if (class_sizes_[0] != 1) {
    rep.identity_ok = false;
    rep.failures.push_back("class sizes: classes[0] '" + class_labels_[0] +
                           "' must be the identity class of size 1");
  }
  for (int i = 0; i < irreps; ++i) {
    bool ok;
    if (backend_ == Backend::exact) {
      ok = exact_value(i, 0) >= 1;
    } else {
      std::complex<double> z = approx_value(i, 0);
      double rounded = std::round(z.real());
      ok = std::abs(z - std::complex<double>(rounded, 0.0)) <= tol &&
           rounded >= 1.0;
    }
    if (!ok) {
      rep.identity_ok = false;
      rep.failures.push_back("identity column at irrep '" + irrep_labels_[i] +
                             "': dimension must be a positive integer");
    }
  }

  BigInt size_sum = 0;
  for (const BigInt& s : class_sizes_) size_sum += s;
  rep.size_sum_ok = (size_sum == order_);
  if (!rep.size_sum_ok) {
    rep.failures.push_back("class sizes: sum " + size_sum.str() +
                           " != order " + order_.str());
  }

  BigInt dim_sum = 0;
  for (int i = 0; i < irreps; ++i) {
    dim_sum += BigInt(dims_[i]) * dims_[i];
  }
  rep.dim_sum_ok = (dim_sum == order_);
  if (!rep.dim_sum_ok) {
    rep.failures.push_back("dimension sum: sum of squares " + dim_sum.str() +
                           " != order " + order_.str());
  }

  double max_row = 0.0;
  for (int i = 0; i < irreps; ++i) {
    for (int j = i; j < irreps; ++j) {
      double residual;
      if (backend_ == Backend::exact) {
        BigInt acc = 0;
        for (int c = 0; c < classes; ++c) {
          acc += class_sizes_[c] * exact_value(i, c) * exact_value(j, c);
        }
        BigInt expect = (i == j) ? order_ : BigInt(0);
        residual = (acc == expect)
                       ? 0.0
                       : std::abs(to_double(BigInt(acc - expect)) /
                                  to_double(order_));
      } else {
        std::complex<double> acc = 0.0;
        for (int c = 0; c < classes; ++c) {
          acc += to_double(class_sizes_[c]) * approx_value(i, c) *
                 std::conj(approx_value(j, c));
        }
        acc /= to_double(order_);
        residual = std::abs(acc - std::complex<double>(i == j ? 1.0 : 0.0));
      }
      max_row = std::max(max_row, residual);
      if (residual > tol) {
        rep.failures.push_back("row orthogonality at irreps '" +
                               irrep_labels_[i] + "' x '" + irrep_labels_[j] +
                               "': residual " + std::to_string(residual));
      }
    }
  }
  rep.max_row_residual = max_row;

  double max_col = 0.0;
  for (int c = 0; c < classes; ++c) {
    for (int d = c; d < classes; ++d) {
      double residual;
      if (backend_ == Backend::exact) {
        BigInt acc = 0;
        for (int i = 0; i < irreps; ++i) {
          acc += BigInt(exact_value(i, c)) * exact_value(i, d);
        }
        BigInt lhs = acc * class_sizes_[c];
        BigInt expect = (c == d) ? order_ : BigInt(0);
        residual = (lhs == expect)
                       ? 0.0
                       : std::abs(to_double(BigInt(lhs - expect)) /
                                  to_double(order_));
      } else {
        std::complex<double> acc = 0.0;
        for (int i = 0; i < irreps; ++i) {
          acc += approx_value(i, c) * std::conj(approx_value(i, d));
        }
        acc *= to_double(class_sizes_[c]) / to_double(order_);
        residual = std::abs(acc - std::complex<double>(c == d ? 1.0 : 0.0));
      }
      max_col = std::max(max_col, residual);
      if (residual > tol) {
        rep.failures.push_back("column orthogonality at classes '" +
                               class_labels_[c] + "' x '" + class_labels_[d] +
                               "': residual " + std::to_string(residual));
      }
    }
  }
  rep.max_col_residual = max_col;

  rep.power_maps_ok = true;
  for (int c = 0; c < classes; ++c) {
    if (power_class(c, exponent_) != 0) {
      rep.power_maps_ok = false;
      rep.failures.push_back("power map at exponent: class '" +
                             class_labels_[c] + "' does not reach identity");
    }
  }
  const long long amax = std::min<long long>(exponent_, 64);
  for (long long a = 2; a <= amax && rep.power_maps_ok; ++a) {
    for (long long b = 2; b <= amax && rep.power_maps_ok; ++b) {
      for (int c = 0; c < classes; ++c) {
        if (power_class(power_class(c, a), b) != power_class(c, a * b)) {
          rep.power_maps_ok = false;
          rep.failures.push_back(
              "power map composition at class '" + class_labels_[c] +
              "', powers " + std::to_string(a) + "," + std::to_string(b));
          break;
        }
      }
    }
  }

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace gelfand
