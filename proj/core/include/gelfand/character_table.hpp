#pragma once

#include <complex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/partition.hpp"
#include "gelfand/scalar.hpp"

namespace gelfand {

enum class Backend { exact, approx };

struct ValidationReport {
  bool pass = false;
  double max_row_residual = 0.0;
  double max_col_residual = 0.0;
  bool identity_ok = false;
  bool size_sum_ok = false;
  bool dim_sum_ok = false;
  bool power_maps_ok = false;
  std::vector<std::string> failures;  // each names the offending row/column
};

// A finite group presented by classes, sizes, power maps, and irreducible
// character values. Immutable after construction; value storage is either
// exact 64-bit integers or complex doubles, never both.
class CharacterTable {
public:
  // Exact integer table of S_k via the Murnaghan-Nakayama rule. Classes are
  // cycle types starting at the identity (1^k); irreps are partitions in the
  // fixed order, trivial (k) first. 1 <= k <= 30.
  static CharacterTable symmetric(int k);

  // Approximate table of the cyclic group C_m: classes g0..g{m-1}, irrep
  // chi_j valued exp(2*pi*i*j*k/m) at class k. 1 <= m <= 1000.
  static CharacterTable cyclic(int m);

  // Approximate table of the dihedral group of order 2m, m >= 3. Odd m:
  // classes e, r1..r{(m-1)/2}, s; irreps triv, det, rho_j with rotation
  // values 2cos(2*pi*j*k/m). Even m adds the central rotation class and a
  // second reflection class plus two more linear characters. m <= 1000.
  static CharacterTable dihedral(int m);

  // Raw constructor used by the builders and the file loader. Stored power
  // maps are indexed by m-2 for m in 2..exponent and may be empty when kind
  // is functional (the builders pass computed maps through `kind`).
  CharacterTable(std::string name, BigInt order, long long exponent,
                 Backend backend, std::vector<std::string> class_labels,
                 std::vector<BigInt> class_sizes,
                 std::vector<std::vector<int>> stored_power_maps,
                 std::vector<std::string> irrep_labels,
                 std::vector<long long> exact_values,
                 std::vector<std::complex<double>> approx_values);

  const std::string& name() const { return name_; }
  Backend backend() const { return backend_; }
  const BigInt& order() const { return order_; }
  long long exponent() const { return exponent_; }
  int num_classes() const { return static_cast<int>(class_labels_.size()); }
  int num_irreps() const { return static_cast<int>(irrep_labels_.size()); }
  const std::vector<std::string>& class_labels() const { return class_labels_; }
  const std::vector<std::string>& irrep_labels() const { return irrep_labels_; }
  const std::vector<BigInt>& class_sizes() const { return class_sizes_; }

  std::optional<int> find_class(const std::string& label) const;
  std::optional<int> find_irrep(const std::string& label) const;

  // Value accessors; exact_value throws on an approximate table.
  long long exact_value(int irrep, int cls) const;
  std::complex<double> approx_value(int irrep, int cls) const;
  Scalar value(int irrep, int cls) const;
  std::vector<Scalar> character_row(int irrep) const;

  long long dimension(int irrep) const { return dims_[irrep]; }
  bool is_real(int irrep) const { return real_[irrep]; }
  bool is_abelian() const;

  // Class of x^m for x in class cls, any m >= 1. Stored maps reduce m mod
  // exponent (x^exponent = e); generated tables evaluate in closed form.
  int power_class(int cls, long long m) const;

  // <f, g> = (1/|G|) sum over classes of size * f * conj(g). Exact rational
  // when the backend is exact and both arguments are exact scalars.
  Scalar inner_product(const std::vector<Scalar>& f,
                       const std::vector<Scalar>& g) const;

  // Orthogonality, size/dimension sums, and power-map consistency. Exact
  // tables must produce residual exactly zero; approximate tables are held
  // to tol. The report carries failures; nothing throws here.
  ValidationReport validate(double tol = 1e-9) const;

  // True when stored power maps exist for every m in 2..exponent (file-born
  // tables); generated tables compute powers functionally.
  bool has_stored_power_maps() const { return kind_ == PowerKind::stored; }

private:
  enum class PowerKind { stored, symmetric_group, cyclic_group, dihedral_group };

  CharacterTable() = default;

  void finish_construction();

  std::string name_;
  BigInt order_;
  long long exponent_ = 1;
  Backend backend_ = Backend::exact;
  PowerKind kind_ = PowerKind::stored;
  int group_param_ = 0;  // k for S_k, m for C_m / D_m
  std::vector<std::string> class_labels_;
  std::vector<BigInt> class_sizes_;
  std::vector<std::vector<int>> stored_power_maps_;  // index m-2
  std::vector<std::string> irrep_labels_;
  std::vector<long long> exact_values_;              // row-major
  std::vector<std::complex<double>> approx_values_;  // row-major
  std::vector<Partition> class_cycle_types_;         // symmetric kind only
  std::unordered_map<std::string, int> class_index_;
  std::unordered_map<std::string, int> irrep_index_;
  std::vector<long long> dims_;
  std::vector<bool> real_;
};

// Exact character value chi_lambda(mu) of the symmetric group by recursive
// border-strip removal, memoized on (lambda, remaining mu suffix). Weights
// must agree and stay <= 30.
long long mn_character(const Partition& lambda, const Partition& mu);

}  // namespace gelfand
