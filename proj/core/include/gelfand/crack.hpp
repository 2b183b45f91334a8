#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gelfand/character_table.hpp"
#include "gelfand/wreath.hpp"

namespace gelfand {

struct SearchOptions {
  // Keep scanning after the first multiplicity >= 2 (the witness stays the
  // first one either way).
  bool exhaustive = false;
  // Parallelism only; never affects any reported value.
  int workers = 1;
  double tol = 1e-6;
};

struct Witness {
  std::vector<std::string> pi;  // Gamma-irrep labels, length n
  std::string rho;              // S_pi irrep tuple label
  long long coeff = 0;          // a_rho >= 2
};

struct GelfandReport {
  std::string gamma;
  int n = 0;
  bool gelfand = false;
  std::optional<Witness> witness;
  long long examined = 0;      // pi representatives, as if scanned in order
  long long total = 0;         // all representatives at this level
  long long lemma31_hits = 0;  // short-circuited by the dimension filter
  long long kron_hits = 0;     // trivial-stabilizer tensor fast path
};

// Scans pi representatives in enumeration order: dimension filter first,
// then the tensor fast path when the stabilizer is trivial and the last
// character real, then the full decomposition. Verdict not-gelfand on the
// first coefficient >= 2; the witness is the first (pi, rho) in order.
GelfandReport is_gelfand(const CharacterTable& gamma, int n,
                         const SearchOptions& opts = {});

struct CrackReport {
  std::string gamma;
  int n_max = 0;
  std::optional<int> cracking_point;
  std::vector<GelfandReport> levels;  // levels 1..N (or 1..n_max)
  bool br_warning = false;            // nonabelian N outside [3, |Gamma|]
  std::string br_message;
};

CrackReport cracking_point(const CharacterTable& gamma, int n_max,
                           const SearchOptions& opts = {});

struct AuditRecord {
  std::string gamma;
  int n = 0;
  BigInt induced_dimension_sum;  // sum a_rho (n!/|S_pi|) prod dim pi * dim rho
  BigInt expected;               // |Gamma|^{n-1}
  bool pass = false;
};

// Global consistency of the decomposition across all pi representatives.
AuditRecord dimension_audit(const CharacterTable& gamma, int n,
                            double tol = 1e-6);

// Sum of a_rho^2 over all (pi representative, rho); equals the number of
// K_n-double cosets in G_n by intertwiner counting.
BigInt intertwiner_number(const CharacterTable& gamma, int n,
                          double tol = 1e-6);

}  // namespace gelfand
