#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gelfand {

// A finite group on element indices 0..size-1 with identity 0.
struct ExplicitGroup {
  std::string name;
  int size = 0;
  std::function<int(int, int)> mul;
  std::function<int(int)> inv;

  // Identity and inverses exhaustively, associativity on random triples.
  void check_axioms(int random_triples, std::uint64_t seed) const;
};

enum class SmallGroupKind { symmetric, cyclic };

// Gamma itself: symmetric k in 1..3 (permutations in lexicographic order)
// or cyclic m in 1..4.
ExplicitGroup small_group(SmallGroupKind kind, int param);

struct WreathPair {
  ExplicitGroup group;         // G_n = Gamma^n semidirect S_n
  std::vector<int> k_members;  // sorted element indices of K_n = Delta x S_n
  int gamma_size = 0;
  int n = 0;
};

// Explicit wreath product, elements indexed lexicographically on
// (gamma-tuple, permutation). n <= 3 and |G| = |Gamma|^n n! <= 20000.
WreathPair build_wreath(SmallGroupKind kind, int param, int n);

struct DoubleCosets {
  int count = 0;
  std::vector<int> block;            // block id per element index
  std::vector<int> representatives;  // lowest element index per block
  std::vector<long long> sizes;
};

DoubleCosets double_cosets(const ExplicitGroup& g, const std::vector<int>& k);

struct CommuteCheck {
  bool commutes = false;
  // First (i, j, x) with (f_i * f_j)(x) != (f_j * f_i)(x), if any.
  std::optional<std::array<int, 3>> counterexample;
};

// Pairwise convolution commutativity of the double-coset indicator basis,
// checked pointwise in exact integer arithmetic (sums scaled by |G|).
// Requires at most 64 double cosets.
CommuteCheck convolution_commutes(const ExplicitGroup& g,
                                  const std::vector<int>& k);

// The trace identity behind the cycle-product rule: for a random gamma in
// S_3 per trial and every sigma of S_n preserving the dimension pattern,
// trace((A_1 (x) ... (x) A_n) P_sigma) equals the product over cycles of
// trace(A^{cycle length}), in exact integers. rep_dims entries are 1 (sign
// character) or 3 (permutation matrices); n = rep_dims.size() <= 3.
bool wreath_char_check(const std::vector<int>& rep_dims, int trials,
                       std::uint64_t seed);

}  // namespace gelfand
