#pragma once

#include <string>
#include <vector>

#include "gelfand/character_table.hpp"
#include "gelfand/scalar.hpp"
#include "gelfand/young.hpp"

namespace gelfand {

// The irrep pi of Gamma^n as a sorted multiset of Gamma-irrep indices,
// together with its block structure (distinct labels and multiplicities).
struct PiMultiset {
  const CharacterTable* gamma = nullptr;
  std::vector<int> labels;        // weakly increasing irrep indices
  std::vector<int> block_labels;  // distinct labels, in label order
  std::vector<int> block_sizes;   // multiplicities m_j, sum = n

  // Sorts the labels, so any input ordering yields the same multiset.
  static PiMultiset make(const CharacterTable& gamma, std::vector<int> labels);

  int n() const { return static_cast<int>(labels.size()); }
  std::vector<std::string> label_strings() const;
};

// All pi representatives (weakly increasing label sequences of length n) in
// lexicographic order. Cap: C(s+n-1, n) <= 10^6 where s = #irreps of Gamma.
std::vector<PiMultiset> enumerate_pi(const CharacterTable& gamma, int n);

// S_pi as a Young product: block sizes are the label multiplicities.
YoungProduct stabilizer(const PiMultiset& pi);

// M_pi evaluated on every class tuple of S_pi, indexed like the tuples of
// `young`.
struct SPiClassFunction {
  YoungProduct young;
  std::vector<Scalar> values;
};

// M_pi at one class tuple: (1/|Gamma|) sum over classes C of |C| times the
// cycle product prod_j prod_{cycle lengths L of t_j} chi_{l_j}(class of C^L).
Scalar m_pi(const PiMultiset& pi, const std::vector<Partition>& cls);

SPiClassFunction m_pi_function(const PiMultiset& pi);

// M_pi at the identity by the plain class sum (no powers): an independent
// code path kept for cross-checking the cycle-product rule.
Scalar m_pi_identity(const PiMultiset& pi);

// Multiplicity of `target` in the tensor product of `sources`, via the inner
// product of the pointwise product character. The target character must be
// real-valued (hypothesis of the fast path), else HypothesisError.
long long kron_multiplicity(const CharacterTable& gamma,
                            const std::vector<int>& sources, int target,
                            double tol = 1e-6);

struct Decomposition {
  YoungProduct young;
  std::vector<long long> coeffs;  // a_rho per irrep tuple index
  long long m_pi_e;               // equals sum of a_rho * dim rho (enforced)
};

// All coefficients a_rho = <M_pi, chi_rho> as nonnegative integers under the
// rounding rule. Also cross-checks m_pi against m_pi_identity at the
// identity tuple and the mass identity sum a_rho dim rho = M_pi(e).
Decomposition decompose_m_pi(const PiMultiset& pi, double tol = 1e-6);

// True iff M_pi(e) > prod_j involution_count(m_j); true guarantees some
// coefficient >= 2 without decomposing.
bool lemma31_filter(const PiMultiset& pi, double tol = 1e-6);

}  // namespace gelfand
