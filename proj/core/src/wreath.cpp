#include "gelfand/wreath.hpp"

#include <algorithm>
#include <map>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

constexpr long long kPiCap = 1000000;

void check_labels(const CharacterTable& gamma, const std::vector<int>& labels) {
  if (labels.empty()) throw ValidationError("pi needs at least one label");
  for (int l : labels) {
    if (l < 0 || l >= gamma.num_irreps()) {
      throw ValidationError("irrep index " + std::to_string(l) +
                            " out of range for table '" + gamma.name() + "'");
    }
  }
}

// Power classes for every Gamma-class at each cycle length appearing in the
// class tuple; M_pi touches the same powers many times.
std::map<int, std::vector<int>> power_class_maps(
    const CharacterTable& gamma, const std::vector<Partition>& cls) {
  std::map<int, std::vector<int>> maps;
  for (const Partition& t : cls) {
    for (int part : t.parts()) {
      if (maps.count(part)) continue;
      std::vector<int> pc(gamma.num_classes());
      for (int c = 0; c < gamma.num_classes(); ++c) {
        pc[c] = gamma.power_class(c, part);
      }
      maps.emplace(part, std::move(pc));
    }
  }
  return maps;
}

Scalar m_pi_from_tuple(const PiMultiset& pi, const std::vector<Partition>& cls) {
  const CharacterTable& gamma = *pi.gamma;
  std::map<int, std::vector<int>> powers = power_class_maps(gamma, cls);
  if (gamma.backend() == Backend::exact) {
    BigInt num = 0;
    for (int c = 0; c < gamma.num_classes(); ++c) {
      BigInt prod = 1;
      for (size_t j = 0; j < cls.size(); ++j) {
        for (int part : cls[j].parts()) {
          prod *= gamma.exact_value(pi.block_labels[j], powers.at(part)[c]);
        }
      }
      num += gamma.class_sizes()[c] * prod;
    }
    return Scalar(BigRat(num) / BigRat(gamma.order()));
  }
  std::complex<double> acc = 0.0;
  for (int c = 0; c < gamma.num_classes(); ++c) {
    std::complex<double> prod = 1.0;
    for (size_t j = 0; j < cls.size(); ++j) {
      for (int part : cls[j].parts()) {
        prod *= gamma.approx_value(pi.block_labels[j], powers.at(part)[c]);
      }
    }
    acc += to_double(gamma.class_sizes()[c]) * prod;
  }
  return Scalar(acc / to_double(gamma.order()));
}

}  // namespace

PiMultiset PiMultiset::make(const CharacterTable& gamma,
                            std::vector<int> labels) {
  check_labels(gamma, labels);
  std::sort(labels.begin(), labels.end());
  PiMultiset pi;
  pi.gamma = &gamma;
  pi.labels = std::move(labels);
  for (int l : pi.labels) {
    if (pi.block_labels.empty() || pi.block_labels.back() != l) {
      pi.block_labels.push_back(l);
      pi.block_sizes.push_back(1);
    } else {
      ++pi.block_sizes.back();
    }
  }
  return pi;
}

std::vector<std::string> PiMultiset::label_strings() const {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(gamma->irrep_labels()[l]);
  return out;
}

std::vector<PiMultiset> enumerate_pi(const CharacterTable& gamma, int n) {
  if (n < 1) throw ValidationError("enumerate_pi needs n >= 1");
  const int s = gamma.num_irreps();
  BigInt count = 1;  // C(s+n-1, n)
  for (int i = 1; i <= n; ++i) {
    count = count * (s + n - i) / i;
  }
  if (count > kPiCap) {
    throw SizeLimitError("pi multiset count " + count.str() + " exceeds " +
                         std::to_string(kPiCap));
  }
  std::vector<PiMultiset> out;
  out.reserve(static_cast<size_t>(to_int64(count)));
  std::vector<int> labels(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(PiMultiset::make(gamma, labels));
    int pos = n - 1;
    while (pos >= 0 && labels[static_cast<size_t>(pos)] == s - 1) --pos;
    if (pos < 0) break;
    int next = labels[static_cast<size_t>(pos)] + 1;
    for (int i = pos; i < n; ++i) labels[static_cast<size_t>(i)] = next;
  }
  return out;
}

YoungProduct stabilizer(const PiMultiset& pi) {
  return YoungProduct(pi.block_sizes);
}

Scalar m_pi(const PiMultiset& pi, const std::vector<Partition>& cls) {
  if (cls.size() != pi.block_sizes.size()) {
    throw ValidationError("class tuple has " + std::to_string(cls.size()) +
                          " entries, expected " +
                          std::to_string(pi.block_sizes.size()));
  }
  for (size_t j = 0; j < cls.size(); ++j) {
    if (cls[j].weight() != pi.block_sizes[j]) {
      throw ValidationError("class tuple entry " + cls[j].str() +
                            " is not a partition of " +
                            std::to_string(pi.block_sizes[j]));
    }
  }
  return m_pi_from_tuple(pi, cls);
}

SPiClassFunction m_pi_function(const PiMultiset& pi) {
  SPiClassFunction f{stabilizer(pi), {}};
  f.values.reserve(static_cast<size_t>(f.young.num_tuples()));
  for (long long cls = 0; cls < f.young.num_tuples(); ++cls) {
    f.values.push_back(m_pi_from_tuple(pi, f.young.tuple(cls)));
  }
  return f;
}

Scalar m_pi_identity(const PiMultiset& pi) {
  const CharacterTable& gamma = *pi.gamma;
  if (gamma.backend() == Backend::exact) {
    BigInt num = 0;
    for (int c = 0; c < gamma.num_classes(); ++c) {
      BigInt prod = 1;
      for (int l : pi.labels) prod *= gamma.exact_value(l, c);
      num += gamma.class_sizes()[c] * prod;
    }
    return Scalar(BigRat(num) / BigRat(gamma.order()));
  }
  std::complex<double> acc = 0.0;
  for (int c = 0; c < gamma.num_classes(); ++c) {
    std::complex<double> prod = 1.0;
    for (int l : pi.labels) prod *= gamma.approx_value(l, c);
    acc += to_double(gamma.class_sizes()[c]) * prod;
  }
  return Scalar(acc / to_double(gamma.order()));
}

long long kron_multiplicity(const CharacterTable& gamma,
                            const std::vector<int>& sources, int target,
                            double tol) {
  for (int s : sources) {
    if (s < 0 || s >= gamma.num_irreps()) {
      throw ValidationError("source irrep index out of range");
    }
  }
  if (target < 0 || target >= gamma.num_irreps()) {
    throw ValidationError("target irrep index out of range");
  }
  if (!gamma.is_real(target)) {
    throw HypothesisError("target character '" +
                          gamma.irrep_labels()[target] +
                          "' is not real-valued");
  }
  std::vector<Scalar> product(static_cast<size_t>(gamma.num_classes()));
  for (int c = 0; c < gamma.num_classes(); ++c) {
    Scalar v = gamma.backend() == Backend::exact
                   ? Scalar(BigRat(1))
                   : Scalar(std::complex<double>(1.0, 0.0));
    for (int s : sources) v = v * gamma.value(s, c);
    product[static_cast<size_t>(c)] = v;
  }
  return gamma.inner_product(product, gamma.character_row(target))
      .to_multiplicity(tol);
}

Decomposition decompose_m_pi(const PiMultiset& pi, double tol) {
  SPiClassFunction f = m_pi_function(pi);
  const YoungProduct& young = f.young;
  const CharacterTable& gamma = *pi.gamma;

  // The cycle-product rule and the plain class sum are independent paths to
  // M_pi(e); they must agree.
  Scalar direct = m_pi_identity(pi);
  const Scalar& via_tuple = f.values[static_cast<size_t>(young.num_tuples() - 1)];
  if (gamma.backend() == Backend::exact) {
    if (direct.rational() != via_tuple.rational()) {
      throw Error("M_pi(e) mismatch between evaluation rules");
    }
  } else if (std::abs(direct.as_complex() - via_tuple.as_complex()) > tol) {
    throw Error("M_pi(e) mismatch between evaluation rules");
  }
  long long m_pi_e = direct.to_multiplicity(tol);

  Decomposition dec{young, {}, m_pi_e};
  dec.coeffs.reserve(static_cast<size_t>(young.num_tuples()));
  BigInt mass = 0;
  for (long long rho = 0; rho < young.num_tuples(); ++rho) {
    Scalar a;
    if (gamma.backend() == Backend::exact) {
      BigRat acc = 0;
      for (long long cls = 0; cls < young.num_tuples(); ++cls) {
        acc += BigRat(young.class_tuple_size(cls) * young.character(rho, cls)) *
               f.values[static_cast<size_t>(cls)].rational();
      }
      a = Scalar(acc / BigRat(young.order()));
    } else {
      std::complex<double> acc = 0.0;
      for (long long cls = 0; cls < young.num_tuples(); ++cls) {
        acc += to_double(young.class_tuple_size(cls) *
                         young.character(rho, cls)) *
               f.values[static_cast<size_t>(cls)].as_complex();
      }
      a = Scalar(acc / to_double(young.order()));
    }
    long long coeff = a.to_multiplicity(tol);
    dec.coeffs.push_back(coeff);
    mass += BigInt(coeff) * young.irrep_dimension(rho);
  }
  if (mass != m_pi_e) {
    throw Error("decomposition mass " + mass.str() + " != M_pi(e) " +
                std::to_string(m_pi_e));
  }
  return dec;
}

bool lemma31_filter(const PiMultiset& pi, double tol) {
  long long m_pi_e = m_pi_identity(pi).to_multiplicity(tol);
  BigInt bound = 1;
  for (int m : pi.block_sizes) bound *= involution_count(m);
  return BigInt(m_pi_e) > bound;
}

}  // namespace gelfand
