#include "gelfand/crack.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

struct PiOutcome {
  bool failing = false;
  bool filter_hit = false;
  bool kron_used = false;
  std::string rho;
  long long coeff = 0;
  std::exception_ptr error;
};

// First rho in tuple order with a coefficient >= 2, if any.
bool first_heavy_rho(const Decomposition& dec, std::string* rho,
                     long long* coeff) {
  for (long long r = 0; r < dec.young.num_tuples(); ++r) {
    if (dec.coeffs[static_cast<size_t>(r)] >= 2) {
      *rho = dec.young.tuple_label(r);
      *coeff = dec.coeffs[static_cast<size_t>(r)];
      return true;
    }
  }
  return false;
}

PiOutcome evaluate_pi(const PiMultiset& pi, double tol) {
  PiOutcome out;
  std::string ctx = "pi=(";
  {
    std::vector<std::string> labels = pi.label_strings();
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) ctx += ',';
      ctx += labels[i];
    }
    ctx += "): ";
  }
  try {
    if (lemma31_filter(pi, tol)) {
      out.filter_hit = true;
      out.failing = true;
      // The filter guarantees a heavy coefficient; decompose only to name it.
      Decomposition dec = decompose_m_pi(pi, tol);
      if (!first_heavy_rho(dec, &out.rho, &out.coeff)) {
        throw Error("dimension filter fired but no coefficient >= 2");
      }
      return out;
    }
    const bool trivial_stabilizer =
        std::all_of(pi.block_sizes.begin(), pi.block_sizes.end(),
                    [](int m) { return m == 1; });
    if (trivial_stabilizer && pi.n() >= 2 &&
        pi.gamma->is_real(pi.labels.back())) {
      std::vector<int> sources(pi.labels.begin(), pi.labels.end() - 1);
      long long a =
          kron_multiplicity(*pi.gamma, sources, pi.labels.back(), tol);
      long long check = m_pi_identity(pi).to_multiplicity(tol);
      if (a != check) {
        throw Error("tensor fast path disagrees with the class sum");
      }
      out.kron_used = true;
      if (a >= 2) {
        out.failing = true;
        out.coeff = a;
        out.rho = YoungProduct(pi.block_sizes).tuple_label(0);
      }
      return out;
    }
    Decomposition dec = decompose_m_pi(pi, tol);
    out.failing = first_heavy_rho(dec, &out.rho, &out.coeff);
    return out;
  } catch (const IntegralityError& e) {
    out.error = std::make_exception_ptr(IntegralityError(ctx + e.what()));
  } catch (const NegativeCoefficientError& e) {
    out.error =
        std::make_exception_ptr(NegativeCoefficientError(ctx + e.what()));
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

// Evaluates pis[begin..end) into outs, possibly on several threads. The
// function is pure per index, so scheduling cannot change any outcome.
void evaluate_wave(const std::vector<PiMultiset>& pis, size_t begin,
                   size_t end, int workers, double tol,
                   std::vector<PiOutcome>& outs) {
  const size_t count = end - begin;
  const size_t threads =
      std::min<size_t>(static_cast<size_t>(std::max(1, workers)), count);
  if (threads <= 1) {
    for (size_t i = begin; i < end; ++i) {
      outs[i - begin] = evaluate_pi(pis[i], tol);
    }
    return;
  }
  std::atomic<size_t> next(begin);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < end; i = next.fetch_add(1)) {
        outs[i - begin] = evaluate_pi(pis[i], tol);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

GelfandReport is_gelfand(const CharacterTable& gamma, int n,
                         const SearchOptions& opts) {
  std::vector<PiMultiset> pis = enumerate_pi(gamma, n);
  GelfandReport rep;
  rep.gamma = gamma.name();
  rep.n = n;
  rep.total = static_cast<long long>(pis.size());

  const size_t wave = static_cast<size_t>(std::max(1, opts.workers)) * 16;
  long long witness_idx = -1;
  size_t begin = 0;
  bool done = false;
  while (begin < pis.size() && !done) {
    const size_t end = std::min(pis.size(), begin + wave);
    std::vector<PiOutcome> outs(end - begin);
    evaluate_wave(pis, begin, end, opts.workers, opts.tol, outs);
    // Ordered reduction: counts and the witness are exactly what a
    // sequential scan would have produced.
    for (size_t i = begin; i < end; ++i) {
      PiOutcome& o = outs[i - begin];
      if (o.error) std::rethrow_exception(o.error);
      ++rep.examined;
      if (o.filter_hit) ++rep.lemma31_hits;
      if (o.kron_used) ++rep.kron_hits;
      if (o.failing && witness_idx < 0) {
        witness_idx = static_cast<long long>(i);
        rep.witness = Witness{pis[i].label_strings(), o.rho, o.coeff};
        if (!opts.exhaustive) {
          done = true;
          break;
        }
      }
    }
    begin = end;
  }
  rep.gelfand = (witness_idx < 0);
  return rep;
}

CrackReport cracking_point(const CharacterTable& gamma, int n_max,
                           const SearchOptions& opts) {
  if (n_max < 1) throw ValidationError("n_max must be >= 1");
  CrackReport rep;
  rep.gamma = gamma.name();
  rep.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    rep.levels.push_back(is_gelfand(gamma, n, opts));
    if (!rep.levels.back().gelfand) {
      rep.cracking_point = n;
      break;
    }
  }
  if (!gamma.is_abelian()) {
    if (rep.cracking_point) {
      const int point = *rep.cracking_point;
      if (point < 3 || BigInt(point) > gamma.order()) {
        rep.br_warning = true;
        rep.br_message = "cracking point " + std::to_string(point) +
                         " violates the bound 3 <= N <= |Gamma| = " +
                         gamma.order().str();
      }
    } else if (BigInt(n_max) >= gamma.order()) {
      rep.br_warning = true;
      rep.br_message =
          "no crack found up to n_max = " + std::to_string(n_max) +
          " although N <= |Gamma| = " + gamma.order().str() + " is expected";
    }
  }
  return rep;
}

AuditRecord dimension_audit(const CharacterTable& gamma, int n, double tol) {
  AuditRecord rec;
  rec.gamma = gamma.name();
  rec.n = n;
  rec.induced_dimension_sum = 0;
  const BigInt n_factorial = factorial(n);
  for (const PiMultiset& pi : enumerate_pi(gamma, n)) {
    Decomposition dec = decompose_m_pi(pi, tol);
    BigInt pi_dim = 1;
    for (int l : pi.labels) pi_dim *= gamma.dimension(l);
    const BigInt orbit = n_factorial / dec.young.order();
    BigInt mass = 0;
    for (long long rho = 0; rho < dec.young.num_tuples(); ++rho) {
      mass += BigInt(dec.coeffs[static_cast<size_t>(rho)]) *
              dec.young.irrep_dimension(rho);
    }
    rec.induced_dimension_sum += orbit * pi_dim * mass;
  }
  rec.expected = 1;
  for (int i = 1; i < n; ++i) rec.expected *= gamma.order();
  rec.pass = (rec.induced_dimension_sum == rec.expected);
  return rec;
}

BigInt intertwiner_number(const CharacterTable& gamma, int n, double tol) {
  BigInt total = 0;
  for (const PiMultiset& pi : enumerate_pi(gamma, n)) {
    Decomposition dec = decompose_m_pi(pi, tol);
    for (long long c : dec.coeffs) total += BigInt(c) * c;
  }
  return total;
}

}  // namespace gelfand
