// Acceptance gate: one line per criterion, exit status = number of failures.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gelfand/asymptotics.hpp"
#include "gelfand/character_table.hpp"
#include "gelfand/crack.hpp"
#include "gelfand/oracle.hpp"
#include "gelfand/partition.hpp"
#include "gelfand/table_io.hpp"
#include "gelfand/wreath.hpp"

using namespace gelfand;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  std::vector<std::string> problems;
  Clock::time_point start = Clock::now();

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

void report(int number, const std::string& title, Criterion& c) {
  char timing[64];
  std::snprintf(timing, sizeof(timing), "%.2fs", c.seconds());
  if (c.problems.empty()) {
    std::cout << "[PASS] criterion " << number << ": " << title << " ("
              << timing << ")\n";
  } else {
    ++failures;
    std::cout << "[FAIL] criterion " << number << ": " << title << " ("
              << timing << ")\n";
    for (const std::string& p : c.problems) std::cout << "       - " << p << "\n";
  }
}

json run_cli(const std::string& args, int& status) {
  std::string cmd = std::string(CRACKPOINT_BIN) + " " + args + " --json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return json();
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  json doc = json::parse(out, nullptr, false);
  if (doc.is_discarded()) return json();
  return doc;
}

std::string data_file(const std::string& name) {
  return std::string(GELFAND_DATA_DIR) + "/" + name;
}

long long scalar_int(const Scalar& s) {
  return s.to_multiplicity(1e-6);
}

// criterion 1: symmetric-group cracking points through the CLI, each run bounded
void criterion_1() {
  Criterion c;
  struct Row {
    std::string spec;
    int n_max;
    int expect;
  };
  const Row rows[] = {{"symmetric:3", 7, 6},
                      {"symmetric:4", 5, 4},
                      {"symmetric:5", 4, 3},
                      {"symmetric:6", 3, 3},
                      {"symmetric:7", 3, 3}};
  for (const Row& row : rows) {
    auto t0 = Clock::now();
    int status = 0;
    json doc = run_cli("crack " + row.spec + " --n-max " +
                           std::to_string(row.n_max),
                       status);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(status == 0, row.spec + ": exit " + std::to_string(status));
    c.expect(doc.value("cracking_point", -1) == row.expect,
             row.spec + ": N = " + doc.value("cracking_point", json()).dump() +
                 ", want " + std::to_string(row.expect));
    c.expect(secs <= 60.0, row.spec + ": took too long");
  }
  report(1, "cracking points N(S_3)=6, N(S_4)=4, N(S_k)=3 for 5<=k<=7", c);
}

// criterion 2: the S_5 worked example with the corrected character value
void criterion_2() {
  Criterion c;
  CharacterTable t = CharacterTable::symmetric(5);
  int lam = t.find_irrep("3.1.1").value();
  int psi = t.find_irrep("3.2").value();
  int fork = t.find_class("4.1").value();
  c.expect(to_int64(t.exact_value(psi, fork)) == -1,
           "chi_(3,2) at the (4,1) column must be -1");

  PiMultiset pi = PiMultiset::make(t, {lam, lam, psi});
  SPiClassFunction f = m_pi_function(pi);
  c.expect(f.young.num_tuples() == 2, "S_pi should be S_2 x S_1");
  c.expect(scalar_int(f.values[0]) == 2 && scalar_int(f.values[1]) == 2,
           "M_pi must be (2, 2) on the two classes");
  Decomposition dec = decompose_m_pi(pi);
  c.expect(dec.coeffs.size() == 2 && dec.coeffs[0] == 2 && dec.coeffs[1] == 0,
           "decomposition must be 2*trivial + 0*sign");
  report(2, "S_5 worked example: M_pi = 2 chi_triv", c);
}

// criterion 3: identity values for S_6 and S_7, both tie-break choices
void criterion_3() {
  Criterion c;
  CharacterTable s6 = CharacterTable::symmetric(6);
  for (const std::string& psi : {"4.1.1", "3.1.1.1"}) {
    PiMultiset pi = PiMultiset::make(
        s6, {s6.find_irrep("3.2.1").value(), s6.find_irrep("3.2.1").value(),
             s6.find_irrep(psi).value()});
    c.expect(scalar_int(m_pi_identity(pi)) == 4,
             "S_6 with psi = " + psi + ": M_pi(e) must be 4");
  }
  CharacterTable s7 = CharacterTable::symmetric(7);
  for (const std::string& lam : {"4.2.1", "3.2.1.1"}) {
    for (const std::string& psi : {"3.3.1", "3.2.2"}) {
      PiMultiset pi = PiMultiset::make(
          s7, {s7.find_irrep(lam).value(), s7.find_irrep(lam).value(),
               s7.find_irrep(psi).value()});
      c.expect(scalar_int(m_pi_identity(pi)) == 5,
               "S_7 with lambda = " + lam + ", psi = " + psi +
                   ": M_pi(e) must be 5");
    }
  }
  report(3, "identity values M_pi(e) = 4 for S_6 and 5 for S_7", c);
}

// criterion 4: the bound table rows for k = 8..11
void criterion_4() {
  Criterion c;
  int status = 0;
  json rows = run_cli("bound --from 8 --to 11", status);
  c.expect(status == 0, "exit " + std::to_string(status));
  const long long dims[] = {90, 216, 768, 2310};
  const long long thresholds[] = {46, 62, 86, 114};
  c.expect(rows.is_array() && rows.size() == 4, "four rows expected");
  for (size_t i = 0; rows.is_array() && i < rows.size() && i < 4; ++i) {
    c.expect(rows[i].value("dim_max", -1) == dims[i] &&
                 rows[i].value("threshold", -1) == thresholds[i],
             "row k=" + std::to_string(8 + i) + " must be (" +
                 std::to_string(dims[i]) + ", " + std::to_string(thresholds[i]) +
                 ")");
  }
  // the same numbers straight from the hook-length and recurrence paths
  for (int k = 8; k <= 11; ++k) {
    BoundRow row = inequality_check(k);
    c.expect(row.dim_max == max_dimension(k).dim, "dim source mismatch");
    c.expect(BigInt(row.threshold) == 2 * partition_count(k) + 2,
             "threshold source mismatch");
  }
  report(4, "bound table rows (90,46), (216,62), (768,86), (2310,114)", c);
}

// criterion 5: asymptotic crossover at k = 12 and monotone growth to 300
void criterion_5() {
  Criterion c;
  c.expect(r_ratio(12) >= 1.0, "r(12) must be >= 1");
  double prev = r_ratio(12);
  bool monotone = true;
  for (int k = 13; k <= 300; ++k) {
    double cur = r_ratio(k);
    if (cur <= prev) monotone = false;
    prev = cur;
  }
  c.expect(monotone, "r must increase on [12, 300]");
  const double c0 = std::numbers::pi / std::sqrt(6.0);
  for (int k = 1; k <= 20; ++k) {
    double fact = std::tgamma(static_cast<double>(k) + 1.0);
    double direct = (2.0 * k * std::sqrt(3.0) *
                         (std::exp(-c0 * std::sqrt(k)) * std::sqrt(fact)) -
                     4.0 * k * std::sqrt(3.0)) /
                    std::exp(std::numbers::pi * std::sqrt(2.0 * k / 3.0));
    double log_space = r_ratio(k);
    double scale = std::max({1.0, std::abs(direct), std::abs(log_space)});
    if (std::abs(direct - log_space) > 1e-8 * scale) {
      c.expect(false, "log-space and direct evaluation drift at k = " +
                          std::to_string(k));
    }
  }
  report(5, "asymptotic crossover r(12) >= 1, monotone to k = 300", c);
}

// criterion 6: brute-force oracle equivalence on all nine desk-scale pairs
void criterion_6() {
  Criterion c;
  const SmallGroupKind kinds[] = {SmallGroupKind::cyclic,
                                  SmallGroupKind::cyclic,
                                  SmallGroupKind::symmetric};
  const int params[] = {2, 3, 3};
  const char* names[] = {"C2", "C3", "S3"};
  for (int g = 0; g < 3; ++g) {
    CharacterTable table = (kinds[g] == SmallGroupKind::symmetric)
                               ? CharacterTable::symmetric(params[g])
                               : CharacterTable::cyclic(params[g]);
    for (int n = 1; n <= 3; ++n) {
      std::string tag = std::string(names[g]) + " at n=" + std::to_string(n);
      WreathPair pair = build_wreath(kinds[g], params[g], n);
      pair.group.check_axioms(500, 12345);
      CommuteCheck check = convolution_commutes(pair.group, pair.k_members);
      GelfandReport rep = is_gelfand(table, n);
      c.expect(check.commutes == rep.gelfand, tag + ": verdicts disagree");
      DoubleCosets dc = double_cosets(pair.group, pair.k_members);
      c.expect(BigInt(dc.count) == intertwiner_number(table, n),
               tag + ": coset count != sum of squared multiplicities");
    }
  }
  c.expect(c.seconds() <= 120.0, "oracle sweep took too long");
  report(6, "oracle equivalence for C2, C3, S3 at n = 1..3", c);
}

// criterion 7: reported cracking points for D5, D7, GL(2,3), abelian C4,
// and the BR range
void criterion_7() {
  Criterion c;
  struct Row {
    std::string spec;
    int n_max;
    int expect;  // -1 for no crack
    long long gamma_order;
  };
  const Row rows[] = {{"dihedral:5", 7, 6, 10},
                      {"dihedral:7", 7, 6, 14},
                      {"file:" + data_file("gl23.json"), 4, 3, 48},
                      {"cyclic:4", 4, -1, 4}};
  for (const Row& row : rows) {
    int status = 0;
    json doc = run_cli("crack " + row.spec + " --n-max " +
                           std::to_string(row.n_max),
                       status);
    c.expect(status == 0, row.spec + ": exit " + std::to_string(status));
    json n = doc.value("cracking_point", json());
    if (row.expect < 0) {
      c.expect(n.is_null(), row.spec + ": must not crack");
    } else {
      c.expect(n == row.expect,
               row.spec + ": N = " + n.dump() + ", want " +
                   std::to_string(row.expect));
      c.expect(3 <= row.expect && row.expect <= row.gamma_order,
               row.spec + ": N outside the 3 <= N <= |Gamma| range");
      c.expect(doc.value("br_warning", true) == false,
               row.spec + ": unexpected range warning");
    }
  }
  report(7, "cracking points N(D5)=N(D7)=6, N(GL(2,3))=3, abelian never", c);
}

// criterion 8: property suites
void criterion_8() {
  Criterion c;
  // exact orthogonality with zero residual
  for (int k = 1; k <= 12; ++k) {
    ValidationReport rep = CharacterTable::symmetric(k).validate();
    if (!rep.pass || rep.max_row_residual != 0.0 ||
        rep.max_col_residual != 0.0) {
      c.expect(false, "S_" + std::to_string(k) + " residual not exactly zero");
    }
  }
  // class sizes and squared dimensions sum to k!
  for (int k = 1; k <= 20; ++k) {
    BigInt sizes = 0, squares = 0;
    for (const Partition& p : enumerate_partitions(k)) {
      sizes += class_size(p);
      BigInt d = hook_dimension(p);
      squares += d * d;
    }
    BigInt fact = factorial(k);
    if (sizes != fact || squares != fact) {
      c.expect(false, "sum identities fail at k = " + std::to_string(k));
    }
  }
  // every decomposition encountered at the desk-scale levels is a
  // nonnegative integer combination with the right mass
  struct Level {
    CharacterTable table;
    int n_max;
  };
  const Level levels[] = {{CharacterTable::symmetric(3), 6},
                          {CharacterTable::symmetric(4), 4},
                          {CharacterTable::symmetric(5), 3},
                          {CharacterTable::symmetric(6), 3},
                          {CharacterTable::symmetric(7), 3},
                          {CharacterTable::dihedral(5), 6},
                          {CharacterTable::dihedral(7), 6},
                          {load_table_file(data_file("gl23.json")), 3},
                          {CharacterTable::cyclic(4), 4}};
  for (const Level& level : levels) {
    for (int n = 1; n <= level.n_max; ++n) {
      for (const PiMultiset& pi : enumerate_pi(level.table, n)) {
        Decomposition dec = decompose_m_pi(pi);  // throws on bad coefficients
        BigInt mass = 0;
        for (long long r = 0; r < dec.young.num_tuples(); ++r) {
          long long a = dec.coeffs[static_cast<size_t>(r)];
          if (a < 0) c.expect(false, "negative coefficient survived");
          mass += BigInt(a) * dec.young.irrep_dimension(r);
        }
        if (mass != dec.m_pi_e) {
          c.expect(false, "mass identity fails for " + level.table.name());
        }
      }
    }
  }
  // dimension audit
  for (int n = 1; n <= 3; ++n) {
    for (const CharacterTable& t :
         {CharacterTable::symmetric(3), CharacterTable::cyclic(2),
          CharacterTable::cyclic(3)}) {
      AuditRecord audit = dimension_audit(t, n);
      if (!audit.pass) {
        c.expect(false, t.name() + " audit fails at n = " + std::to_string(n));
      }
    }
  }
  // the trace identity with 100 seeded trials
  c.expect(wreath_char_check({3, 3, 3}, 100, 12345),
           "trace identity fails for three permutation factors");
  c.expect(wreath_char_check({1, 3, 3}, 100, 12345),
           "trace identity fails for mixed factors");
  report(8, "property suites: orthogonality, sum rules, masses, audits, traces",
         c);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::cout << "all 8 acceptance criteria hold\n";
  } else {
    std::cout << failures << " acceptance criteria failed\n";
  }
  return failures;
}
