#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gelfand/asymptotics.hpp"
#include "gelfand/character_table.hpp"
#include "gelfand/crack.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/oracle.hpp"
#include "gelfand/table_io.hpp"
#include "gelfand/wreath.hpp"

namespace {

using gelfand::BigInt;
using gelfand::CharacterTable;
using nlohmann::ordered_json;

// Bad command-line input that CLI11 cannot catch itself (group specs,
// unknown labels, arity mismatches).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ordered_json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) return v.str();
  return v.convert_to<long long>();
}

struct GroupSpec {
  std::string kind;
  std::string arg;
};

GroupSpec split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
    throw UsageError("group spec '" + spec +
                     "' is not of the form kind:arg "
                     "(symmetric:k | cyclic:m | dihedral:m | file:path)");
  }
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

int spec_int(const GroupSpec& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s.arg, &used);
    if (used != s.arg.size()) throw std::invalid_argument(s.arg);
    return v;
  } catch (const std::exception&) {
    throw UsageError("group spec '" + s.kind + ":" + s.arg +
                     "' needs an integer argument");
  }
}

CharacterTable resolve_group(const std::string& spec) {
  GroupSpec s = split_spec(spec);
  if (s.kind == "symmetric") return CharacterTable::symmetric(spec_int(s));
  if (s.kind == "cyclic") return CharacterTable::cyclic(spec_int(s));
  if (s.kind == "dihedral") return CharacterTable::dihedral(spec_int(s));
  if (s.kind == "file") return gelfand::load_table_file(s.arg);
  throw UsageError("unknown group kind '" + s.kind +
                   "' (symmetric | cyclic | dihedral | file)");
}

int find_irrep_or_usage(const CharacterTable& t, const std::string& label) {
  if (auto idx = t.find_irrep(label)) return *idx;
  throw UsageError("group '" + t.name() + "' has no irrep labeled '" + label +
                   "'");
}

std::string backend_name(const CharacterTable& t) {
  return t.backend() == gelfand::Backend::exact ? "exact" : "approx";
}

// ---- chartable ----

int run_chartable(const std::string& spec, bool json) {
  CharacterTable t = resolve_group(spec);
  if (json) {
    std::cout << gelfand::render_table(t);
    return 0;
  }
  std::cout << "name: " << t.name() << "\n";
  std::cout << "order: " << t.order().str() << "\n";
  std::cout << "exponent: " << t.exponent() << "\n";
  std::cout << "backend: " << backend_name(t) << "\n";

  const int classes = t.num_classes();
  std::vector<std::string> headers(static_cast<size_t>(classes));
  for (int c = 0; c < classes; ++c) {
    headers[static_cast<size_t>(c)] =
        t.class_labels()[static_cast<size_t>(c)] + "(" +
        t.class_sizes()[static_cast<size_t>(c)].str() + ")";
  }
  std::vector<std::vector<std::string>> cells;
  for (int i = 0; i < t.num_irreps(); ++i) {
    std::vector<std::string> row;
    for (int c = 0; c < classes; ++c) row.push_back(t.value(i, c).str());
    cells.push_back(std::move(row));
  }
  size_t label_width = 0;
  for (const auto& l : t.irrep_labels()) label_width = std::max(label_width, l.size());
  std::vector<size_t> widths(static_cast<size_t>(classes));
  for (int c = 0; c < classes; ++c) {
    size_t w = headers[static_cast<size_t>(c)].size();
    for (const auto& row : cells) w = std::max(w, row[static_cast<size_t>(c)].size());
    widths[static_cast<size_t>(c)] = w;
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::cout << pad("", label_width);
  for (int c = 0; c < classes; ++c) {
    std::cout << "  " << pad(headers[static_cast<size_t>(c)], widths[static_cast<size_t>(c)]);
  }
  std::cout << "\n";
  for (int i = 0; i < t.num_irreps(); ++i) {
    std::cout << pad(t.irrep_labels()[static_cast<size_t>(i)], label_width);
    for (int c = 0; c < classes; ++c) {
      std::cout << "  "
                << pad(cells[static_cast<size_t>(i)][static_cast<size_t>(c)],
                       widths[static_cast<size_t>(c)]);
    }
    std::cout << "\n";
  }
  return 0;
}

// ---- validate-table ----

int run_validate_table(const std::string& path, double tol, bool json) {
  std::ifstream in(path);
  if (!in) throw gelfand::ParseError("cannot read table file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  CharacterTable t = gelfand::parse_table(buf.str());
  gelfand::ValidationReport rep = t.validate(tol);
  if (json) {
    ordered_json doc;
    doc["name"] = t.name();
    doc["pass"] = rep.pass;
    doc["max_row_residual"] = rep.max_row_residual;
    doc["max_col_residual"] = rep.max_col_residual;
    doc["identity_ok"] = rep.identity_ok;
    doc["size_sum_ok"] = rep.size_sum_ok;
    doc["dim_sum_ok"] = rep.dim_sum_ok;
    doc["power_maps_ok"] = rep.power_maps_ok;
    doc["failures"] = rep.failures;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "table '" << t.name() << "': " << (rep.pass ? "PASS" : "FAIL")
              << "\n";
    std::cout << "max row residual: " << fmt_double(rep.max_row_residual) << "\n";
    std::cout << "max col residual: " << fmt_double(rep.max_col_residual) << "\n";
    std::cout << "identity: " << (rep.identity_ok ? "ok" : "FAIL")
              << "  sizes: " << (rep.size_sum_ok ? "ok" : "FAIL")
              << "  dims: " << (rep.dim_sum_ok ? "ok" : "FAIL")
              << "  power maps: " << (rep.power_maps_ok ? "ok" : "FAIL") << "\n";
    for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
  }
  return rep.pass ? 0 : 3;
}

// ---- kron ----

int run_kron(const std::string& spec, const std::vector<std::string>& sources,
             const std::string& target, double tol, bool json) {
  CharacterTable t = resolve_group(spec);
  if (sources.empty()) throw UsageError("--sources needs at least one label");
  std::vector<int> src;
  for (const auto& label : sources) src.push_back(find_irrep_or_usage(t, label));
  int tgt = find_irrep_or_usage(t, target);
  long long mult = gelfand::kron_multiplicity(t, src, tgt, tol);
  if (json) {
    ordered_json doc;
    doc["gamma"] = t.name();
    doc["sources"] = sources;
    doc["target"] = target;
    doc["multiplicity"] = mult;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << mult << "\n";
  }
  return 0;
}

// ---- mpi ----

int run_mpi(const std::string& spec, int n,
            const std::vector<std::string>& labels, double tol, bool json) {
  CharacterTable t = resolve_group(spec);
  if (static_cast<int>(labels.size()) != n) {
    throw UsageError("--labels needs exactly n = " + std::to_string(n) +
                     " entries, got " + std::to_string(labels.size()));
  }
  std::vector<int> idx;
  for (const auto& label : labels) idx.push_back(find_irrep_or_usage(t, label));
  gelfand::PiMultiset pi = gelfand::PiMultiset::make(t, idx);
  gelfand::SPiClassFunction f = gelfand::m_pi_function(pi);
  gelfand::Decomposition dec = gelfand::decompose_m_pi(pi, tol);

  if (json) {
    ordered_json doc;
    doc["gamma"] = t.name();
    doc["n"] = n;
    doc["pi"] = pi.label_strings();
    doc["block_sizes"] = pi.block_sizes;
    ordered_json values = ordered_json::array();
    for (long long c = 0; c < f.young.num_tuples(); ++c) {
      values.push_back({{"cls", f.young.tuple_label(c)},
                        {"value", f.values[static_cast<size_t>(c)].str()}});
    }
    doc["m_pi"] = values;
    doc["m_pi_e"] = dec.m_pi_e;
    ordered_json coeffs = ordered_json::array();
    for (long long r = 0; r < dec.young.num_tuples(); ++r) {
      coeffs.push_back({{"rho", dec.young.tuple_label(r)},
                        {"coeff", dec.coeffs[static_cast<size_t>(r)]}});
    }
    doc["decomposition"] = coeffs;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "gamma: " << t.name() << "\n";
  std::cout << "pi:";
  for (const auto& l : pi.label_strings()) std::cout << " " << l;
  std::cout << "\n";
  std::cout << "stabilizer blocks:";
  for (int b : pi.block_sizes) std::cout << " " << b;
  std::cout << "\n";
  size_t width = 0;
  for (long long c = 0; c < f.young.num_tuples(); ++c) {
    width = std::max(width, f.young.tuple_label(c).size());
  }
  std::cout << "M_pi per class of S_pi:\n";
  for (long long c = 0; c < f.young.num_tuples(); ++c) {
    std::string label = f.young.tuple_label(c);
    std::cout << "  " << label << std::string(width - label.size(), ' ')
              << "  " << f.values[static_cast<size_t>(c)].str() << "\n";
  }
  std::cout << "M_pi(e): " << dec.m_pi_e << "\n";
  std::cout << "decomposition:\n";
  for (long long r = 0; r < dec.young.num_tuples(); ++r) {
    std::string label = dec.young.tuple_label(r);
    std::cout << "  " << label << std::string(width - label.size(), ' ')
              << "  " << dec.coeffs[static_cast<size_t>(r)] << "\n";
  }
  return 0;
}

// ---- gelfand / crack ----

ordered_json gelfand_json(const gelfand::GelfandReport& rep) {
  ordered_json doc;
  doc["gamma"] = rep.gamma;
  doc["n"] = rep.n;
  doc["verdict"] = rep.gelfand ? "gelfand" : "not gelfand";
  if (rep.witness) {
    doc["witness"] = {{"pi", rep.witness->pi},
                      {"rho", rep.witness->rho},
                      {"coeff", rep.witness->coeff}};
  } else {
    doc["witness"] = nullptr;
  }
  doc["counts"] = {{"examined", rep.examined},
                   {"total", rep.total},
                   {"lemma31_hits", rep.lemma31_hits},
                   {"kron_hits", rep.kron_hits}};
  return doc;
}

std::string witness_text(const gelfand::Witness& w) {
  std::string out = "pi=(";
  for (size_t i = 0; i < w.pi.size(); ++i) {
    if (i) out += ", ";
    out += w.pi[i];
  }
  out += ") rho=" + w.rho + " coeff=" + std::to_string(w.coeff);
  return out;
}

std::string counts_text(const gelfand::GelfandReport& rep) {
  return "examined=" + std::to_string(rep.examined) +
         " total=" + std::to_string(rep.total) +
         " lemma31=" + std::to_string(rep.lemma31_hits) +
         " kron=" + std::to_string(rep.kron_hits);
}

int run_gelfand(const std::string& spec, int n, bool exhaustive, int workers,
                double tol, bool json) {
  CharacterTable t = resolve_group(spec);
  gelfand::SearchOptions opts;
  opts.exhaustive = exhaustive;
  opts.workers = workers;
  opts.tol = tol;
  gelfand::GelfandReport rep = gelfand::is_gelfand(t, n, opts);
  if (json) {
    std::cout << gelfand_json(rep).dump(2) << "\n";
  } else {
    std::cout << "gamma: " << rep.gamma << "\n";
    std::cout << "n: " << rep.n << "\n";
    std::cout << "verdict: " << (rep.gelfand ? "gelfand" : "not gelfand") << "\n";
    if (rep.witness) std::cout << "witness: " << witness_text(*rep.witness) << "\n";
    std::cout << "counts: " << counts_text(rep) << "\n";
  }
  return 0;
}

int run_crack(const std::string& spec, int n_max, int workers, double tol,
              bool json) {
  CharacterTable t = resolve_group(spec);
  gelfand::SearchOptions opts;
  opts.workers = workers;
  opts.tol = tol;
  gelfand::CrackReport rep = gelfand::cracking_point(t, n_max, opts);
  if (json) {
    ordered_json doc;
    doc["gamma"] = rep.gamma;
    doc["n_max"] = rep.n_max;
    if (rep.cracking_point) {
      doc["cracking_point"] = *rep.cracking_point;
    } else {
      doc["cracking_point"] = nullptr;
    }
    ordered_json levels = ordered_json::array();
    for (const auto& level : rep.levels) levels.push_back(gelfand_json(level));
    doc["levels"] = levels;
    doc["br_warning"] = rep.br_warning;
    doc["br_message"] = rep.br_message;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "gamma: " << rep.gamma << "\n";
  std::cout << "n_max: " << rep.n_max << "\n";
  if (rep.cracking_point) {
    std::cout << "cracking point: N = " << *rep.cracking_point << "\n";
  } else {
    std::cout << "cracking point: none up to n_max\n";
  }
  for (const auto& level : rep.levels) {
    std::cout << "level " << level.n << ": "
              << (level.gelfand ? "gelfand" : "not gelfand");
    if (level.witness) std::cout << ", witness " << witness_text(*level.witness);
    std::cout << " (" << counts_text(level) << ")\n";
  }
  if (rep.br_warning) std::cout << "warning: " << rep.br_message << "\n";
  return 0;
}

// ---- bound ----

int run_bound(int from, int to, bool json) {
  std::vector<gelfand::BoundRow> rows = gelfand::bound_table(from, to);
  if (json) {
    ordered_json doc = ordered_json::array();
    for (const auto& row : rows) {
      doc.push_back({{"k", row.k},
                     {"dim_max", big_to_json(row.dim_max)},
                     {"threshold", row.threshold},
                     {"vk", row.vk},
                     {"hr", row.hr},
                     {"r", row.r},
                     {"eq4_holds", row.eq4_holds}});
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "k  dim_max  threshold  vk  hr  r  eq4\n";
  for (const auto& row : rows) {
    std::cout << row.k << "  " << row.dim_max.str() << "  " << row.threshold
              << "  " << fmt_double(row.vk) << "  " << fmt_double(row.hr)
              << "  " << fmt_double(row.r) << "  "
              << (row.eq4_holds ? "yes" : "no") << "\n";
  }
  return 0;
}

// ---- oracle ----

int run_oracle(const std::string& spec, int n, int trials,
               std::uint64_t seed, int workers, double tol, bool json) {
  GroupSpec s = split_spec(spec);
  gelfand::SmallGroupKind kind;
  if (s.kind == "symmetric") {
    kind = gelfand::SmallGroupKind::symmetric;
  } else if (s.kind == "cyclic") {
    kind = gelfand::SmallGroupKind::cyclic;
  } else {
    throw UsageError("oracle groups are symmetric:k (k <= 3) or cyclic:m "
                     "(m <= 4), got '" + s.kind + "'");
  }
  int param = spec_int(s);

  gelfand::WreathPair pair = gelfand::build_wreath(kind, param, n);
  pair.group.check_axioms(trials, seed);
  gelfand::DoubleCosets cosets = gelfand::double_cosets(pair.group, pair.k_members);
  gelfand::CommuteCheck check = gelfand::convolution_commutes(pair.group, pair.k_members);

  CharacterTable t = (kind == gelfand::SmallGroupKind::symmetric)
                         ? CharacterTable::symmetric(param)
                         : CharacterTable::cyclic(param);
  gelfand::SearchOptions opts;
  opts.exhaustive = true;
  opts.workers = workers;
  opts.tol = tol;
  gelfand::GelfandReport rep = gelfand::is_gelfand(t, n, opts);
  BigInt intertwiners = gelfand::intertwiner_number(t, n, tol);

  const bool verdict_agree = (check.commutes == rep.gelfand);
  const bool count_agree = (BigInt(cosets.count) == intertwiners);
  const bool agree = verdict_agree && count_agree;

  if (json) {
    ordered_json doc;
    doc["group"] = pair.group.name;
    doc["order"] = pair.group.size;
    doc["k_order"] = static_cast<long long>(pair.k_members.size());
    doc["double_cosets"] = cosets.count;
    doc["commutes"] = check.commutes;
    if (check.counterexample) {
      const auto& ce = *check.counterexample;
      doc["counterexample"] = {ce[0], ce[1], ce[2]};
    } else {
      doc["counterexample"] = nullptr;
    }
    doc["gelfand"] = rep.gelfand;
    doc["intertwiner_number"] = big_to_json(intertwiners);
    doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "group: " << pair.group.name << "  order " << pair.group.size
              << "  K order " << pair.k_members.size() << "\n";
    std::cout << "axioms: ok (" << trials << " seeded triples)\n";
    std::cout << "double cosets: " << cosets.count << "\n";
    std::cout << "convolution commutes: " << (check.commutes ? "yes" : "no") << "\n";
    if (check.counterexample) {
      const auto& ce = *check.counterexample;
      std::cout << "counterexample: i=" << ce[0] << " j=" << ce[1]
                << " x=" << ce[2] << "\n";
    }
    std::cout << "character verdict: "
              << (rep.gelfand ? "gelfand" : "not gelfand") << "\n";
    std::cout << "intertwiner number: " << intertwiners.str() << "\n";
    std::cout << "cross-check: " << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand pairs of wreath products: cracking points, "
               "M_pi decompositions, character tables, and brute-force "
               "oracles"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  double tol = -1.0;  // resolved per subcommand below
  int workers = 1;
  std::uint64_t seed = 12345;
  app.add_flag("--json", json, "structured JSON output");
  app.add_option("--tol", tol,
                 "tolerance: multiplicity rounding (default 1e-6), or "
                 "validation residuals for validate-table (default 1e-9)");
  app.add_option("--workers", workers, "worker threads (never affects output)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--seed", seed, "seed for oracle random trials");

  std::string group_spec;
  std::string table_path;
  std::vector<std::string> sources;
  std::string target;
  std::vector<std::string> labels;
  int n = 1;
  bool exhaustive = false;
  int n_max = 1;
  int bound_from = 1;
  int bound_to = 1;
  int trials = 1000;

  CLI::App* chartable = app.add_subcommand("chartable", "print a character table");
  chartable->add_option("group", group_spec, "symmetric:k | cyclic:m | dihedral:m | file:path")
      ->required();

  CLI::App* validate = app.add_subcommand("validate-table", "validation report for a table file");
  validate->add_option("file", table_path, "table document path")->required();

  CLI::App* kron = app.add_subcommand("kron", "tensor product multiplicity");
  kron->add_option("group", group_spec)->required();
  kron->add_option("--sources", sources, "comma-separated irrep labels")
      ->required()
      ->delimiter(',');
  kron->add_option("--target", target, "irrep label (must be real-valued)")
      ->required();

  CLI::App* mpi = app.add_subcommand("mpi", "M_pi values and decomposition");
  mpi->add_option("group", group_spec)->required();
  mpi->add_option("-n", n, "tensor factors")->required()->check(CLI::PositiveNumber);
  mpi->add_option("--labels", labels, "comma-separated irrep labels, length n")
      ->required()
      ->delimiter(',');

  CLI::App* gelfand_cmd = app.add_subcommand("gelfand", "Gelfand verdict at one level");
  gelfand_cmd->add_option("group", group_spec)->required();
  gelfand_cmd->add_option("-n", n, "tensor factors")->required()->check(CLI::PositiveNumber);
  gelfand_cmd->add_flag("--exhaustive", exhaustive, "scan all pi even after a witness");

  CLI::App* crack = app.add_subcommand("crack", "locate the cracking point");
  crack->add_option("group", group_spec)->required();
  crack->add_option("--n-max", n_max, "highest level to scan")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* bound = app.add_subcommand("bound", "asymptotic bound table rows");
  bound->add_option("--from", bound_from, "first k")->required();
  bound->add_option("--to", bound_to, "last k")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-check");
  oracle->add_option("group", group_spec, "symmetric:k (k <= 3) | cyclic:m (m <= 4)")
      ->required();
  oracle->add_option("-n", n, "wreath level, n <= 3")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--trials", trials, "random associativity triples")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (tol == -1.0) tol = validate->parsed() ? 1e-9 : 1e-6;

  try {
    if (tol <= 0) throw UsageError("--tol must be positive");
    if (chartable->parsed()) return run_chartable(group_spec, json);
    if (validate->parsed()) return run_validate_table(table_path, tol, json);
    if (kron->parsed()) return run_kron(group_spec, sources, target, tol, json);
    if (mpi->parsed()) return run_mpi(group_spec, n, labels, tol, json);
    if (gelfand_cmd->parsed()) {
      return run_gelfand(group_spec, n, exhaustive, workers, tol, json);
    }
    if (crack->parsed()) return run_crack(group_spec, n_max, workers, tol, json);
    if (bound->parsed()) return run_bound(bound_from, bound_to, json);
    if (oracle->parsed()) {
      return run_oracle(group_spec, n, trials, seed, workers, tol, json);
    }
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "crackpoint: " << e.what() << "\n";
    return 2;
  } catch (const gelfand::SizeLimitError& e) {
    std::cerr << "crackpoint: " << e.what() << "\n";
    return 2;
  } catch (const gelfand::HypothesisError& e) {
    std::cerr << "crackpoint: " << e.what() << "\n";
    return 2;
  } catch (const gelfand::Error& e) {
    std::cerr << "crackpoint: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "crackpoint: " << e.what() << "\n";
    return 3;
  }
}
