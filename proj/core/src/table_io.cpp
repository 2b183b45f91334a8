#include "gelfand/table_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

using Json = nlohmann::ordered_json;

constexpr long long kExponentCap = 10000;

BigInt parse_big(const Json& v, const std::string& where) {
  if (v.is_number_unsigned()) return BigInt(v.get<unsigned long long>());
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(where + ": not a decimal integer string");
    }
  }
  throw ParseError(where + ": expected an integer or a decimal string");
}

const Json& require(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return *it;
}

Json big_to_json(const BigInt& v) {
  constexpr long long lo = std::numeric_limits<long long>::min();
  constexpr long long hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return Json(static_cast<long long>(v));
  return Json(v.str());
}

}  // namespace

CharacterTable parse_table(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document is not a JSON object");

  const Json& jname = require(doc, "name");
  if (!jname.is_string()) throw ParseError("\"name\": expected a string");
  std::string name = jname.get<std::string>();

  BigInt order = parse_big(require(doc, "order"), "\"order\"");

  const Json& jexp = require(doc, "exponent");
  if (!jexp.is_number_integer() && !jexp.is_number_unsigned()) {
    throw ParseError("\"exponent\": expected an integer");
  }
  long long exponent = jexp.get<long long>();
  if (exponent < 1) throw ParseError("\"exponent\": must be >= 1");
  if (exponent > kExponentCap) {
    throw SizeLimitError("\"exponent\": exceeds the power-map cap " +
                         std::to_string(kExponentCap));
  }

  const Json& jback = require(doc, "backend");
  if (!jback.is_string()) throw ParseError("\"backend\": expected a string");
  std::string backend_str = jback.get<std::string>();
  Backend backend;
  if (backend_str == "exact") {
    backend = Backend::exact;
  } else if (backend_str == "approx") {
    backend = Backend::approx;
  } else {
    throw ParseError("\"backend\": expected \"exact\" or \"approx\"");
  }

  const Json& jclasses = require(doc, "classes");
  if (!jclasses.is_array() || jclasses.empty()) {
    throw ParseError("\"classes\": expected a nonempty array");
  }
  std::vector<std::string> class_labels;
  std::vector<BigInt> class_sizes;
  for (size_t c = 0; c < jclasses.size(); ++c) {
    const Json& jc = jclasses[c];
    if (!jc.is_object()) {
      throw ParseError("\"classes\"[" + std::to_string(c) +
                       "]: expected an object");
    }
    const Json& jlabel = require(jc, "label");
    if (!jlabel.is_string()) {
      throw ParseError("\"classes\"[" + std::to_string(c) +
                       "].label: expected a string");
    }
    class_labels.push_back(jlabel.get<std::string>());
    class_sizes.push_back(parse_big(require(jc, "size"),
                                    "\"classes\"[" + std::to_string(c) +
                                        "].size"));
  }
  const size_t classes = class_labels.size();

  const Json& jpm = require(doc, "power_maps");
  if (!jpm.is_object()) throw ParseError("\"power_maps\": expected an object");
  std::vector<std::vector<int>> power_maps;
  for (long long m = 2; m <= exponent; ++m) {
    auto it = jpm.find(std::to_string(m));
    if (it == jpm.end()) {
      throw ParseError("\"power_maps\": missing entry for m=" +
                       std::to_string(m));
    }
    if (!it->is_array() || it->size() != classes) {
      throw ParseError("\"power_maps\"[\"" + std::to_string(m) +
                       "\"]: expected an array of " + std::to_string(classes) +
                       " class indices");
    }
    std::vector<int> pm;
    for (const Json& v : *it) {
      if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ParseError("\"power_maps\"[\"" + std::to_string(m) +
                         "\"]: entries must be integers");
      }
      long long idx = v.get<long long>();
      if (idx < 0 || idx >= static_cast<long long>(classes)) {
        throw ParseError("\"power_maps\"[\"" + std::to_string(m) +
                         "\"]: class index " + std::to_string(idx) +
                         " out of range");
      }
      pm.push_back(static_cast<int>(idx));
    }
    power_maps.push_back(std::move(pm));
  }

  const Json& jirreps = require(doc, "irreps");
  if (!jirreps.is_array() || jirreps.empty()) {
    throw ParseError("\"irreps\": expected a nonempty array");
  }
  std::vector<std::string> irrep_labels;
  std::vector<long long> exact_values;
  std::vector<std::complex<double>> approx_values;
  for (size_t i = 0; i < jirreps.size(); ++i) {
    const Json& ji = jirreps[i];
    const std::string where = "\"irreps\"[" + std::to_string(i) + "]";
    if (!ji.is_object()) throw ParseError(where + ": expected an object");
    const Json& jlabel = require(ji, "label");
    if (!jlabel.is_string()) {
      throw ParseError(where + ".label: expected a string");
    }
    irrep_labels.push_back(jlabel.get<std::string>());
    const Json& jvalues = require(ji, "values");
    if (!jvalues.is_array() || jvalues.size() != classes) {
      throw ParseError(where + ".values: expected an array of " +
                       std::to_string(classes) + " values");
    }
    for (const Json& v : jvalues) {
      if (backend == Backend::exact) {
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
          throw ParseError(where +
                           ".values: exact backend accepts only integers");
        }
        exact_values.push_back(v.get<long long>());
      } else if (v.is_number()) {
        approx_values.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() &&
                 v[1].is_number()) {
        approx_values.emplace_back(v[0].get<double>(), v[1].get<double>());
      } else {
        throw ParseError(where +
                         ".values: expected a number or an [re, im] pair");
      }
    }
  }

  return CharacterTable(std::move(name), std::move(order), exponent, backend,
                        std::move(class_labels), std::move(class_sizes),
                        std::move(power_maps), std::move(irrep_labels),
                        std::move(exact_values), std::move(approx_values));
}

CharacterTable load_table(const std::string& document, double tol) {
  CharacterTable table = parse_table(document);
  ValidationReport rep = table.validate(tol);
  if (!rep.pass) {
    std::string msg = "table '" + table.name() + "' failed validation";
    for (const std::string& f : rep.failures) msg += "; " + f;
    throw ValidationError(msg);
  }
  return table;
}

CharacterTable load_table_file(const std::string& path, double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read table file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_table(buf.str(), tol);
}

std::string render_table(const CharacterTable& table) {
  if (table.exponent() > kExponentCap) {
    throw SizeLimitError("table '" + table.name() + "' has exponent " +
                         std::to_string(table.exponent()) +
                         " beyond the power-map cap " +
                         std::to_string(kExponentCap));
  }
  Json doc;
  doc["name"] = table.name();
  doc["order"] = big_to_json(table.order());
  doc["exponent"] = table.exponent();
  doc["backend"] = table.backend() == Backend::exact ? "exact" : "approx";
  Json jclasses = Json::array();
  for (int c = 0; c < table.num_classes(); ++c) {
    Json jc;
    jc["label"] = table.class_labels()[c];
    jc["size"] = big_to_json(table.class_sizes()[c]);
    jclasses.push_back(std::move(jc));
  }
  doc["classes"] = std::move(jclasses);
  Json jpm = Json::object();
  for (long long m = 2; m <= table.exponent(); ++m) {
    Json row = Json::array();
    for (int c = 0; c < table.num_classes(); ++c) {
      row.push_back(table.power_class(c, m));
    }
    jpm[std::to_string(m)] = std::move(row);
  }
  doc["power_maps"] = std::move(jpm);
  Json jirreps = Json::array();
  for (int i = 0; i < table.num_irreps(); ++i) {
    Json ji;
    ji["label"] = table.irrep_labels()[i];
    Json vals = Json::array();
    for (int c = 0; c < table.num_classes(); ++c) {
      if (table.backend() == Backend::exact) {
        vals.push_back(table.exact_value(i, c));
      } else {
        std::complex<double> z = table.approx_value(i, c);
        vals.push_back(Json::array({z.real(), z.imag()}));
      }
    }
    ji["values"] = std::move(vals);
    jirreps.push_back(std::move(ji));
  }
  doc["irreps"] = std::move(jirreps);
  return doc.dump(2) + "\n";
}

}  // namespace gelfand
