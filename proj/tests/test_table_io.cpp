#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gelfand/errors.hpp"
#include "gelfand/table_io.hpp"

using namespace gelfand;
using nlohmann::json;

namespace {

std::string data_file(const std::string& name) {
  return std::string(GELFAND_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// minimal valid exact document to mutate in error tests
json base_doc() {
  json doc;
  doc["name"] = "C2";
  doc["order"] = 2;
  doc["exponent"] = 2;
  doc["backend"] = "exact";
  doc["classes"] = json::array({{{"label", "e"}, {"size", 1}},
                                {{"label", "x"}, {"size", 1}}});
  doc["power_maps"] = {{"2", {0, 0}}};
  doc["irreps"] = json::array({{{"label", "triv"}, {"values", {1, 1}}},
                               {{"label", "sgn"}, {"values", {1, -1}}}});
  return doc;
}

}  // namespace

TEST_CASE("bundled C2 document equals the generated cyclic table") {
  CharacterTable file = load_table_file(data_file("c2.json"));
  CHECK(file.name() == "C2");
  CHECK(file.backend() == Backend::exact);
  CHECK(file.validate().pass);

  CharacterTable built = CharacterTable::cyclic(2);
  REQUIRE(file.num_classes() == built.num_classes());
  REQUIRE(file.num_irreps() == built.num_irreps());
  CHECK(file.order() == built.order());
  CHECK(file.exponent() == built.exponent());
  for (int i = 0; i < 2; ++i) {
    CHECK(file.class_sizes()[i] == built.class_sizes()[i]);
    for (int c = 0; c < 2; ++c) {
      CHECK(std::abs(file.value(i, c).as_complex() -
                     built.value(i, c).as_complex()) < 1e-12);
    }
  }
  CHECK(file.has_stored_power_maps());
  CHECK(file.power_class(1, 2) == 0);
  CHECK(file.power_class(1, 3) == 1);
}

TEST_CASE("bundled GL(2,3) document") {
  CharacterTable t = load_table_file(data_file("gl23.json"));
  CHECK(t.name() == "GL(2,3)");
  CHECK(t.order() == 48);
  CHECK(t.exponent() == 24);
  CHECK(t.backend() == Backend::approx);
  REQUIRE(t.num_classes() == 8);
  CHECK_FALSE(t.is_abelian());

  ValidationReport rep = t.validate();
  CHECK(rep.pass);
  CHECK(rep.max_row_residual < 1e-9);

  std::multiset<long long> dims;
  for (int i = 0; i < t.num_irreps(); ++i) dims.insert(t.dimension(i));
  CHECK(dims == std::multiset<long long>{1, 1, 2, 2, 2, 3, 3, 4});

  // the faithful 2-dimensional pair is complex on the order-8 classes
  CHECK_FALSE(t.is_real(*t.find_irrep("X4")));
  CHECK(t.is_real(*t.find_irrep("X8")));

  auto cls = [&](const std::string& label) { return *t.find_class(label); };
  CHECK(t.power_class(cls("8a"), 2) == cls("4a"));
  CHECK(t.power_class(cls("8a"), 3) == cls("8a"));
  CHECK(t.power_class(cls("8a"), 5) == cls("8b"));
  CHECK(t.power_class(cls("6a"), 3) == cls("2a"));
  CHECK(t.power_class(cls("6a"), 24) == cls("1a"));
  CHECK(t.power_class(cls("6a"), 25) == cls("6a"));
}

TEST_CASE("render/parse round trip") {
  for (const CharacterTable& t :
       {CharacterTable::symmetric(5), CharacterTable::cyclic(3),
        CharacterTable::dihedral(6), load_table_file(data_file("gl23.json"))}) {
    std::string doc = render_table(t);
    CharacterTable back = parse_table(doc);
    CHECK(back.validate().pass);
    CHECK(render_table(back) == doc);  // canonical form is a fixed point
    CHECK(back.name() == t.name());
    CHECK(back.order() == t.order());
    for (int i = 0; i < t.num_irreps(); ++i) {
      for (int c = 0; c < t.num_classes(); ++c) {
        CHECK(std::abs(back.value(i, c).as_complex() -
                       t.value(i, c).as_complex()) < 1e-12);
      }
    }
    // stored maps reproduce the functional ones
    for (int c = 0; c < t.num_classes(); ++c) {
      for (long long m = 2; m <= std::min<long long>(t.exponent(), 20); ++m) {
        CHECK(back.power_class(c, m) == t.power_class(c, m));
      }
    }
  }
}

TEST_CASE("render refuses an oversized power-map section") {
  // symmetric(11) has exponent lcm(1..11) = 27720, beyond the render cap
  CHECK_THROWS_AS(render_table(CharacterTable::symmetric(11)), SizeLimitError);
}

TEST_CASE("parse accepts big integers as decimal strings") {
  json doc = base_doc();
  doc["order"] = "2";
  doc["classes"][0]["size"] = "1";
  CharacterTable t = load_table(doc.dump());
  CHECK(t.order() == 2);
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_table("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_table("[1,2,3]"), ParseError);

  auto mutate = [](const std::function<void(json&)>& fn) {
    json doc = base_doc();
    fn(doc);
    return doc.dump();
  };
  // missing keys
  CHECK_THROWS_AS(parse_table(mutate([](json& d) { d.erase("name"); })),
                  ParseError);
  CHECK_THROWS_AS(parse_table(mutate([](json& d) { d.erase("power_maps"); })),
                  ParseError);
  // wrong types
  CHECK_THROWS_AS(parse_table(mutate([](json& d) { d["order"] = 1.5; })),
                  ParseError);
  CHECK_THROWS_AS(parse_table(mutate([](json& d) { d["backend"] = "fast"; })),
                  ParseError);
  // exact backend with non-integer value
  CHECK_THROWS_AS(parse_table(mutate([](json& d) {
                    d["irreps"][1]["values"][1] = 0.5;
                  })),
                  ParseError);
  // approx pair of the wrong arity
  CHECK_THROWS_AS(parse_table(mutate([](json& d) {
                    d["backend"] = "approx";
                    d["irreps"][1]["values"][1] = json::array({1.0});
                  })),
                  ParseError);
  // power map missing an exponent
  CHECK_THROWS_AS(parse_table(mutate([](json& d) {
                    d["exponent"] = 4;
                    // still only the "2" map present
                  })),
                  ParseError);
  // power map index out of range
  CHECK_THROWS_AS(parse_table(mutate([](json& d) {
                    d["power_maps"]["2"][0] = 7;
                  })),
                  ParseError);
  // value row arity
  CHECK_THROWS_AS(parse_table(mutate([](json& d) {
                    d["irreps"][0]["values"] = json::array({1});
                  })),
                  ParseError);
  // exponent cap
  CHECK_THROWS_AS(parse_table(mutate([](json& d) { d["exponent"] = 10001; })),
                  SizeLimitError);
}

TEST_CASE("load_table throws on a table that parses but fails validation") {
  json doc = base_doc();
  doc["irreps"][1]["values"] = {1, 1};  // duplicate trivial row
  try {
    load_table(doc.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("C2") != std::string::npos);
    CHECK(msg.find("orthogonality") != std::string::npos);
  }
}

TEST_CASE("load_table_file reports unreadable paths") {
  CHECK_THROWS_AS(load_table_file("/nonexistent/nowhere.json"), ParseError);
}
