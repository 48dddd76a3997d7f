// Configuration documents: strict parsing, serialization round-trips, and
// validation against the shipped JSON schemas.

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "doctest.h"
#include "jetbrackets/config.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/hamiltonian.hpp"
#include "jetbrackets/jsonschema.hpp"
#include "jetbrackets/presets.hpp"
#include "jetbrackets/render.hpp"

using namespace jetbrackets;
using nlohmann::json;

namespace {

json minimal_config() {
  return json{{"n", 1},
              {"m", 1},
              {"eta_fields", json::array({json::array({"1"})})},
              {"chi", "1/2*u^2"},
              {"phi", "u[1;1]"}};
}

json load_schema(const char* name) {
  std::ifstream in(std::string(JETBRACKETS_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("a minimal document builds the oscillator") {
  ProblemConfig cfg = config_from_json(minimal_config());
  CHECK(cfg.n == 1);
  CHECK(cfg.m == 1);
  CHECK(cfg.order_cap == 8);
  CHECK(cfg.format == "text");
  HamiltonianProblem prob = build_problem(cfg);
  CHECK(render(derive_field_equations(prob), RenderFormat::Text) == "u^1_{11} + u^1 = 0");
}

TEST_CASE("serialization round-trips") {
  for (const ProblemConfig& cfg : {oscillator_config(), maxwell_config()}) {
    json doc = config_to_json(cfg);
    ProblemConfig back = config_from_json(doc);
    CHECK(config_to_json(back) == doc);
  }
}

TEST_CASE("strictness: unknown and missing fields are rejected") {
  json doc = minimal_config();
  doc["frobnication"] = true;
  CHECK_THROWS_AS(config_from_json(doc), ConfigError);

  json missing = minimal_config();
  missing.erase("chi");
  CHECK_THROWS_AS(config_from_json(missing), ConfigError);

  json bad_eta = minimal_config();
  bad_eta["eta_fields"] = json::array({json::array({"1", "0"})}); // not square
  CHECK_THROWS_AS(build_problem(config_from_json(bad_eta)), ConfigError);

  json bad_format = minimal_config();
  bad_format["format"] = "xml";
  CHECK_THROWS_AS(config_from_json(bad_format), ConfigError);
}

TEST_CASE("source-text errors keep their offsets through the config path") {
  json doc = minimal_config();
  doc["chi"] = "u[1 + ";
  ProblemConfig cfg = config_from_json(doc);
  try {
    (void)build_problem(cfg);
    FAIL("expected a parse failure");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
  }
}

TEST_CASE("rationals in configs are integers or exact p/q strings") {
  json doc = minimal_config();
  doc["eta_fields"] = json::array({json::array({"2/3"})});
  CHECK_NOTHROW(build_problem(config_from_json(doc)));
  doc["eta_fields"] = json::array({json::array({0.5})});
  CHECK_THROWS_AS(config_from_json(doc), ConfigError);
}

TEST_CASE("the schema validator enforces shapes") {
  json schema = {{"type", "object"},
                 {"required", json::array({"a"})},
                 {"properties",
                  {{"a", {{"type", "integer"}, {"minimum", 1}}},
                   {"b", {{"type", "string"}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}}}}},
                 {"additionalProperties", false}};
  CHECK(matches_schema(schema, json{{"a", 3}}));
  CHECK(matches_schema(schema, json{{"a", 3}, {"b", "-7/2"}}));
  CHECK(!matches_schema(schema, json{{"a", 0}}));
  CHECK(!matches_schema(schema, json{{"a", 3}, {"b", "0.5"}}));
  CHECK(!matches_schema(schema, json{{"a", 3}, {"c", 1}}));
  CHECK(!matches_schema(schema, json::object()));
  auto violations = schema_violations(schema, json{{"a", 0}, {"c", 1}});
  CHECK(violations.size() == 2);
}

TEST_CASE("shipped schemas accept the real outputs") {
  json sys_schema = load_schema("pdesystem.schema.json");
  json cfg_schema = load_schema("config.schema.json");

  for (bool maxwell : {false, true}) {
    ProblemConfig cfg = maxwell ? maxwell_config() : oscillator_config();
    json cfg_doc = config_to_json(cfg);
    auto cfg_viol = schema_violations(cfg_schema, cfg_doc);
    CHECK_MESSAGE(cfg_viol.empty(), (cfg_viol.empty() ? std::string() : cfg_viol.front()));

    PDESystem sys = derive_field_equations(build_problem(cfg));
    json sys_doc = pdesystem_to_json(sys);
    auto sys_viol = schema_violations(sys_schema, sys_doc);
    CHECK_MESSAGE(sys_viol.empty(), (sys_viol.empty() ? std::string() : sys_viol.front()));
  }
}

TEST_CASE("shipped schemas reject corrupted documents") {
  json sys_schema = load_schema("pdesystem.schema.json");
  json doc = pdesystem_to_json(derive_field_equations(oscillator_problem()));

  json decimal = doc;
  decimal["equations"][0]["lhs"][0]["coeff"] = "0.5";
  CHECK(!matches_schema(sys_schema, decimal));

  json extra = doc;
  extra["equations"][0]["surprise"] = 1;
  CHECK(!matches_schema(sys_schema, extra));

  json bad_monomial = doc;
  bad_monomial["equations"][0]["lhs"][0]["monomial"] = json::array({json::array({"u[1]"})});
  CHECK(!matches_schema(sys_schema, bad_monomial));

  json cfg_schema = load_schema("config.schema.json");
  json cfg_doc = config_to_json(oscillator_config());
  cfg_doc["format"] = "xml";
  CHECK(!matches_schema(cfg_schema, cfg_doc));
  cfg_doc.erase("format");
  cfg_doc.erase("chi");
  CHECK(!matches_schema(cfg_schema, cfg_doc));
}

TEST_CASE("file loading reports unreadable and invalid documents") {
  CHECK_THROWS_AS(load_config("/nonexistent/path.json"), ConfigError);
  const char* path = "/tmp/jetbrackets_bad_config.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_config(path), ConfigError);
}

} // TEST_SUITE
