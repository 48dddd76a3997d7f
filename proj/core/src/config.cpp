#include "jetbrackets/config.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "jetbrackets/errors.hpp"
#include "jetbrackets/metric.hpp"
#include "jetbrackets/parse.hpp"
#include "jetbrackets/poisson.hpp"
#include "jetbrackets/render.hpp"

namespace jetbrackets {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) fail("unknown field '" + key + "' in " + where);
  }
}

int get_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) fail("missing field '" + key + "' in " + where);
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail("field '" + key + "' in " + where + " must be an integer");
  return v.get<int>();
}

int get_int_or(const json& obj, const std::string& key, const std::string& where, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail("field '" + key + "' in " + where + " must be an integer");
  return v.get<int>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) fail("missing field '" + key + "' in " + where);
  const json& v = obj.at(key);
  if (!v.is_string()) fail("field '" + key + "' in " + where + " must be a string");
  return v.get<std::string>();
}

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return rat(v.get<long>());
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  fail(where + " must be an integer or a \"p/q\" string");
}

std::vector<int> index_list_from(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array of base indices");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) fail(where + " must contain integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::vector<Rational>> matrix_from(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be a matrix (array of rows)");
  std::vector<std::vector<Rational>> out;
  for (const json& row : v) {
    if (!row.is_array()) fail(where + " rows must be arrays");
    std::vector<Rational> r;
    for (const json& e : row) r.push_back(rational_from(e, where + " entry"));
    out.push_back(std::move(r));
  }
  return out;
}

json matrix_to(const std::vector<std::vector<Rational>>& mat) {
  json rows = json::array();
  for (const auto& row : mat) {
    json r = json::array();
    for (const auto& e : row) r.push_back(rational_to_string(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::pair<int, std::vector<int>> fiber_key_from(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where + " must be an object with 'alpha' and 'indices'");
  require_keys(v, where, {"alpha", "indices"});
  int alpha = get_int(v, "alpha", where);
  std::vector<int> indices;
  if (v.contains("indices")) indices = index_list_from(v.at("indices"), where + ".indices");
  return {alpha, std::move(indices)};
}

} // namespace

ProblemConfig config_from_json(const json& doc) {
  if (!doc.is_object()) fail("configuration must be a JSON object");
  require_keys(doc, "the configuration",
               {"n", "m", "order_cap", "opaque", "metric", "eta_fields", "eta_orders", "chi",
                "phi", "format"});
  ProblemConfig cfg;
  cfg.n = get_int(doc, "n", "the configuration");
  cfg.m = get_int(doc, "m", "the configuration");
  cfg.order_cap = get_int_or(doc, "order_cap", "the configuration", 8);
  if (doc.contains("opaque")) {
    const json& names = doc.at("opaque");
    if (!names.is_array()) fail("field 'opaque' must be an array of names");
    for (const json& e : names) {
      if (!e.is_string()) fail("field 'opaque' must contain strings");
      cfg.opaque.push_back(e.get<std::string>());
    }
  }
  if (doc.contains("metric")) {
    const json& metric = doc.at("metric");
    if (!metric.is_object()) fail("field 'metric' must be an object");
    require_keys(metric, "metric", {"base", "fiber", "allow_indefinite"});
    if (metric.contains("base")) cfg.metric_base = matrix_from(metric.at("base"), "metric.base");
    if (metric.contains("fiber")) {
      const json& fiber = metric.at("fiber");
      if (!fiber.is_array()) fail("metric.fiber must be an array of entries");
      for (const json& e : fiber) {
        if (!e.is_object()) fail("metric.fiber entries must be objects");
        require_keys(e, "a metric.fiber entry", {"row", "col", "value"});
        if (!e.contains("row") || !e.contains("col") || !e.contains("value"))
          fail("metric.fiber entries need 'row', 'col', and 'value'");
        auto [ra, ri] = fiber_key_from(e.at("row"), "metric.fiber row");
        auto [ca, ci] = fiber_key_from(e.at("col"), "metric.fiber col");
        cfg.metric_fiber.push_back(
            {ra, std::move(ri), ca, std::move(ci), rational_from(e.at("value"), "metric.fiber value")});
      }
    }
    if (metric.contains("allow_indefinite")) {
      const json& v = metric.at("allow_indefinite");
      if (!v.is_boolean()) fail("metric.allow_indefinite must be a boolean");
      cfg.metric_allow_indefinite = v.get<bool>();
    }
  }
  if (!doc.contains("eta_fields")) fail("missing field 'eta_fields' in the configuration");
  cfg.eta_fields = matrix_from(doc.at("eta_fields"), "eta_fields");
  if (doc.contains("eta_orders")) {
    const json& orders = doc.at("eta_orders");
    if (!orders.is_array()) fail("field 'eta_orders' must be an array of entries");
    for (const json& e : orders) {
      if (!e.is_object()) fail("eta_orders entries must be objects");
      require_keys(e, "an eta_orders entry", {"I", "J", "value"});
      if (!e.contains("I") || !e.contains("J") || !e.contains("value"))
        fail("eta_orders entries need 'I', 'J', and 'value'");
      cfg.eta_orders.push_back({index_list_from(e.at("I"), "eta_orders I"),
                                index_list_from(e.at("J"), "eta_orders J"),
                                rational_from(e.at("value"), "eta_orders value")});
    }
  }
  cfg.chi = get_string(doc, "chi", "the configuration");
  cfg.phi = get_string(doc, "phi", "the configuration");
  if (doc.contains("format")) {
    cfg.format = get_string(doc, "format", "the configuration");
    render_format_from_string(cfg.format); // reject unknown names at load time
  }
  return cfg;
}

json config_to_json(const ProblemConfig& cfg) {
  json doc{{"n", cfg.n}, {"m", cfg.m}, {"order_cap", cfg.order_cap}};
  if (!cfg.opaque.empty()) doc["opaque"] = cfg.opaque;
  if (!cfg.metric_base.empty() || !cfg.metric_fiber.empty() || cfg.metric_allow_indefinite) {
    json metric = json::object();
    if (!cfg.metric_base.empty()) metric["base"] = matrix_to(cfg.metric_base);
    if (!cfg.metric_fiber.empty()) {
      json fiber = json::array();
      for (const auto& e : cfg.metric_fiber)
        fiber.push_back({{"row", {{"alpha", e.row_alpha}, {"indices", e.row_indices}}},
                         {"col", {{"alpha", e.col_alpha}, {"indices", e.col_indices}}},
                         {"value", rational_to_string(e.value)}});
      metric["fiber"] = std::move(fiber);
    }
    if (cfg.metric_allow_indefinite) metric["allow_indefinite"] = true;
    doc["metric"] = std::move(metric);
  }
  doc["eta_fields"] = matrix_to(cfg.eta_fields);
  if (!cfg.eta_orders.empty()) {
    json orders = json::array();
    for (const auto& e : cfg.eta_orders)
      orders.push_back({{"I", e.I}, {"J", e.J}, {"value", rational_to_string(e.value)}});
    doc["eta_orders"] = std::move(orders);
  }
  doc["chi"] = cfg.chi;
  doc["phi"] = cfg.phi;
  doc["format"] = cfg.format;
  return doc;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read configuration file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("invalid JSON in '" + path + "': " + e.what());
  }
  return config_from_json(doc);
}

HamiltonianProblem build_problem(const ProblemConfig& cfg) {
  auto ctx = JetContext::create(cfg.n, cfg.m, cfg.order_cap, cfg.opaque);

  std::vector<std::vector<Rational>> base = cfg.metric_base;
  if (base.empty()) {
    base.assign(static_cast<std::size_t>(cfg.n), std::vector<Rational>(static_cast<std::size_t>(cfg.n), rat(0)));
    for (std::size_t i = 0; i < base.size(); ++i) base[i][i] = rat(1);
  }
  std::vector<Metric::FiberEntry> fiber;
  for (const auto& e : cfg.metric_fiber)
    fiber.push_back({{e.row_alpha, MultiIndex::from_indices(cfg.n, e.row_indices, cfg.order_cap)},
                     {e.col_alpha, MultiIndex::from_indices(cfg.n, e.col_indices, cfg.order_cap)},
                     e.value});
  Metric g = Metric::create(ctx, std::move(base), fiber, cfg.metric_allow_indefinite);

  OrderTable orders;
  for (const auto& e : cfg.eta_orders)
    orders[{MultiIndex::from_indices(cfg.n, e.I, cfg.order_cap),
            MultiIndex::from_indices(cfg.n, e.J, cfg.order_cap)}] = e.value;
  Multivector P = poisson_multivector(cfg.eta_fields, orders, ctx);
  PoissonStructure ps = PoissonStructure::create(std::move(P));

  Expr chi = parse_expr(cfg.chi, ctx);
  Form phi = parse_form(cfg.phi, ctx);
  return HamiltonianProblem::create(std::move(chi), std::move(phi), std::move(ps), std::move(g));
}

} // namespace jetbrackets
