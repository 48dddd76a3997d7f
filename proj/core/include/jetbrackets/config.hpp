#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "jetbrackets/hamiltonian.hpp"
#include "jetbrackets/rational.hpp"

namespace jetbrackets {

/// A complete problem description as carried by a JSON configuration
/// document. Multiindices appear as repeated base-index lists ([1,1] is the
/// second derivative along x1); rationals as integers or "p/q" strings.
///
///   { "n": 1, "m": 1, "order_cap": 8,
///     "opaque": ["j1"],
///     "metric": { "base": [[1]],
///                 "fiber": [ { "row":    {"alpha": 1, "indices": []},
///                              "col":    {"alpha": 1, "indices": []},
///                              "value":  "1" } ],
///                 "allow_indefinite": false },
///     "eta_fields": [[1]],
///     "eta_orders": [ { "I": [], "J": [1], "value": "1/2" } ],
///     "chi": "1/2 u^2",
///     "phi": "u[1;1]",
///     "format": "text" }
///
/// metric, eta_orders, order_cap, opaque, and format are optional; metric
/// blocks default to identities.
struct ProblemConfig {
  int n = 1;
  int m = 1;
  int order_cap = 8;
  std::vector<std::string> opaque;

  std::vector<std::vector<Rational>> metric_base; // empty means identity
  struct FiberMetricEntry {
    int row_alpha;
    std::vector<int> row_indices;
    int col_alpha;
    std::vector<int> col_indices;
    Rational value;
  };
  std::vector<FiberMetricEntry> metric_fiber;
  bool metric_allow_indefinite = false;

  std::vector<std::vector<Rational>> eta_fields; // m x m, required
  struct OrderEntry {
    std::vector<int> I;
    std::vector<int> J;
    Rational value;
  };
  std::vector<OrderEntry> eta_orders;

  std::string chi;
  std::string phi;
  std::string format = "text";
};

/// Structural validation only; throws ConfigError naming the offending
/// field. Unknown fields are rejected.
ProblemConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ProblemConfig& cfg);

/// Reads and parses a configuration file; ConfigError on IO or JSON faults.
ProblemConfig load_config(const std::string& path);

/// Materializes the configuration: builds the context, metric, attested
/// Poisson structure, and parses chi and phi. Throws the respective
/// component errors (ParseError, RangeError, ConfigError, OrderOverflow,
/// PoissonCheckFailed).
HamiltonianProblem build_problem(const ProblemConfig& cfg);

} // namespace jetbrackets
