#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "threept/fock.hpp"
#include "threept/rational.hpp"

namespace threept {

/// Malformed or inconsistent verification config.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string> kSuites = {"ring",       "kahler", "current",    "oscillator",
                                                 "heisenberg", "pairs",  "realization"};

/// Mode window and state degree for one suite.
struct SuiteWindow {
  int lo = 0;
  int hi = 0;
  int degree_max = 0;
};

struct VerifyConfig {
  std::vector<int> r{0, 1};
  std::vector<Rational> kappa0{Rational(0), Rational(1), Rational(-2)};
  Rational lambda = 1;
  Rational mu = 0;
  Rational nu = 1;
  Rational varkappa = 1;
  Rational c = 0;
  HeisVariant heis_variant = HeisVariant::Derived;

  /// Realization window and state degree.
  int m_min = -2;
  int m_max = 2;
  int degree_max = 2;
  /// Variable indices of the realization state basis; default [m_min - 4, m_max + 4].
  std::optional<std::pair<int, int>> index_range;

  /// Standalone Heisenberg parameters (chi1 is forced to 0 everywhere else).
  Rational heis_kappa0 = Rational(7, 3);
  Rational heis_chi1 = Rational(5, 2);

  /// Windows of the other suites.
  std::map<std::string, SuiteWindow> windows{{"ring", {-5, 5, 0}},       {"kahler", {-6, 6, 0}},
                                             {"current", {-5, 5, 0}},    {"jacobi", {-2, 2, 0}},
                                             {"oscillator", {-4, 4, 3}}, {"heisenberg", {-4, 4, 2}},
                                             {"pairs", {-3, 3, 2}}};

  std::vector<std::string> suites = kSuites;
  /// Failure details kept per record.
  int max_details = 5;

  /// Throws ConfigError on unknown keys, bad types or invalid values.
  static VerifyConfig from_json(const nlohmann::ordered_json& j);
  nlohmann::ordered_json to_json() const;
  void validate() const;
  std::pair<int, int> realization_index_range() const;
};

struct FailureDetail {
  std::string id;
  std::string residual;
  std::string expected;
};

/// Aggregated outcome of one family of checks.
struct CheckRecord {
  std::string suite;
  std::string family;
  std::string config;
  bool asserted = true;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> failing_ids;  ///< distinct mode identifiers with a failure
  std::vector<FailureDetail> details;

  bool passed() const { return failures == 0; }
};

struct Report {
  nlohmann::ordered_json config;
  std::vector<CheckRecord> records;

  long long checks() const;
  long long failures() const;
  long long asserted_failures() const;
  /// No asserted failures.
  bool passed() const { return asserted_failures() == 0; }

  nlohmann::ordered_json to_json() const;
  /// Pretty-printed JSON followed by a newline.
  std::string dump() const;
};

/// Records of one suite, in deterministic order.
std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyConfig& cfg);

/// Runs the selected suites in canonical order.
Report run(const VerifyConfig& cfg);

}  // namespace threept
