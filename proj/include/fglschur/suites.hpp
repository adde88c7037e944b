#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fglschur/fgl.hpp"
#include "fglschur/report.hpp"

namespace fglschur {

/// Settings shared by the verification suites and conjecture scans. Unset
/// optionals fall back to per-suite defaults.
struct RunConfig {
  /// "additive", "k-theory", "universal"; empty selects the suite default.
  std::vector<std::string> fgls;
  std::string beta = "symbolic";
  std::optional<int> degree;
  std::optional<int> n;
  int n_y = 4;
  std::optional<int> max_size;
  std::optional<bool> factorial;
  int jobs = 1;
  std::uint64_t seed = 1;

  Json to_json() const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

const std::vector<SuiteInfo>& suite_list();

/// Runs one verification suite; ConfigurationError for an unknown name.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

/// gp, gq or staircase scan. One-row gp/gq cases are asserted, everything
/// else is informational.
SuiteReport run_conjecture(const std::string& kind, const RunConfig& cfg);

/// A unit of suite work; cells run on up to `jobs` threads and their results
/// are concatenated in cell order.
struct Cell {
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};
std::vector<CheckResult> run_cells(const std::vector<Cell>& cells, int jobs);

}  // namespace fglschur
