#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fglschur/series.hpp"

namespace fglschur {

using Json = nlohmann::json;

/// Canonical form: the terms in series order, each as
/// {"monomial": {"var": exponent, ...}, "num": "..", "den": ".."}.
Json series_to_json(const Series& s);
/// Round trip of series_to_json under the given truncation.
Series series_from_json(const Json& j, Truncation t);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<Witness> witness;
  /// Informational checks are reported but never fail a suite.
  bool informational = false;

  static CheckResult compare(std::string name, const Series& lhs, const Series& rhs);
  static CheckResult ok(std::string name, std::string detail = "");
  static CheckResult fail(std::string name, std::string detail);
  static CheckResult info(std::string name, bool pass, std::string detail);

  Json to_json() const;
};

struct SuiteReport {
  std::string suite;
  Json config = Json::object();
  std::vector<CheckResult> checks;
  /// Free-form findings that are not pass/fail checks.
  std::vector<std::string> notes;

  bool pass() const;
  int failures() const;
  Json to_json() const;
  std::string to_text() const;
};

}  // namespace fglschur
