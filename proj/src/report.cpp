#include "fglschur/report.hpp"

#include <regex>

#include "fglschur/error.hpp"
#include "fglschur/fgl.hpp"

namespace fglschur {

Json series_to_json(const Series& s) {
  Json out = Json::array();
  for (const auto& t : s.terms()) {
    Json mono = Json::object();
    for (const auto& [v, e] : t.monomial.pairs()) mono[v.name()] = e;
    const Rational& c = t.coeff;
    out.push_back({{"monomial", mono}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return out;
}

namespace {

Variable parse_variable(const std::string& name) {
  static const std::regex re(R"((x|y|b|bn|m)(\d+))");
  if (name == "beta") return var_beta();
  if (name == "t") return var_t();
  if (name == "u") return scratch_u();
  if (name == "v") return scratch_v();
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw ConfigurationError("unknown variable name: " + name);
  const int k = std::stoi(m[2]);
  const std::string f = m[1];
  if (f == "x") return var_x(k);
  if (f == "y") return var_y(k);
  if (f == "b") return var_b(k);
  if (f == "bn") return var_b(-k);
  return var_m(k);
}

}  // namespace

Series series_from_json(const Json& j, Truncation t) {
  std::vector<Term> terms;
  for (const auto& e : j) {
    std::vector<std::pair<Variable, int>> ps;
    for (const auto& [name, exp] : e.at("monomial").items()) ps.emplace_back(parse_variable(name), exp.get<int>());
    Rational c(mpz_class(e.at("num").get<std::string>()), mpz_class(e.at("den").get<std::string>()));
    c.canonicalize();
    terms.push_back({Monomial::from_pairs(ps), c});
  }
  return Series::from_terms(std::move(terms), t);
}

CheckResult CheckResult::compare(std::string name, const Series& lhs, const Series& rhs) {
  CheckResult r;
  r.name = std::move(name);
  r.witness = first_difference(lhs, rhs);
  r.pass = !r.witness;
  const int c = std::min(lhs.cutoff(), rhs.cutoff());
  r.detail = r.pass ? "equal up to degree " + std::to_string(c) : "first difference " + r.witness->to_string();
  return r;
}

CheckResult CheckResult::ok(std::string name, std::string detail) {
  return CheckResult{std::move(name), true, std::move(detail), std::nullopt, false};
}

CheckResult CheckResult::fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail), std::nullopt, false};
}

CheckResult CheckResult::info(std::string name, bool pass, std::string detail) {
  return CheckResult{std::move(name), pass, std::move(detail), std::nullopt, true};
}

Json CheckResult::to_json() const {
  Json j{{"name", name}, {"status", pass ? "PASS" : "FAIL"}, {"detail", detail}};
  if (informational) j["informational"] = true;
  if (witness)
    j["witness"] = {{"monomial", witness->monomial.to_string()},
                    {"lhs", witness->lhs.get_str()},
                    {"rhs", witness->rhs.get_str()}};
  return j;
}

bool SuiteReport::pass() const { return failures() == 0; }

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass && !c.informational) ++n;
  return n;
}

Json SuiteReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) checks_json.push_back(c.to_json());
  Json j{{"suite", suite},
         {"config", config},
         {"status", pass() ? "PASS" : "FAIL"},
         {"checks", checks_json},
         {"failures", failures()}};
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string SuiteReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "PASS " : (c.informational ? "INFO " : "FAIL ");
    out += c.name;
    if (!c.detail.empty()) out += "  [" + c.detail + "]";
    out += '\n';
  }
  for (const auto& n : notes) out += "NOTE " + n + '\n';
  out += suite + ": " + (pass() ? "PASS" : "FAIL") + " (" + std::to_string(checks.size()) + " checks, " +
         std::to_string(failures()) + " failures)\n";
  return out;
}

}  // namespace fglschur
