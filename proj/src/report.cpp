#include "mppa/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace mppa {

namespace {

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

nlohmann::ordered_json check_json(const CheckResult& c) {
  return {{"pass", c.pass}, {"probabilistic", c.probabilistic}, {"detail", c.detail}};
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

}  // namespace

std::string format_report(const SuiteReport& r, const ReportContext& ctx, const ReportOptions& opts) {
  std::size_t passed = 0;
  for (const auto& o : r.outcomes) passed += o.pass() ? 1 : 0;
  const std::size_t failed = r.outcomes.size() - passed;

  if (opts.json) {
    nlohmann::ordered_json j;
    j["suites"] = ctx.suites;
    j["truncation"] = ctx.truncation;
    j["oracle_trials"] = ctx.trials;
    j["seed"] = ctx.seed;
    nlohmann::ordered_json res = nlohmann::ordered_json::array();
    for (const auto& o : r.outcomes) {
      nlohmann::ordered_json e;
      e["id"] = o.id;
      e["suite"] = o.suite;
      e["statement"] = o.statement;
      e["status"] = o.pass() ? "pass" : "fail";
      e["exact"] = check_json(o.exact);
      e["oracle"] = check_json(o.oracle);
      if (opts.timing) e["seconds"] = o.seconds;
      res.push_back(e);
    }
    j["results"] = res;
    j["summary"] = {{"total", r.outcomes.size()}, {"passed", passed}, {"failed", failed}};
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "suites: " << joined(ctx.suites) << "  truncation: " << ctx.truncation << "  oracle trials: " << ctx.trials
     << "  seed: " << ctx.seed << "\n";
  for (const auto& o : r.outcomes) {
    os << (o.pass() ? "PASS " : "FAIL ") << o.id;
    if (opts.timing) os << " (" << seconds(o.seconds) << " s)";
    os << "\n  " << o.statement << "\n";
    if (!o.exact.pass) os << "  exact: " << o.exact.detail << "\n";
    else if (!o.exact.detail.empty() && o.exact.detail != "n/a") os << "  note: " << o.exact.detail << "\n";
    if (o.exact.probabilistic) os << "  exact check fell back to the oracle (probabilistic)\n";
    if (!o.oracle.pass) os << "  oracle: " << o.oracle.detail << "\n";
  }
  os << passed << "/" << r.outcomes.size() << " passed";
  if (failed) os << ", " << failed << " failed";
  os << "\n";
  return os.str();
}

}  // namespace mppa
