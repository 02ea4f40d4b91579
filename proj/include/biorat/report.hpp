#pragma once

#include <chrono>
#include <string>
#include <utility>

#include <json.hpp>

#include "biorat/params.hpp"

namespace biorat {

using json = nlohmann::json;

inline json params_to_json(const Params& p) {
  return json{{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"N", p.N}};
}

/// Outcome of one verification over one parameter set. A failing result
/// always carries a counterexample payload.
struct CheckResult {
  std::string check_id;
  Params params;
  bool pass = false;
  json counterexample;  // null when pass
  json details;         // optional diagnostics (expansion data, scalars, ...)
  double elapsed_ms = 0.0;

  static CheckResult ok(std::string id, const Params& p, json details = nullptr) {
    CheckResult r{std::move(id), p, true, nullptr, std::move(details), 0.0};
    return r;
  }

  static CheckResult fail(std::string id, const Params& p, json counterexample,
                          json details = nullptr) {
    if (counterexample.is_null()) counterexample = json{{"reason", "unspecified"}};
    CheckResult r{std::move(id), p, false, std::move(counterexample), std::move(details), 0.0};
    return r;
  }
};

inline json check_to_json(const CheckResult& r, bool include_timing = true) {
  json j{{"check_id", r.check_id},
         {"params", params_to_json(r.params)},
         {"status", r.pass ? "pass" : "fail"},
         {"counterexample", r.counterexample}};
  if (!r.details.is_null()) j["details"] = r.details;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

/// Small stopwatch used to fill CheckResult::elapsed_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace biorat
