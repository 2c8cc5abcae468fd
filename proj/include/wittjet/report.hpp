#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace wittjet {

/// Outcome of a verification run: JSON {name, pass, checked, counterexample?, seed?, ...details}.
struct Report {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;
  std::optional<std::uint64_t> seed;
  nlohmann::json details = nlohmann::json::object();

  /// Records a failure; the first witness is kept.
  void fail(const std::string& witness) {
    if (pass) counterexample = witness;
    pass = false;
  }

  void expect(bool condition, const std::string& witness) {
    ++checked;
    if (!condition) fail(witness);
  }

  /// Folds a sub-report into this one, keeping its details under its name.
  void absorb(const Report& other) {
    checked += other.checked;
    if (!other.pass) fail(other.name + ": " + other.counterexample.value_or("failed"));
    details[other.name] = other.to_json();
  }

  nlohmann::json to_json() const {
    nlohmann::json j = details;
    j["name"] = name;
    j["pass"] = pass;
    j["checked"] = checked;
    if (counterexample) j["counterexample"] = *counterexample;
    if (seed) j["seed"] = *seed;
    return j;
  }
};

}  // namespace wittjet
