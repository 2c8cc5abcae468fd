#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wittjet/jet.hpp"
#include "wittjet/report.hpp"
#include "wittjet/witt.hpp"

namespace wittjet {

/// Overrides for the verification suites; unset fields select the default matrix.
struct SuiteConfig {
  std::optional<std::string> triple;  // name or inline JSON
  std::optional<unsigned> level;
  std::optional<std::vector<std::string>> rings;
  /// witt-axioms only: verify this table file instead of building tables.
  std::optional<std::filesystem::path> table;
  std::uint64_t seed = 1;
  TableOptions tables;
  AdjunctionOptions enumeration;
};

std::vector<std::string> suite_names();
/// Throws InvalidArgument for an unknown suite or an empty ring list.
Report run_suite(const std::string& name, const SuiteConfig& config);

TriplePtr parse_triple(const std::string& text);
/// Each ring as an algebra over `triple`; throws InvalidArgument when empty.
std::vector<FiniteAlgebra> parse_rings(const std::vector<std::string>& names, const TriplePtr& triple);

/// A from the adjunction matrix: Z[x], Z[x]/(x^2), Z[x]/(x^2-1), Z[x,y]/(xy).
std::vector<Presentation> adjunction_algebras(const TriplePtr& triple);

}  // namespace wittjet
