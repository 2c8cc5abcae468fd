#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittjet/finite_ring.hpp"
#include "wittjet/kernels.hpp"
#include "wittjet/multipoly.hpp"

namespace wittjet {

/// R[generators]/(relations) with R = O or O/pi^k.
struct Presentation {
  TriplePtr triple;
  std::optional<unsigned> pi_power;
  std::vector<JetVar> generators;  // sorted
  std::vector<MultiPoly> relations;
  unsigned level = 0;  // jet level; 0 for a plain algebra
  std::string name;

  static Presentation make(TriplePtr triple, std::vector<JetVar> generators,
                           std::vector<MultiPoly> relations, std::optional<unsigned> pi_power = std::nullopt,
                           std::string name = {});
  /// Generators by name ("x", "y", ...) and relations in the text syntax of parse_polynomial.
  static Presentation parse(TriplePtr triple, const std::vector<std::string>& generators,
                            const std::vector<std::string>& relations, std::string name = {});

  /// {"triple": name | {"g","pi","q"}, "generators": [...], "relations": [text | poly], "pi_power"?: k}
  static Presentation from_json(const nlohmann::json& j);
  /// Header {base, level, generators} followed by relations in the polynomial format.
  nlohmann::json to_json() const;
  std::string base_name() const;
  std::string to_string() const;
};

TriplePtr triple_from_json(const nlohmann::json& j);

/// Relations of a presentation compiled into a ring R, slots = generators.
template <CommutativeRing R>
class RelationSystem {
 public:
  using E = typename R::Element;

  RelationSystem(const Presentation& p, const R& ring) {
    for (const auto& f : p.relations) compiled_.emplace_back(ring, f, p.generators);
  }

  bool holds(const R& ring, const std::vector<E>& values) const {
    for (const auto& f : compiled_) {
      if (!ring.equal(f(ring, values), ring.zero())) return false;
    }
    return true;
  }

 private:
  std::vector<CompiledPoly<R>> compiled_;
};

/// All assignments generators -> `elements` under which every relation vanishes,
/// in increasing index order (first generator varies fastest).
template <CommutativeRing R>
std::vector<std::vector<typename R::Element>> enumerate_homs(
    const Presentation& p, const R& ring, const std::vector<typename R::Element>& elements,
    std::uint64_t cap = kDefaultSizeCap, Exec exec = Exec::Parallel) {
  using E = typename R::Element;
  const std::size_t k = p.generators.size();
  const std::uint64_t radix = elements.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / std::max<std::uint64_t>(radix, 1)) {
      throw Error(ErrorKind::SizeCap, "Hom enumeration over " + std::to_string(radix) + "^" +
                                          std::to_string(k) + " assignments exceeds cap " + std::to_string(cap));
    }
    total *= radix;
  }
  RelationSystem<R> system(p, ring);
  auto assignment = [&](std::uint64_t index) {
    std::vector<std::uint32_t> digits(k);
    kernels::decode(index, radix, digits);
    std::vector<E> values;
    values.reserve(k);
    for (auto d : digits) values.push_back(elements[d]);
    return values;
  };
  auto hits = select(exec, total, [&](std::uint64_t index) { return system.holds(ring, assignment(index)); });
  std::vector<std::vector<E>> out;
  out.reserve(hits.size());
  for (auto index : hits) out.push_back(assignment(index));
  return out;
}

/// All vectors in B^len, first component varying fastest.
std::vector<std::vector<FiniteAlgebra::Element>> all_vectors(const FiniteAlgebra& b, std::size_t len,
                                                              std::uint64_t cap = kDefaultSizeCap);

/// Checks that B is an R-algebra for the coefficient ring R of the presentation.
void require_coefficient_ring(const Presentation& p, const FiniteAlgebra& b);

}  // namespace wittjet
