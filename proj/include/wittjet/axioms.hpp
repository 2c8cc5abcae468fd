#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wittjet/finite_ring.hpp"
#include "wittjet/kernels.hpp"
#include "wittjet/report.hpp"
#include "wittjet/witt.hpp"

namespace wittjet {

/// Commutative ring axioms on all triples from `elements` (samples = 0) or on
/// `samples` seeded random triples.
template <CommutativeRing R>
Report check_ring_axioms(const R& ring, const std::vector<typename R::Element>& elements,
                         const std::function<std::string(const typename R::Element&)>& show,
                         std::uint64_t samples = 0, std::uint64_t seed = 1, Exec exec = Exec::Parallel) {
  using E = typename R::Element;
  Report report;
  report.name = "ring-axioms";
  const std::uint64_t n = elements.size();
  auto failure = [&](const E& x, const E& y, const E& z) -> std::optional<std::string> {
    if (!ring.equal(ring.add(ring.add(x, y), z), ring.add(x, ring.add(y, z)))) return "(x + y) + z != x + (y + z)";
    if (!ring.equal(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z)))) return "(x y) z != x (y z)";
    if (!ring.equal(ring.mul(x, ring.add(y, z)), ring.add(ring.mul(x, y), ring.mul(x, z)))) return "x (y + z) != x y + x z";
    if (!ring.equal(ring.add(x, y), ring.add(y, x))) return "x + y != y + x";
    if (!ring.equal(ring.mul(x, y), ring.mul(y, x))) return "x y != y x";
    if (!ring.equal(ring.add(x, ring.zero()), x)) return "x + 0 != x";
    if (!ring.equal(ring.mul(x, ring.one()), x)) return "x 1 != x";
    if (!ring.equal(ring.add(x, ring.neg(x)), ring.zero())) return "x + (-x) != 0";
    return std::nullopt;
  };
  std::vector<std::uint64_t> picks;
  std::uint64_t total = n * n * n;
  if (samples > 0) {
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < 3 * samples; ++s) picks.push_back(pick(rng));
    total = samples;
  }
  auto triple = [&](std::uint64_t i) {
    if (samples > 0) return std::array<std::uint64_t, 3>{picks[3 * i], picks[3 * i + 1], picks[3 * i + 2]};
    return std::array<std::uint64_t, 3>{i % n, (i / n) % n, i / (n * n)};
  };
  auto bad = first_failure(exec, total, [&](std::uint64_t i) {
    auto [a, b, c] = triple(i);
    return !failure(elements[a], elements[b], elements[c]);
  });
  report.checked = total * 8;
  report.details["exhaustive"] = samples == 0;
  report.details["size"] = n;
  if (bad) {
    auto [a, b, c] = triple(*bad);
    report.fail(*failure(elements[a], elements[b], elements[c]) + " at x = " + show(elements[a]) +
                ", y = " + show(elements[b]) + ", z = " + show(elements[c]));
  }
  return report;
}

inline std::string show_witt(const FiniteAlgebra& b, const std::vector<FiniteAlgebra::Element>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + b.format(x[i]);
  return out + ")";
}

/// F V = pi, x V(y) = V(F(x) y), [a][b] = [ab], F(x) = R(x)^q + pi Delta(x), and
/// F(x)_i = x_i^q mod pi B, on all vectors of W_L(B).
Report check_witt_operators(const WittRing<FiniteAlgebra>& w, Exec exec = Exec::Parallel);

}  // namespace wittjet
