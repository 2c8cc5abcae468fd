#include "wittjet/axioms.hpp"

#include "wittjet/presentation.hpp"

namespace wittjet {

Report check_witt_operators(const WittRing<FiniteAlgebra>& w, Exec exec) {
  Report report;
  report.name = "witt-operators";
  const FiniteAlgebra& b = w.base();
  const unsigned L = w.level();
  const BaseTriple& triple = w.triple();
  report.details["ring"] = b.name();
  report.details["level"] = L;
  if (L == 0) return report;
  const auto full = all_vectors(b, L + 1);
  const auto shorter = all_vectors(b, L);
  const auto pi = map_coefficient(b, triple.pi());
  std::set<FiniteAlgebra::Element> pi_b;
  for (FiniteAlgebra::Element c = 0; c < b.size(); ++c) pi_b.insert(b.mul(pi, c));

  auto run = [&](const std::string& what, std::uint64_t count, auto ok, auto show) {
    auto bad = first_failure(exec, count, ok);
    report.checked += count;
    if (bad) report.fail(what + " at " + show(*bad));
  };
  run("F V x != pi x", shorter.size(),
      [&](std::uint64_t i) {
        const auto& x = shorter[i];
        return w.equal(w.frobenius(w.verschiebung(x)), w.scalar(triple.pi(), x));
      },
      [&](std::uint64_t i) { return "x = " + show_witt(b, shorter[i]); });
  run("x V(y) != V(F(x) y)", full.size() * shorter.size(),
      [&](std::uint64_t i) {
        const auto& x = full[i % full.size()];
        const auto& y = shorter[i / full.size()];
        return w.equal(w.mul(x, w.verschiebung(y)), w.verschiebung(w.mul(w.frobenius(x), y)));
      },
      [&](std::uint64_t i) {
        return "x = " + show_witt(b, full[i % full.size()]) + ", y = " + show_witt(b, shorter[i / full.size()]);
      });
  const std::uint64_t size = b.size();
  run("[a][b] != [ab]", size * size,
      [&](std::uint64_t i) {
        const auto x = static_cast<FiniteAlgebra::Element>(i % size), y = static_cast<FiniteAlgebra::Element>(i / size);
        return w.equal(w.mul(w.teichmuller(x), w.teichmuller(y)), w.teichmuller(b.mul(x, y)));
      },
      [&](std::uint64_t i) { return "a = " + b.format(i % size) + ", b = " + b.format(i / size); });
  run("F(x) != R(x)^q + pi Delta(x)", full.size(),
      [&](std::uint64_t i) {
        const auto& x = full[i];
        const auto r = w.truncate(x, L);
        auto rq = r;
        for (unsigned long k = 1; k < triple.q(); ++k) rq = w.mul(rq, r);
        return w.equal(w.frobenius(x), w.add(rq, w.scalar(triple.pi(), w.delta(x))));
      },
      [&](std::uint64_t i) { return "x = " + show_witt(b, full[i]); });
  run("F(x)_i != x_i^q mod pi", full.size(),
      [&](std::uint64_t i) {
        const auto& x = full[i];
        const auto fx = w.frobenius(x);
        for (unsigned k = 0; k < L; ++k) {
          if (!pi_b.count(b.sub(fx[k], power(b, x[k], triple.q())))) return false;
        }
        return true;
      },
      [&](std::uint64_t i) { return "x = " + show_witt(b, full[i]); });
  return report;
}

}  // namespace wittjet
