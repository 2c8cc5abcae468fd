#include <doctest.h>

#include <array>

#include "wittjet/errors.hpp"
#include "wittjet/jet.hpp"
#include "wittjet/suites.hpp"

using namespace wittjet;

namespace {

MultiPoly parse(const TriplePtr& t, const std::string& s) { return parse_polynomial(*t, s); }

/// P_i solved from sum_j pi^j P_j^{q^{i-j}} = phi^i(T) one level at a time.
std::vector<MultiPoly> ghost_inversion(const TriplePtr& t, unsigned n) {
  std::vector<MultiPoly> P;
  MultiPoly phi_i = MultiPoly::variable(t->ring_ptr(), jet_t(0));
  for (unsigned i = 0; i <= n; ++i) {
    MultiPoly rest = phi_i;
    for (unsigned j = 0; j < i; ++j) {
      unsigned long e = 1;
      for (unsigned k = j; k < i; ++k) e *= t->q();
      rest -= P[j].pow(e).scale(t->pi_power(j));
    }
    for (unsigned k = 0; k < i; ++k) rest = exact_div_pi(*t, rest);
    P.push_back(rest);
    phi_i = phi_A(*t, phi_i);
  }
  return P;
}

/// Z/2^k[t]/(t^2 + t + 1) for h = 2, or Z/2^k for h = 1: W_n of F_{2^h}.
struct GaloisRing {
  unsigned mod;
  unsigned h;
  using E = std::array<unsigned, 2>;

  std::vector<E> elements() const {
    std::vector<E> out;
    for (unsigned a = 0; a < mod; ++a) {
      for (unsigned b = 0; b < (h == 2 ? mod : 1u); ++b) out.push_back({a, b});
    }
    return out;
  }
  E mul(E x, E y) const {
    // (a + bt)(c + dt) = ac + (ad + bc) t + bd t^2, t^2 = -t - 1
    const unsigned bd = x[1] * y[1];
    return {(x[0] * y[0] + mod * mod - bd) % mod, (x[0] * y[1] + x[1] * y[0] + mod * mod - bd) % mod};
  }
  E sub(E x, E y) const { return {(x[0] + mod - y[0]) % mod, (x[1] + mod - y[1]) % mod}; }
  bool zero(E x) const { return x[0] == 0 && x[1] == 0; }
};

std::uint64_t oracle_count(const std::string& algebra, const GaloisRing& r) {
  const auto all = r.elements();
  const GaloisRing::E one{1, 0};
  std::uint64_t count = 0;
  if (algebra == "A1") return all.size();
  if (algebra == "A4") {
    for (auto x : all) {
      for (auto y : all) count += r.zero(r.mul(x, y));
    }
    return count;
  }
  for (auto x : all) count += algebra == "A2" ? r.zero(r.mul(x, x)) : r.zero(r.sub(r.mul(x, x), one));
  return count;
}

}  // namespace

TEST_CASE("P_2 for (Z, 2, 2) is T'' + T^2 T' + T'^2") {
  auto z2 = named_triple("Z2");
  const auto family = p_polynomials(z2, 2);
  CHECK(family.P[0] == parse(z2, "T"));
  CHECK(family.P[1] == parse(z2, "T'"));
  CHECK(family.P[2] == parse(z2, "T'' + T^2*T' + T'^2"));
  CHECK(family.S[1] == parse(z2, "T^2*T' + T'^2"));
  CHECK_FALSE(verify_p_family(family).has_value());
}

TEST_CASE("the recursion agrees with direct ghost inversion") {
  for (auto [name, n] : {std::pair{"Z2", 4u}, std::pair{"Z3", 3u}, std::pair{"GAUSS", 4u}, std::pair{"EISEN", 2u}}) {
    auto t = named_triple(name);
    const auto family = p_polynomials(t, n, 1024);
    const auto oracle = ghost_inversion(t, n);
    CAPTURE(name);
    for (unsigned i = 0; i <= n; ++i) CHECK(family.P[i] == oracle[i]);
  }
  auto z3 = named_triple("Z3");
  CHECK(p_polynomials(z3, 2).P[2] == parse(z3, "T'' + T^6*T' + 3*T^3*T'^2 + 3*T'^3"));
  auto gauss = named_triple("GAUSS");
  CHECK(p_polynomials(gauss, 2).P[2] == parse(gauss, "T'' + (2 - t)*T^2*T' + T'^2"));
}

TEST_CASE("P family respects the cap") {
  try {
    p_polynomials(named_triple("Z2"), 7, 64);
    FAIL("expected FeasibilityCap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FeasibilityCap);
  }
}

TEST_CASE("jet algebra presentations") {
  auto z2 = named_triple("Z2");
  const auto a = Presentation::parse(z2, {"x"}, {"x^2"}, "A");
  const auto j1 = jet_algebra(a, 1);
  CHECK(j1.generators.size() == 2);
  REQUIRE(j1.relations.size() == 2);
  CHECK(j1.relations[0] == parse(z2, "x^2"));
  CHECK(j1.relations[1] == parse(z2, "2*x^2*x' + 2*x'^2"));
  CHECK(j1.level == 1);

  const auto j0 = jet_algebra(a, 0);
  CHECK(j0.generators == a.generators);
  CHECK(j0.relations == a.relations);

  const auto free = jet_algebra(Presentation::parse(z2, {"x", "y"}, {}, "F"), 2);
  CHECK(free.relations.empty());
  CHECK(free.generators.size() == 6);

  const auto fiber = reduce_mod_pi(j1, "F2");
  CHECK(fiber.relations.size() == 1);
  CHECK(fiber.pi_power == 1u);
}

TEST_CASE("jets over a non-constant base are reduced mod the last level") {
  auto z2 = named_triple("Z2");
  const BaseSequence base(z2, {std::nullopt, 3u, 2u});
  const auto j = jet_algebra(Presentation::parse(z2, {"x"}, {"x^2 + 4*x"}, "A"), 2, &base);
  CHECK(j.pi_power == 2u);
}

TEST_CASE("alternative coordinates") {
  auto z2 = named_triple("Z2");
  const auto j2 = jet_algebra(Presentation::parse(z2, {"x"}, {"x^2"}, "A"), 2);
  const auto alt = alt_presentation(j2, p_polynomials(z2, 2));
  CHECK(alt.inverse.at(JetVar{"x", 0, 2}) == parse(z2, "Px'' - Px^2*Px' - Px'^2"));
  CHECK(alt.forward.at(JetVar{"Px", 0, 2}) == parse(z2, "x'' + x^2*x' + x'^2"));
  for (const auto& [y, f] : alt.forward) CHECK(f.substitute(alt.inverse) == MultiPoly::variable(z2->ring_ptr(), y));
}

TEST_CASE("adjunction counts against Galois ring arithmetic") {
  auto z2 = named_triple("Z2");
  const auto family = p_polynomials(z2, 2);
  const auto table = build_witt_table(z2, 2);
  const auto algebras = adjunction_algebras(z2);
  for (const auto& [ring, h] : {std::pair{"F2", 1u}, std::pair{"F4", 2u}}) {
    const auto b = FiniteAlgebra::over(named_finite_ring(ring), z2);
    for (unsigned n = 0; n <= 2; ++n) {
      const GaloisRing gr{1u << (n + 1), h};
      for (const auto& a : algebras) {
        const auto report = check_adjunction(a, n, b, table, family);
        CAPTURE(a.name);
        CAPTURE(ring);
        CAPTURE(n);
        CHECK(report.pass);
        CHECK(report.details["hom_A_WnB"].get<std::uint64_t>() == oracle_count(a.name, gr));
        CHECK(report.details["hom_JnA_B"].get<std::uint64_t>() == oracle_count(a.name, gr));
      }
    }
  }
}

TEST_CASE("adjunction over non-reduced rings, frozen counts") {
  auto z2 = named_triple("Z2");
  const auto family = p_polynomials(z2, 2);
  const auto table = build_witt_table(z2, 2);
  const auto xy = adjunction_algebras(z2)[3];
  const auto b = FiniteAlgebra::over(named_finite_ring("F2eps"), z2);
  const auto report = check_adjunction(xy, 2, b, table, family);
  CHECK(report.pass);
  CHECK(report.details["hom_JnA_B"].get<std::uint64_t>() == 832);
  // Z[x] -> W_n(B) is any vector: |B|^{n+1}
  const auto free = check_adjunction(adjunction_algebras(z2)[0], 2, b, table, family);
  CHECK(free.details["hom_A_WnB"].get<std::uint64_t>() == 64);
}

TEST_CASE("adjunction over the non-constant base Z -> Z/8 -> Z/4") {
  auto z2 = named_triple("Z2");
  const BaseSequence base(z2, {std::nullopt, 3u, 2u});
  const auto a = Presentation::parse(z2, {"x"}, {"x^2"}, "A");
  for (const char* ring : {"F2", "F4", "Z4", "F2eps"}) {
    const auto b = FiniteAlgebra::over(named_finite_ring(ring), z2);
    CHECK(check_adjunction(a, 1, b, build_witt_table(z2, 1), p_polynomials(z2, 1), &base).pass);
  }
}

TEST_CASE("adjunction for the Gaussian and Eisenstein triples") {
  for (auto [name, ring] : {std::pair{"GAUSS", "F2"}, std::pair{"GAUSS", "F2eps"}, std::pair{"EISEN", "F4"}}) {
    auto t = named_triple(name);
    const auto b = FiniteAlgebra::over(named_finite_ring(ring), t);
    for (const auto& a : adjunction_algebras(t)) {
      CAPTURE(name);
      CAPTURE(a.name);
      CHECK(check_adjunction(a, 1, b, build_witt_table(t, 1), p_polynomials(t, 1)).pass);
    }
  }
}

TEST_CASE("serial and parallel enumeration give the same report") {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("Z4"), z2);
  AdjunctionOptions serial;
  serial.exec = Exec::Serial;
  const auto a = adjunction_algebras(z2)[3];
  const auto s = check_adjunction(a, 1, b, build_witt_table(z2, 1), p_polynomials(z2, 1), nullptr, serial);
  const auto p = check_adjunction(a, 1, b, build_witt_table(z2, 1), p_polynomials(z2, 1));
  CHECK(s.to_json().dump() == p.to_json().dump());
}

TEST_CASE("the size cap is enforced") {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("F4"), z2);
  AdjunctionOptions tight;
  tight.cap = 10;
  try {
    check_adjunction(adjunction_algebras(z2)[3], 1, b, build_witt_table(z2, 1), p_polynomials(z2, 1), nullptr, tight);
    FAIL("expected SizeCap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCap);
  }
}

TEST_CASE("universal property for C_0 = W_k(B) -> C_1 = W_{k-1}(B)") {
  auto z2 = named_triple("Z2");
  const auto a = adjunction_algebras(z2)[3];
  for (const char* ring : {"F2", "Z4"}) {
    const auto b = FiniteAlgebra::over(named_finite_ring(ring), z2);
    for (unsigned k = 1; k <= 2; ++k) CHECK(check_universal_property(a, b, build_witt_table(z2, 2), k).pass);
  }
}

TEST_CASE("localization: points are units of W_1(B)") {
  auto z2 = named_triple("Z2");
  const auto a = Presentation::parse(z2, {"x"}, {}, "A");
  const std::vector<std::string> names{"F2", "F3", "Z4"};
  const auto rings = parse_rings(names, z2);
  const auto report = check_localization(a, parse(z2, "x"), 1, rings);
  CHECK(report.pass);
  CHECK(report.details["t"] == "x^3 + 2*x*x'");
  // (x0, x1)(y0, y1) = (x0 y0, x0^2 y1 + x1 y0^2 + 2 x1 y1)
  for (std::size_t r = 0; r < rings.size(); ++r) {
    const auto& b = rings[r];
    std::uint64_t units = 0;
    for (FiniteAlgebra::Element x0 = 0; x0 < b.size(); ++x0) {
      for (FiniteAlgebra::Element x1 = 0; x1 < b.size(); ++x1) {
        bool unit = false;
        for (FiniteAlgebra::Element y0 = 0; y0 < b.size() && !unit; ++y0) {
          for (FiniteAlgebra::Element y1 = 0; y1 < b.size() && !unit; ++y1) {
            const auto p0 = b.mul(x0, y0);
            auto p1 = b.add(b.mul(b.mul(x0, x0), y1), b.mul(x1, b.mul(y0, y0)));
            p1 = b.add(p1, b.mul(b.from_int(2), b.mul(x1, y1)));
            unit = p0 == b.one() && p1 == b.zero();
          }
        }
        units += unit;
      }
    }
    const auto& row = report.details["rings"][r];
    CAPTURE(names[r]);
    CHECK(row["hom_Jn_As"].get<std::uint64_t>() == units);
    CHECK(row["hom_JnA_t"].get<std::uint64_t>() == units);
  }
}

TEST_CASE("jet prolongation sequence") {
  auto z2 = named_triple("Z2");
  const auto a = Presentation::parse(z2, {"x"}, {"x^2"}, "A");
  CHECK(check_jet_sequence(a, 2, parse_rings({"F2", "Z4"}, z2)).pass);
}
