#include <doctest.h>

#include "wittjet/errors.hpp"
#include "wittjet/presentation.hpp"
#include "wittjet/prolong.hpp"

using namespace wittjet;

namespace {

using V = std::vector<FiniteAlgebra::Element>;

Report w1_derivation(const char* triple, const char* ring) {
  auto t = named_triple(triple);
  const auto b = FiniteAlgebra::over(named_finite_ring(ring), t);
  const WittRing<FiniteAlgebra> w(b, build_witt_table(t, 1), 1);
  return check_pi_derivation<WittRing<FiniteAlgebra>, FiniteAlgebra>(
      *t, w, b, [](const V& x) { return x[0]; }, [](const V& x) { return x[1]; }, all_vectors(b, 2),
      [](const V&) { return std::string{}; });
}

}  // namespace

TEST_CASE("the second Witt coordinate is a pi-derivation W_1(B) -> B") {
  CHECK(w1_derivation("Z2", "F2").pass);
  CHECK(w1_derivation("Z2", "Z4").pass);
  CHECK(w1_derivation("Z2", "F2eps").pass);
  CHECK(w1_derivation("Z3", "F3").pass);
  CHECK(w1_derivation("GAUSS", "F4").pass);
  CHECK(w1_derivation("EISEN", "F4").pass);
}

TEST_CASE("delta = 0 is not a pi-derivation on Z/4") {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("Z4"), z2);
  std::vector<FiniteAlgebra::Element> elements{0, 1, 2, 3};
  const auto report = check_pi_derivation<FiniteAlgebra, FiniteAlgebra>(
      *z2, b, b, [](auto x) { return x; }, [](auto) { return FiniteAlgebra::Element{0}; }, elements,
      [&](auto x) { return b.format(x); });
  CHECK_FALSE(report.pass);
  // delta(1 + 1) must be C_pi(1, 1) = -1
  CHECK(report.counterexample->find("sum rule") != std::string::npos);
}

TEST_CASE("twisted Leibniz rules in Z/8") {
  auto z2 = named_triple("Z2");
  QuotientRing z8(z2, 3u);
  DerivationRules<QuotientRing> rules(*z2, z8);
  // delta(2) = -1, delta(3) = -3; delta(6) = (6 - 36)/2 = -15 = 1 mod 8
  const auto two = std::make_pair(z8.from_int(2), z8.from_int(-1));
  const auto three = std::make_pair(z8.from_int(3), z8.from_int(-3));
  const auto six = rules.product(two, three);
  CHECK(z8.equal(six.first, z8.from_int(6)));
  CHECK(z8.equal(six.second, z8.from_int(1)));
  // delta(5) = (5 - 25)/2 = -10
  const auto five = rules.sum(two, three);
  CHECK(z8.equal(five.second, z8.from_int(-10)));
}

TEST_CASE("base sequences") {
  auto z2 = named_triple("Z2");
  CHECK(check_base_sequence(BaseSequence::constant(z2, 3)).pass);
  CHECK(check_base_sequence(BaseSequence(z2, {std::nullopt, 3u, 2u})).pass);
  CHECK(check_base_sequence(BaseSequence(z2, {4u, 3u, 1u})).pass);
  CHECK(check_base_sequence(BaseSequence(named_triple("GAUSS"), {std::nullopt, 4u, 3u})).pass);
  CHECK(BaseSequence(z2, {std::nullopt, 3u, 2u}).describe() == "Z2 -> Z2/pi^3 -> Z2/pi^2");
}

TEST_CASE("delta_O does not descend Z/4 -> Z/4") {
  auto z2 = named_triple("Z2");
  // 0 and 4 agree mod 4 but delta(4) = -6 does not vanish mod 4
  QuotientRing z4(z2, 2u);
  CHECK_FALSE(z4.equal(z4.reduce(z2->delta(z2->ring().from_int(4))), z4.reduce(z2->delta(z2->ring().zero()))));
  try {
    BaseSequence(z2, {2u, 2u});
    FAIL("expected IllDefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllDefined);
  }
}

TEST_CASE("prolongations and W_1 points correspond") {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("Z4"), z2);
  const auto a = Presentation::parse(z2, {"x"}, {"x^2 - 1"});
  const WittRing<FiniteAlgebra> w(b, build_witt_table(z2, 1), 1);
  const auto homs = enumerate_homs(a, w, all_vectors(b, 2), kDefaultSizeCap, Exec::Serial);
  REQUIRE_FALSE(homs.empty());
  const JetVar x{"x", 0, 0};
  for (const auto& point : homs) {
    auto p = prolongation_from_w1(z2, b, {{x, point[0]}}, a.relations);
    CHECK(p.check_well_defined(20).pass);
    CHECK(prolongation_to_w1(p, a.generators).at(x) == point[0]);
  }
}

TEST_CASE("an assignment that is not a point fails well-definedness") {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("Z4"), z2);
  // x -> 2 does not satisfy x^2 - 1 = 0 in Z/4
  Prolongation<FiniteAlgebra> p(z2, b, {{JetVar{"x", 0, 0}, 2}}, {{JetVar{"x", 0, 0}, 0}},
                                {parse_polynomial(*z2, "x^2 - 1")});
  CHECK_FALSE(p.check_well_defined(5).pass);
}
