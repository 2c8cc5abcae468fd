#include <doctest.h>

#include "wittjet/errors.hpp"
#include "wittjet/finite_ring.hpp"
#include "wittjet/number_ring.hpp"

using namespace wittjet;

namespace {

NumberRingElement elem(const NumberRing& o, std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return o.make(v);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("named triples carry the expected invariants") {
  auto z2 = named_triple("Z2");
  CHECK(z2->p() == 2);
  CHECK(z2->q() == 2);
  CHECK(z2->e() == 1);
  CHECK(z2->h() == 1);

  auto gauss = named_triple("GAUSS");
  CHECK(gauss->p() == 2);
  CHECK(gauss->e() == 2);
  CHECK(gauss->h() == 1);

  auto eisen = named_triple("EISEN");
  CHECK(eisen->q() == 4);
  CHECK(eisen->e() == 1);
  CHECK(eisen->h() == 2);

  CHECK(named_triple("Z3")->q() == 3);
}

TEST_CASE("Gaussian integers with t = 1+i: i^2 = -1 and (1+i)^2 = 2i") {
  auto gauss = named_triple("GAUSS");
  const auto& o = gauss->ring();
  const auto t = o.generator();
  CHECK(gauss->pi() == t);
  const auto i = o.sub(t, o.one());
  CHECK(o.mul(i, i) == o.from_int(-1));
  CHECK(o.mul(t, t) == o.scale(2, i));
}

TEST_CASE("Eisenstein integers: w^2 + w + 1 = 0, w^3 = 1") {
  auto eisen = named_triple("EISEN");
  const auto& o = eisen->ring();
  const auto w = o.generator();
  CHECK(o.is_zero(o.add(o.add(o.mul(w, w), w), o.one())));
  CHECK(o.pow(w, 3) == o.one());
}

TEST_CASE("triple validation rejects bad data") {
  CHECK(kind_of([] { BaseTriple::validate({0, 1}, {2}, 6); }) == ErrorKind::NotPrimePower);
  CHECK(kind_of([] { BaseTriple::validate({0, 1}, {2}, 4); }) == ErrorKind::WrongResidueSize);
  CHECK(kind_of([] { BaseTriple::validate({0, 1}, {6}, 6); }) == ErrorKind::NotPrimePower);
  CHECK(kind_of([] { BaseTriple::validate({0, 1}, {4}, 4); }) == ErrorKind::QuotientNotField);
  CHECK_NOTHROW(BaseTriple::validate({1, 0, 1}, {1, 1}, 2));
}

TEST_CASE("delta on O is (x - x^q)/pi") {
  auto z2 = named_triple("Z2");
  const auto& o = z2->ring();
  // (2 - 4)/2 = -1, (3 - 9)/2 = -3
  CHECK(z2->delta(o.from_int(2)) == o.from_int(-1));
  CHECK(z2->delta(o.from_int(3)) == o.from_int(-3));
  CHECK(z2->delta(o.one()) == o.zero());

  auto z3 = named_triple("Z3");
  // (2 - 8)/3 = -2
  CHECK(z3->delta(z3->ring().from_int(2)) == z3->ring().from_int(-2));

  auto gauss = named_triple("GAUSS");
  const auto& g = gauss->ring();
  // (pi - pi^2)/pi = 1 - pi = -i
  CHECK(gauss->delta(gauss->pi()) == g.sub(g.one(), g.generator()));
}

TEST_CASE("exact division by pi") {
  auto z2 = named_triple("Z2");
  CHECK(z2->exact_div_pi(z2->ring().from_int(6)) == z2->ring().from_int(3));
  CHECK(kind_of([&] { z2->exact_div_pi(z2->ring().from_int(3)); }) == ErrorKind::NotDivisible);
  CHECK_FALSE(z2->try_div_pi(z2->ring().one()).has_value());

  auto gauss = named_triple("GAUSS");
  const auto& g = gauss->ring();
  // 2 = (1+i)(1-i) and 1-i = 2-t
  CHECK(gauss->exact_div_pi(g.from_int(2)) == elem(g, {2, -1}));
}

TEST_CASE("residue fields have q elements") {
  CHECK(named_triple("Z2")->residue_field_elements().size() == 2);
  CHECK(named_triple("GAUSS")->residue_field_elements().size() == 2);
  CHECK(named_triple("EISEN")->residue_field_elements().size() == 4);
  CHECK(named_triple("GAUSS")->pi_power_lattice(3).index() == 8);
  CHECK(named_triple("EISEN")->pi_power_lattice(2).index() == 16);
}

TEST_CASE("O/pi^k quotients") {
  auto z2 = named_triple("Z2");
  QuotientRing z8(z2, 3u);
  CHECK(z8.equal(z8.from_int(8), z8.zero()));
  CHECK_FALSE(z8.equal(z8.from_int(4), z8.zero()));
  CHECK(z8.equal(z8.mul(z8.from_int(3), z8.from_int(3)), z8.one()));

  QuotientRing gauss2(named_triple("GAUSS"), 2u);
  CHECK(gauss2.equal(gauss2.from_int(2), gauss2.zero()));
  CHECK_FALSE(gauss2.equal(gauss2.from_base(named_triple("GAUSS")->pi()), gauss2.zero()));
}

TEST_CASE("F4 = F2[a]/(a^2+a+1)") {
  auto f4 = named_finite_ring("F4");
  CHECK(f4->size() == 4);
  const auto a = f4->from_digits({0, 1});
  CHECK(f4->mul(a, a) == f4->from_digits({1, 1}));
  CHECK(f4->mul(f4->mul(a, a), a) == f4->one());
  CHECK(f4->is_field());
  CHECK(f4->is_perfect());
}

TEST_CASE("small rings: Z/4, F2[eps], F4[eps]") {
  auto z4 = named_finite_ring("Z4");
  CHECK(z4->mul(2, 2) == 0);
  CHECK_FALSE(z4->is_field());
  CHECK(z4->add(3, 3) == 2);

  auto f2eps = named_finite_ring("F2eps");
  const auto eps = f2eps->from_digits({0, 1});
  CHECK(f2eps->size() == 4);
  CHECK(f2eps->mul(eps, eps) == 0);
  CHECK_FALSE(f2eps->is_reduced());
  CHECK_FALSE(f2eps->is_perfect());

  auto f4eps = named_finite_ring("F4eps");
  CHECK(f4eps->size() == 16);
  const auto e = f4eps->from_digits({0, 0, 1, 0});
  CHECK(f4eps->mul(e, e) == 0);
  CHECK_FALSE(f4eps->is_perfect());
}

TEST_CASE("finite ring JSON descriptors round-trip") {
  auto f4 = named_finite_ring("F4");
  auto copy = parse_finite_ring(f4->descriptor().dump());
  for (FiniteRing::Element x = 0; x < 4; ++x) {
    for (FiniteRing::Element y = 0; y < 4; ++y) CHECK(copy->mul(x, y) == f4->mul(x, y));
  }
  CHECK(kind_of([] { parse_finite_ring("nonsense"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { parse_finite_ring("{\"tower\": []}"); }) == ErrorKind::Parse);
}

TEST_CASE("structure maps O -> B") {
  auto eisen = named_triple("EISEN");
  auto b = FiniteAlgebra::over(named_finite_ring("F4"), eisen);
  const auto w = b.tau();
  CHECK(b.add(b.add(b.mul(w, w), w), b.one()) == b.zero());
  CHECK(b.kills_pi());

  auto z4 = FiniteAlgebra::over(named_finite_ring("Z4"), named_triple("Z2"));
  CHECK_FALSE(z4.kills_pi());
  CHECK(kind_of([&] { FiniteAlgebra::over(named_finite_ring("F2"), eisen); }) == ErrorKind::NoStructureMap);
}
