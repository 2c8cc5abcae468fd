#include <doctest.h>

#include "wittjet/greenberg.hpp"
#include "wittjet/suites.hpp"

using namespace wittjet;

namespace {

using Shape = GreenbergContext::Shape;

Report compare(const char* triple, unsigned m, const std::vector<std::string>& rings, const char* rel = "x^2") {
  auto t = named_triple(triple);
  const auto ctx = GreenbergContext::make(t, m);
  const auto a = Presentation::parse(t, {"x"}, {rel}, "A");
  return compare_greenberg(a, ctx, greenberg_tables(ctx), parse_rings(rings, t));
}

const nlohmann::json& row(const Report& r, std::size_t i) { return r.details.at("rings").at(i); }

/// #{(a, b) in B^2 : a^2 = 0}: points of x^2 = 0 in B[pi]/(pi^2) for B of characteristic 2.
std::uint64_t dual_number_points(const FiniteRing& b) {
  std::uint64_t count = 0;
  for (FiniteRing::Element a = 0; a < b.size(); ++a) count += b.mul(a, a) == 0;
  return count * b.size();
}

}  // namespace

TEST_CASE("context shapes") {
  const auto z2 = GreenbergContext::make(named_triple("Z2"), 2);
  CHECK(z2.shape == Shape::Rational);
  CHECK(z2.e == 1);
  CHECK(z2.jet_level() == 1);

  const auto gauss = GreenbergContext::make(named_triple("GAUSS"), 1);
  CHECK(gauss.shape == Shape::TotallyRamified);
  CHECK(gauss.e == 2);
  // t^2 - 2t + 2 = 0, so pi^2 = -(2 - 2 pi)
  CHECK(gauss.eisenstein == std::vector<Integer>{2, -2});
  CHECK(gauss.coordinates() == 2);

  const auto eisen = GreenbergContext::make(named_triple("EISEN"), 2);
  CHECK(eisen.shape == Shape::Unramified);
  CHECK(eisen.e == 1);
}

TEST_CASE("R(F2) for Z[i] and m = 2 is Z[i]/4") {
  const auto ctx = GreenbergContext::make(named_triple("GAUSS"), 2);
  const auto tables = greenberg_tables(ctx);
  const auto b = FiniteAlgebra::over(named_finite_ring("F2"), ctx.target);
  const GreenbergRing<FiniteAlgebra> r(ctx, b, tables.p_typical);
  auto pi_k = r.one();
  for (int k = 0; k < 3; ++k) pi_k = r.mul(pi_k, r.pi());
  CHECK_FALSE(r.equal(pi_k, r.zero()));
  CHECK(r.equal(r.mul(pi_k, r.pi()), r.zero()));
  CHECK_FALSE(r.equal(r.from_int(2), r.zero()));
  CHECK(r.equal(r.from_int(4), r.zero()));
  // i^2 = -1 with i = pi - 1
  const auto i = r.sub(r.pi(), r.one());
  CHECK(r.equal(r.mul(i, i), r.neg(r.one())));
}

TEST_CASE("Greenberg rings satisfy the ring axioms") {
  for (auto [name, m] : {std::pair{"Z2", 2u}, std::pair{"GAUSS", 1u}, std::pair{"GAUSS", 2u}}) {
    const auto ctx = GreenbergContext::make(named_triple(name), m);
    const auto b = FiniteAlgebra::over(named_finite_ring("F2"), ctx.target);
    CAPTURE(name);
    CHECK(check_greenberg_ring(ctx, b, greenberg_tables(ctx)).pass);
  }
}

TEST_CASE("transforms of x^2") {
  auto z2 = named_triple("Z2");
  const auto ctx = GreenbergContext::make(z2, 2);
  const auto gr = greenberg_transform(Presentation::parse(z2, {"x"}, {"x^2"}), ctx, greenberg_tables(ctx));
  CHECK(gr.to_string() == "Z2/pi^1[X0, X1]/(X0^2)");

  auto gauss = named_triple("GAUSS");
  const auto ramified = GreenbergContext::make(gauss, 1);
  const auto grr = greenberg_transform(Presentation::parse(gauss, {"x"}, {"x^2"}), ramified, greenberg_tables(ramified));
  CHECK(grr.to_string() == "GAUSS/pi^1[X0, X1]/(X0^2)");
}

TEST_CASE("m = 1, e = 1 gives the identity map") {
  const auto r = compare("Z2", 1, {"F2", "F4", "F2eps"});
  CHECK(r.pass);
  for (std::size_t i = 0; i < 3; ++i) CHECK(row(r, i)["identity"] == true);
}

TEST_CASE("q = p = 2, m = 2: counts and bijections") {
  const auto r = compare("Z2", 2, {"F2", "F4", "F2eps"});
  CHECK(r.pass);
  // x^2 = 0 in W_1(F2) = Z/4 and in W_1(F4) = Z/4[w]
  CHECK(row(r, 0)["hom_gr"] == 2);
  CHECK(row(r, 1)["hom_gr"] == 4);
  CHECK(row(r, 2)["hom_gr"] == 8);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(row(r, i)["hom_gr"] == row(r, i)["hom_jet"]);
    CHECK(row(r, i)["bijective"] == true);
  }
}

TEST_CASE("ramified Z[i], m = 1: bijective on perfect rings, a witness on F2[eps]") {
  const std::vector<std::string> names{"F2", "F4", "F2eps"};
  const auto r = compare("GAUSS", 1, names);
  CHECK(r.pass);
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(row(r, i)["hom_A_RB"] == dual_number_points(*named_finite_ring(names[i])));
  }
  CHECK(row(r, 0)["bijective"] == true);
  CHECK(row(r, 1)["bijective"] == true);
  CHECK(row(r, 2)["bijective"] == false);
  CHECK(row(r, 2)["injective"] == false);
  CHECK(row(r, 2)["witness"].get<std::string>().find("X1 -> [0,1]") != std::string::npos);
}

TEST_CASE("unramified q = 4 and other algebras") {
  CHECK(compare("EISEN", 1, {"F4", "F4eps"}).pass);
  CHECK(compare("EISEN", 2, {"F4"}).pass);
  CHECK(compare("GAUSS", 2, {"F2"}).pass);
  CHECK(compare("Z2", 2, {"F2", "F4"}, "x^2 - x").pass);
  CHECK(compare("Z3", 2, {"F3"}).pass);
}
