#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "wittjet/errors.hpp"
#include "wittjet/presentation.hpp"
#include "wittjet/witt.hpp"

using namespace wittjet;

namespace {

const std::filesystem::path kData = WITTJET_TEST_DATA;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Ghost components computed straight from the definition, in O.
std::vector<NumberRingElement> ghost(const BaseTriple& t, const std::vector<NumberRingElement>& x) {
  const NumberRing& o = t.ring();
  std::vector<NumberRingElement> w;
  for (std::size_t i = 0; i < x.size(); ++i) {
    NumberRingElement sum = o.zero();
    NumberRingElement pi_k = o.one();
    for (std::size_t k = 0; k <= i; ++k) {
      unsigned long e = 1;
      for (std::size_t j = k; j < i; ++j) e *= t.q();
      sum = o.add(sum, o.mul(pi_k, o.pow(x[k], e)));
      pi_k = o.mul(pi_k, t.pi());
    }
    w.push_back(sum);
  }
  return w;
}

std::vector<NumberRingElement> eval(const BaseTriple& t, const std::vector<MultiPoly>& polys,
                                    const std::vector<NumberRingElement>& x, const std::vector<NumberRingElement>& y) {
  std::map<JetVar, NumberRingElement> values;
  for (std::size_t i = 0; i < x.size(); ++i) values[witt_x(static_cast<unsigned>(i))] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) values[witt_y(static_cast<unsigned>(i))] = y[i];
  std::vector<NumberRingElement> out;
  for (const auto& p : polys) out.push_back(p.evaluate(t.ring(), values));
  return out;
}

void check_against_ghosts(const TriplePtr& t, unsigned n, int trials) {
  const auto table = build_witt_table(t, n);
  const NumberRing& o = t->ring();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<NumberRingElement> x, y;
    for (unsigned i = 0; i <= n; ++i) {
      std::vector<Integer> a, b;
      for (std::size_t d = 0; d < o.degree(); ++d) {
        a.emplace_back(c(rng));
        b.emplace_back(c(rng));
      }
      x.push_back(o.make(a));
      y.push_back(o.make(b));
    }
    const auto gx = ghost(*t, x), gy = ghost(*t, y);
    const auto gs = ghost(*t, eval(*t, table->sum, x, y));
    const auto gm = ghost(*t, eval(*t, table->product, x, y));
    const auto gn = ghost(*t, eval(*t, table->negation, x, y));
    const auto gf = ghost(*t, eval(*t, table->frobenius, x, y));
    for (unsigned i = 0; i <= n; ++i) {
      CHECK(gs[i] == o.add(gx[i], gy[i]));
      CHECK(gm[i] == o.mul(gx[i], gy[i]));
      CHECK(gn[i] == o.neg(gx[i]));
      if (i < n) CHECK(gf[i] == gx[i + 1]);
    }
  }
}

}  // namespace

TEST_CASE("Z2 n=1 polynomials") {
  auto z2 = named_triple("Z2");
  const auto table = build_witt_table(z2, 1);
  CHECK(table->sum[0] == parse_polynomial(*z2, "X_0 + Y_0"));
  CHECK(table->sum[1] == parse_polynomial(*z2, "X_1 + Y_1 - X_0*Y_0"));
  CHECK(table->product[1] == parse_polynomial(*z2, "X_0^2*Y_1 + X_1*Y_0^2 + 2*X_1*Y_1"));
  CHECK(table->frobenius[0] == parse_polynomial(*z2, "X_0^2 + 2*X_1"));
  CHECK(table->delta[0] == parse_polynomial(*z2, "X_1"));
}

TEST_CASE("Z3 n=1: S_1 = X_1 + Y_1 - X_0^2 Y_0 - X_0 Y_0^2") {
  auto z3 = named_triple("Z3");
  const auto table = build_witt_table(z3, 1);
  CHECK(table->sum[1] == parse_polynomial(*z3, "X_1 + Y_1 - X_0^2*Y_0 - X_0*Y_0^2"));
}

TEST_CASE("n = 0 tables are the identity operations") {
  auto z2 = named_triple("Z2");
  const auto table = build_witt_table(z2, 0);
  CHECK(table->sum.size() == 1);
  CHECK(table->sum[0] == parse_polynomial(*z2, "X_0 + Y_0"));
  CHECK(table->product[0] == parse_polynomial(*z2, "X_0*Y_0"));
  CHECK(table->frobenius.empty());
}

TEST_CASE("universal polynomials match ghost components at integral points") {
  check_against_ghosts(named_triple("Z2"), 2, 30);
  check_against_ghosts(named_triple("Z3"), 1, 30);
  check_against_ghosts(named_triple("GAUSS"), 2, 30);
  check_against_ghosts(named_triple("EISEN"), 1, 30);
}

TEST_CASE("golden Z2 n=1 table") {
  const auto table = build_witt_table(named_triple("Z2"), 1);
  CHECK(witt_table_to_json(*table).dump() + "\n" == slurp(kData / "golden" / "witt_Z2_n1.json"));
  const auto reloaded = witt_table_from_json(nlohmann::json::parse(slurp(kData / "golden" / "witt_Z2_n1.json")));
  CHECK_FALSE(verify_witt_table(reloaded).has_value());
}

TEST_CASE("a corrupted S_1 is rejected") {
  const auto bad = witt_table_from_json(nlohmann::json::parse(slurp(kData / "fixtures" / "witt_Z2_n1_bad_S1.json")));
  const auto failure = verify_witt_table(bad);
  REQUIRE(failure.has_value());
  CHECK(failure->find("w_1") != std::string::npos);
}

TEST_CASE("GAUSS n=1 table survives a JSON round trip and re-verifies") {
  const auto table = build_witt_table(named_triple("GAUSS"), 1);
  const auto copy = witt_table_from_json(nlohmann::json::parse(witt_table_to_json(*table).dump()));
  CHECK_FALSE(verify_witt_table(copy).has_value());
  CHECK(witt_table_to_json(copy).dump() == witt_table_to_json(*table).dump());
}

TEST_CASE("feasibility cap") {
  TableOptions options;
  options.cap = 8;
  CHECK_NOTHROW(build_witt_table(named_triple("Z2"), 3, options));
  try {
    build_witt_table(named_triple("Z2"), 4, options);
    FAIL("expected FeasibilityCap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FeasibilityCap);
  }
}

TEST_CASE("disk cache: hit, and a tampered file is rebuilt") {
  const auto dir = std::filesystem::temp_directory_path() / "wittjet_test_cache";
  std::filesystem::remove_all(dir);
  TableOptions options;
  options.cache_dir = dir;
  auto z2 = named_triple("Z2");
  const auto first = build_witt_table(z2, 1, options);
  const auto file = dir / "witt" / (table_hash(*z2, 1) + ".json");
  REQUIRE(std::filesystem::exists(file));
  const auto second = build_witt_table(z2, 1, options);
  CHECK(witt_table_to_json(*first).dump() == witt_table_to_json(*second).dump());

  std::filesystem::copy_file(kData / "fixtures" / "witt_Z2_n1_bad_S1.json", file,
                             std::filesystem::copy_options::overwrite_existing);
  const auto rebuilt = build_witt_table(z2, 1, options);
  CHECK(rebuilt->sum[1] == parse_polynomial(*z2, "X_1 + Y_1 - X_0*Y_0"));

  std::filesystem::copy_file(kData / "fixtures" / "witt_Z2_n1_bad_S1.json", file,
                             std::filesystem::copy_options::overwrite_existing);
  options.trust_cache = true;
  const auto trusted = build_witt_table(z2, 1, options);
  CHECK_FALSE(trusted->sum[1] == parse_polynomial(*z2, "X_1 + Y_1 - X_0*Y_0"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("W_n(k) for the residue field k is O/pi^{n+1}") {
  struct Case {
    const char* triple;
    const char* field;
    unsigned n;
  };
  for (const Case c : {Case{"Z2", "F2", 2}, Case{"Z3", "F3", 1}, Case{"GAUSS", "F2", 2}, Case{"EISEN", "F4", 1}}) {
    auto t = named_triple(c.triple);
    const auto b = FiniteAlgebra::over(named_finite_ring(c.field), t);
    const WittRing<FiniteAlgebra> w(b, build_witt_table(t, c.n), c.n);
    const auto residues = t->pi_power_lattice(c.n + 1).residues(1u << 20);
    std::set<std::vector<FiniteAlgebra::Element>> image;
    for (const auto& r : residues) image.insert(w.from_base(t->ring().make(r)));
    CAPTURE(c.triple);
    std::uint64_t size = 1;
    for (unsigned i = 0; i <= c.n; ++i) size *= b.size();
    CHECK(residues.size() == size);
    CHECK(image.size() == size);
    CHECK(w.equal(w.from_base(t->pi_power(c.n + 1)), w.zero()));
    CHECK_FALSE(w.equal(w.from_base(t->pi_power(c.n)), w.zero()));
  }
}

TEST_CASE("W_1(F2) = Z/4 and W_2(F2) = Z/8") {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("F2"), z2);
  const WittRing<FiniteAlgebra> w1(b, build_witt_table(z2, 1), 1);
  CHECK(w1.add(w1.one(), w1.one()) == std::vector<FiniteAlgebra::Element>{0, 1});
  CHECK(w1.equal(w1.from_int(4), w1.zero()));
  CHECK(w1.verschiebung({1}) == std::vector<FiniteAlgebra::Element>{0, 1});
  const WittRing<FiniteAlgebra> w2(b, build_witt_table(z2, 2), 2);
  CHECK_FALSE(w2.equal(w2.from_int(4), w2.zero()));
  CHECK(w2.equal(w2.from_int(8), w2.zero()));
  // 3 = 1 + 2 = (1,1,0) since [1] + V[1] has no carry
  CHECK(w2.from_int(3) == std::vector<FiniteAlgebra::Element>{1, 1, 0});
}

TEST_CASE("W_1 over the Gaussian integers: 2 = 0 but pi != 0 on F2") {
  auto gauss = named_triple("GAUSS");
  const auto b = FiniteAlgebra::over(named_finite_ring("F2"), gauss);
  const WittRing<FiniteAlgebra> w(b, build_witt_table(gauss, 1), 1);
  CHECK(w.equal(w.from_int(2), w.zero()));
  CHECK(w.from_base(gauss->pi()) == std::vector<FiniteAlgebra::Element>{0, 1});
}

TEST_CASE("operators on short vectors") {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("Z4"), z2);
  const WittRing<FiniteAlgebra> w(b, build_witt_table(z2, 2), 2);
  const std::vector<FiniteAlgebra::Element> x{3, 1, 2};
  CHECK(w.frobenius(x).size() == 2);
  CHECK(w.delta(x).size() == 2);
  CHECK(w.verschiebung({3, 1}).size() == 3);
  CHECK(w.truncate(x, 2) == std::vector<FiniteAlgebra::Element>{3, 1});
  // ghosts of x: x0, x0^2 + 2 x1, x0^4 + 2 x1^2 + 4 x2 in Z/4
  CHECK(w.ghost(x) == std::vector<FiniteAlgebra::Element>{3, 3, 3});
  CHECK(w.teichmuller(2) == std::vector<FiniteAlgebra::Element>{2, 0, 0});
}
