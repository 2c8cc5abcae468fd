#include "wittjet/suites.hpp"

#include <fstream>

#include "wittjet/axioms.hpp"
#include "wittjet/drinfeld.hpp"
#include "wittjet/greenberg.hpp"
#include "wittjet/prolong.hpp"

namespace wittjet {

namespace {

constexpr std::uint64_t kAxiomSamples = 10'000;
constexpr std::uint64_t kExhaustiveTriples = 1u << 21;

using FE = FiniteAlgebra::Element;

std::vector<FiniteAlgebra> rings_or(const SuiteConfig& config, const TriplePtr& triple,
                                    std::vector<std::string> defaults) {
  return parse_rings(config.rings ? *config.rings : defaults, triple);
}

TriplePtr triple_or(const SuiteConfig& config, const std::string& fallback) {
  return parse_triple(config.triple ? *config.triple : fallback);
}

std::string label(const TriplePtr& t) { return t->name().empty() ? t->canonical_key() : t->name(); }

/// A point of O^{n+1} x O^{n+1} where a ghost identity of the sum or product fails.
std::optional<std::string> ghost_witness(const WittTable& table) {
  const BaseTriple& triple = *table.triple;
  const NumberRing& o = triple.ring();
  const unsigned n = table.n;
  std::vector<JetVar> slots;
  for (unsigned i = 0; i <= n; ++i) slots.push_back(witt_x(i));
  for (unsigned i = 0; i <= n; ++i) slots.push_back(witt_y(i));
  const std::uint64_t radix = 3;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= radix;
  std::vector<std::uint32_t> digits(slots.size());
  for (std::uint64_t index = 0; index < total; ++index) {
    kernels::decode(index, radix, digits);
    std::vector<NumberRingElement> v;
    for (auto d : digits) v.push_back(o.from_int(Integer(static_cast<long>(d))));
    std::vector<NumberRingElement> x(v.begin(), v.begin() + n + 1), y(v.begin() + n + 1, v.end());
    auto ghost = [&](const std::vector<NumberRingElement>& c, unsigned i) {
      NumberRingElement total_i = o.zero();
      for (unsigned k = 0; k <= i; ++k) {
        total_i = o.add(total_i, o.mul(triple.pi_power(k), o.pow(c[k], ipow(Integer(triple.q()), i - k).get_ui())));
      }
      return total_i;
    };
    std::vector<NumberRingElement> s, m;
    for (unsigned i = 0; i <= n; ++i) {
      s.push_back(CompiledPoly<NumberRing>(o, table.sum[i], slots)(o, v));
      m.push_back(CompiledPoly<NumberRing>(o, table.product[i], slots)(o, v));
    }
    auto show = [&](const std::vector<NumberRingElement>& c) {
      std::string out = "(";
      for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + o.format(c[i]);
      return out + ")";
    };
    for (unsigned i = 0; i <= n; ++i) {
      if (ghost(s, i) != o.add(ghost(x, i), ghost(y, i))) {
        return "w_" + std::to_string(i) + "(S(x,y)) = " + o.format(ghost(s, i)) + " != " +
               o.format(o.add(ghost(x, i), ghost(y, i))) + " at x = " + show(x) + ", y = " + show(y);
      }
      if (ghost(m, i) != o.mul(ghost(x, i), ghost(y, i))) {
        return "w_" + std::to_string(i) + "(M(x,y)) = " + o.format(ghost(m, i)) + " != " +
               o.format(o.mul(ghost(x, i), ghost(y, i))) + " at x = " + show(x) + ", y = " + show(y);
      }
    }
  }
  return std::nullopt;
}

Report table_report(const WittTable& table, const std::string& name) {
  Report r;
  r.name = name;
  r.details["hash"] = table_hash(*table.triple, table.n);
  ++r.checked;
  if (auto failure = verify_witt_table(table)) {
    auto witness = ghost_witness(table);
    r.fail(*failure + (witness ? "; " + *witness : std::string{}));
  }
  return r;
}

Report witt_axioms(const SuiteConfig& config) {
  Report report;
  report.name = "witt-axioms";
  if (config.table) {
    std::ifstream in(*config.table);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + config.table->string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, config.table->string() + ": " + e.what());
    }
    report.absorb(table_report(witt_table_from_json(j), "table " + config.table->filename().string()));
    return report;
  }
  std::vector<std::pair<TriplePtr, unsigned>> tables;
  if (config.triple) {
    tables.emplace_back(parse_triple(*config.triple), config.level.value_or(1));
  } else {
    tables = {{named_triple("Z2"), 2}, {named_triple("Z3"), 1}, {named_triple("GAUSS"), 2}, {named_triple("EISEN"), 1}};
  }
  for (const auto& [triple, n] : tables) {
    for (unsigned k = 0; k <= n; ++k) {
      auto table = build_witt_table(triple, k, config.tables);
      report.absorb(table_report(*table, "table " + label(triple) + " n=" + std::to_string(k)));
    }
  }
  const TriplePtr triple = tables.front().first;
  const unsigned level = config.level.value_or(1);
  auto table = build_witt_table(triple, std::max(level, config.triple ? level : 2u), config.tables);
  auto axioms = [&](const FiniteAlgebra& b, unsigned n, bool sampled) {
    const WittRing<FiniteAlgebra> w(b, table, n);
    const auto elements = all_vectors(b, n + 1, config.enumeration.cap);
    const std::uint64_t size = elements.size();
    const bool sample = sampled || size * size * size > kExhaustiveTriples;
    Report r = check_ring_axioms<WittRing<FiniteAlgebra>>(
        w, elements, [&](const std::vector<FE>& x) { return show_witt(b, x); }, sample ? kAxiomSamples : 0,
        config.seed, config.enumeration.exec);
    r.name = "W_" + std::to_string(n) + "(" + b.name() + ")";
    report.absorb(r);
  };
  for (const auto& b : rings_or(config, triple, {"F2", "F4", "Z4"})) axioms(b, level, false);
  if (!config.triple && !config.rings && !config.level) axioms(FiniteAlgebra::over(named_finite_ring("F2"), triple), 2, true);
  return report;
}

Report operators(const SuiteConfig& config) {
  Report report;
  report.name = "operators";
  const TriplePtr triple = triple_or(config, "Z2");
  std::vector<std::pair<std::string, unsigned>> cases;
  if (config.rings) {
    for (const auto& r : *config.rings) cases.emplace_back(r, config.level.value_or(1));
  } else {
    cases = {{"F2", config.level.value_or(2)}, {"F4", config.level.value_or(1)}};
  }
  if (cases.empty()) throw Error(ErrorKind::InvalidArgument, "empty ring list");
  for (const auto& [name, n] : cases) {
    auto table = build_witt_table(triple, n, config.tables);
    const auto b = parse_rings({name}, triple).front();
    Report r = check_witt_operators(WittRing<FiniteAlgebra>(b, table, n), config.enumeration.exec);
    r.name = "W_" + std::to_string(n) + "(" + b.name() + ")";
    report.absorb(r);
  }
  if (config.triple || config.rings) return report;
  // Drinfeld map from the p-typical vectors to the (Z[w], 2, 4) ones.
  const TriplePtr z2 = named_triple("Z2"), eisen = named_triple("EISEN");
  const auto source = build_witt_table(z2, 2, config.tables);
  const auto target = build_witt_table(eisen, 2, config.tables);
  for (const std::string name : {"F4", "F4eps"}) {
    const auto b = FiniteAlgebra::over(named_finite_ring(name), eisen);
    const DrinfeldMap<FiniteAlgebra> u(b, source, b, target);
    Report r = check_drinfeld(u, 3);
    r.name = "drinfeld " + name;
    const bool perfect = b.ring().is_perfect();
    for (const auto& row : r.details["lengths"]) {
      const bool bijective = row["injective"].get<bool>() && row["surjective"].get<bool>();
      const auto length = row["length"].get<unsigned>();
      // Length 1 is the identity B -> B, bijective for every B.
      r.expect(bijective == (perfect || length == 1),
               "u on length " + std::to_string(length) + (bijective ? " is" : " is not") + " bijective");
    }
    if (name == "F4eps") {
      const FE eps = b.ring().from_digits({0, 0, 1, 0});
      const auto image = u({b.zero(), eps});
      r.expect(u.target().equal(image, u.target().truncate(u.target().zero(), 2)),
               "u(V[eps]) = " + show_witt(b, image) + " != 0");
    }
    report.absorb(r);
  }
  return report;
}

Report pderiv(const SuiteConfig& config) {
  Report report;
  report.name = "pderiv";
  const TriplePtr triple = triple_or(config, "Z2");
  const auto table = build_witt_table(triple, 1, config.tables);
  const auto rings = rings_or(config, triple, {"F2", "F4", "Z4"});
  for (const auto& b : rings) {
    const WittRing<FiniteAlgebra> w(b, table, 1);
    using V = std::vector<FE>;
    Report r = check_pi_derivation<WittRing<FiniteAlgebra>, FiniteAlgebra>(
        *triple, w, b, [](const V& x) { return x[0]; }, [](const V& x) { return x[1]; }, all_vectors(b, 2),
        [&](const V& x) { return show_witt(b, x); });
    r.name = "W_1(" + b.name() + ") -> " + b.name();
    report.absorb(r);
  }
  Report constant = check_base_sequence(BaseSequence::constant(triple, 3));
  constant.name = "constant base sequence";
  report.absorb(constant);
  if (triple->ring().degree() == 1 && triple->p() == 2) {
    Report quotient = check_base_sequence(BaseSequence(triple, {std::nullopt, 3u, 2u}));
    quotient.name = "base sequence Z -> Z/8 -> Z/4";
    report.absorb(quotient);
  }
  const Presentation a = Presentation::parse(triple, {"x"}, {"x^2"}, "A");
  Report jets = check_jet_sequence(a, config.level.value_or(2), rings, 40, config.seed);
  jets.name = "jet sequence";
  report.absorb(jets);
  return report;
}

Report adjunction(const SuiteConfig& config) {
  Report report;
  report.name = "adjunction";
  const TriplePtr triple = triple_or(config, "Z2");
  const unsigned top = config.level.value_or(2);
  const PFamily family = p_polynomials(triple, top, config.tables.cap);
  Report p;
  p.name = "P family";
  ++p.checked;
  if (auto failure = verify_p_family(family)) p.fail(*failure);
  for (unsigned i = 0; i <= top; ++i) p.details["P_" + std::to_string(i)] = family.P[i].to_string();
  report.absorb(p);

  const auto table = build_witt_table(triple, top, config.tables);
  const auto rings = rings_or(config, triple, {"F2", "F4", "Z4", "F2eps"});
  nlohmann::json matrix = nlohmann::json::array();
  std::uint64_t checked = 0;
  bool ok = true;
  for (const auto& a : adjunction_algebras(triple)) {
    for (const auto& b : rings) {
      for (unsigned n = 0; n <= top; ++n) {
        Report r = check_adjunction(a, n, b, table, family, nullptr, config.enumeration);
        checked += r.checked;
        matrix.push_back({{"algebra", a.to_string()},
                          {"ring", b.name()},
                          {"level", n},
                          {"hom_A_WnB", r.details["hom_A_WnB"]},
                          {"hom_JnA_B", r.details["hom_JnA_B"]},
                          {"pass", r.pass}});
        if (!r.pass && ok) {
          ok = false;
          report.fail(a.to_string() + ", " + b.name() + ", n = " + std::to_string(n) + ": " + *r.counterexample);
        }
      }
    }
  }
  report.checked += checked;
  report.details["matrix"] = matrix;

  if (triple->ring().degree() == 1 && triple->p() == 2 && top >= 1) {
    const BaseSequence base(triple, {std::nullopt, 3u, 2u});
    const Presentation a = Presentation::parse(triple, {"x"}, {"x^2"}, "A");
    for (const auto& b : rings) {
      Report r = check_adjunction(a, 1, b, table, family, &base, config.enumeration);
      r.name = "base sequence over " + b.name();
      report.absorb(r);
    }
  }
  const Presentation xy = Presentation::parse(triple, {"x", "y"}, {"x*y"}, "A");
  for (const auto& b : rings) {
    for (unsigned k = 1; k <= std::min(2u, top); ++k) {
      Report r = check_universal_property(xy, b, table, k, config.enumeration);
      r.name = "universal property W_" + std::to_string(k) + "(" + b.name() + ")";
      report.absorb(r);
    }
  }
  return report;
}

Report localization(const SuiteConfig& config) {
  const TriplePtr triple = triple_or(config, "Z2");
  const Presentation a = Presentation::parse(triple, {"x"}, {}, "A");
  const auto rings = rings_or(config, triple, {"F2", "F3", "Z4"});
  Report report = check_localization(a, parse_polynomial(*triple, "x"), config.level.value_or(1), rings,
                                     config.enumeration);
  Report trivial = check_localization(a, parse_polynomial(*triple, "1"), config.level.value_or(1), rings,
                                      config.enumeration);
  trivial.name = "s = 1";
  report.absorb(trivial);
  return report;
}

Report greenberg(const SuiteConfig& config) {
  Report report;
  report.name = "greenberg";
  struct Case {
    std::string triple;
    unsigned m;
    std::vector<std::string> rings;
    std::string label;
  };
  std::vector<Case> cases;
  if (config.triple) {
    cases.push_back({*config.triple, config.level.value_or(1), config.rings.value_or(std::vector<std::string>{"F2"}),
                     "custom"});
  } else {
    cases = {{"Z2", 1, {"F2", "F4", "F2eps"}, "case ii"},
             {"Z2", 2, {"F2", "F4", "F2eps"}, "case i"},
             {"GAUSS", 1, {"F2", "F4", "F2eps"}, "ramified"},
             {"EISEN", 2, {"F4", "F4eps"}, "unramified q != p"}};
    if (config.rings) {
      for (auto& c : cases) c.rings = *config.rings;
    }
  }
  for (const auto& c : cases) {
    const TriplePtr triple = parse_triple(c.triple);
    const auto ctx = GreenbergContext::make(triple, c.m);
    const auto tables = greenberg_tables(ctx, config.tables);
    const auto rings = parse_rings(c.rings, triple);
    const Presentation a = Presentation::parse(triple, {"x"}, {"x^2"}, "A");
    Report r = compare_greenberg(a, ctx, tables, rings, config.enumeration);
    r.name = c.label + ": " + ctx.describe();
    report.absorb(r);
    for (const auto& b : rings) {
      if (b.size() > 4 || ctx.coordinates() > 4) continue;
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < ctx.coordinates(); ++i) size *= b.size();
      const bool exhaustive = size * size * size <= kExhaustiveTriples;
      Report ring = check_greenberg_ring(ctx, b, tables, exhaustive ? 0 : kAxiomSamples, config.seed);
      ring.name = "R(" + b.name() + ") for " + ctx.describe();
      report.absorb(ring);
    }
  }
  return report;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"witt-axioms", "operators", "pderiv", "adjunction", "localization", "greenberg"};
}

TriplePtr parse_triple(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return triple_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("bad triple JSON: ") + e.what());
    }
  }
  return named_triple(text);
}

std::vector<FiniteAlgebra> parse_rings(const std::vector<std::string>& names, const TriplePtr& triple) {
  std::vector<FiniteAlgebra> out;
  for (const auto& name : names) {
    if (name.empty()) continue;
    out.push_back(FiniteAlgebra::over(parse_finite_ring(name), triple));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty ring list");
  return out;
}

std::vector<Presentation> adjunction_algebras(const TriplePtr& triple) {
  return {Presentation::parse(triple, {"x"}, {}, "A1"), Presentation::parse(triple, {"x"}, {"x^2"}, "A2"),
          Presentation::parse(triple, {"x"}, {"x^2 - 1"}, "A3"), Presentation::parse(triple, {"x", "y"}, {"x*y"}, "A4")};
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  if (config.rings) parse_rings(*config.rings, parse_triple(config.triple.value_or("Z2")));
  if (name == "witt-axioms") return witt_axioms(config);
  if (name == "operators") return operators(config);
  if (name == "pderiv") return pderiv(config);
  if (name == "adjunction") return adjunction(config);
  if (name == "localization") return localization(config);
  if (name == "greenberg") return greenberg(config);
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace wittjet
