#include "wittjet/greenberg.hpp"

#include <cctype>
#include <random>
#include <set>

namespace wittjet {

namespace {

using FE = FiniteAlgebra::Element;

TriplePtr p_typical_triple(unsigned long p) {
  for (const auto& name : {"Z2", "Z3", "Z5"}) {
    auto t = named_triple(name);
    if (t->p() == p) return t;
  }
  const Integer pp(p);
  return BaseTriple::validate({0, 1}, {pp}, pp, "Z" + std::to_string(p));
}

std::string show_point(const FiniteAlgebra& b, const std::vector<JetVar>& gens, const std::vector<FE>& point) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].name() + " -> " + b.format(point[i]);
  return "{" + out + "}";
}

}  // namespace

GreenbergContext GreenbergContext::make(TriplePtr target, unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "Greenberg level m must be positive");
  GreenbergContext ctx;
  ctx.target = target;
  ctx.p_typical = p_typical_triple(target->p());
  ctx.m = m;
  ctx.e = target->e();
  const NumberRing& o = target->ring();
  if (o.degree() == 1) {
    ctx.shape = Shape::Rational;
    ctx.eisenstein = {-Integer(static_cast<unsigned long>(target->p()))};
    return ctx;
  }
  if (ctx.e == 1) {
    // t must be the Teichmueller lift of its residue: t^{q'-1} = 1.
    if (o.pow(o.generator(), target->q() - 1) != o.one()) {
      throw Error(ErrorKind::InvalidArgument, "unramified base needs t to be a (q'-1)-th root of unity");
    }
    ctx.shape = Shape::Unramified;
    ctx.eisenstein = {-Integer(static_cast<unsigned long>(target->p()))};
    return ctx;
  }
  if (ctx.e != o.degree() || target->pi() != o.generator()) {
    throw Error(ErrorKind::InvalidArgument, "ramified base needs O' = Z[pi'] totally ramified with pi' = t");
  }
  const Integer p(static_cast<unsigned long>(target->p()));
  const auto& g = o.modulus();
  for (unsigned i = 0; i < ctx.e; ++i) {
    if (g[i] % p != 0) throw Error(ErrorKind::InvalidArgument, "defining polynomial is not Eisenstein");
  }
  if ((g[0] / p) % p == 0) throw Error(ErrorKind::InvalidArgument, "defining polynomial is not Eisenstein");
  ctx.shape = Shape::TotallyRamified;
  ctx.eisenstein.assign(g.begin(), g.begin() + ctx.e);
  return ctx;
}

std::string GreenbergContext::describe() const {
  const std::string o = target->name().empty() ? target->canonical_key() : target->name();
  return "R = " + o + "/pi^" + std::to_string(m * e) + " (m = " + std::to_string(m) + ", e = " + std::to_string(e) +
         ", k' = F_" + std::to_string(target->q()) + ")";
}

GreenbergTables greenberg_tables(const GreenbergContext& ctx, const TableOptions& options) {
  return {build_witt_table(ctx.p_typical, ctx.m - 1, options), build_witt_table(ctx.target, ctx.jet_level(), options),
          p_polynomials(ctx.target, ctx.jet_level(), options.cap)};
}

Presentation over_greenberg_base(const Presentation& a, const GreenbergContext& ctx) {
  const unsigned k = ctx.m * ctx.e;
  if (a.triple->canonical_key() != ctx.target->canonical_key()) {
    throw Error(ErrorKind::InvalidArgument, "algebra and Greenberg context use different base triples");
  }
  if (a.pi_power && *a.pi_power != k) {
    throw Error(ErrorKind::InvalidArgument, "algebra is over " + a.base_name() + ", expected pi^" + std::to_string(k));
  }
  Presentation out = Presentation::make(a.triple, a.generators, a.relations, k, a.name);
  return out;
}

Presentation greenberg_transform(const Presentation& a, const GreenbergContext& ctx, const GreenbergTables& tables) {
  const Presentation ar = over_greenberg_base(a, ctx);
  const PolyRing k_poly(ctx.target, 1u);
  const GreenbergRing<PolyRing> sections(ctx, k_poly, tables.p_typical);
  const std::size_t me = ctx.coordinates();

  std::vector<JetVar> coords;
  std::vector<GreenbergRing<PolyRing>::Element> values;
  for (const auto& g : ar.generators) {
    std::string family = g.family;
    for (auto& ch : family) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::vector<MultiPoly> flat;
    for (std::size_t c = 0; c < me; ++c) {
      const JetVar v{family, static_cast<unsigned>(g.gamma * me + c), 0};
      coords.push_back(v);
      flat.push_back(k_poly.variable(v));
    }
    values.push_back(sections.unflatten(flat));
  }
  std::vector<MultiPoly> rels;
  for (const auto& f : ar.relations) {
    const CompiledPoly<GreenbergRing<PolyRing>> compiled(sections, f, ar.generators);
    for (auto& comp : sections.flatten(compiled(sections, values))) {
      if (!comp.is_zero()) rels.push_back(std::move(comp));
    }
  }
  Presentation out = Presentation::make(ctx.target, std::move(coords), std::move(rels), 1u,
                                        "gr(" + (a.name.empty() ? std::string("A") : a.name) + ")");
  return out;
}

Report check_greenberg_ring(const GreenbergContext& ctx, const FiniteAlgebra& b, const GreenbergTables& tables,
                            std::uint64_t samples, std::uint64_t seed) {
  Report report;
  report.name = "greenberg-ring";
  report.details["ring"] = b.name();
  report.details["context"] = ctx.describe();
  const GreenbergRing<FiniteAlgebra> r(ctx, b, tables.p_typical);
  const auto coords = all_vectors(b, ctx.coordinates());
  std::vector<GreenbergRing<FiniteAlgebra>::Element> elements;
  for (const auto& c : coords) elements.push_back(r.unflatten(c));
  auto show = [&](const GreenbergRing<FiniteAlgebra>::Element& x) {
    std::string out = "(";
    const auto flat = r.flatten(x);
    for (std::size_t i = 0; i < flat.size(); ++i) out += (i ? "," : "") + b.format(flat[i]);
    return out + ")";
  };
  auto check = [&](const auto& x, const auto& y, const auto& z) {
    const std::string at = " at " + show(x) + ", " + show(y) + ", " + show(z);
    report.expect(r.equal(r.add(r.add(x, y), z), r.add(x, r.add(y, z))), "addition not associative" + at);
    report.expect(r.equal(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z))), "multiplication not associative" + at);
    report.expect(r.equal(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z))), "not distributive" + at);
    report.expect(r.equal(r.mul(x, y), r.mul(y, x)), "not commutative" + at);
    report.expect(r.equal(r.add(x, r.neg(x)), r.zero()), "x + (-x) != 0" + at);
    report.expect(r.equal(r.mul(r.one(), x), x), "1 x != x" + at);
  };
  const std::uint64_t n = elements.size();
  report.details["size"] = n;
  if (samples == 0) {
    for (const auto& x : elements) {
      for (const auto& y : elements) {
        for (const auto& z : elements) check(x, y, z);
      }
    }
  } else {
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < samples; ++s) check(elements[pick(rng)], elements[pick(rng)], elements[pick(rng)]);
  }
  // pi^{me} = 0 and the structure map is a ring map on the residues of O'.
  report.expect(r.equal(power(r, r.pi(), ctx.m * ctx.e), r.zero()), "pi^{me} != 0 in R(B)");
  const Lattice lattice = ctx.target->pi_power_lattice(ctx.m * ctx.e);
  const auto residues = lattice.residues(kDefaultSizeCap);
  const NumberRing& o = ctx.target->ring();
  for (const auto& x : residues) {
    for (const auto& y : residues) {
      const NumberRingElement cx{x}, cy{y};
      report.expect(r.equal(r.from_base(o.mul(cx, cy)), r.mul(r.from_base(cx), r.from_base(cy))),
                    "structure map not multiplicative at " + o.format(cx) + ", " + o.format(cy));
      report.expect(r.equal(r.from_base(o.add(cx, cy)), r.add(r.from_base(cx), r.from_base(cy))),
                    "structure map not additive at " + o.format(cx) + ", " + o.format(cy));
    }
  }
  return report;
}

Report compare_greenberg(const Presentation& a, const GreenbergContext& ctx, const GreenbergTables& tables,
                         const std::vector<FiniteAlgebra>& rings, const AdjunctionOptions& options) {
  Report report;
  report.name = "greenberg";
  const Presentation ar = over_greenberg_base(a, ctx);
  const Presentation gr = greenberg_transform(a, ctx, tables);
  const unsigned n = ctx.jet_level();
  const Presentation jets = jet_algebra(ar, n);
  report.details["context"] = ctx.describe();
  report.details["algebra"] = ar.to_string();
  report.details["gr"] = gr.to_string();
  report.details["jet_special_fiber"] = reduce_mod_pi(jets).to_string();
  const bool identity_case = ctx.m == 1 && ctx.e == 1;
  const bool case_i = ctx.e == 1 && ctx.target->q() == ctx.target->p();

  nlohmann::json per_ring = nlohmann::json::array();
  for (const auto& b : rings) {
    if (!b.kills_pi()) throw Error(ErrorKind::InvalidArgument, b.name() + " is not an algebra over k'");
    const GreenbergRing<FiniteAlgebra> sections(ctx, b, tables.p_typical);
    const UTilde<FiniteAlgebra> u(ctx, b, tables.p_typical, tables.target);
    const Adjunction<FiniteAlgebra> adj(tables.family, b);
    const auto elements = b.ring().enumerate_elements(options.cap);

    std::vector<GreenbergRing<FiniteAlgebra>::Element> section_elements;
    for (const auto& c : all_vectors(b, ctx.coordinates(), options.cap)) section_elements.push_back(sections.unflatten(c));
    const auto points_a = enumerate_homs(ar, sections, section_elements, options.cap, options.exec);
    const auto points_gr = enumerate_homs(gr, b, elements, options.cap, options.exec);
    const auto points_jet = enumerate_homs(jets, b, elements, options.cap, options.exec);

    std::set<std::vector<FE>> flat_a;
    for (const auto& xi : points_a) {
      std::vector<FE> flat;
      for (const auto& s : xi) {
        const auto f = sections.flatten(s);
        flat.insert(flat.end(), f.begin(), f.end());
      }
      flat_a.insert(std::move(flat));
    }
    const std::set<std::vector<FE>> gr_set(points_gr.begin(), points_gr.end());
    report.expect(flat_a == gr_set, "Hom_R(A, R(B)) and Hom(gr A, B) differ over " + b.name());

    const std::set<std::vector<FE>> jet_set(points_jet.begin(), points_jet.end());
    std::map<std::vector<FE>, std::vector<FE>> preimage;
    std::optional<std::string> collision;
    bool identity = true;
    for (const auto& point : points_gr) {
      std::vector<std::vector<FE>> witt;
      for (std::size_t g = 0; g < ar.generators.size(); ++g) {
        witt.push_back(u(sections.unflatten(point, g * ctx.coordinates())));
      }
      const auto image = adj.phi(witt);
      report.expect(jet_set.count(image) > 0, "v(xi) is not a point of J_" + std::to_string(n) + "A at xi = " +
                                                  show_point(b, gr.generators, point) + " over " + b.name());
      identity = identity && image == point;
      auto [it, inserted] = preimage.emplace(image, point);
      if (!inserted && !collision) {
        collision = show_point(b, gr.generators, it->second) + " and " + show_point(b, gr.generators, point) +
                    " both map to " + show_point(b, jets.generators, image);
      }
    }
    const bool injective = !collision.has_value();
    const bool surjective = preimage.size() == points_jet.size();
    const bool perfect = b.ring().is_perfect();
    nlohmann::json entry = {{"ring", b.name()},
                            {"perfect", perfect},
                            {"hom_gr", points_gr.size()},
                            {"hom_A_RB", points_a.size()},
                            {"hom_jet", points_jet.size()},
                            {"injective", injective},
                            {"surjective", surjective},
                            {"bijective", injective && surjective}};
    if (identity_case) entry["identity"] = identity;
    if (collision) entry["witness"] = *collision;
    if (!surjective) {
      for (const auto& point : points_jet) {
        if (!preimage.count(point)) {
          entry["missed"] = show_point(b, jets.generators, point);
          break;
        }
      }
    }
    const bool expected = perfect || case_i;
    entry["bijectivity_expected"] = expected;
    if (expected) {
      report.expect(injective && surjective, "v is not bijective over " + b.name() +
                                                 (collision ? ": " + *collision : std::string(": not surjective")));
    }
    if (case_i) {
      report.expect(points_gr.size() == points_jet.size(), "point counts differ over " + b.name());
    }
    if (identity_case) report.expect(identity, "v is not the identity over " + b.name());
    per_ring.push_back(entry);
  }
  report.details["rings"] = per_ring;
  return report;
}

}  // namespace wittjet
