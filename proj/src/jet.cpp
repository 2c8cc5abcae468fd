#include "wittjet/jet.hpp"

#include <random>
#include <set>

namespace wittjet {

namespace {

using FE = FiniteAlgebra::Element;
using WR = WittRing<FiniteAlgebra>;

MultiPoly var(const TriplePtr& triple, const JetVar& v) { return MultiPoly::variable(triple->ring_ptr(), v); }

std::string show_vector(const FiniteAlgebra& b, const std::vector<FE>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + b.format(x[i]);
  return out + ")";
}

std::string show_witt_point(const FiniteAlgebra& b, const std::vector<JetVar>& gens,
                            const std::vector<std::vector<FE>>& point) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].name() + " -> " + show_vector(b, point[i]);
  return "{" + out + "}";
}

std::string show_point(const FiniteAlgebra& b, const std::vector<JetVar>& gens, const std::vector<FE>& point) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].name() + " -> " + b.format(point[i]);
  return "{" + out + "}";
}

PFamily truncate_family(const PFamily& f, unsigned n) {
  if (f.n < n) throw Error(ErrorKind::InvalidArgument, "P family of level " + std::to_string(f.n) + " is too short");
  PFamily out{f.triple, n, {}, {}};
  out.P.assign(f.P.begin(), f.P.begin() + n + 1);
  out.S.assign(f.S.begin(), f.S.begin() + n);
  return out;
}

void require_order_zero(const Presentation& a) {
  if (a.level != 0) throw Error(ErrorKind::InvalidArgument, "expected an algebra, got a level-" + std::to_string(a.level) + " jet presentation");
  for (const auto& g : a.generators) {
    if (g.order != 0) throw Error(ErrorKind::InvalidArgument, "generator " + g.name() + " has nonzero jet order");
  }
}

}  // namespace

PFamily p_polynomials(TriplePtr triple, unsigned n, unsigned long cap) {
  const unsigned long q = triple->q();
  if (ipow(Integer(q), n) > Integer(cap)) {
    throw Error(ErrorKind::FeasibilityCap, "P_n needs q^n = " + to_string(ipow(Integer(q), n)) +
                                               " > cap " + std::to_string(cap));
  }
  const NumberRing& o = triple->ring();
  PFamily f{triple, n, {var(triple, jet_t(0))}, {}};
  std::vector<MultiPoly> pd;  // P_i^delta
  for (unsigned k = 1; k <= n; ++k) {
    pd.push_back(q_delta(*triple, f.P[k - 1]));
    MultiPoly pk = pd[k - 1];
    for (unsigned i = 0; i + 2 <= k; ++i) {
      const unsigned long m = ipow(Integer(q), k - 1 - i).get_ui();
      // Powers P_i^{q(m-j)} and (P_i^delta)^j, built incrementally.
      std::vector<MultiPoly> p_pow{MultiPoly::integer(triple->ring_ptr(), 1)};
      const MultiPoly pq = f.P[i].pow(q);
      for (unsigned long j = 1; j <= m; ++j) p_pow.push_back(p_pow.back() * pq);
      MultiPoly d_pow = MultiPoly::integer(triple->ring_ptr(), 1);
      for (unsigned long j = 1; j <= m; ++j) {
        d_pow = d_pow * pd[i];
        NumberRingElement c = o.from_int(binomial(m, j));
        const long expo = static_cast<long>(i + j) - static_cast<long>(k);
        if (expo >= 0) {
          c = o.mul(c, triple->pi_power(static_cast<unsigned>(expo)));
        } else {
          for (long s = 0; s < -expo; ++s) {
            auto next = triple->try_div_pi(c);
            if (!next) {
              throw Error(ErrorKind::NotDivisible, "P_" + std::to_string(k) + ": c_{" + std::to_string(i) + "," +
                                                       std::to_string(j) + "} is not integral");
            }
            c = *next;
          }
        }
        if (o.is_zero(c)) continue;
        pk += (p_pow[m - j] * d_pow).scale(c);
      }
    }
    f.S.push_back(pk - var(triple, jet_t(k)));
    f.P.push_back(std::move(pk));
  }
  if (auto failure = verify_p_family(f)) throw Error(ErrorKind::NotDivisible, *failure);
  return f;
}

std::optional<std::string> verify_p_family(const PFamily& f) {
  const BaseTriple& triple = *f.triple;
  if (f.P.size() != f.n + 1 || f.S.size() != f.n) return "P family has the wrong length";
  if (f.P[0] != var(f.triple, jet_t(0))) return "P_0 != T";
  if (f.n >= 1 && f.P[1] != var(f.triple, jet_t(1))) return "P_1 != T'";
  for (unsigned k = 1; k <= f.n; ++k) {
    if (f.P[k] != var(f.triple, jet_t(k)) + f.S[k - 1]) return "P_" + std::to_string(k) + " != T^(k) + S_{k-1}";
    auto top = f.S[k - 1].max_order("T");
    if (top && *top >= k) return "S_" + std::to_string(k - 1) + " uses T^(" + std::to_string(*top) + ")";
  }
  MultiPoly phi_k = var(f.triple, jet_t(0));
  for (unsigned k = 0; k <= f.n; ++k) {
    if (k > 0) phi_k = phi_A(triple, phi_k);
    MultiPoly ghost(triple.ring_ptr());
    for (unsigned i = 0; i <= k; ++i) {
      ghost += f.P[i].pow(ipow(Integer(triple.q()), k - i).get_ui()).scale(triple.pi_power(i));
    }
    if (ghost != phi_k) return "ghost identity fails at level " + std::to_string(k);
  }
  return std::nullopt;
}

std::vector<MultiPoly> delta_iterates(const BaseTriple& triple, const MultiPoly& a, unsigned n) {
  std::vector<MultiPoly> out{a.ring_ptr() ? a : MultiPoly(triple.ring_ptr()) + a};
  for (unsigned i = 0; i < n; ++i) out.push_back(q_delta(triple, out.back()));
  return out;
}

std::vector<MultiPoly> exp_n(const PFamily& family, const MultiPoly& a, unsigned n) {
  if (family.n < n) throw Error(ErrorKind::InvalidArgument, "P family too short for exp_" + std::to_string(n));
  const auto its = delta_iterates(*family.triple, a, n);
  std::map<JetVar, MultiPoly> images;
  for (unsigned k = 0; k <= n; ++k) images.emplace(jet_t(k), its[k]);
  std::vector<MultiPoly> out;
  for (unsigned i = 0; i <= n; ++i) out.push_back(family.P[i].substitute(images));
  return out;
}

BaseSequence default_base_sequence(const Presentation& a, unsigned n) {
  if (!a.pi_power) return BaseSequence::constant(a.triple, n + 1);
  const unsigned k = *a.pi_power;
  if (k <= n) {
    throw Error(ErrorKind::IllDefined, "over " + a.base_name() + " jets exist only up to level " + std::to_string(k - 1));
  }
  std::vector<std::optional<unsigned>> levels;
  for (unsigned i = 0; i <= n; ++i) levels.push_back(k - i);
  return BaseSequence(a.triple, levels);
}

Presentation jet_algebra(const Presentation& a, unsigned n, const BaseSequence* base) {
  require_order_zero(a);
  std::optional<BaseSequence> owned;
  if (!base) {
    owned = default_base_sequence(a, n);
    base = &*owned;
  }
  if (base->size() <= n) throw Error(ErrorKind::InvalidArgument, "base sequence shorter than the jet level");
  if (base->level(0) != a.pi_power) {
    throw Error(ErrorKind::InvalidArgument, "base sequence does not start at " + a.base_name());
  }
  std::vector<JetVar> gens;
  for (const auto& g : a.generators) {
    for (unsigned i = 0; i <= n; ++i) gens.push_back(g.with_order(i));
  }
  std::vector<std::vector<MultiPoly>> its;
  for (const auto& f : a.relations) its.push_back(delta_iterates(*a.triple, f, n));
  std::vector<MultiPoly> rels;
  for (unsigned i = 0; i <= n; ++i) {
    for (const auto& it : its) rels.push_back(it[i]);
  }
  const std::string name = "J_" + std::to_string(n) + "(" + (a.name.empty() ? "A" : a.name) + ")";
  Presentation j = Presentation::make(a.triple, std::move(gens), std::move(rels), base->level(n), name);
  j.level = n;
  return j;
}

JetVar p_coordinate(const JetVar& x) { return JetVar{"P" + x.family, x.gamma, x.order}; }

AltPresentation alt_presentation(const Presentation& jets, const PFamily& family) {
  const unsigned n = jets.level;
  const PFamily f = truncate_family(family, n);
  AltPresentation out;
  std::vector<JetVar> ys;
  for (const auto& x : jets.generators) {
    if (x.order != 0) continue;
    std::map<JetVar, MultiPoly> to_x;
    for (unsigned k = 0; k <= n; ++k) to_x.emplace(jet_t(k), var(jets.triple, x.with_order(k)));
    std::map<JetVar, MultiPoly> to_inverse;
    for (unsigned i = 0; i <= n; ++i) {
      const JetVar y = p_coordinate(x.with_order(i));
      ys.push_back(y);
      out.forward.emplace(y, f.P[i].substitute(to_x));
      MultiPoly xi = var(jets.triple, y);
      if (i > 0) xi -= f.S[i - 1].substitute(to_inverse);
      to_inverse.emplace(jet_t(i), xi);
      out.inverse.emplace(x.with_order(i), xi);
    }
  }
  const std::size_t count = jets.relations.size() / (n + 1);
  std::vector<MultiPoly> rels;
  for (unsigned i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      rels.push_back(exp_n(f, jets.relations[j], n)[i].substitute(out.inverse));
    }
  }
  out.presentation = Presentation::make(jets.triple, std::move(ys), std::move(rels), jets.pi_power,
                                        jets.name.empty() ? "" : jets.name + " in P-coordinates");
  out.presentation.level = n;
  return out;
}

Presentation reduce_mod_pi(const Presentation& p, const std::string& field) {
  const Lattice lattice = p.triple->pi_power_lattice(1);
  std::vector<MultiPoly> rels;
  for (const auto& f : p.relations) {
    MultiPoly r = reduce_coefficients(lattice, f);
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  std::string name = p.name.empty() ? "A" : p.name;
  name += field.empty() ? " mod pi" : " (x) " + field;
  Presentation out = Presentation::make(p.triple, p.generators, std::move(rels), 1u, name);
  out.level = p.level;
  return out;
}

std::string fresh_family(const Presentation& p, const std::string& preferred) {
  std::set<std::string> used;
  for (const auto& g : p.generators) used.insert(g.family);
  if (!used.count(preferred)) return preferred;
  for (int i = 1;; ++i) {
    std::string candidate = preferred + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

std::vector<MultiPoly> element_corpus(const Presentation& a) {
  const auto& ring = a.triple->ring_ptr();
  std::vector<MultiPoly> out{MultiPoly::integer(ring, 1), MultiPoly::integer(ring, 2)};
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    const MultiPoly x = MultiPoly::variable(ring, a.generators[i]);
    out.push_back(x);
    out.push_back(x + MultiPoly::integer(ring, 1));
    out.push_back(x * x - MultiPoly::integer(ring, 3) * x);
    if (ring->degree() > 1) out.push_back(MultiPoly::constant(ring, ring->generator()) * x);
    for (std::size_t j = i + 1; j < a.generators.size(); ++j) {
      const MultiPoly y = MultiPoly::variable(ring, a.generators[j]);
      out.push_back(x + y);
      out.push_back(x * y);
    }
  }
  for (const auto& f : a.relations) out.push_back(f);
  return out;
}

Report check_adjunction(const Presentation& a, unsigned n, const FiniteAlgebra& b, const WittTablePtr& table,
                        const PFamily& family, const BaseSequence* base, const AdjunctionOptions& options) {
  Report report;
  report.name = "adjunction";
  report.details["algebra"] = a.to_string();
  report.details["ring"] = b.name();
  report.details["level"] = n;
  if (base) report.details["base_sequence"] = base->describe();

  const Presentation j = jet_algebra(a, n, base);
  require_coefficient_ring(j, b);
  const WR w(b, table, n);
  const Adjunction<FiniteAlgebra> adj(truncate_family(family, n), b);

  const auto left = enumerate_homs(a, w, all_vectors(b, n + 1, options.cap), options.cap, options.exec);
  const auto right = enumerate_homs(j, b, b.ring().enumerate_elements(options.cap), options.cap, options.exec);
  report.details["hom_A_WnB"] = left.size();
  report.details["hom_JnA_B"] = right.size();
  report.expect(left.size() == right.size(), "|Hom(A, W_n(B))| = " + std::to_string(left.size()) +
                                                 " but |Hom(J_nA, B)| = " + std::to_string(right.size()));

  const std::set<std::vector<FE>> right_set(right.begin(), right.end());
  auto bad = first_failure(options.exec, left.size(), [&](std::uint64_t i) {
    const auto h = adj.phi(left[i]);
    return right_set.count(h) && adj.phi_inv(h) == left[i];
  });
  report.checked += left.size();
  if (bad) {
    const auto h = adj.phi(left[*bad]);
    report.fail((right_set.count(h) ? "Phi^-1(Phi(g)) != g" : "Phi(g) violates a jet relation") +
                std::string(" at g = ") + show_witt_point(b, a.generators, left[*bad]));
  }
  const std::set<std::vector<std::vector<FE>>> left_set(left.begin(), left.end());
  bad = first_failure(options.exec, right.size(), [&](std::uint64_t i) {
    const auto g = adj.phi_inv(right[i]);
    return left_set.count(g) && adj.phi(g) == right[i];
  });
  report.checked += right.size();
  if (bad) {
    const auto g = adj.phi_inv(right[*bad]);
    report.fail((left_set.count(g) ? "Phi(Phi^-1(h)) != h" : "Phi^-1(h) violates a relation of A") +
                std::string(" at h = ") + show_point(b, j.generators, right[*bad]));
  }

  if (options.naturality) {
    const PFamily f = truncate_family(family, n);
    const auto corpus = element_corpus(a);
    std::vector<CompiledPoly<WR>> in_w;
    std::vector<std::vector<CompiledPoly<FiniteAlgebra>>> in_jets;
    for (const auto& c : corpus) {
      in_w.emplace_back(w, c, a.generators);
      std::vector<CompiledPoly<FiniteAlgebra>> comps;
      for (const auto& comp : exp_n(f, c, n)) comps.emplace_back(b, comp, j.generators);
      in_jets.push_back(std::move(comps));
    }
    std::size_t bad_element = 0;
    bad = first_failure(options.exec, left.size(), [&](std::uint64_t i) {
      const auto h = adj.phi(left[i]);
      for (std::size_t c = 0; c < corpus.size(); ++c) {
        const auto ga = in_w[c](w, left[i]);
        for (unsigned k = 0; k <= n; ++k) {
          if (!b.equal(in_jets[c][k](b, h), ga[k])) return false;
        }
      }
      return true;
    });
    report.checked += left.size() * corpus.size();
    if (bad) {
      const auto h = adj.phi(left[*bad]);
      for (std::size_t c = 0; c < corpus.size(); ++c) {
        const auto ga = in_w[c](w, left[*bad]);
        for (unsigned k = 0; k <= n; ++k) {
          if (!b.equal(in_jets[c][k](b, h), ga[k])) bad_element = c;
        }
      }
      report.fail("pr_i W_n(Phi g) exp_n != g on a = " + corpus[bad_element].to_string() + " at g = " +
                  show_witt_point(b, a.generators, left[*bad]));
    }
    report.details["naturality_corpus"] = corpus.size();
  }
  return report;
}

Report check_universal_property(const Presentation& a, const FiniteAlgebra& b, const WittTablePtr& table,
                                unsigned k, const AdjunctionOptions& options) {
  if (k < 1 || k > table->n) throw Error(ErrorKind::InvalidArgument, "universal property needs 1 <= k <= table level");
  Report report;
  report.name = "universal-property";
  report.details["algebra"] = a.to_string();
  report.details["ring"] = b.name();
  report.details["sequence"] = "W_" + std::to_string(k) + "(" + b.name() + ") -> W_" + std::to_string(k - 1) + "(" +
                               b.name() + ")";
  const Presentation j = jet_algebra(a, 1);
  require_coefficient_ring(j, b);
  const WR c0(b, table, k), c1(b, table, k - 1);
  const auto left = enumerate_homs(a, c0, all_vectors(b, k + 1, options.cap), options.cap, options.exec);
  const auto right = enumerate_homs(j, c1, all_vectors(b, k, options.cap), options.cap, options.exec);
  const std::set<std::vector<std::vector<FE>>> right_set(right.begin(), right.end());

  const auto corpus = element_corpus(a);
  std::vector<CompiledPoly<WR>> in_c0, in_c1, delta_in_c1;
  for (const auto& c : corpus) {
    in_c0.emplace_back(c0, c, a.generators);
    in_c1.emplace_back(c1, c, j.generators);
    delta_in_c1.emplace_back(c1, q_delta(*a.triple, MultiPoly(a.triple->ring_ptr()) + c), j.generators);
  }
  // (f0, f1) with f1(x) = R f0(x), f1(x') = Delta f0(x); count those with f1 a hom.
  std::uint64_t morphisms = 0;
  for (const auto& f0 : left) {
    std::vector<std::vector<FE>> f1;
    for (const auto& x : f0) {
      f1.push_back(c0.truncate(x, k));
      f1.push_back(c0.delta(x));
    }
    if (!right_set.count(f1)) {
      report.fail("no morphism J_1A -> C_1 over g = " + show_witt_point(b, a.generators, f0));
      continue;
    }
    ++morphisms;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
      const auto fa = in_c0[c](c0, f0);
      report.expect(c1.equal(in_c1[c](c1, f1), c0.truncate(fa, k)),
                    "f_1 u != u f_0 on " + corpus[c].to_string());
      report.expect(c1.equal(delta_in_c1[c](c1, f1), c0.delta(fa)),
                    "f_1 delta != delta f_0 on " + corpus[c].to_string());
    }
  }
  report.details["hom_A_C0"] = left.size();
  report.details["hom_J1A_C1"] = right.size();
  report.details["morphisms"] = morphisms;
  report.expect(morphisms == left.size(), "morphism count differs from |Hom(A, C_0)|");
  return report;
}

Report check_localization(const Presentation& a, const MultiPoly& s, unsigned n,
                          const std::vector<FiniteAlgebra>& rings, const AdjunctionOptions& options) {
  require_order_zero(a);
  Report report;
  report.name = "localization";
  const auto& ring = a.triple->ring_ptr();
  const MultiPoly one = MultiPoly::integer(ring, 1);

  const JetVar y{fresh_family(a, "y"), 0, 0};
  std::vector<JetVar> gens = a.generators;
  gens.push_back(y);
  std::vector<MultiPoly> rels = a.relations;
  rels.push_back(MultiPoly::variable(ring, y) * s - one);
  const Presentation as = Presentation::make(a.triple, gens, rels, a.pi_power, "A_s");
  const Presentation left = jet_algebra(as, n);

  const Presentation ja = jet_algebra(a, n);
  MultiPoly t = one, phi_s = MultiPoly(ring) + s;
  MultiPoly y_prod = one, phi_y = MultiPoly::variable(ring, y);
  for (unsigned i = 0; i <= n; ++i) {
    if (i > 0) {
      phi_s = phi_A(*a.triple, phi_s);
      phi_y = phi_A(*a.triple, phi_y);
    }
    t *= phi_s;
    y_prod *= phi_y;
  }
  const JetVar z{fresh_family(ja, "z"), 0, 0};
  std::vector<JetVar> rgens = ja.generators;
  rgens.push_back(z);
  std::vector<MultiPoly> rrels = ja.relations;
  rrels.push_back(MultiPoly::variable(ring, z) * t - one);
  Presentation right = Presentation::make(a.triple, rgens, rrels, ja.pi_power, "(J_nA)_t");
  right.level = n;

  report.details["s"] = s.to_string();
  report.details["t"] = t.to_string();
  report.details["level"] = n;
  nlohmann::json per_ring = nlohmann::json::array();
  for (const auto& b : rings) {
    require_coefficient_ring(left, b);
    const auto elements = b.ring().enumerate_elements(options.cap);
    const auto lh = enumerate_homs(left, b, elements, options.cap, options.exec);
    const auto rh = enumerate_homs(right, b, elements, options.cap, options.exec);
    const std::set<std::vector<FE>> right_set(rh.begin(), rh.end());
    const CompiledPoly<FiniteAlgebra> z_value(b, y_prod, left.generators);
    std::vector<std::size_t> source_slot;
    for (const auto& g : right.generators) {
      auto it = std::find(left.generators.begin(), left.generators.end(), g);
      source_slot.push_back(static_cast<std::size_t>(it - left.generators.begin()));
    }
    std::set<std::vector<FE>> images;
    for (const auto& point : lh) {
      std::vector<FE> image;
      for (std::size_t i = 0; i < right.generators.size(); ++i) {
        image.push_back(right.generators[i] == z ? z_value(b, point) : point[source_slot[i]]);
      }
      report.expect(right_set.count(image) > 0,
                    "canonical map leaves (J_nA)_t at " + show_point(b, left.generators, point) + " over " + b.name());
      images.insert(std::move(image));
    }
    report.expect(images.size() == lh.size(), "canonical map is not injective over " + b.name());
    report.expect(lh.size() == rh.size(), "over " + b.name() + ": |Hom(J_n(A_s), B)| = " + std::to_string(lh.size()) +
                                              " but |Hom((J_nA)_t, B)| = " + std::to_string(rh.size()));
    per_ring.push_back({{"ring", b.name()},
                        {"hom_Jn_As", lh.size()},
                        {"hom_JnA_t", rh.size()},
                        {"bijective", images.size() == lh.size() && images.size() == rh.size()}});
  }
  report.details["rings"] = per_ring;
  return report;
}

}  // namespace wittjet

namespace wittjet {

Report check_jet_sequence(const Presentation& a, unsigned top, const std::vector<FiniteAlgebra>& rings,
                          std::uint64_t samples, std::uint64_t seed) {
  require_order_zero(a);
  Report report;
  report.name = "jet-sequence";
  report.seed = seed;
  const TriplePtr& triple = a.triple;
  const auto& ring = triple->ring_ptr();
  const BaseSequence base = default_base_sequence(a, top);
  std::vector<Presentation> jets;
  for (unsigned n = 0; n <= top; ++n) jets.push_back(jet_algebra(a, n, &base));

  ProlongationSequence<PolyRing> seq;
  for (unsigned n = 0; n <= top; ++n) seq.levels.emplace_back(triple, base.level(n));
  for (unsigned n = 0; n < top; ++n) {
    const PolyRing target = seq.levels[n + 1];
    seq.u.push_back([target](const MultiPoly& x) { return target.reduce(x); });
    seq.delta.push_back([target, triple](const MultiPoly& x) { return target.reduce(q_delta(*triple, x)); });
  }
  const auto corpus = element_corpus(a);
  for (unsigned n = 0; n <= top; ++n) {
    std::vector<MultiPoly> level = corpus;
    for (const auto& g : a.generators) {
      const MultiPoly top_jet = MultiPoly::variable(ring, g.with_order(n));
      level.push_back(top_jet);
      level.push_back(top_jet * MultiPoly::variable(ring, g) + MultiPoly::integer(ring, 1));
    }
    for (auto& x : level) x = seq.levels[n].reduce(MultiPoly(ring) + x);
    seq.corpus.push_back(std::move(level));
  }
  seq.show = [](const MultiPoly& x) { return x.to_string(); };
  report.absorb(check_sequence(*triple, seq));

  std::mt19937_64 rng(seed);
  for (unsigned n = 0; n < top; ++n) {
    const Presentation& here = jets[n];
    const Presentation& next = jets[n + 1];
    std::vector<MultiPoly> relations;
    for (const auto& r : here.relations) {
      if (!r.is_zero()) relations.push_back(r);
    }
    if (relations.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_rel(0, relations.size() - 1), pick_gen(0, here.generators.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto random_poly = [&]() {
      MultiPoly p = MultiPoly::integer(ring, coeff(rng));
      for (int t = 0; t < 2; ++t) {
        p += MultiPoly::variable(ring, here.generators[pick_gen(rng)]) * MultiPoly::integer(ring, coeff(rng));
      }
      return p;
    };
    std::vector<std::pair<MultiPoly, MultiPoly>> pairs;
    for (std::uint64_t s = 0; s < samples; ++s) {
      MultiPoly x = random_poly();
      pairs.emplace_back(x, x + random_poly() * relations[pick_rel(rng)]);
    }
    for (const auto& b : rings) {
      require_coefficient_ring(next, b);
      const auto points = enumerate_homs(next, b, b.ring().enumerate_elements());
      for (const auto& [x, y] : pairs) {
        const CompiledPoly<FiniteAlgebra> ux(b, x, next.generators), uy(b, y, next.generators);
        const CompiledPoly<FiniteAlgebra> dx(b, q_delta(*triple, x), next.generators),
            dy(b, q_delta(*triple, y), next.generators);
        for (const auto& h : points) {
          report.expect(b.equal(ux(b, h), uy(b, h)) && b.equal(dx(b, h), dy(b, h)),
                        "delta_" + std::to_string(n) + " depends on the representative: " + x.to_string() + " vs " +
                            y.to_string() + " over " + b.name());
        }
      }
    }
  }
  report.details["algebra"] = a.to_string();
  report.details["levels"] = top;
  return report;
}

}  // namespace wittjet
