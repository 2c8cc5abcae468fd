#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wittjet/multipoly.hpp"
#include "wittjet/report.hpp"
#include "wittjet/witt.hpp"

namespace wittjet {

/// The twisted Leibniz rules in a target ring T: the data needed to combine
/// pairs (u(a), delta(a)).
template <CommutativeRing T>
class DerivationRules {
 public:
  using E = typename T::Element;
  using Pair = std::pair<E, E>;

  DerivationRules(const BaseTriple& triple, T target)
      : target_(std::move(target)),
        q_(triple.q()),
        pi_(map_coefficient(target_, triple.pi())),
        c_pi_(target_, c_pi(triple, witt_x(0), witt_y(0)), {witt_x(0), witt_y(0)}) {}

  const T& target() const { return target_; }
  const E& pi() const { return pi_; }

  E c(const E& x, const E& y) const { return c_pi_(target_, {x, y}); }

  /// delta(a + b) = delta(a) + delta(b) + C_pi(u a, u b).
  Pair sum(const Pair& a, const Pair& b) const {
    return {target_.add(a.first, b.first),
            target_.add(target_.add(a.second, b.second), c(a.first, b.first))};
  }

  /// delta(ab) = u(a)^q delta(b) + u(b)^q delta(a) + pi delta(a) delta(b).
  Pair product(const Pair& a, const Pair& b) const {
    E d = target_.add(target_.mul(power(target_, a.first, q_), b.second),
                      target_.mul(power(target_, b.first, q_), a.second));
    d = target_.add(d, target_.mul(pi_, target_.mul(a.second, b.second)));
    return {target_.mul(a.first, b.first), d};
  }

 private:
  T target_;
  unsigned long q_;
  E pi_;
  CompiledPoly<T> c_pi_;
};

/// Checks that `delta` is a pi-derivation relative to the ring map `u` on all
/// pairs drawn from `elements` (exhaustively when |elements|^2 <= budget,
/// otherwise on `budget` seeded random pairs).
template <CommutativeRing S, CommutativeRing T>
Report check_pi_derivation(const BaseTriple& triple, const S& source, const T& target,
                           const std::function<typename T::Element(const typename S::Element&)>& u,
                           const std::function<typename T::Element(const typename S::Element&)>& delta,
                           const std::vector<typename S::Element>& elements,
                           const std::function<std::string(const typename S::Element&)>& show,
                           std::uint64_t budget = 1'000'000, std::uint64_t seed = 1) {
  Report report;
  report.name = "pi-derivation";
  report.seed = seed;
  DerivationRules<T> rules(triple, target);
  auto check = [&](const typename S::Element& x, const typename S::Element& y) {
    const auto ux = u(x), uy = u(y), dx = delta(x), dy = delta(y);
    const auto expect_sum = rules.sum({ux, dx}, {uy, dy});
    const auto expect_prod = rules.product({ux, dx}, {uy, dy});
    const std::string at = " at x = " + show(x) + ", y = " + show(y);
    report.expect(target.equal(u(source.add(x, y)), expect_sum.first), "u not additive" + at);
    report.expect(target.equal(u(source.mul(x, y)), expect_prod.first), "u not multiplicative" + at);
    report.expect(target.equal(delta(source.add(x, y)), expect_sum.second), "sum rule fails" + at);
    report.expect(target.equal(delta(source.mul(x, y)), expect_prod.second), "product rule fails" + at);
  };
  const std::uint64_t n = elements.size();
  report.details["exhaustive"] = n * n <= budget;
  if (n * n <= budget) {
    for (const auto& x : elements) {
      for (const auto& y : elements) {
        check(x, y);
        if (!report.pass) return report;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < budget && report.pass; ++s) check(elements[pick(rng)], elements[pick(rng)]);
  }
  return report;
}

/// A prolongation A -> B given on generators: u(x) and delta(x) for each
/// generator x, extended to polynomials by the Leibniz rules and delta_O on
/// coefficients.
template <CommutativeRing T>
class Prolongation {
 public:
  using E = typename T::Element;

  Prolongation(TriplePtr triple, T target, std::map<JetVar, E> u, std::map<JetVar, E> delta,
               std::vector<MultiPoly> relations = {})
      : triple_(std::move(triple)),
        rules_(*triple_, target),
        u_(std::move(u)),
        delta_(std::move(delta)),
        relations_(std::move(relations)) {}

  const T& target() const { return rules_.target(); }
  const TriplePtr& triple_ptr() const { return triple_; }
  const std::vector<MultiPoly>& relations() const { return relations_; }

  std::pair<E, E> both(const MultiPoly& a) const {
    const T& t = rules_.target();
    std::pair<E, E> total{t.zero(), t.zero()};
    for (const auto& [mono, coeff] : a.terms()) {
      std::pair<E, E> term{map_coefficient(t, coeff), map_coefficient(t, triple_->delta(coeff))};
      for (const auto& [v, e] : mono.powers()) {
        auto u_it = u_.find(v);
        auto d_it = delta_.find(v);
        if (u_it == u_.end() || d_it == delta_.end()) {
          throw Error(ErrorKind::MissingAssignment, "prolongation has no data for " + v.name());
        }
        const std::pair<E, E> g{u_it->second, d_it->second};
        for (unsigned k = 0; k < e; ++k) term = rules_.product(term, g);
      }
      total = rules_.sum(total, term);
    }
    return total;
  }

  E apply_u(const MultiPoly& a) const { return both(a).first; }
  E extend_delta(const MultiPoly& a) const { return both(a).second; }

  /// u and delta kill every relation, and delta agrees on `samples` random pairs
  /// of representatives a and a + r f of the same class.
  Report check_well_defined(std::uint64_t samples = 100, std::uint64_t seed = 1) const {
    Report report;
    report.name = "well-defined";
    report.seed = seed;
    const T& t = rules_.target();
    for (const auto& f : relations_) {
      auto [uf, df] = both(f);
      report.expect(t.equal(uf, t.zero()), "u(f) != 0 for f = " + f.to_string());
      report.expect(t.equal(df, t.zero()), "delta(f) != 0 for f = " + f.to_string());
    }
    if (relations_.empty()) return report;
    std::mt19937_64 rng(seed);
    std::vector<JetVar> gens;
    for (const auto& [v, value] : u_) gens.push_back(v);
    const auto& ring = triple_->ring_ptr();
    auto random_poly = [&]() {
      std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2);
      MultiPoly p(ring);
      for (int term = 0; term < 3; ++term) {
        MultiPoly m = MultiPoly::integer(ring, coeff(rng));
        for (const auto& g : gens) m = m * MultiPoly::variable(ring, g, exp(rng));
        p += m;
      }
      return p;
    };
    std::uniform_int_distribution<std::size_t> pick(0, relations_.size() - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      MultiPoly a = random_poly();
      MultiPoly b = a + random_poly() * relations_[pick(rng)];
      auto da = both(a), db = both(b);
      report.expect(t.equal(da.first, db.first) && t.equal(da.second, db.second),
                    "representatives " + a.to_string() + " and " + b.to_string() + " disagree");
    }
    return report;
  }

 private:
  TriplePtr triple_;
  DerivationRules<T> rules_;
  std::map<JetVar, E> u_;
  std::map<JetVar, E> delta_;
  std::vector<MultiPoly> relations_;
};

/// Prolongation sequence C_0 -> C_1 -> ... -> C_N with all levels of one ring type.
template <CommutativeRing R>
struct ProlongationSequence {
  using E = typename R::Element;
  using Map = std::function<E(const E&)>;

  std::vector<R> levels;
  std::vector<Map> u;      // u[n] : C_n -> C_{n+1}
  std::vector<Map> delta;  // delta[n] : C_n -> C_{n+1}
  /// Test elements per level.
  std::vector<std::vector<E>> corpus;
  std::function<std::string(const E&)> show;
};

/// Each delta_n is a pi-derivation relative to u_n, and u_{n+1} delta_n = delta_{n+1} u_n.
template <CommutativeRing R>
Report check_sequence(const BaseTriple& triple, const ProlongationSequence<R>& seq,
                      std::uint64_t budget = 1'000'000) {
  Report report;
  report.name = "prolongation-sequence";
  for (std::size_t n = 0; n + 1 < seq.levels.size(); ++n) {
    Report step = check_pi_derivation<R, R>(triple, seq.levels[n], seq.levels[n + 1], seq.u[n],
                                            seq.delta[n], seq.corpus[n], seq.show, budget);
    step.name = "level " + std::to_string(n);
    report.absorb(step);
  }
  for (std::size_t n = 0; n + 2 < seq.levels.size(); ++n) {
    const R& target = seq.levels[n + 2];
    for (const auto& x : seq.corpus[n]) {
      report.expect(target.equal(seq.u[n + 1](seq.delta[n](x)), seq.delta[n + 1](seq.u[n](x))),
                    "u delta != delta u at level " + std::to_string(n) + " for x = " + seq.show(x));
    }
  }
  return report;
}

/// A quotient tower R_0 -> R_1 -> ... with R_n = O (nullopt) or O/pi^{k_n}, u the
/// reduction and delta induced by delta_O; needs k_{n+1} <= k_n - 1.
class BaseSequence {
 public:
  BaseSequence(TriplePtr triple, std::vector<std::optional<unsigned>> levels);
  static BaseSequence constant(TriplePtr triple, std::size_t length);

  const TriplePtr& triple() const { return triple_; }
  std::size_t size() const { return levels_.size(); }
  std::optional<unsigned> level(std::size_t n) const { return levels_.at(n); }
  QuotientRing ring(std::size_t n) const { return QuotientRing(triple_, levels_.at(n)); }
  std::string describe() const;

  ProlongationSequence<QuotientRing> as_sequence(std::uint64_t corpus_bound = 16) const;

 private:
  TriplePtr triple_;
  std::vector<std::optional<unsigned>> levels_;
};

/// check_sequence plus independence of each induced delta from the chosen lift.
Report check_base_sequence(const BaseSequence& base);

/// Hom(A, W_1(B)) from a prolongation A -> B: x -> (u(x), delta(x)).
template <CommutativeRing T>
std::map<JetVar, std::vector<typename T::Element>> prolongation_to_w1(
    const Prolongation<T>& p, const std::vector<JetVar>& generators) {
  std::map<JetVar, std::vector<typename T::Element>> out;
  for (const auto& g : generators) {
    auto [u, d] = p.both(MultiPoly::variable(p.triple_ptr()->ring_ptr(), g));
    out.emplace(g, std::vector<typename T::Element>{u, d});
  }
  return out;
}

/// The prolongation with u = pr_0 and delta = pr_1 of a hom A -> W_1(B).
template <CommutativeRing T>
Prolongation<T> prolongation_from_w1(TriplePtr triple, T target,
                                     const std::map<JetVar, std::vector<typename T::Element>>& hom,
                                     std::vector<MultiPoly> relations = {}) {
  std::map<JetVar, typename T::Element> u, delta;
  for (const auto& [g, w] : hom) {
    u.emplace(g, w.at(0));
    delta.emplace(g, w.at(1));
  }
  return Prolongation<T>(std::move(triple), std::move(target), std::move(u), std::move(delta),
                         std::move(relations));
}

}  // namespace wittjet
