#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittjet/number_ring.hpp"
#include "wittjet/ring.hpp"

namespace wittjet {

/// Variable x^(order)_gamma of a family; ordered lexicographically by
/// (family, gamma, order).
struct JetVar {
  std::string family;
  unsigned gamma = 0;
  unsigned order = 0;

  auto operator<=>(const JetVar&) const = default;
  bool operator==(const JetVar&) const = default;

  JetVar with_order(unsigned k) const { return JetVar{family, gamma, k}; }
  JetVar next() const { return with_order(order + 1); }
  std::string name() const;
};

/// Sparse exponent vector, sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<JetVar, unsigned>> powers);
  static Monomial of(const JetVar& v, unsigned exponent = 1);

  const std::vector<std::pair<JetVar, unsigned>>& powers() const { return powers_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return powers_.empty(); }
  unsigned exponent(const JetVar& v) const;

  Monomial operator*(const Monomial& other) const;

  /// Graded lex: total degree first, then the larger exponent on the earlier
  /// variable wins.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return powers_ == other.powers_; }

  std::string to_string() const;

 private:
  std::vector<std::pair<JetVar, unsigned>> powers_;
  unsigned degree_ = 0;
};

/// Polynomial over O = Z[t]/(g) in jet-indexed variables. Zero coefficients
/// are never stored.
class MultiPoly {
 public:
  using Coeff = NumberRingElement;
  using Terms = std::map<Monomial, Coeff>;
  using RingPtr = std::shared_ptr<const NumberRing>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Coeff& c);
  static MultiPoly integer(RingPtr ring, const Integer& n);
  static MultiPoly variable(RingPtr ring, const JetVar& v, unsigned exponent = 1);

  const RingPtr& ring_ptr() const { return ring_; }
  const NumberRing& ring() const { return *ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Coeff constant_term() const;
  Coeff coefficient(const Monomial& m) const;
  unsigned degree() const;
  std::set<JetVar> variables() const;
  /// Highest jet order among the variables of `family`, if any occur.
  std::optional<unsigned> max_order(const std::string& family) const;

  void add_term(const Monomial& m, const Coeff& c);

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }
  MultiPoly scale(const Coeff& c) const;
  MultiPoly pow(unsigned long exponent) const;
  bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }

  /// Simultaneous substitution; unmapped variables are kept.
  MultiPoly substitute(const std::map<JetVar, MultiPoly>& images) const;
  MultiPoly map_coefficients(const std::function<Coeff(const Coeff&)>& f) const;

  template <CommutativeRing R>
  typename R::Element evaluate(const R& target,
                               const std::map<JetVar, typename R::Element>& values) const;

  std::string to_string() const;

 private:
  const RingPtr& common_ring(const MultiPoly& other) const;

  RingPtr ring_;
  Terms terms_;
};

MultiPoly multiply_serial(const MultiPoly& a, const MultiPoly& b);
/// OpenMP map-reduce over the terms of `a`; identical result to multiply_serial.
MultiPoly multiply_parallel(const MultiPoly& a, const MultiPoly& b);

/// Coefficientwise division by pi; nullopt if some coefficient is not divisible.
std::optional<MultiPoly> try_div_pi(const BaseTriple& triple, const MultiPoly& p);
MultiPoly exact_div_pi(const BaseTriple& triple, const MultiPoly& p);
/// Coefficients reduced to canonical representatives modulo a lattice of O.
MultiPoly reduce_coefficients(const Lattice& lattice, const MultiPoly& p);

/// T^(i) -> (T^(i))^q + pi T^(i+1) for every variable, coefficients fixed.
MultiPoly phi_A(const BaseTriple& triple, const MultiPoly& p);
/// (phi_A(Q) - Q^q) / pi.
MultiPoly q_delta(const BaseTriple& triple, const MultiPoly& p);
MultiPoly iterate_q_delta(const BaseTriple& triple, const MultiPoly& p, unsigned k);
/// C_pi(X,Y) = (X^q + Y^q - (X+Y)^q) / pi.
MultiPoly c_pi(const BaseTriple& triple, const JetVar& x, const JetVar& y);

nlohmann::json coeff_to_json(const NumberRingElement& c);
NumberRingElement coeff_from_json(const NumberRing& ring, const nlohmann::json& j);
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(MultiPoly::RingPtr ring, const nlohmann::json& j);
nlohmann::json jetvar_to_json(const JetVar& v);
JetVar jetvar_from_json(const nlohmann::json& j);

/// Parses "x^2 + 3*x'*y - pi*t". Identifiers become order-0 variables with one
/// order per trailing prime and an optional "_gamma" suffix; "pi" is the
/// uniformizer and "t" the generator of O when deg g > 1.
MultiPoly parse_polynomial(const BaseTriple& triple, const std::string& text);

/// Evaluates a fixed polynomial many times in a ring R, with variables bound to
/// slots of an argument vector.
template <CommutativeRing R>
class CompiledPoly {
 public:
  using Element = typename R::Element;

  CompiledPoly() = default;
  CompiledPoly(const R& ring, const MultiPoly& p, const std::vector<JetVar>& slots);

  Element operator()(const R& ring, const std::vector<Element>& args) const;

 private:
  struct Term {
    Element coeff;
    std::vector<std::pair<std::size_t, unsigned>> factors;
  };
  std::vector<Term> terms_;
};

/// The polynomial ring O[vars] (optionally with coefficients mod pi^k) as a
/// ring adapter.
class PolyRing {
 public:
  using Element = MultiPoly;

  PolyRing(TriplePtr triple, std::optional<unsigned> pi_power = std::nullopt);

  const BaseTriple& triple() const { return *triple_; }
  Element reduce(const Element& a) const;
  Element zero() const { return MultiPoly(triple_->ring_ptr()); }
  Element one() const { return from_int(1); }
  Element from_int(const Integer& n) const;
  Element from_base(const NumberRingElement& c) const;
  Element add(const Element& a, const Element& b) const { return reduce(a + b); }
  Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
  Element neg(const Element& a) const { return reduce(-a); }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  bool equal(const Element& a, const Element& b) const { return reduce(a) == reduce(b); }
  Element variable(const JetVar& v) const { return MultiPoly::variable(triple_->ring_ptr(), v); }

 private:
  TriplePtr triple_;
  std::shared_ptr<const Lattice> lattice_;
};

// ---------------------------------------------------------------------------

template <CommutativeRing R>
typename R::Element MultiPoly::evaluate(
    const R& target, const std::map<JetVar, typename R::Element>& values) const {
  using E = typename R::Element;
  std::map<std::pair<JetVar, unsigned>, E> power_cache;
  E total = target.zero();
  for (const auto& [mono, coeff] : terms_) {
    E term = map_coefficient(target, coeff);
    for (const auto& [v, e] : mono.powers()) {
      auto key = std::make_pair(v, e);
      auto cached = power_cache.find(key);
      if (cached == power_cache.end()) {
        auto it = values.find(v);
        if (it == values.end()) {
          throw Error(ErrorKind::MissingAssignment, "no value for " + v.name());
        }
        cached = power_cache.emplace(key, power(target, it->second, e)).first;
      }
      term = target.mul(term, cached->second);
    }
    total = target.add(total, term);
  }
  return total;
}

template <CommutativeRing R>
CompiledPoly<R>::CompiledPoly(const R& ring, const MultiPoly& p, const std::vector<JetVar>& slots) {
  for (const auto& [mono, coeff] : p.terms()) {
    Term term{map_coefficient(ring, coeff), {}};
    if (ring.equal(term.coeff, ring.zero())) continue;
    for (const auto& [v, e] : mono.powers()) {
      std::size_t slot = slots.size();
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] == v) slot = i;
      }
      if (slot == slots.size()) throw Error(ErrorKind::MissingAssignment, "no slot for " + v.name());
      term.factors.emplace_back(slot, e);
    }
    terms_.push_back(std::move(term));
  }
}

template <CommutativeRing R>
typename R::Element CompiledPoly<R>::operator()(const R& ring, const std::vector<Element>& args) const {
  Element total = ring.zero();
  for (const auto& term : terms_) {
    Element value = term.coeff;
    for (const auto& [slot, e] : term.factors) {
      value = ring.mul(value, e == 1 ? args[slot] : power(ring, args[slot], e));
    }
    total = ring.add(total, value);
  }
  return total;
}

}  // namespace wittjet
