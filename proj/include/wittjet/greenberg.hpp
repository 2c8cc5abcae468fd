#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittjet/drinfeld.hpp"
#include "wittjet/jet.hpp"
#include "wittjet/presentation.hpp"
#include "wittjet/report.hpp"
#include "wittjet/witt.hpp"

namespace wittjet {

/// R = O'/pi'^{me} seen through k' = O'/pi': either O' unramified over Z_p with
/// t a root of unity of order prime to p, or O' = Z[pi'] totally ramified with
/// pi' = t and Eisenstein polynomial g.
struct GreenbergContext {
  enum class Shape { Rational, Unramified, TotallyRamified };

  TriplePtr target;     // (O', pi', q')
  TriplePtr p_typical;  // (Z, p, p)
  unsigned m = 1;
  unsigned e = 1;
  Shape shape = Shape::Rational;
  /// pi'^e = -(a_0 + a_1 pi' + ... + a_{e-1} pi'^{e-1}); holds a_0..a_{e-1}.
  std::vector<Integer> eisenstein;

  static GreenbergContext make(TriplePtr target, unsigned m);
  unsigned jet_level() const { return m * e - 1; }
  std::size_t coordinates() const { return static_cast<std::size_t>(m) * e; }
  std::string describe() const;
};

/// The ring of sections R(B) = W_{m-1}(B) + W_{m-1}(B) pi + ... + W_{m-1}(B) pi^{e-1},
/// with pi^e rewritten through the Eisenstein relation.
template <CommutativeRing Base>
class GreenbergRing {
 public:
  using BaseElement = typename Base::Element;
  using Witt = WittRing<Base>;
  using Element = std::vector<typename Witt::Element>;

  /// `p_table` is the p-typical table of level >= m-1; `base` an O'-algebra.
  GreenbergRing(const GreenbergContext& ctx, Base base, WittTablePtr p_table)
      : ctx_(ctx), witt_(std::move(base), std::move(p_table), ctx.m - 1) {
    for (const auto& a : ctx_.eisenstein) eisenstein_.push_back(witt_.from_int(a));
  }

  const GreenbergContext& context() const { return ctx_; }
  const Witt& witt() const { return witt_; }
  const Base& base() const { return witt_.base(); }

  Element zero() const { return Element(ctx_.e, witt_.zero()); }
  Element one() const { return embed(witt_.one()); }
  Element from_int(const Integer& n) const { return embed(witt_.from_int(n)); }
  Element from_base(const NumberRingElement& c) const;
  /// pi' itself.
  Element pi() const;

  Element add(const Element& x, const Element& y) const {
    Element out(ctx_.e);
    for (unsigned i = 0; i < ctx_.e; ++i) out[i] = witt_.add(x[i], y[i]);
    return out;
  }
  Element neg(const Element& x) const {
    Element out(ctx_.e);
    for (unsigned i = 0; i < ctx_.e; ++i) out[i] = witt_.neg(x[i]);
    return out;
  }
  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }
  Element mul(const Element& x, const Element& y) const;
  bool equal(const Element& x, const Element& y) const {
    for (unsigned i = 0; i < ctx_.e; ++i) {
      if (!witt_.equal(x[i], y[i])) return false;
    }
    return true;
  }

  /// Slot-major, Witt component minor.
  std::vector<BaseElement> flatten(const Element& x) const {
    std::vector<BaseElement> out;
    for (const auto& w : x) out.insert(out.end(), w.begin(), w.end());
    return out;
  }
  Element unflatten(const std::vector<BaseElement>& coords, std::size_t offset = 0) const {
    Element out(ctx_.e);
    for (unsigned i = 0; i < ctx_.e; ++i) {
      auto first = coords.begin() + static_cast<std::ptrdiff_t>(offset + i * ctx_.m);
      out[i].assign(first, first + ctx_.m);
    }
    return out;
  }

 private:
  Element embed(typename Witt::Element w) const {
    Element out = zero();
    out[0] = std::move(w);
    return out;
  }

  GreenbergContext ctx_;
  Witt witt_;
  std::vector<typename Witt::Element> eisenstein_;
};

template <CommutativeRing Base>
typename GreenbergRing<Base>::Element GreenbergRing<Base>::pi() const {
  if (ctx_.e == 1) return from_int(Integer(static_cast<unsigned long>(ctx_.p_typical->p())));
  Element out = zero();
  out[1] = witt_.one();
  return out;
}

template <CommutativeRing Base>
typename GreenbergRing<Base>::Element GreenbergRing<Base>::from_base(const NumberRingElement& c) const {
  Element total = zero();
  Element t_power = one();
  Element t;
  switch (ctx_.shape) {
    case GreenbergContext::Shape::Rational: return from_int(c.coeffs[0]);
    case GreenbergContext::Shape::TotallyRamified: t = pi(); break;
    case GreenbergContext::Shape::Unramified: {
      const NumberRing& o = ctx_.target->ring();
      t = embed(witt_.teichmuller(map_coefficient(base(), o.generator())));
      break;
    }
  }
  for (const auto& cj : c.coeffs) {
    total = add(total, mul(from_int(cj), t_power));
    t_power = mul(t_power, t);
  }
  return total;
}

template <CommutativeRing Base>
typename GreenbergRing<Base>::Element GreenbergRing<Base>::mul(const Element& x, const Element& y) const {
  const unsigned e = ctx_.e;
  std::vector<typename Witt::Element> c(2 * e - 1, witt_.zero());
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned j = 0; j < e; ++j) c[i + j] = witt_.add(c[i + j], witt_.mul(x[i], y[j]));
  }
  for (unsigned k = 2 * e - 2; k >= e; --k) {
    for (unsigned i = 0; i < e; ++i) c[k - e + i] = witt_.sub(c[k - e + i], witt_.mul(eisenstein_[i], c[k]));
  }
  c.resize(e);
  return c;
}

/// u~(w_0 + w_1 pi + ...) = u(w_0) + pi' u(w_1) + ... in W_{pi',q',me-1}(B).
template <CommutativeRing Base>
class UTilde {
 public:
  UTilde(const GreenbergContext& ctx, Base base, WittTablePtr p_table, WittTablePtr target_table)
      : ctx_(ctx), u_(base, p_table, base, target_table) {}

  const DrinfeldMap<Base>& drinfeld() const { return u_; }

  typename WittRing<Base>::Element operator()(const typename GreenbergRing<Base>::Element& xi) const {
    const auto& tgt = u_.target();
    const std::size_t len = ctx_.coordinates();
    auto total = tgt.truncate(tgt.zero(), len);
    for (unsigned i = 0; i < ctx_.e; ++i) {
      auto part = tgt.scalar(ctx_.target->pi_power(i), u_(xi[i]));
      total = tgt.add(total, tgt.truncate(part, len));
    }
    return total;
  }

 private:
  GreenbergContext ctx_;
  DrinfeldMap<Base> u_;
};

/// Tables a context needs, built once.
struct GreenbergTables {
  WittTablePtr p_typical;  // level m-1
  WittTablePtr target;     // level me-1
  PFamily family;          // level me-1
};
GreenbergTables greenberg_tables(const GreenbergContext& ctx, const TableOptions& options = {});

/// A over R = O'/pi'^{me}: pi_power unset or equal to me.
Presentation over_greenberg_base(const Presentation& a, const GreenbergContext& ctx);

/// gr(A) over k' = O'/pi': generator x becomes the me coordinates of a point of R(B),
/// named after the upper-cased family; each relation yields me component relations.
Presentation greenberg_transform(const Presentation& a, const GreenbergContext& ctx, const GreenbergTables& tables);

/// Ring axioms of R(B) over all triples of elements (or `samples` seeded triples).
Report check_greenberg_ring(const GreenbergContext& ctx, const FiniteAlgebra& b, const GreenbergTables& tables,
                            std::uint64_t samples = 0, std::uint64_t seed = 1);

/// For each B: Hom_R(A, R(B)) = Hom(gr A, B) as point sets, and the point map
/// v : xi -> Phi(u~ o xi) into Hom(J_{me-1}A, B), with counts, injectivity,
/// surjectivity and witnesses. Fails on a non-bijection only where bijectivity is
/// expected: B perfect, or q = p and e = 1.
Report compare_greenberg(const Presentation& a, const GreenbergContext& ctx, const GreenbergTables& tables,
                         const std::vector<FiniteAlgebra>& rings, const AdjunctionOptions& options = {});

}  // namespace wittjet
