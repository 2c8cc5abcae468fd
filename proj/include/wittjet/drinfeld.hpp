#pragma once

#include <algorithm>
#include <map>
#include <memory>

#include "wittjet/finite_ring.hpp"
#include "wittjet/report.hpp"
#include "wittjet/witt.hpp"

namespace wittjet {

/// u_n : W_{p,p,n}(B) -> W_{pi',q',n'}(B) with n' = (n+1)e - 1, for B an
/// O'/pi'-algebra of characteristic p. Computed from x = sum_i V^i[x_i] with
/// u([b]) = [b] and u(V y) = (p/pi') V(u(F^{r-1} y)), where q' = p^r.
template <CommutativeRing Base>
class DrinfeldMap {
 public:
  using Element = typename Base::Element;
  using Vector = std::vector<Element>;

  /// `source` carries the p-typical structure, `target` the O'-structure, on the
  /// same underlying ring.
  DrinfeldMap(Base source, WittTablePtr source_table, Base target, WittTablePtr target_table);

  const WittRing<Base>& source() const { return source_; }
  const WittRing<Base>& target() const { return target_; }
  unsigned r() const { return r_; }
  const NumberRingElement& ratio() const { return ratio_; }
  unsigned e() const { return target_.triple().e(); }
  /// Target length for a source vector of length k.
  std::size_t image_length(std::size_t k) const { return k * e(); }

  Vector operator()(const Vector& x) const;

 private:
  Vector teichmuller_part(std::size_t i, const Element& b, std::size_t len) const;

  WittRing<Base> source_;
  WittRing<Base> target_;
  unsigned r_ = 1;
  NumberRingElement ratio_;  // p / pi' in O'
};

template <CommutativeRing Base>
DrinfeldMap<Base>::DrinfeldMap(Base source, WittTablePtr source_table, Base target,
                               WittTablePtr target_table)
    : source_(std::move(source), source_table, source_table->n),
      target_(std::move(target), target_table, target_table->n) {
  const BaseTriple& s = source_.triple();
  const BaseTriple& t = target_.triple();
  if (s.ring().degree() != 1 || s.q() != s.p() || s.pi() != s.ring().from_int(Integer(static_cast<unsigned long>(s.p())))) {
    throw Error(ErrorKind::InvalidArgument, "Drinfeld source must be the p-typical triple (Z,p,p)");
  }
  if (t.p() != s.p()) throw Error(ErrorKind::InvalidArgument, "source and target residue characteristics differ");
  r_ = t.h();
  ratio_ = t.exact_div_pi(t.ring().from_int(Integer(static_cast<unsigned long>(t.p()))));
  const auto& b = source_.base();
  if (!b.equal(b.from_int(Integer(static_cast<unsigned long>(s.p()))), b.zero())) {
    throw Error(ErrorKind::NotCharP, "coefficient ring does not have characteristic p");
  }
  if (!target_.base().equal(map_coefficient(target_.base(), t.pi()), target_.base().zero())) {
    throw Error(ErrorKind::NotCharP, "pi' does not vanish in the coefficient ring");
  }
  if (image_length(source_.length()) > target_.length()) {
    throw Error(ErrorKind::InvalidArgument, "target table level too small for the source level");
  }
}

template <CommutativeRing Base>
typename DrinfeldMap<Base>::Vector DrinfeldMap<Base>::teichmuller_part(std::size_t i, const Element& b,
                                                                       std::size_t len) const {
  // u(V^i [b]) truncated to `len` components.
  if (i == 0) return target_.teichmuller(b, len);
  if (len == 1) return target_.teichmuller(target_.base().zero(), 1);
  const std::size_t s = std::min<std::size_t>(r_ - 1, i - 1);
  Element c = power(source_.base(), b, static_cast<unsigned long>(
                                           ipow(Integer(static_cast<unsigned long>(source_.triple().p())),
                                                static_cast<unsigned long>(r_ - 1 - s)).get_ui()));
  Vector inner = teichmuller_part(i - 1 - s, c, len - 1);
  if (s > 0) {
    Integer ps = ipow(Integer(static_cast<unsigned long>(source_.triple().p())), static_cast<unsigned long>(s));
    inner = target_.mul(target_.truncate(target_.from_int(ps), inner.size()), inner);
  }
  return target_.scalar(ratio_, target_.verschiebung(inner));
}

template <CommutativeRing Base>
typename DrinfeldMap<Base>::Vector DrinfeldMap<Base>::operator()(const Vector& x) const {
  const std::size_t len = image_length(x.size());
  Vector total(len, target_.base().zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (target_.base().equal(x[i], target_.base().zero())) continue;
    total = target_.add(total, teichmuller_part(i, x[i], len));
  }
  return total;
}

/// Exhaustive check of the three defining conditions, of additivity and
/// multiplicativity, and of compatibility with truncation, for source lengths
/// 1..max_length. Records bijectivity per length in the details.
Report check_drinfeld(const DrinfeldMap<FiniteAlgebra>& u, std::size_t max_length);

}  // namespace wittjet
