#pragma once

#include <concepts>

#include "wittjet/integer.hpp"
#include "wittjet/number_ring.hpp"

namespace wittjet {

/// A commutative ring that also receives the structure map from the base O.
template <class R>
concept CommutativeRing = requires(const R& r, const typename R::Element& a,
                                   const typename R::Element& b, const Integer& n,
                                   const NumberRingElement& c) {
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.add(a, b) } -> std::convertible_to<typename R::Element>;
  { r.sub(a, b) } -> std::convertible_to<typename R::Element>;
  { r.neg(a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.from_int(n) } -> std::convertible_to<typename R::Element>;
  { r.from_base(c) } -> std::convertible_to<typename R::Element>;
};

template <CommutativeRing R>
typename R::Element power(const R& ring, typename R::Element base, unsigned long exponent) {
  typename R::Element result = ring.one();
  while (exponent) {
    if (exponent & 1UL) result = ring.mul(result, base);
    exponent >>= 1;
    if (exponent) base = ring.mul(base, base);
  }
  return result;
}

/// Image of an O-coefficient; rational integers avoid the structure map.
template <CommutativeRing R>
typename R::Element map_coefficient(const R& ring, const NumberRingElement& c) {
  if (c.coeffs.size() == 1) return ring.from_int(c.coeffs[0]);
  bool integral = true;
  for (std::size_t i = 1; i < c.coeffs.size(); ++i) integral = integral && c.coeffs[i] == 0;
  if (integral) return ring.from_int(c.coeffs[0]);
  return ring.from_base(c);
}

template <CommutativeRing R>
bool is_zero(const R& ring, const typename R::Element& a) {
  return ring.equal(a, ring.zero());
}

}  // namespace wittjet
