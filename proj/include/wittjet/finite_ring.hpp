#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittjet/number_ring.hpp"

namespace wittjet {

inline constexpr std::uint64_t kDefaultSizeCap = 1'000'000;

/// Tower of monic extensions over Z/m. An element is its index: the
/// little-endian base-m digits of its coordinates, lowest level first.
class FiniteRing {
 public:
  using Element = std::uint32_t;
  /// One level of the tower: monic polynomial whose coefficients are indices
  /// into the ring built so far, constant term first.
  using Level = std::vector<Element>;

  FiniteRing(unsigned m, std::vector<Level> tower, std::string name = {});

  static std::shared_ptr<const FiniteRing> from_json(const nlohmann::json& descriptor);
  nlohmann::json descriptor() const;

  const std::string& name() const { return name_; }
  unsigned modulus() const { return m_; }
  unsigned characteristic() const { return m_; }
  std::uint64_t size() const { return size_; }
  std::size_t digit_count() const { return digits_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(const Integer& value) const;
  Element from_base(const NumberRingElement& value) const;
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  bool equal(Element a, Element b) const { return a == b; }

  std::vector<Element> enumerate_elements(std::uint64_t cap = kDefaultSizeCap) const;
  std::vector<unsigned> digits(Element a) const;
  Element from_digits(const std::vector<unsigned>& digits) const;

  bool is_field() const;
  bool is_reduced() const;
  /// x -> x^p is bijective; requires prime characteristic.
  bool is_perfect() const;

  std::string format(Element a) const;
  nlohmann::json element_to_json(Element a) const;
  Element element_from_json(const nlohmann::json& value) const;

 private:
  Element mul_level(std::size_t level, Element a, Element b) const;
  Element add_level(Element a, Element b, bool subtract) const;

  unsigned m_;
  std::vector<Level> tower_;
  std::vector<std::uint64_t> level_size_;  // size of the ring after each level
  std::vector<std::size_t> level_degree_;
  std::uint64_t size_ = 1;
  std::size_t digits_ = 1;
  std::string name_;
  std::vector<Element> add_table_;
  std::vector<Element> mul_table_;
};

using FiniteRingPtr = std::shared_ptr<const FiniteRing>;

/// F2, F3, F5, Z4, Z8, Z9, F4, F8, F9, F2eps = F2[e]/(e^2), F4eps = F4[e]/(e^2).
FiniteRingPtr named_finite_ring(const std::string& name);
std::vector<std::string> named_finite_ring_names();
/// A name from the list above, or an inline JSON descriptor.
FiniteRingPtr parse_finite_ring(const std::string& text);

/// A finite ring together with an O-algebra structure t -> tau.
class FiniteAlgebra {
 public:
  using Element = FiniteRing::Element;

  FiniteAlgebra(FiniteRingPtr ring, TriplePtr triple, Element tau);
  /// Chooses the first root of g in the ring, preferring one that kills pi.
  /// Throws NoStructureMap if g has no root.
  static FiniteAlgebra over(FiniteRingPtr ring, TriplePtr triple);

  const FiniteRing& ring() const { return *ring_; }
  const FiniteRingPtr& ring_ptr() const { return ring_; }
  const BaseTriple& triple() const { return *triple_; }
  const TriplePtr& triple_ptr() const { return triple_; }
  Element tau() const { return tau_; }
  const std::string& name() const { return ring_->name(); }
  std::uint64_t size() const { return ring_->size(); }
  /// Image of pi is zero, i.e. B is an O/pi-algebra.
  bool kills_pi() const;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(const Integer& value) const { return ring_->from_int(value); }
  Element from_base(const NumberRingElement& value) const;
  Element add(Element a, Element b) const { return ring_->add(a, b); }
  Element sub(Element a, Element b) const { return ring_->sub(a, b); }
  Element neg(Element a) const { return ring_->neg(a); }
  Element mul(Element a, Element b) const { return ring_->mul(a, b); }
  bool equal(Element a, Element b) const { return a == b; }
  std::string format(Element a) const { return ring_->format(a); }

 private:
  FiniteRingPtr ring_;
  TriplePtr triple_;
  Element tau_;
};

}  // namespace wittjet
