#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittjet/errors.hpp"
#include "wittjet/integer.hpp"

namespace wittjet {

/// Element of O = Z[t]/(g) in the power basis 1, t, ..., t^{d-1}.
struct NumberRingElement {
  std::vector<Integer> coeffs;

  bool operator==(const NumberRingElement& other) const = default;
};

/// Row-major square integer matrix.
using IntMatrix = std::vector<std::vector<Integer>>;

Integer determinant(const IntMatrix& m);
IntMatrix adjugate(const IntMatrix& m);

/// Full-rank sublattice of Z^d, kept as an upper-triangular column basis so that
/// every residue class has the canonical representative 0 <= v_i < h_ii.
class Lattice {
 public:
  /// Columns of `generators` span the lattice.
  explicit Lattice(const IntMatrix& generators);

  std::vector<Integer> reduce(std::vector<Integer> v) const;
  bool contains(const std::vector<Integer>& v) const;
  const Integer& index() const { return index_; }
  const IntMatrix& basis() const { return basis_; }

  /// All canonical representatives, in lexicographic digit order.
  std::vector<std::vector<Integer>> residues(std::uint64_t cap) const;

 private:
  IntMatrix basis_;
  Integer index_;
};

/// The monogenic ring O = Z[t]/(g), g monic.
class NumberRing {
 public:
  using Element = NumberRingElement;

  /// `modulus` lists g from the constant coefficient up to the leading 1.
  explicit NumberRing(std::vector<Integer> modulus);

  std::size_t degree() const { return degree_; }
  const std::vector<Integer>& modulus() const { return modulus_; }

  Element zero() const;
  Element one() const;
  Element generator() const;
  Element from_int(const Integer& value) const;
  Element from_base(const Element& value) const { return value; }
  /// Accepts any coefficient list and reduces it modulo g.
  Element make(std::vector<Integer> coeffs) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Integer& k, const Element& a) const;
  Element pow(const Element& a, unsigned long exponent) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const;

  /// Column j holds the coordinates of a * t^j.
  IntMatrix multiplication_matrix(const Element& a) const;

  std::string format(const Element& a) const;

 private:
  std::vector<Integer> modulus_;
  std::size_t degree_;
};

/// The data (O, pi, q) with the derived p, h, e and exact pi-division.
class BaseTriple {
 public:
  /// Throws NotPrimePower, WrongResidueSize, QuotientNotField or PiNotDividingP.
  static std::shared_ptr<const BaseTriple> validate(std::vector<Integer> g,
                                                    std::vector<Integer> pi,
                                                    const Integer& q,
                                                    std::string name = {});

  const NumberRing& ring() const { return *ring_; }
  const std::shared_ptr<const NumberRing>& ring_ptr() const { return ring_; }
  const NumberRingElement& pi() const { return pi_; }
  unsigned long q() const { return q_; }
  unsigned long p() const { return p_; }
  unsigned h() const { return h_; }
  unsigned e() const { return e_; }
  const IntMatrix& mult_by_pi() const { return mult_by_pi_; }
  const std::string& name() const { return name_; }

  std::optional<NumberRingElement> try_div_pi(const NumberRingElement& x) const;
  /// Returns y with pi * y = x; throws NotDivisible otherwise.
  NumberRingElement exact_div_pi(const NumberRingElement& x) const;
  /// delta(x) = (x - x^q) / pi.
  NumberRingElement delta(const NumberRingElement& x) const;
  NumberRingElement pi_power(unsigned k) const;

  Lattice pi_power_lattice(unsigned k) const;
  /// Canonical representatives of O / pi O (q of them).
  std::vector<NumberRingElement> residue_field_elements() const;

  /// Stable textual key "g=[..];pi=[..];q=..".
  std::string canonical_key() const;

 private:
  BaseTriple() = default;

  std::shared_ptr<const NumberRing> ring_;
  NumberRingElement pi_;
  unsigned long q_ = 0;
  unsigned long p_ = 0;
  unsigned h_ = 0;
  unsigned e_ = 0;
  IntMatrix mult_by_pi_;
  IntMatrix adjugate_;
  Integer det_;
  std::string name_;
};

using TriplePtr = std::shared_ptr<const BaseTriple>;

/// Built-in triples: Z2 = (Z,2,2), Z3 = (Z,3,3), Z5 = (Z,5,5),
/// GAUSS = (Z[i],1+i,2) with t = 1+i, EISEN = (Z[w],2,4).
TriplePtr named_triple(const std::string& name);
std::vector<std::string> named_triple_names();

/// O itself or the quotient O / pi^k O, acting as a coefficient ring.
class QuotientRing {
 public:
  using Element = NumberRingElement;

  QuotientRing(TriplePtr triple, std::optional<unsigned> pi_power);

  const BaseTriple& triple() const { return *triple_; }
  const TriplePtr& triple_ptr() const { return triple_; }
  std::optional<unsigned> pi_power() const { return pi_power_; }

  Element reduce(Element a) const;
  Element zero() const;
  Element one() const;
  Element from_int(const Integer& value) const;
  Element from_base(const Element& value) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  bool equal(const Element& a, const Element& b) const;

 private:
  TriplePtr triple_;
  std::optional<unsigned> pi_power_;
  std::shared_ptr<const Lattice> lattice_;
};

}  // namespace wittjet
