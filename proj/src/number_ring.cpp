#include "wittjet/number_ring.hpp"

#include <sstream>
#include <utility>

namespace wittjet {

namespace {

std::string format_vector(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + "]";
}

}  // namespace

Integer determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix adj(n, std::vector<Integer>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj[i][j] = (-1)^{i+j} * det(m without row j and column i)
      IntMatrix minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Integer> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Integer det = determinant(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? det : Integer(-det);
    }
  }
  return adj;
}

// ---------------------------------------------------------------------------

Lattice::Lattice(const IntMatrix& generators) : basis_(generators) {
  const std::size_t d = basis_.size();
  auto col_axpy = [&](std::size_t dst, const Integer& k, std::size_t src) {
    for (std::size_t r = 0; r < d; ++r) basis_[r][dst] -= k * basis_[r][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < d; ++r) std::swap(basis_[r][a], basis_[r][b]);
  };
  for (std::size_t ii = d; ii-- > 0;) {
    for (std::size_t j = 0; j < ii; ++j) {
      while (basis_[ii][j] != 0) {
        Integer k = floor_div(basis_[ii][ii], basis_[ii][j]);
        col_axpy(ii, k, j);
        col_swap(ii, j);
      }
    }
    if (basis_[ii][ii] == 0) {
      throw Error(ErrorKind::InvalidArgument, "lattice generators are not of full rank");
    }
    if (basis_[ii][ii] < 0) {
      for (std::size_t r = 0; r < d; ++r) basis_[r][ii] = -basis_[r][ii];
    }
  }
  index_ = 1;
  for (std::size_t i = 0; i < d; ++i) index_ *= basis_[i][i];
}

std::vector<Integer> Lattice::reduce(std::vector<Integer> v) const {
  const std::size_t d = basis_.size();
  for (std::size_t i = d; i-- > 0;) {
    Integer k = floor_div(v[i], basis_[i][i]);
    if (k == 0) continue;
    for (std::size_t r = 0; r <= i; ++r) v[r] -= k * basis_[r][i];
  }
  return v;
}

bool Lattice::contains(const std::vector<Integer>& v) const {
  for (const auto& x : reduce(v)) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> Lattice::residues(std::uint64_t cap) const {
  if (index_ > Integer(std::to_string(cap))) {
    throw Error(ErrorKind::SizeCap, "residue enumeration exceeds cap " + std::to_string(cap));
  }
  const std::size_t d = basis_.size();
  std::vector<Integer> current(d, 0);
  std::vector<std::vector<Integer>> out;
  while (true) {
    out.push_back(current);
    std::size_t i = 0;
    while (i < d) {
      current[i] += 1;
      if (current[i] < basis_[i][i]) break;
      current[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

NumberRing::NumberRing(std::vector<Integer> modulus) : modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "g must be monic of degree >= 1");
  }
  degree_ = modulus_.size() - 1;
}

NumberRing::Element NumberRing::zero() const { return Element{std::vector<Integer>(degree_, 0)}; }

NumberRing::Element NumberRing::one() const { return from_int(1); }

NumberRing::Element NumberRing::generator() const {
  std::vector<Integer> c(degree_ + 1, 0);
  c[1] = 1;
  return make(std::move(c));
}

NumberRing::Element NumberRing::from_int(const Integer& value) const {
  Element e = zero();
  e.coeffs[0] = value;
  return e;
}

NumberRing::Element NumberRing::make(std::vector<Integer> c) const {
  for (std::size_t k = c.size(); k-- > degree_;) {
    if (c[k] == 0) continue;
    const Integer lead = c[k];
    for (std::size_t j = 0; j < degree_; ++j) c[k - degree_ + j] -= lead * modulus_[j];
    c[k] = 0;
  }
  c.resize(degree_, 0);
  return Element{std::move(c)};
}

NumberRing::Element NumberRing::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < degree_; ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

NumberRing::Element NumberRing::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < degree_; ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

NumberRing::Element NumberRing::neg(const Element& a) const {
  Element r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

NumberRing::Element NumberRing::mul(const Element& a, const Element& b) const {
  if (degree_ == 1) return Element{{a.coeffs[0] * b.coeffs[0]}};
  std::vector<Integer> prod(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return make(std::move(prod));
}

NumberRing::Element NumberRing::scale(const Integer& k, const Element& a) const {
  Element r = a;
  for (auto& c : r.coeffs) c *= k;
  return r;
}

NumberRing::Element NumberRing::pow(const Element& a, unsigned long exponent) const {
  Element result = one();
  Element base = a;
  while (exponent) {
    if (exponent & 1UL) result = mul(result, base);
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  return result;
}

bool NumberRing::is_zero(const Element& a) const {
  for (const auto& c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

IntMatrix NumberRing::multiplication_matrix(const Element& a) const {
  IntMatrix m(degree_, std::vector<Integer>(degree_));
  Element basis = one();
  const Element t = generator();
  for (std::size_t j = 0; j < degree_; ++j) {
    Element col = mul(a, basis);
    for (std::size_t r = 0; r < degree_; ++r) m[r][j] = col.coeffs[r];
    basis = mul(basis, t);
  }
  return m;
}

std::string NumberRing::format(const Element& a) const {
  if (degree_ == 1) return a.coeffs[0].get_str();
  return format_vector(a.coeffs);
}

// ---------------------------------------------------------------------------

TriplePtr BaseTriple::validate(std::vector<Integer> g, std::vector<Integer> pi,
                               const Integer& q, std::string name) {
  auto triple = std::shared_ptr<BaseTriple>(new BaseTriple());
  triple->ring_ = std::make_shared<const NumberRing>(std::move(g));
  const NumberRing& ring = *triple->ring_;
  triple->pi_ = ring.make(std::move(pi));
  triple->name_ = std::move(name);
  if (ring.is_zero(triple->pi_)) throw Error(ErrorKind::InvalidArgument, "pi must be nonzero");

  if (q < 2 || !q.fits_ulong_p()) throw Error(ErrorKind::NotPrimePower, "q = " + q.get_str());
  const unsigned long qv = q.get_ui();
  unsigned long p = 2;
  while (p * p <= qv && qv % p != 0) ++p;
  if (qv % p != 0) p = qv;
  unsigned long rest = qv;
  unsigned h = 0;
  while (rest % p == 0) {
    rest /= p;
    ++h;
  }
  if (rest != 1) throw Error(ErrorKind::NotPrimePower, "q = " + q.get_str());
  triple->q_ = qv;
  triple->p_ = p;
  triple->h_ = h;

  triple->mult_by_pi_ = ring.multiplication_matrix(triple->pi_);
  triple->det_ = determinant(triple->mult_by_pi_);
  if (abs(triple->det_) != q) {
    throw Error(ErrorKind::WrongResidueSize,
                "|O/pi O| = " + Integer(abs(triple->det_)).get_str() + " but q = " + q.get_str());
  }
  triple->adjugate_ = adjugate(triple->mult_by_pi_);

  const Lattice lattice(triple->mult_by_pi_);
  const auto residues = lattice.residues(1u << 20);
  for (std::size_t i = 1; i < residues.size(); ++i) {
    for (std::size_t j = i; j < residues.size(); ++j) {
      auto prod = ring.mul(NumberRingElement{residues[i]}, NumberRingElement{residues[j]});
      if (lattice.contains(prod.coeffs)) {
        throw Error(ErrorKind::QuotientNotField,
                    "zero divisors " + ring.format(NumberRingElement{residues[i]}) + " * " +
                        ring.format(NumberRingElement{residues[j]}) + " in O/pi");
      }
    }
  }

  NumberRingElement x = ring.from_int(Integer(static_cast<unsigned long>(p)));
  unsigned e = 0;
  while (e < 256) {
    auto y = triple->try_div_pi(x);
    if (!y) break;
    x = std::move(*y);
    ++e;
  }
  if (e == 0) throw Error(ErrorKind::PiNotDividingP, "pi does not divide p = " + std::to_string(p));
  triple->e_ = e;
  return triple;
}

std::optional<NumberRingElement> BaseTriple::try_div_pi(const NumberRingElement& x) const {
  const std::size_t d = ring_->degree();
  NumberRingElement y{std::vector<Integer>(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < d; ++j) acc += adjugate_[i][j] * x.coeffs[j];
    if (!mpz_divisible_p(acc.get_mpz_t(), det_.get_mpz_t())) return std::nullopt;
    mpz_divexact(y.coeffs[i].get_mpz_t(), acc.get_mpz_t(), det_.get_mpz_t());
  }
  return y;
}

NumberRingElement BaseTriple::exact_div_pi(const NumberRingElement& x) const {
  auto y = try_div_pi(x);
  if (!y) {
    throw Error(ErrorKind::NotDivisible,
                ring_->format(x) + " is not divisible by pi = " + ring_->format(pi_));
  }
  return std::move(*y);
}

NumberRingElement BaseTriple::delta(const NumberRingElement& x) const {
  return exact_div_pi(ring_->sub(x, ring_->pow(x, q_)));
}

NumberRingElement BaseTriple::pi_power(unsigned k) const { return ring_->pow(pi_, k); }

Lattice BaseTriple::pi_power_lattice(unsigned k) const {
  return Lattice(ring_->multiplication_matrix(pi_power(k)));
}

std::vector<NumberRingElement> BaseTriple::residue_field_elements() const {
  std::vector<NumberRingElement> out;
  for (auto& r : pi_power_lattice(1).residues(1u << 20)) out.push_back(NumberRingElement{std::move(r)});
  return out;
}

std::string BaseTriple::canonical_key() const {
  return "g=" + format_vector(ring_->modulus()) + ";pi=" + format_vector(pi_.coeffs) +
         ";q=" + std::to_string(q_);
}

TriplePtr named_triple(const std::string& name) {
  auto ints = [](std::initializer_list<long> xs) {
    std::vector<Integer> v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  if (name == "Z2") return BaseTriple::validate(ints({0, 1}), ints({2}), 2, name);
  if (name == "Z3") return BaseTriple::validate(ints({0, 1}), ints({3}), 3, name);
  if (name == "Z5") return BaseTriple::validate(ints({0, 1}), ints({5}), 5, name);
  if (name == "GAUSS") return BaseTriple::validate(ints({2, -2, 1}), ints({0, 1}), 2, name);
  if (name == "EISEN") return BaseTriple::validate(ints({1, 1, 1}), ints({2, 0}), 4, name);
  throw Error(ErrorKind::InvalidArgument, "unknown triple '" + name + "'");
}

std::vector<std::string> named_triple_names() { return {"Z2", "Z3", "Z5", "GAUSS", "EISEN"}; }

// ---------------------------------------------------------------------------

QuotientRing::QuotientRing(TriplePtr triple, std::optional<unsigned> pi_power)
    : triple_(std::move(triple)), pi_power_(pi_power) {
  if (pi_power_) lattice_ = std::make_shared<const Lattice>(triple_->pi_power_lattice(*pi_power_));
}

QuotientRing::Element QuotientRing::reduce(Element a) const {
  if (!lattice_) return a;
  return Element{lattice_->reduce(std::move(a.coeffs))};
}

QuotientRing::Element QuotientRing::zero() const { return triple_->ring().zero(); }
QuotientRing::Element QuotientRing::one() const { return reduce(triple_->ring().one()); }
QuotientRing::Element QuotientRing::from_int(const Integer& value) const {
  return reduce(triple_->ring().from_int(value));
}
QuotientRing::Element QuotientRing::from_base(const Element& value) const { return reduce(value); }
QuotientRing::Element QuotientRing::add(const Element& a, const Element& b) const {
  return reduce(triple_->ring().add(a, b));
}
QuotientRing::Element QuotientRing::sub(const Element& a, const Element& b) const {
  return reduce(triple_->ring().sub(a, b));
}
QuotientRing::Element QuotientRing::neg(const Element& a) const {
  return reduce(triple_->ring().neg(a));
}
QuotientRing::Element QuotientRing::mul(const Element& a, const Element& b) const {
  return reduce(triple_->ring().mul(a, b));
}
bool QuotientRing::equal(const Element& a, const Element& b) const {
  return reduce(a) == reduce(b);
}

}  // namespace wittjet
