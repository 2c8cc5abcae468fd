#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittjet/multipoly.hpp"
#include "wittjet/ring.hpp"

namespace wittjet {

inline JetVar witt_x(unsigned i) { return JetVar{"X", i, 0}; }
inline JetVar witt_y(unsigned i) { return JetVar{"Y", i, 0}; }

/// w_i = X_0^{q^i} + pi X_1^{q^{i-1}} + ... + pi^i X_i in the given family.
MultiPoly witt_polynomial(const BaseTriple& triple, unsigned i, const std::string& family = "X");
/// w_i evaluated at the components `x` (only x_0..x_i are used).
MultiPoly ghost_component(const BaseTriple& triple, unsigned i, const std::vector<MultiPoly>& x);
/// Solves w_i(c) = targets_i for i = 0..n by exact pi-division.
std::vector<MultiPoly> ghost_invert(const BaseTriple& triple, const std::vector<MultiPoly>& targets);
/// Components of the image of lambda under O -> W_n(O), i.e. ghost (lambda, ..., lambda).
std::vector<NumberRingElement> structure_components(const BaseTriple& triple,
                                                    const NumberRingElement& lambda, unsigned n);

/// Universal polynomials of W_n over O. Vectors have n+1 components.
struct WittTable {
  TriplePtr triple;
  unsigned n = 0;
  std::vector<MultiPoly> sum;
  std::vector<MultiPoly> product;
  std::vector<MultiPoly> negation;
  std::vector<MultiPoly> frobenius;  // n polynomials, W_n -> W_{n-1}
  std::vector<MultiPoly> delta;      // n polynomials, F(x) = x^q + pi Delta(x)
  std::vector<std::vector<MultiPoly>> scalar;  // scalar[j]: multiplication by t^j
};
using WittTablePtr = std::shared_ptr<const WittTable>;

struct TableOptions {
  /// Largest allowed q^n.
  unsigned long cap = 64;
  std::optional<std::filesystem::path> cache_dir;
  bool trust_cache = false;
};

/// Builds (or loads from the cache) and verifies the table. Throws FeasibilityCap
/// when q^n exceeds the cap and NotDivisible on an integrality failure.
WittTablePtr build_witt_table(TriplePtr triple, unsigned n, const TableOptions& options = {});
WittTable compute_witt_table(TriplePtr triple, unsigned n);
/// First failed ghost identity or congruence, if any.
std::optional<std::string> verify_witt_table(const WittTable& table);

std::string table_hash(const BaseTriple& triple, unsigned n);
nlohmann::json witt_table_to_json(const WittTable& table);
/// Rebuilds the triple from the header; does not verify.
WittTable witt_table_from_json(const nlohmann::json& j);

/// W_L(B) for a coefficient ring B, using a table of level >= L. Operations accept
/// vectors of any length k <= L+1 and use the first k universal polynomials.
template <CommutativeRing Base>
class WittRing {
 public:
  using BaseElement = typename Base::Element;
  using Element = std::vector<BaseElement>;

  WittRing(Base base, WittTablePtr table, unsigned level);

  const Base& base() const { return base_; }
  const WittTable& table() const { return *table_; }
  const WittTablePtr& table_ptr() const { return table_; }
  const BaseTriple& triple() const { return *table_->triple; }
  unsigned level() const { return level_; }
  std::size_t length() const { return level_ + 1; }

  Element zero() const { return Element(length(), base_.zero()); }
  Element one() const { return teichmuller(base_.one()); }
  Element from_int(const Integer& n) const;
  Element from_base(const NumberRingElement& lambda) const;
  Element add(const Element& x, const Element& y) const { return binary(sum_, x, y); }
  Element mul(const Element& x, const Element& y) const { return binary(prod_, x, y); }
  Element neg(const Element& x) const { return unary(neg_, x, x.size()); }
  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }
  bool equal(const Element& x, const Element& y) const;

  std::vector<BaseElement> ghost(const Element& x) const;
  /// Length k -> k-1.
  Element frobenius(const Element& x) const { return unary(frob_, x, x.size() - 1); }
  /// Length k -> k+1.
  Element verschiebung(const Element& x) const;
  Element teichmuller(const BaseElement& b, std::size_t len = 0) const;
  Element truncate(const Element& x, std::size_t len) const;
  /// Length k -> k-1.
  Element delta(const Element& x) const { return unary(delta_, x, x.size() - 1); }
  /// lambda * x through the structure map.
  Element scalar(const NumberRingElement& lambda, const Element& x) const;
  /// lambda * x through the scalar-action polynomials of the basis t^j.
  Element scalar_by_table(const NumberRingElement& lambda, const Element& x) const;

 private:
  using Compiled = CompiledPoly<Base>;

  Element binary(const std::vector<Compiled>& polys, const Element& x, const Element& y) const;
  Element unary(const std::vector<Compiled>& polys, const Element& x, std::size_t out_len) const;

  Base base_;
  WittTablePtr table_;
  unsigned level_;
  std::vector<Compiled> sum_, prod_, neg_, frob_, delta_;
  std::vector<std::vector<Compiled>> scalar_;
};

// ---------------------------------------------------------------------------

template <CommutativeRing Base>
WittRing<Base>::WittRing(Base base, WittTablePtr table, unsigned level)
    : base_(std::move(base)), table_(std::move(table)), level_(level) {
  if (level_ > table_->n) {
    throw Error(ErrorKind::InvalidArgument, "Witt table of level " + std::to_string(table_->n) +
                                                " cannot serve level " + std::to_string(level_));
  }
  std::vector<JetVar> xy, x;
  for (unsigned i = 0; i <= level_; ++i) x.push_back(witt_x(i));
  xy = x;
  for (unsigned i = 0; i <= level_; ++i) xy.push_back(witt_y(i));
  for (unsigned i = 0; i <= level_; ++i) {
    sum_.emplace_back(base_, table_->sum[i], xy);
    prod_.emplace_back(base_, table_->product[i], xy);
    neg_.emplace_back(base_, table_->negation[i], x);
  }
  for (unsigned i = 0; i < level_; ++i) {
    frob_.emplace_back(base_, table_->frobenius[i], x);
    delta_.emplace_back(base_, table_->delta[i], x);
  }
  for (const auto& polys : table_->scalar) {
    std::vector<Compiled> compiled;
    for (unsigned i = 0; i <= level_; ++i) compiled.emplace_back(base_, polys[i], x);
    scalar_.push_back(std::move(compiled));
  }
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::binary(const std::vector<Compiled>& polys,
                                                        const Element& x, const Element& y) const {
  const std::size_t k = x.size();
  if (y.size() != k || k > length()) {
    throw Error(ErrorKind::InvalidArgument, "Witt vector length mismatch");
  }
  // Slots are X_0..X_L then Y_0..Y_L; unused trailing slots stay zero.
  std::vector<BaseElement> args(2 * length(), base_.zero());
  for (std::size_t i = 0; i < k; ++i) {
    args[i] = x[i];
    args[length() + i] = y[i];
  }
  Element out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = polys[i](base_, args);
  return out;
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::unary(const std::vector<Compiled>& polys,
                                                       const Element& x, std::size_t out_len) const {
  if (x.size() > length() || out_len > polys.size()) {
    throw Error(ErrorKind::InvalidArgument, "Witt vector length out of range");
  }
  std::vector<BaseElement> args(length(), base_.zero());
  for (std::size_t i = 0; i < x.size(); ++i) args[i] = x[i];
  Element out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = polys[i](base_, args);
  return out;
}

template <CommutativeRing Base>
bool WittRing<Base>::equal(const Element& x, const Element& y) const {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!base_.equal(x[i], y[i])) return false;
  }
  return true;
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::from_int(const Integer& n) const {
  return from_base(triple().ring().from_int(n));
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::from_base(const NumberRingElement& lambda) const {
  auto comps = structure_components(triple(), lambda, level_);
  Element out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(map_coefficient(base_, c));
  return out;
}

template <CommutativeRing Base>
std::vector<typename WittRing<Base>::BaseElement> WittRing<Base>::ghost(const Element& x) const {
  const BaseElement pi = map_coefficient(base_, triple().pi());
  const unsigned long q = triple().q();
  std::vector<BaseElement> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    BaseElement total = base_.zero();
    BaseElement pi_power = base_.one();
    for (std::size_t k = 0; k <= i; ++k) {
      BaseElement term = x[k];
      for (std::size_t r = k; r < i; ++r) term = power(base_, term, q);
      total = base_.add(total, base_.mul(pi_power, term));
      pi_power = base_.mul(pi_power, pi);
    }
    out.push_back(total);
  }
  return out;
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::verschiebung(const Element& x) const {
  if (x.size() + 1 > length()) throw Error(ErrorKind::InvalidArgument, "Verschiebung exceeds level");
  Element out;
  out.reserve(x.size() + 1);
  out.push_back(base_.zero());
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::teichmuller(const BaseElement& b, std::size_t len) const {
  Element out(len == 0 ? length() : len, base_.zero());
  out[0] = b;
  return out;
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::truncate(const Element& x, std::size_t len) const {
  if (len > x.size()) throw Error(ErrorKind::InvalidArgument, "cannot truncate to a longer vector");
  return Element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(len));
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::scalar(const NumberRingElement& lambda,
                                                        const Element& x) const {
  return mul(truncate(from_base(lambda), x.size()), x);
}

template <CommutativeRing Base>
typename WittRing<Base>::Element WittRing<Base>::scalar_by_table(const NumberRingElement& lambda,
                                                                 const Element& x) const {
  Element total(x.size(), base_.zero());
  for (std::size_t j = 0; j < scalar_.size(); ++j) {
    if (lambda.coeffs[j] == 0) continue;
    Element tx = unary(scalar_[j], x, x.size());
    total = add(total, mul(truncate(from_int(lambda.coeffs[j]), x.size()), tx));
  }
  return total;
}

}  // namespace wittjet
