#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittjet/finite_ring.hpp"
#include "wittjet/kernels.hpp"
#include "wittjet/multipoly.hpp"
#include "wittjet/presentation.hpp"
#include "wittjet/prolong.hpp"
#include "wittjet/report.hpp"
#include "wittjet/witt.hpp"

namespace wittjet {

inline JetVar jet_t(unsigned k) { return JetVar{"T", 0, k}; }

/// P_0..P_n in O[T, T', ..., T^(n)] with P_i = T^(i) + S_{i-1}.
struct PFamily {
  TriplePtr triple;
  unsigned n = 0;
  std::vector<MultiPoly> P;
  std::vector<MultiPoly> S;  // S[i] = S_i, i = 0..n-1
};

/// Runs the recursion P_k = P_{k-1}^delta + sum_i sum_j c_{i,j} P_i^{q(q^{k-1-i}-j)} (P_i^delta)^j
/// with c_{i,j} = pi^{i+j-k} binom(q^{k-1-i}, j). Negative pi-powers are exact
/// divisions and throw NotDivisible if one fails. Throws FeasibilityCap for q^n > cap.
PFamily p_polynomials(TriplePtr triple, unsigned n, unsigned long cap = 64);
/// Shape of P_0, P_1, S_i, and sum_i pi^i P_i^{q^{k-i}} = phi^k(T) for every k.
std::optional<std::string> verify_p_family(const PFamily& family);

/// a, delta a, ..., delta^n a.
std::vector<MultiPoly> delta_iterates(const BaseTriple& triple, const MultiPoly& a, unsigned n);
/// P_i(a) for i = 0..n, i.e. the Witt components of exp_n(a).
std::vector<MultiPoly> exp_n(const PFamily& family, const MultiPoly& a, unsigned n);

/// The base sequence O/pi^k -> O/pi^{k-1} -> ... of length n+1, or the constant one.
BaseSequence default_base_sequence(const Presentation& a, unsigned n);

/// J_nA = R_n[x, ..., x^(n)]/(f, delta f, ..., delta^n f); relations are listed
/// level by level, delta^i f_j at index i * #f + j.
Presentation jet_algebra(const Presentation& a, unsigned n, const BaseSequence* base = nullptr);

/// J_nA rewritten in the coordinates y^(i) = P_i(x), with both substitutions.
struct AltPresentation {
  Presentation presentation;
  std::map<JetVar, MultiPoly> forward;  // y^(i) in terms of x
  std::map<JetVar, MultiPoly> inverse;  // x^(i) in terms of y
};
AltPresentation alt_presentation(const Presentation& jets, const PFamily& family);
JetVar p_coordinate(const JetVar& x);

/// Coefficients reduced mod pi, zero relations dropped; `field` names the residue extension.
Presentation reduce_mod_pi(const Presentation& p, const std::string& field = {});

/// A fresh order-0 variable family not used by `p`.
std::string fresh_family(const Presentation& p, const std::string& preferred);

/// Phi : Hom(A, W_n(B)) -> Hom(J_nA, B) and its inverse, on points. A point of A
/// is one Witt vector per generator; a point of J_nA lists x_0, x_0', ..., x_1, ...
template <CommutativeRing R>
class Adjunction {
 public:
  using E = typename R::Element;

  Adjunction(const PFamily& family, R target) : target_(std::move(target)), n_(family.n) {
    std::vector<JetVar> slots;
    for (unsigned i = 0; i <= n_; ++i) {
      slots.push_back(jet_t(i));
      P_.emplace_back(target_, family.P[i], slots);
      if (i > 0) S_.emplace_back(target_, family.S[i - 1], slots);
    }
  }

  const R& target() const { return target_; }
  unsigned level() const { return n_; }

  /// x^(i) -> b_i - S_{i-1}(x, ..., x^(i-1)), solved for i = 0, 1, ..., n.
  std::vector<E> phi(const std::vector<std::vector<E>>& point) const {
    std::vector<E> out;
    out.reserve(point.size() * (n_ + 1));
    std::vector<E> jets(n_ + 1, target_.zero());
    for (const auto& b : point) {
      std::fill(jets.begin(), jets.end(), target_.zero());
      for (unsigned i = 0; i <= n_; ++i) {
        jets[i] = i == 0 ? b[0] : target_.sub(b[i], S_[i - 1](target_, jets));
        out.push_back(jets[i]);
      }
    }
    return out;
  }

  /// x -> (P_0, ..., P_n) evaluated at the jets of x.
  std::vector<std::vector<E>> phi_inv(const std::vector<E>& jets) const {
    std::vector<std::vector<E>> out;
    for (std::size_t g = 0; g * (n_ + 1) < jets.size(); ++g) {
      std::vector<E> x(jets.begin() + static_cast<std::ptrdiff_t>(g * (n_ + 1)),
                       jets.begin() + static_cast<std::ptrdiff_t>((g + 1) * (n_ + 1)));
      std::vector<E> w;
      for (unsigned i = 0; i <= n_; ++i) w.push_back(P_[i](target_, x));
      out.push_back(std::move(w));
    }
    return out;
  }

 private:
  R target_;
  unsigned n_;
  std::vector<CompiledPoly<R>> P_;
  std::vector<CompiledPoly<R>> S_;
};

struct AdjunctionOptions {
  std::uint64_t cap = kDefaultSizeCap;
  Exec exec = Exec::Parallel;
  /// Compares Phi(g) against the exp_n-pushforward on a fixed corpus of elements.
  bool naturality = true;
};

/// |Hom(A, W_n(B))| = |Hom(J_nA, B)| by enumeration, both round trips, and the
/// naturality square pr_i W_n(Phi g) exp_n = g-components on the corpus.
/// `family` must have level >= n; `table` level >= n.
Report check_adjunction(const Presentation& a, unsigned n, const FiniteAlgebra& b, const WittTablePtr& table,
                        const PFamily& family, const BaseSequence* base = nullptr,
                        const AdjunctionOptions& options = {});

/// Elements of A used for the naturality and compatibility checks.
std::vector<MultiPoly> element_corpus(const Presentation& a);

/// Morphisms J_*A -> C_* for C_0 = W_k(B) -> C_1 = W_{k-1}(B) (k = 1, 2) correspond
/// to Hom(A, C_0).
Report check_universal_property(const Presentation& a, const FiniteAlgebra& b, const WittTablePtr& table,
                                unsigned k, const AdjunctionOptions& options = {});

/// Hom counts of J_n(A_s) and (J_nA)_t, t = s phi(s) ... phi^n(s), over each ring,
/// with the canonical point map (x-jets, y-jets) -> (x-jets, prod phi^i(y)).
Report check_localization(const Presentation& a, const MultiPoly& s, unsigned n,
                          const std::vector<FiniteAlgebra>& rings, const AdjunctionOptions& options = {});

/// J_0A -> J_1A -> ... -> J_NA with u the inclusion and delta = Q -> Q^delta: the
/// sequence axioms symbolically on a corpus, and independence of the representative
/// (a vs a + r rho, rho a relation) at every point of J_{n+1}A over each ring.
Report check_jet_sequence(const Presentation& a, unsigned top, const std::vector<FiniteAlgebra>& rings,
                          std::uint64_t samples = 40, std::uint64_t seed = 1);

}  // namespace wittjet
