#include "wittjet/prolong.hpp"

#include "wittjet/finite_ring.hpp"

namespace wittjet {

BaseSequence::BaseSequence(TriplePtr triple, std::vector<std::optional<unsigned>> levels)
    : triple_(std::move(triple)), levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(ErrorKind::InvalidArgument, "empty base sequence");
  for (std::size_t n = 0; n + 1 < levels_.size(); ++n) {
    const auto& here = levels_[n];
    const auto& next = levels_[n + 1];
    if (!here) continue;
    if (!next || *here == 0 || *next > *here - 1) {
      throw Error(ErrorKind::IllDefined, "delta_O does not descend from level " + std::to_string(n) +
                                             " to level " + std::to_string(n + 1) + " of " + describe());
    }
  }
}

BaseSequence BaseSequence::constant(TriplePtr triple, std::size_t length) {
  return BaseSequence(std::move(triple), std::vector<std::optional<unsigned>>(length));
}

std::string BaseSequence::describe() const {
  std::string out;
  const std::string name = triple_->name().empty() ? "O" : triple_->name();
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    if (n) out += " -> ";
    out += levels_[n] ? name + "/pi^" + std::to_string(*levels_[n]) : name;
  }
  return out;
}

ProlongationSequence<QuotientRing> BaseSequence::as_sequence(std::uint64_t corpus_bound) const {
  ProlongationSequence<QuotientRing> seq;
  const NumberRing& o = triple_->ring();
  for (std::size_t n = 0; n < levels_.size(); ++n) seq.levels.push_back(ring(n));
  for (std::size_t n = 0; n + 1 < levels_.size(); ++n) {
    const QuotientRing target = seq.levels[n + 1];
    seq.u.push_back([target](const NumberRingElement& x) { return target.reduce(x); });
    const TriplePtr triple = triple_;
    seq.delta.push_back([target, triple](const NumberRingElement& x) { return target.reduce(triple->delta(x)); });
  }
  // Finite levels use every residue; O itself uses a box of small elements.
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    std::vector<NumberRingElement> corpus;
    if (levels_[n]) {
      for (auto& r : triple_->pi_power_lattice(*levels_[n]).residues(kDefaultSizeCap)) {
        corpus.push_back(NumberRingElement{std::move(r)});
      }
    } else {
      const long bound = static_cast<long>(corpus_bound);
      std::vector<Integer> c(o.degree(), 0);
      for (long a = -bound / 2; a < bound / 2; ++a) {
        c[0] = a;
        if (o.degree() > 1) {
          for (long b = -1; b <= 1; ++b) {
            c[1] = b;
            corpus.push_back(NumberRingElement{c});
          }
        } else {
          corpus.push_back(NumberRingElement{c});
        }
      }
    }
    seq.corpus.push_back(std::move(corpus));
  }
  seq.show = [o = triple_->ring_ptr()](const NumberRingElement& x) { return o->format(x); };
  return seq;
}

Report check_base_sequence(const BaseSequence& base) {
  const BaseTriple& triple = *base.triple();
  const NumberRing& o = triple.ring();
  auto seq = base.as_sequence();
  Report report = check_sequence(triple, seq);
  report.name = "base-sequence";
  report.details["sequence"] = base.describe();
  // delta_n must not depend on the lift of x from O/pi^{k_n} to O.
  for (std::size_t n = 0; n + 1 < base.size(); ++n) {
    const auto k = base.level(n);
    if (!k) continue;
    const QuotientRing target = base.ring(n + 1);
    const NumberRingElement step = triple.pi_power(*k);
    for (const auto& x : seq.corpus[n]) {
      for (long m = -2; m <= 2; ++m) {
        const NumberRingElement lift = o.add(x, o.scale(m, step));
        report.expect(target.equal(target.reduce(triple.delta(lift)), target.reduce(triple.delta(x))),
                      "delta depends on the lift of " + o.format(x) + " at level " + std::to_string(n));
      }
    }
  }
  return report;
}

}  // namespace wittjet
