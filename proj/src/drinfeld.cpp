#include "wittjet/drinfeld.hpp"

#include <random>
#include <set>

#include "wittjet/kernels.hpp"

namespace wittjet {

namespace {

using Vec = std::vector<FiniteAlgebra::Element>;

std::string show(const FiniteAlgebra& b, const Vec& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += b.format(x[i]);
  }
  return out + ")";
}

Vec vector_at(std::uint64_t index, std::uint64_t radix, std::size_t len) {
  std::vector<std::uint32_t> digits(len);
  kernels::decode(index, radix, digits);
  return Vec(digits.begin(), digits.end());
}

constexpr std::uint64_t kExhaustivePairLimit = 1u << 17;
constexpr std::uint64_t kSampledPairs = 4000;

}  // namespace

Report check_drinfeld(const DrinfeldMap<FiniteAlgebra>& u, std::size_t max_length) {
  Report report;
  report.name = "drinfeld";
  report.seed = 1;
  const auto& src = u.source();
  const auto& tgt = u.target();
  const FiniteAlgebra& b = tgt.base();
  const std::uint64_t size = b.size();
  const unsigned r = u.r();
  std::mt19937_64 rng(*report.seed);
  nlohmann::json lengths = nlohmann::json::array();

  for (std::size_t k = 1; k <= max_length; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= size;
    const std::size_t out_len = u.image_length(k);
    std::vector<Vec> images(count);
    for (std::uint64_t i = 0; i < count; ++i) images[i] = u(vector_at(i, size, k));

    for (FiniteAlgebra::Element x = 0; x < size; ++x) {
      report.expect(tgt.equal(u(src.teichmuller(x, k)), tgt.teichmuller(x, out_len)),
                    "u([b]) != [b] for b = " + b.format(x));
    }
    for (std::uint64_t i = 0; i < count && k > r; ++i) {
      const Vec x = vector_at(i, size, k);
      Vec fx = x;
      for (unsigned j = 0; j < r; ++j) fx = src.frobenius(fx);
      const Vec lhs = u(fx);
      const Vec rhs = tgt.truncate(tgt.frobenius(images[i]), lhs.size());
      report.expect(tgt.equal(lhs, rhs), "u(F^r x) != F u(x) at x = " + show(b, x));
    }
    if (k >= r + 1) {
      std::uint64_t shorter = count / size;
      for (std::uint64_t i = 0; i < shorter; ++i) {
        const Vec y = vector_at(i, size, k - 1);
        Vec fy = y;
        for (unsigned j = 0; j + 1 < r; ++j) fy = src.frobenius(fy);
        const Vec rhs = tgt.scalar(u.ratio(), tgt.verschiebung(u(fy)));
        const Vec lhs = tgt.truncate(u(src.verschiebung(y)), rhs.size());
        report.expect(tgt.equal(lhs, rhs), "u(V y) != (p/pi') V u(F^{r-1} y) at y = " + show(b, y));
      }
    }
    if (k > 1) {
      for (std::uint64_t i = 0; i < count; ++i) {
        const Vec x = vector_at(i, size, k);
        report.expect(tgt.equal(u(src.truncate(x, k - 1)), tgt.truncate(images[i], u.image_length(k - 1))),
                      "u does not commute with truncation at x = " + show(b, x));
      }
    }

    const std::uint64_t pairs = count * count;
    auto check_pair = [&](std::uint64_t i, std::uint64_t j) {
      const Vec x = vector_at(i, size, k), y = vector_at(j, size, k);
      report.expect(tgt.equal(u(src.add(x, y)), tgt.add(images[i], images[j])),
                    "u(x + y) != u(x) + u(y) at x = " + show(b, x) + ", y = " + show(b, y));
      report.expect(tgt.equal(u(src.mul(x, y)), tgt.mul(images[i], images[j])),
                    "u(x y) != u(x) u(y) at x = " + show(b, x) + ", y = " + show(b, y));
    };
    if (pairs <= kExhaustivePairLimit) {
      for (std::uint64_t i = 0; i < count; ++i) {
        for (std::uint64_t j = 0; j < count; ++j) check_pair(i, j);
      }
    } else {
      std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
      for (std::uint64_t s = 0; s < kSampledPairs; ++s) {
        std::uint64_t i = pick(rng), j = pick(rng);
        check_pair(i, j);
      }
    }

    std::map<Vec, std::uint64_t> seen;
    nlohmann::json entry = {{"length", k}, {"target_length", out_len}};
    std::optional<std::pair<std::uint64_t, std::uint64_t>> collision;
    for (std::uint64_t i = 0; i < count; ++i) {
      auto [it, inserted] = seen.emplace(images[i], i);
      if (!inserted && !collision) collision = std::make_pair(it->second, i);
    }
    std::uint64_t target_count = 1;
    for (std::size_t i = 0; i < out_len; ++i) target_count *= size;
    entry["injective"] = !collision.has_value();
    entry["surjective"] = seen.size() == target_count;
    entry["image_size"] = seen.size();
    if (collision) {
      entry["witness"] = show(b, vector_at(collision->first, size, k)) + " and " +
                         show(b, vector_at(collision->second, size, k)) + " both map to " +
                         show(b, images[collision->first]);
    }
    lengths.push_back(entry);
  }
  report.details["ring"] = b.name();
  report.details["lengths"] = lengths;
  return report;
}

}  // namespace wittjet
