#include "wittjet/witt.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wittjet {

MultiPoly witt_polynomial(const BaseTriple& triple, unsigned i, const std::string& family) {
  std::vector<MultiPoly> x;
  for (unsigned k = 0; k <= i; ++k) x.push_back(MultiPoly::variable(triple.ring_ptr(), JetVar{family, k, 0}));
  return ghost_component(triple, i, x);
}

MultiPoly ghost_component(const BaseTriple& triple, unsigned i, const std::vector<MultiPoly>& x) {
  const auto& ring = triple.ring_ptr();
  MultiPoly total(ring);
  NumberRingElement pi_power = ring->one();
  for (unsigned k = 0; k <= i; ++k) {
    MultiPoly term = x[k];
    for (unsigned r = k; r < i; ++r) term = term.pow(triple.q());
    total += term.scale(pi_power);
    pi_power = ring->mul(pi_power, triple.pi());
  }
  return total;
}

std::vector<MultiPoly> ghost_invert(const BaseTriple& triple, const std::vector<MultiPoly>& targets) {
  const auto& ring = triple.ring_ptr();
  std::vector<MultiPoly> out;
  std::vector<MultiPoly> powers;  // powers[j] = c_j^{q^{i-j}} at step i
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (auto& p : powers) p = p.pow(triple.q());
    MultiPoly rest = targets[i];
    NumberRingElement pi_power = ring->one();
    for (std::size_t j = 0; j < i; ++j) {
      rest -= powers[j].scale(pi_power);
      pi_power = ring->mul(pi_power, triple.pi());
    }
    for (std::size_t k = 0; k < i; ++k) {
      auto divided = try_div_pi(triple, rest);
      if (!divided) {
        throw Error(ErrorKind::NotDivisible, "ghost inversion at component " + std::to_string(i) +
                                                 " failed: " + rest.to_string());
      }
      rest = std::move(*divided);
    }
    out.push_back(rest);
    powers.push_back(rest);
  }
  return out;
}

std::vector<NumberRingElement> structure_components(const BaseTriple& triple,
                                                    const NumberRingElement& lambda, unsigned n) {
  const NumberRing& ring = triple.ring();
  std::vector<NumberRingElement> out;
  std::vector<NumberRingElement> powers;
  for (unsigned i = 0; i <= n; ++i) {
    for (auto& p : powers) p = ring.pow(p, triple.q());
    NumberRingElement rest = lambda;
    NumberRingElement pi_power = ring.one();
    for (unsigned j = 0; j < i; ++j) {
      rest = ring.sub(rest, ring.mul(pi_power, powers[j]));
      pi_power = ring.mul(pi_power, triple.pi());
    }
    for (unsigned k = 0; k < i; ++k) rest = triple.exact_div_pi(rest);
    out.push_back(rest);
    powers.push_back(rest);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<MultiPoly> variables(const BaseTriple& triple, const std::string& family, unsigned n) {
  std::vector<MultiPoly> out;
  for (unsigned i = 0; i <= n; ++i) out.push_back(MultiPoly::variable(triple.ring_ptr(), JetVar{family, i, 0}));
  return out;
}

}  // namespace

WittTable compute_witt_table(TriplePtr triple_ptr, unsigned n) {
  const BaseTriple& triple = *triple_ptr;
  const auto& ring = triple.ring_ptr();
  WittTable table;
  table.triple = triple_ptr;
  table.n = n;

  std::vector<MultiPoly> wx, wy;
  for (unsigned i = 0; i <= n; ++i) {
    wx.push_back(witt_polynomial(triple, i, "X"));
    wy.push_back(witt_polynomial(triple, i, "Y"));
  }
  std::vector<MultiPoly> g_sum, g_prod, g_neg, g_frob, g_delta;
  for (unsigned i = 0; i <= n; ++i) {
    g_sum.push_back(wx[i] + wy[i]);
    g_prod.push_back(wx[i] * wy[i]);
    g_neg.push_back(-wx[i]);
  }
  for (unsigned i = 0; i < n; ++i) {
    g_frob.push_back(wx[i + 1]);
    g_delta.push_back(exact_div_pi(triple, wx[i + 1] - wx[i].pow(triple.q())));
  }
  table.sum = ghost_invert(triple, g_sum);
  table.product = ghost_invert(triple, g_prod);
  table.negation = ghost_invert(triple, g_neg);
  table.frobenius = ghost_invert(triple, g_frob);
  table.delta = ghost_invert(triple, g_delta);

  NumberRingElement basis = ring->one();
  for (std::size_t j = 0; j < ring->degree(); ++j) {
    std::vector<MultiPoly> g_scalar;
    for (unsigned i = 0; i <= n; ++i) g_scalar.push_back(wx[i].scale(basis));
    table.scalar.push_back(ghost_invert(triple, g_scalar));
    basis = ring->mul(basis, ring->generator());
  }
  return table;
}

std::optional<std::string> verify_witt_table(const WittTable& table) {
  const BaseTriple& triple = *table.triple;
  const auto& ring = triple.ring_ptr();
  const unsigned n = table.n;
  auto sized = [&](const std::vector<MultiPoly>& v, std::size_t k) { return v.size() == k; };
  if (!sized(table.sum, n + 1) || !sized(table.product, n + 1) || !sized(table.negation, n + 1) ||
      !sized(table.frobenius, n) || !sized(table.delta, n) || table.scalar.size() != ring->degree()) {
    return "table has the wrong number of polynomials";
  }
  const auto x = variables(triple, "X", n);
  const auto y = variables(triple, "Y", n);
  auto w = [&](unsigned i, const std::vector<MultiPoly>& c) { return ghost_component(triple, i, c); };

  for (unsigned i = 0; i <= n; ++i) {
    const MultiPoly wx = w(i, x), wy = w(i, y);
    if (w(i, table.sum) != wx + wy) return "w_" + std::to_string(i) + "(S) != w(X) + w(Y)";
    if (w(i, table.product) != wx * wy) return "w_" + std::to_string(i) + "(M) != w(X) w(Y)";
    if (w(i, table.negation) != -wx) return "w_" + std::to_string(i) + "(N) != -w(X)";
    NumberRingElement basis = ring->one();
    for (std::size_t j = 0; j < table.scalar.size(); ++j) {
      if (w(i, table.scalar[j]) != wx.scale(basis)) {
        return "w_" + std::to_string(i) + " of scalar t^" + std::to_string(j) + " mismatch";
      }
      basis = ring->mul(basis, ring->generator());
    }
  }
  for (unsigned i = 0; i < n; ++i) {
    const MultiPoly next = w(i + 1, x);
    if (w(i, table.frobenius) != next) return "w_" + std::to_string(i) + "(F) != w_" + std::to_string(i + 1);
    if (w(i, table.delta).scale(triple.pi()) != next - w(i, x).pow(triple.q())) {
      return "pi w_" + std::to_string(i) + "(D) != w_" + std::to_string(i + 1) + " - w_" + std::to_string(i) + "^q";
    }
    if (!try_div_pi(triple, table.frobenius[i] - x[i].pow(triple.q()))) {
      return "F_" + std::to_string(i) + " is not congruent to X_" + std::to_string(i) + "^q mod pi";
    }
  }
  return std::nullopt;
}

std::string table_hash(const BaseTriple& triple, unsigned n) {
  const std::string key = triple.canonical_key() + ";n=" + std::to_string(n);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json witt_table_to_json(const WittTable& table) {
  const BaseTriple& triple = *table.triple;
  auto polys = [](const std::vector<MultiPoly>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : v) out.push_back(to_json(p));
    return out;
  };
  nlohmann::json header = {
      {"g", coeff_to_json(NumberRingElement{triple.ring().modulus()})},
      {"pi", coeff_to_json(triple.pi())},
      {"q", triple.q()},
      {"n", table.n},
      {"hash", table_hash(triple, table.n)},
  };
  if (!triple.name().empty()) header["name"] = triple.name();
  nlohmann::json scalar = nlohmann::json::array();
  for (const auto& s : table.scalar) scalar.push_back(polys(s));
  return {
      {"header", header},
      {"sum", polys(table.sum)},
      {"product", polys(table.product)},
      {"negation", polys(table.negation)},
      {"frobenius", polys(table.frobenius)},
      {"delta", polys(table.delta)},
      {"scalar", scalar},
  };
}

WittTable witt_table_from_json(const nlohmann::json& j) {
  try {
    const auto& header = j.at("header");
    std::vector<Integer> g, pi;
    for (const auto& c : header.at("g")) g.push_back(c.is_string() ? Integer(c.get<std::string>()) : Integer(std::to_string(c.get<std::int64_t>())));
    for (const auto& c : header.at("pi")) pi.push_back(c.is_string() ? Integer(c.get<std::string>()) : Integer(std::to_string(c.get<std::int64_t>())));
    auto triple = BaseTriple::validate(std::move(g), std::move(pi), header.at("q").get<unsigned long>(),
                                       header.value("name", std::string()));
    WittTable table;
    table.triple = triple;
    table.n = header.at("n").get<unsigned>();
    auto polys = [&](const nlohmann::json& arr) {
      std::vector<MultiPoly> out;
      for (const auto& p : arr) out.push_back(poly_from_json(triple->ring_ptr(), p));
      return out;
    };
    table.sum = polys(j.at("sum"));
    table.product = polys(j.at("product"));
    table.negation = polys(j.at("negation"));
    table.frobenius = polys(j.at("frobenius"));
    table.delta = polys(j.at("delta"));
    for (const auto& s : j.at("scalar")) table.scalar.push_back(polys(s));
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("Witt table: ") + e.what());
  }
}

WittTablePtr build_witt_table(TriplePtr triple, unsigned n, const TableOptions& options) {
  Integer size = ipow(Integer(static_cast<unsigned long>(triple->q())), n);
  if (size > Integer(static_cast<unsigned long>(options.cap))) {
    throw Error(ErrorKind::FeasibilityCap, "q^n = " + size.get_str() + " exceeds the table cap " +
                                               std::to_string(options.cap));
  }
  std::optional<std::filesystem::path> path;
  if (options.cache_dir) {
    path = *options.cache_dir / "witt" / (table_hash(*triple, n) + ".json");
    std::ifstream in(*path);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        WittTable cached = witt_table_from_json(j);
        const bool same = cached.n == n && cached.triple->canonical_key() == triple->canonical_key();
        if (same && (options.trust_cache || !verify_witt_table(cached))) {
          cached.triple = triple;
          return std::make_shared<const WittTable>(std::move(cached));
        }
      } catch (const nlohmann::json::exception&) {
      } catch (const Error&) {
      }
    }
  }
  WittTable table = compute_witt_table(triple, n);
  if (auto failure = verify_witt_table(table)) {
    throw Error(ErrorKind::NotDivisible, "freshly built table fails verification: " + *failure);
  }
  if (path) {
    std::filesystem::create_directories(path->parent_path());
    std::ofstream out(*path);
    out << witt_table_to_json(table).dump(1) << "\n";
  }
  return std::make_shared<const WittTable>(std::move(table));
}

}  // namespace wittjet
