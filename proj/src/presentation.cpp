#include "wittjet/presentation.hpp"

#include <algorithm>

namespace wittjet {

TriplePtr triple_from_json(const nlohmann::json& j) {
  if (j.is_string()) return named_triple(j.get<std::string>());
  if (!j.is_object() || !j.contains("g") || !j.contains("pi") || !j.contains("q")) {
    throw Error(ErrorKind::Parse, "triple must be a name or an object {g, pi, q}");
  }
  auto integer = [](const nlohmann::json& v) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
      Integer out;
      if (out.set_str(v.get<std::string>(), 10) == 0) return out;
    }
    throw Error(ErrorKind::Parse, "expected an integer, got " + v.dump());
  };
  auto ints = [&](const nlohmann::json& a) {
    if (!a.is_array()) throw Error(ErrorKind::Parse, "expected a coefficient array, got " + a.dump());
    std::vector<Integer> out;
    for (const auto& v : a) out.push_back(integer(v));
    return out;
  };
  return BaseTriple::validate(ints(j.at("g")), ints(j.at("pi")), integer(j.at("q")), j.value("name", std::string{}));
}

Presentation Presentation::make(TriplePtr triple, std::vector<JetVar> generators, std::vector<MultiPoly> relations,
                                std::optional<unsigned> pi_power, std::string name) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  const std::set<JetVar> known(generators.begin(), generators.end());
  for (auto& f : relations) {
    for (const auto& v : f.variables()) {
      if (!known.count(v)) throw Error(ErrorKind::InvalidArgument, "relation uses unknown variable " + v.name());
    }
    if (f.ring_ptr() == nullptr) f = MultiPoly(triple->ring_ptr()) + f;
    if (pi_power) f = reduce_coefficients(triple->pi_power_lattice(*pi_power), f);
  }
  Presentation p;
  p.triple = std::move(triple);
  p.pi_power = pi_power;
  p.generators = std::move(generators);
  p.relations = std::move(relations);
  p.name = std::move(name);
  return p;
}

Presentation Presentation::parse(TriplePtr triple, const std::vector<std::string>& generators,
                                 const std::vector<std::string>& relations, std::string name) {
  std::vector<JetVar> gens;
  for (const auto& g : generators) {
    MultiPoly v = parse_polynomial(*triple, g);
    auto vars = v.variables();
    if (vars.size() != 1 || v != MultiPoly::variable(triple->ring_ptr(), *vars.begin())) {
      throw Error(ErrorKind::Parse, "generator '" + g + "' is not a variable name");
    }
    gens.push_back(*vars.begin());
  }
  std::vector<MultiPoly> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(*triple, r));
  return make(std::move(triple), std::move(gens), std::move(rels), std::nullopt, std::move(name));
}

Presentation Presentation::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "algebra must be a JSON object");
  TriplePtr triple = triple_from_json(j.at("triple"));
  std::vector<JetVar> gens;
  for (const auto& g : j.at("generators")) {
    if (g.is_string()) {
      auto vars = parse_polynomial(*triple, g.get<std::string>()).variables();
      if (vars.size() != 1) throw Error(ErrorKind::Parse, "bad generator " + g.dump());
      gens.push_back(*vars.begin());
    } else {
      gens.push_back(jetvar_from_json(g));
    }
  }
  std::vector<MultiPoly> rels;
  for (const auto& r : j.value("relations", nlohmann::json::array())) {
    rels.push_back(r.is_string() ? parse_polynomial(*triple, r.get<std::string>())
                                 : poly_from_json(triple->ring_ptr(), r));
  }
  std::optional<unsigned> k;
  if (j.contains("pi_power") && !j.at("pi_power").is_null()) k = j.at("pi_power").get<unsigned>();
  Presentation p = make(triple, std::move(gens), std::move(rels), k, j.value("name", std::string{}));
  p.level = j.value("level", 0u);
  return p;
}

std::string Presentation::base_name() const {
  std::string o = triple->name().empty() ? triple->canonical_key() : triple->name();
  return pi_power ? o + "/pi^" + std::to_string(*pi_power) : o;
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json j;
  j["base"] = base_name();
  j["level"] = level;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) gens.push_back(jetvar_to_json(g));
  j["generators"] = gens;
  if (!name.empty()) j["name"] = name;
  if (triple->name().empty()) {
    auto coeffs = [](const std::vector<Integer>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& c : v) a.push_back(coeff_to_json(NumberRingElement{{c}})[0]);
      return a;
    };
    j["triple"] = {{"g", coeffs(triple->ring().modulus())}, {"pi", coeffs(triple->pi().coeffs)},
                   {"q", triple->q()}};
  } else {
    j["triple"] = triple->name();
  }
  if (pi_power) j["pi_power"] = *pi_power;
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& f : relations) rels.push_back(wittjet::to_json(f));
  j["relations"] = rels;
  return j;
}

std::string Presentation::to_string() const {
  std::string out = base_name() + "[";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i].name();
  out += "]";
  if (relations.empty()) return out;
  out += "/(";
  for (std::size_t i = 0; i < relations.size(); ++i) out += (i ? ", " : "") + relations[i].to_string();
  return out + ")";
}

std::vector<std::vector<FiniteAlgebra::Element>> all_vectors(const FiniteAlgebra& b, std::size_t len,
                                                              std::uint64_t cap) {
  const std::uint64_t size = b.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (total > cap / size) {
      throw Error(ErrorKind::SizeCap, "|" + b.name() + "|^" + std::to_string(len) + " exceeds cap " +
                                          std::to_string(cap));
    }
    total *= size;
  }
  std::vector<std::vector<FiniteAlgebra::Element>> out(total);
  std::vector<std::uint32_t> digits(len);
  for (std::uint64_t i = 0; i < total; ++i) {
    kernels::decode(i, size, digits);
    out[i].assign(digits.begin(), digits.end());
  }
  return out;
}

void require_coefficient_ring(const Presentation& p, const FiniteAlgebra& b) {
  if (!p.pi_power) return;
  if (!b.equal(map_coefficient(b, p.triple->pi_power(*p.pi_power)), b.zero())) {
    throw Error(ErrorKind::InvalidArgument,
                b.name() + " is not an algebra over " + p.base_name() + ": pi^" + std::to_string(*p.pi_power) +
                    " does not vanish");
  }
}

}  // namespace wittjet
