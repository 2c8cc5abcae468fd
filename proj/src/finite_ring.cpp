#include "wittjet/finite_ring.hpp"

#include <optional>

#include "wittjet/ring.hpp"

namespace wittjet {

namespace {

constexpr std::uint64_t kTableLimit = 256;
constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 31;

}  // namespace

FiniteRing::FiniteRing(unsigned m, std::vector<Level> tower, std::string name)
    : m_(m), tower_(std::move(tower)), name_(std::move(name)) {
  if (m_ < 2) throw Error(ErrorKind::InvalidArgument, "finite ring modulus must be >= 2");
  size_ = m_;
  digits_ = 1;
  for (const auto& level : tower_) {
    if (level.size() < 2) throw Error(ErrorKind::InvalidArgument, "tower polynomial of degree 0");
    if (level.back() != 1) throw Error(ErrorKind::InvalidArgument, "tower polynomial not monic");
    for (Element c : level) {
      if (c >= size_) throw Error(ErrorKind::InvalidArgument, "tower coefficient out of range");
    }
    const std::size_t degree = level.size() - 1;
    std::uint64_t next = 1;
    for (std::size_t i = 0; i < degree; ++i) {
      next *= size_;
      if (next > kMaxElements) throw Error(ErrorKind::SizeCap, "finite ring too large");
    }
    level_size_.push_back(size_);
    level_degree_.push_back(degree);
    size_ = next;
    digits_ *= degree;
  }
  if (size_ <= kTableLimit) {
    add_table_.resize(size_ * size_);
    mul_table_.resize(size_ * size_);
    for (Element a = 0; a < size_; ++a) {
      for (Element b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = add_level(a, b, false);
        mul_table_[a * size_ + b] = mul_level(tower_.size(), a, b);
      }
    }
  }
}

FiniteRing::Element FiniteRing::add_level(Element a, Element b, bool subtract) const {
  Element result = 0;
  Element scale = 1;
  for (std::size_t i = 0; i < digits_; ++i) {
    unsigned da = a % m_, db = b % m_;
    a /= m_;
    b /= m_;
    unsigned d = subtract ? (da + m_ - db) % m_ : (da + db) % m_;
    result += d * scale;
    scale *= m_;
  }
  return result;
}

FiniteRing::Element FiniteRing::mul_level(std::size_t level, Element a, Element b) const {
  if (level == 0) return static_cast<Element>((std::uint64_t{a} * b) % m_);
  const std::size_t d = level_degree_[level - 1];
  const Element below = static_cast<Element>(level_size_[level - 1]);
  std::vector<Element> ca(d), cb(d);
  for (std::size_t i = 0; i < d; ++i) {
    ca[i] = a % below;
    a /= below;
    cb[i] = b % below;
    b /= below;
  }
  // Ring arithmetic of the level below, on indices smaller than `below`.
  auto add_below = [&](Element x, Element y) {
    Element result = 0, scale = 1;
    for (Element s = 1; s < below; s *= m_) {
      result += ((x % m_ + y % m_) % m_) * scale;
      x /= m_;
      y /= m_;
      scale *= m_;
    }
    return result;
  };
  auto neg_below = [&](Element x) {
    Element result = 0, scale = 1;
    for (Element s = 1; s < below; s *= m_) {
      result += ((m_ - x % m_) % m_) * scale;
      x /= m_;
      scale *= m_;
    }
    return result;
  };
  std::vector<Element> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      prod[i + j] = add_below(prod[i + j], mul_level(level - 1, ca[i], cb[j]));
    }
  }
  const Level& f = tower_[level - 1];
  for (std::size_t k = prod.size(); k-- > d;) {
    const Element lead = prod[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      prod[k - d + j] = add_below(prod[k - d + j], neg_below(mul_level(level - 1, lead, f[j])));
    }
    prod[k] = 0;
  }
  Element result = 0, scale = 1;
  for (std::size_t i = 0; i < d; ++i) {
    result += prod[i] * scale;
    scale *= below;
  }
  return result;
}

FiniteRing::Element FiniteRing::from_int(const Integer& value) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), m_);
  return static_cast<Element>(r.get_ui());
}

FiniteRing::Element FiniteRing::from_base(const NumberRingElement& value) const {
  for (std::size_t i = 1; i < value.coeffs.size(); ++i) {
    if (value.coeffs[i] != 0) {
      throw Error(ErrorKind::NoStructureMap, "ring " + name_ + " has no chosen image of t");
    }
  }
  return from_int(value.coeffs.empty() ? Integer(0) : value.coeffs[0]);
}

FiniteRing::Element FiniteRing::add(Element a, Element b) const {
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  return add_level(a, b, false);
}

FiniteRing::Element FiniteRing::sub(Element a, Element b) const { return add_level(a, b, true); }

FiniteRing::Element FiniteRing::neg(Element a) const { return add_level(0, a, true); }

FiniteRing::Element FiniteRing::mul(Element a, Element b) const {
  if (!mul_table_.empty()) return mul_table_[a * size_ + b];
  return mul_level(tower_.size(), a, b);
}

std::vector<FiniteRing::Element> FiniteRing::enumerate_elements(std::uint64_t cap) const {
  if (size_ > cap) {
    throw Error(ErrorKind::SizeCap, "ring " + name_ + " has " + std::to_string(size_) +
                                        " elements, cap is " + std::to_string(cap));
  }
  std::vector<Element> out(size_);
  for (Element i = 0; i < size_; ++i) out[i] = i;
  return out;
}

std::vector<unsigned> FiniteRing::digits(Element a) const {
  std::vector<unsigned> out(digits_);
  for (auto& d : out) {
    d = a % m_;
    a /= m_;
  }
  return out;
}

FiniteRing::Element FiniteRing::from_digits(const std::vector<unsigned>& digits) const {
  if (digits.size() > digits_) throw Error(ErrorKind::Parse, "too many digits for ring " + name_);
  Element result = 0, scale = 1;
  for (unsigned d : digits) {
    result += (d % m_) * scale;
    scale *= m_;
  }
  return result;
}

bool FiniteRing::is_field() const {
  for (Element a = 1; a < size_; ++a) {
    bool invertible = false;
    for (Element b = 1; b < size_ && !invertible; ++b) invertible = mul(a, b) == 1;
    if (!invertible) return false;
  }
  return true;
}

bool FiniteRing::is_reduced() const {
  for (Element a = 1; a < size_; ++a) {
    Element x = a;
    for (std::uint64_t k = 0; k < size_ && x != 0; ++k) x = mul(x, a);
    if (x == 0) return false;
  }
  return true;
}

bool FiniteRing::is_perfect() const {
  std::vector<bool> hit(size_, false);
  for (Element a = 0; a < size_; ++a) {
    Element x = power(*this, a, m_);
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::string FiniteRing::format(Element a) const {
  if (digits_ == 1) return std::to_string(a);
  std::string out = "[";
  auto d = digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + "]";
}

nlohmann::json FiniteRing::element_to_json(Element a) const {
  if (digits_ == 1) return a;
  return digits(a);
}

FiniteRing::Element FiniteRing::element_from_json(const nlohmann::json& value) const {
  if (value.is_number_integer()) return from_int(Integer(std::to_string(value.get<long long>())));
  if (value.is_array()) return from_digits(value.get<std::vector<unsigned>>());
  throw Error(ErrorKind::Parse, "element of " + name_ + " must be an integer or digit array");
}

nlohmann::json FiniteRing::descriptor() const {
  nlohmann::json tower = nlohmann::json::array();
  for (const auto& level : tower_) tower.push_back(level);
  return {{"m", m_}, {"tower", tower}};
}

FiniteRingPtr FiniteRing::from_json(const nlohmann::json& descriptor) {
  if (!descriptor.is_object() || !descriptor.contains("m")) {
    throw Error(ErrorKind::Parse, "finite ring descriptor needs \"m\"");
  }
  const unsigned m = descriptor.at("m").get<unsigned>();
  std::vector<Level> tower;
  if (descriptor.contains("tower")) {
    for (const auto& poly : descriptor.at("tower")) {
      Level level;
      for (const auto& c : poly) {
        if (c.is_number_integer()) {
          long long v = c.get<long long>() % static_cast<long long>(m);
          level.push_back(static_cast<Element>(v < 0 ? v + m : v));
        } else {
          Element index = 0, scale = 1;
          for (const auto& d : c) {
            index += (d.get<unsigned>() % m) * scale;
            scale *= m;
          }
          level.push_back(index);
        }
      }
      tower.push_back(std::move(level));
    }
  }
  std::string name = descriptor.value("name", std::string("ring"));
  return std::make_shared<const FiniteRing>(m, std::move(tower), std::move(name));
}

FiniteRingPtr named_finite_ring(const std::string& name) {
  using L = FiniteRing::Level;
  auto make = [&](unsigned m, std::vector<L> tower) {
    return std::make_shared<const FiniteRing>(m, std::move(tower), name);
  };
  if (name == "F2") return make(2, {});
  if (name == "F3") return make(3, {});
  if (name == "F5") return make(5, {});
  if (name == "Z4") return make(4, {});
  if (name == "Z8") return make(8, {});
  if (name == "Z9") return make(9, {});
  if (name == "F4") return make(2, {L{1, 1, 1}});
  if (name == "F8") return make(2, {L{1, 1, 0, 1}});
  if (name == "F9") return make(3, {L{1, 0, 1}});
  if (name == "F2eps") return make(2, {L{0, 0, 1}});
  if (name == "F4eps") return make(2, {L{1, 1, 1}, L{0, 0, 1}});
  throw Error(ErrorKind::InvalidArgument, "unknown finite ring '" + name + "'");
}

std::vector<std::string> named_finite_ring_names() {
  return {"F2", "F3", "F5", "Z4", "Z8", "Z9", "F4", "F8", "F9", "F2eps", "F4eps"};
}

FiniteRingPtr parse_finite_ring(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    return FiniteRing::from_json(j);
  }
  return named_finite_ring(text);
}

// ---------------------------------------------------------------------------

FiniteAlgebra::FiniteAlgebra(FiniteRingPtr ring, TriplePtr triple, Element tau)
    : ring_(std::move(ring)), triple_(std::move(triple)), tau_(tau) {
  const auto& g = triple_->ring().modulus();
  Element value = 0;
  for (std::size_t k = g.size(); k-- > 0;) value = ring_->add(ring_->mul(value, tau_), ring_->from_int(g[k]));
  if (value != 0) {
    throw Error(ErrorKind::NoStructureMap,
                ring_->format(tau_) + " is not a root of g in " + ring_->name());
  }
}

FiniteAlgebra FiniteAlgebra::over(FiniteRingPtr ring, TriplePtr triple) {
  const auto& g = triple->ring().modulus();
  std::optional<Element> first_root;
  for (Element x = 0; x < ring->size(); ++x) {
    Element value = 0;
    for (std::size_t k = g.size(); k-- > 0;) value = ring->add(ring->mul(value, x), ring->from_int(g[k]));
    if (value != 0) continue;
    FiniteAlgebra candidate(ring, triple, x);
    if (candidate.kills_pi()) return candidate;
    if (!first_root) first_root = x;
  }
  if (!first_root) {
    throw Error(ErrorKind::NoStructureMap, "g has no root in " + ring->name());
  }
  return FiniteAlgebra(std::move(ring), std::move(triple), *first_root);
}

bool FiniteAlgebra::kills_pi() const { return from_base(triple_->pi()) == 0; }

FiniteAlgebra::Element FiniteAlgebra::from_base(const NumberRingElement& value) const {
  Element result = 0;
  for (std::size_t k = value.coeffs.size(); k-- > 0;) {
    result = ring_->add(ring_->mul(result, tau_), ring_->from_int(value.coeffs[k]));
  }
  return result;
}

}  // namespace wittjet
