#include "wittjet/multipoly.hpp"

#include <algorithm>
#include <cctype>

#include <omp.h>

namespace wittjet {

std::string JetVar::name() const {
  std::string out = family;
  // Witt coordinates (single upper-case letter other than T) always show their index.
  const bool witt_style = family.size() == 1 && std::isupper(static_cast<unsigned char>(family[0])) &&
                          family != "T";
  if (witt_style) {
    out += std::to_string(gamma);
  } else if (gamma != 0) {
    out += "_" + std::to_string(gamma);
  }
  if (order <= 3) {
    out.append(order, '\'');
  } else {
    out += "^(" + std::to_string(order) + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<std::pair<JetVar, unsigned>> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [v, e] : powers) {
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == v) {
      powers_.back().second += e;
    } else {
      powers_.emplace_back(std::move(v), e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(const JetVar& v, unsigned exponent) { return Monomial({{v, exponent}}); }

unsigned Monomial::exponent(const JetVar& v) const {
  for (const auto& [w, e] : powers_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  std::size_t i = 0, j = 0;
  while (i < powers_.size() || j < other.powers_.size()) {
    if (j == other.powers_.size() || (i < powers_.size() && powers_[i].first < other.powers_[j].first)) {
      out.powers_.push_back(powers_[i++]);
    } else if (i == powers_.size() || other.powers_[j].first < powers_[i].first) {
      out.powers_.push_back(other.powers_[j++]);
    } else {
      out.powers_.emplace_back(powers_[i].first, powers_[i].second + other.powers_[j].second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  std::size_t i = 0;
  while (i < powers_.size() && i < other.powers_.size()) {
    const auto& [va, ea] = powers_[i];
    const auto& [vb, eb] = other.powers_[i];
    if (va != vb) return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ea != eb) return ea <=> eb;
    ++i;
  }
  if (i < powers_.size()) return std::strong_ordering::greater;
  if (i < other.powers_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : powers_) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

namespace {

bool coeff_is_zero(const NumberRingElement& c) {
  return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Integer& x) { return x == 0; });
}

void accumulate(MultiPoly::Terms& terms, const Monomial& m, const NumberRingElement& c,
                const NumberRing& ring) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second = ring.add(it->second, c);
    if (coeff_is_zero(it->second)) terms.erase(it);
  } else if (coeff_is_zero(c)) {
    terms.erase(it);
  }
}

std::string format_coeff(const NumberRingElement& c) {
  if (c.coeffs.size() == 1) return c.coeffs[0].get_str();
  std::string out;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    const Integer& x = c.coeffs[j];
    if (x == 0) continue;
    std::string piece;
    if (j == 0) {
      piece = Integer(abs(x)).get_str();
    } else {
      piece = (abs(x) == 1 ? "" : Integer(abs(x)).get_str() + "*") + (j == 1 ? "t" : "t^" + std::to_string(j));
    }
    if (out.empty()) {
      out = (x < 0 ? "-" : "") + piece;
    } else {
      out += (x < 0 ? "-" : "+") + piece;
    }
  }
  return "(" + out + ")";
}

}  // namespace

MultiPoly MultiPoly::constant(RingPtr ring, const Coeff& c) {
  MultiPoly p(std::move(ring));
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::integer(RingPtr ring, const Integer& n) {
  auto c = ring->from_int(n);
  return constant(std::move(ring), c);
}

MultiPoly MultiPoly::variable(RingPtr ring, const JetVar& v, unsigned exponent) {
  auto one = ring->one();
  MultiPoly p(std::move(ring));
  p.add_term(Monomial::of(v, exponent), one);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

MultiPoly::Coeff MultiPoly::constant_term() const { return coefficient(Monomial()); }

MultiPoly::Coeff MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  if (it != terms_.end()) return it->second;
  return ring_ ? ring_->zero() : Coeff{};
}

unsigned MultiPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::set<JetVar> MultiPoly::variables() const {
  std::set<JetVar> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.powers()) out.insert(v);
  }
  return out;
}

std::optional<unsigned> MultiPoly::max_order(const std::string& family) const {
  std::optional<unsigned> best;
  for (const auto& v : variables()) {
    if (v.family == family && (!best || v.order > *best)) best = v.order;
  }
  return best;
}

void MultiPoly::add_term(const Monomial& m, const Coeff& c) { accumulate(terms_, m, c, *ring_); }

const MultiPoly::RingPtr& MultiPoly::common_ring(const MultiPoly& other) const {
  return ring_ ? ring_ : other.ring_;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  out += other;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (!ring_) ring_ = other.ring_;
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c, *ring_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (!ring_) ring_ = other.ring_;
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, ring_->neg(c), *ring_);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  out -= other;
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, ring_->neg(c));
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const { return multiply_serial(*this, other); }

MultiPoly MultiPoly::scale(const Coeff& c) const {
  MultiPoly out(ring_);
  if (!ring_) return out;
  for (const auto& [m, x] : terms_) {
    auto y = ring_->mul(x, c);
    if (!coeff_is_zero(y)) out.terms_.emplace_hint(out.terms_.end(), m, std::move(y));
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned long exponent) const {
  MultiPoly result = integer(ring_, 1);
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<JetVar, MultiPoly>& images) const {
  std::map<std::pair<JetVar, unsigned>, MultiPoly> power_cache;
  auto image_power = [&](const JetVar& v, unsigned e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    auto img = images.find(v);
    MultiPoly value = img == images.end() ? variable(ring_, v, e) : img->second.pow(e);
    return power_cache.emplace(key, std::move(value)).first->second;
  };
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = constant(ring_, c);
    for (const auto& [v, e] : m.powers()) term = term * image_power(v, e);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::map_coefficients(const std::function<Coeff(const Coeff&)>& f) const {
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    auto y = f(c);
    if (!coeff_is_zero(y)) out.terms_.emplace_hint(out.terms_.end(), m, std::move(y));
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool scalar = c.coeffs.size() == 1 ||
                        std::all_of(c.coeffs.begin() + 1, c.coeffs.end(), [](const Integer& x) { return x == 0; });
    std::string sign = "+";
    std::string body;
    if (scalar) {
      const Integer& x = c.coeffs[0];
      sign = x < 0 ? "-" : "+";
      Integer a = abs(x);
      if (m.is_one()) {
        body = a.get_str();
      } else {
        body = (a == 1 ? "" : a.get_str() + "*") + m.to_string();
      }
    } else {
      body = format_coeff(c) + (m.is_one() ? "" : "*" + m.to_string());
    }
    if (out.empty()) {
      out = (sign == "-" ? "-" : "") + body;
    } else {
      out += " " + sign + " " + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

MultiPoly multiply_serial(const MultiPoly& a, const MultiPoly& b) {
  const auto& ring_ptr = a.ring_ptr() ? a.ring_ptr() : b.ring_ptr();
  MultiPoly out(ring_ptr);
  if (a.is_zero() || b.is_zero()) return out;
  const NumberRing& ring = *ring_ptr;
  MultiPoly::Terms terms;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) accumulate(terms, ma * mb, ring.mul(ca, cb), ring);
  }
  for (const auto& [m, c] : terms) out.add_term(m, c);
  return out;
}

MultiPoly multiply_parallel(const MultiPoly& a, const MultiPoly& b) {
  const auto& ring_ptr = a.ring_ptr() ? a.ring_ptr() : b.ring_ptr();
  MultiPoly out(ring_ptr);
  if (a.is_zero() || b.is_zero()) return out;
  const NumberRing& ring = *ring_ptr;
  std::vector<std::pair<Monomial, NumberRingElement>> left(a.terms().begin(), a.terms().end());
  const long n = static_cast<long>(left.size());
  const int threads = omp_get_max_threads();
  std::vector<MultiPoly::Terms> partial(threads);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    auto& local = partial[omp_get_thread_num()];
    for (const auto& [mb, cb] : b.terms()) {
      accumulate(local, left[i].first * mb, ring.mul(left[i].second, cb), ring);
    }
  }
  for (const auto& terms : partial) {
    for (const auto& [m, c] : terms) out.add_term(m, c);
  }
  return out;
}

std::optional<MultiPoly> try_div_pi(const BaseTriple& triple, const MultiPoly& p) {
  MultiPoly out(p.ring_ptr());
  for (const auto& [m, c] : p.terms()) {
    auto y = triple.try_div_pi(c);
    if (!y) return std::nullopt;
    out.add_term(m, *y);
  }
  return out;
}

MultiPoly exact_div_pi(const BaseTriple& triple, const MultiPoly& p) {
  auto out = try_div_pi(triple, p);
  if (!out) throw Error(ErrorKind::NotDivisible, "polynomial not divisible by pi: " + p.to_string());
  return std::move(*out);
}

MultiPoly reduce_coefficients(const Lattice& lattice, const MultiPoly& p) {
  return p.map_coefficients([&](const NumberRingElement& c) {
    return NumberRingElement{lattice.reduce(c.coeffs)};
  });
}

MultiPoly phi_A(const BaseTriple& triple, const MultiPoly& p) {
  const auto& ring = triple.ring_ptr();
  std::map<JetVar, MultiPoly> images;
  for (const auto& v : p.variables()) {
    images.emplace(v, MultiPoly::variable(ring, v, static_cast<unsigned>(triple.q())) +
                          MultiPoly::constant(ring, triple.pi()) * MultiPoly::variable(ring, v.next()));
  }
  return p.substitute(images);
}

MultiPoly q_delta(const BaseTriple& triple, const MultiPoly& p) {
  MultiPoly base = p;
  if (!base.ring_ptr()) base = MultiPoly(triple.ring_ptr());
  return exact_div_pi(triple, phi_A(triple, base) - base.pow(triple.q()));
}

MultiPoly iterate_q_delta(const BaseTriple& triple, const MultiPoly& p, unsigned k) {
  MultiPoly out = p;
  for (unsigned i = 0; i < k; ++i) out = q_delta(triple, out);
  return out;
}

MultiPoly c_pi(const BaseTriple& triple, const JetVar& x, const JetVar& y) {
  const auto& ring = triple.ring_ptr();
  const unsigned q = static_cast<unsigned>(triple.q());
  MultiPoly X = MultiPoly::variable(ring, x), Y = MultiPoly::variable(ring, y);
  return exact_div_pi(triple, X.pow(q) + Y.pow(q) - (X + Y).pow(q));
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected integer, got " + j.dump());
}

}  // namespace

nlohmann::json coeff_to_json(const NumberRingElement& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : c.coeffs) out.push_back(integer_to_json(x));
  return out;
}

NumberRingElement coeff_from_json(const NumberRing& ring, const nlohmann::json& j) {
  if (!j.is_array()) return ring.from_int(integer_from_json(j));
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return ring.make(std::move(c));
}

nlohmann::json jetvar_to_json(const JetVar& v) { return {v.family, v.gamma, v.order}; }

JetVar jetvar_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::Parse, "bad variable " + j.dump());
  return JetVar{j[0].get<std::string>(), j[1].get<unsigned>(), j[2].get<unsigned>()};
}

nlohmann::json to_json(const MultiPoly& p) {
  const auto vars_set = p.variables();
  std::vector<JetVar> vars(vars_set.begin(), vars_set.end());
  nlohmann::json jvars = nlohmann::json::array();
  for (const auto& v : vars) jvars.push_back(jetvar_to_json(v));
  nlohmann::json jterms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<unsigned> exps(vars.size(), 0);
    for (const auto& [v, e] : it->first.powers()) {
      exps[std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()] = e;
    }
    jterms.push_back({exps, coeff_to_json(it->second)});
  }
  return {{"vars", jvars}, {"terms", jterms}};
}

MultiPoly poly_from_json(MultiPoly::RingPtr ring, const nlohmann::json& j) {
  try {
    std::vector<JetVar> vars;
    for (const auto& v : j.at("vars")) vars.push_back(jetvar_from_json(v));
    MultiPoly out(ring);
    for (const auto& term : j.at("terms")) {
      const auto& exps = term.at(0);
      if (exps.size() != vars.size()) throw Error(ErrorKind::Parse, "exponent vector length mismatch");
      std::vector<std::pair<JetVar, unsigned>> powers;
      for (std::size_t i = 0; i < vars.size(); ++i) powers.emplace_back(vars[i], exps[i].get<unsigned>());
      out.add_term(Monomial(std::move(powers)), coeff_from_json(*ring, term.at(1)));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(const BaseTriple& triple, const std::string& text) : triple_(triple), text_(text) {}

  MultiPoly parse() {
    MultiPoly out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly out(triple_.ring_ptr());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly first = term();
    out = negate ? -first : first;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  MultiPoly term() {
    MultiPoly out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoul(text_.substr(start, pos_ - start)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    const auto& ring = triple_.ring_ptr();
    if (accept('(')) {
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('-')) return -atom();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::integer(ring, Integer(text_.substr(start, pos_ - start)));
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      unsigned gamma = 0;
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected index after '_'");
        gamma = static_cast<unsigned>(std::stoul(text_.substr(digits, pos_ - digits)));
      }
      unsigned order = 0;
      while (pos_ < text_.size() && text_[pos_] == '\'') {
        ++pos_;
        ++order;
      }
      if (name == "pi" && gamma == 0 && order == 0) return MultiPoly::constant(ring, triple_.pi());
      if (name == "t" && gamma == 0 && order == 0 && ring->degree() > 1) {
        return MultiPoly::constant(ring, ring->generator());
      }
      return MultiPoly::variable(ring, JetVar{name, gamma, order});
    }
    fail("expected a term");
  }

  const BaseTriple& triple_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const BaseTriple& triple, const std::string& text) {
  return PolyParser(triple, text).parse();
}

// ---------------------------------------------------------------------------

PolyRing::PolyRing(TriplePtr triple, std::optional<unsigned> pi_power) : triple_(std::move(triple)) {
  if (pi_power) lattice_ = std::make_shared<const Lattice>(triple_->pi_power_lattice(*pi_power));
}

PolyRing::Element PolyRing::reduce(const Element& a) const {
  if (!lattice_) return a;
  return reduce_coefficients(*lattice_, a);
}

PolyRing::Element PolyRing::from_int(const Integer& n) const {
  return reduce(MultiPoly::integer(triple_->ring_ptr(), n));
}

PolyRing::Element PolyRing::from_base(const NumberRingElement& c) const {
  return reduce(MultiPoly::constant(triple_->ring_ptr(), c));
}

}  // namespace wittjet
