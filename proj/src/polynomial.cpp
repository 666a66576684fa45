#include "mfkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "mfkit/error.hpp"

namespace mfkit {

int exponent_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = exponent_sum(a), db = exponent_sum(b);
  if (da != db) return da > db;
  return a > b;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Ring::Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}

Ring::Ring(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_identifier(names[i])) throw Error("invalid variable name '" + names[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw Error("duplicate variable '" + names[i] + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

Ring Ring::joined(const Ring& other) const {
  std::vector<std::string> out = names();
  for (const auto& n : other.names()) {
    if (!contains(n)) out.push_back(n);
  }
  return Ring(std::move(out));
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, const Cyclo& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.emplace(Exponents(ring_.size(), 0), constant);
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  auto idx = ring.index_of(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  Exponents e(ring.size(), 0);
  e[*idx] = 1;
  return monomial(ring, std::move(e));
}

Polynomial Polynomial::monomial(const Ring& ring, Exponents exponents, const Cyclo& coefficient) {
  if (exponents.size() != ring.size()) throw DimensionMismatch("exponent vector does not match ring arity");
  Polynomial p(ring);
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0;
}

Cyclo Polynomial::constant_term() const { return coefficient(Exponents(ring_.size(), 0)); }

Cyclo Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclo(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return exponent_sum(terms_.begin()->first);  // grlex puts the highest degree first
}

unsigned Polynomial::field_order() const {
  unsigned k = 1;
  for (const auto& [e, c] : terms_) k = lcm_order(k, c.order());
  return k;
}

void Polynomial::add_term(const Exponents& e, const Cyclo& c) {
  if (c.is_zero()) return;
  if (e.size() != ring_.size()) throw DimensionMismatch("exponent vector does not match ring arity");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

// Constants on the empty ring mix freely with any ring.
const Ring& common_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return a.ring();
  if (b.ring().size() == 0) return a.ring();
  if (a.ring().size() == 0) return b.ring();
  throw DimensionMismatch("polynomials live on different rings");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  const Ring& r = common_ring(*this, other);
  if (r != ring_) *this = to_ring(r);
  if (other.ring_ != ring_) {
    Polynomial o = other.to_ring(ring_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Ring& r = common_ring(a, b);
  if (a.ring() != r) return a.to_ring(r) * b;
  if (b.ring() != r) return a * b.to_ring(r);
  Polynomial out(r);
  Exponents e(r.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Cyclo& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ == b.ring_) return a.terms_ == b.terms_;
  if (a.is_zero() && b.is_zero()) return true;
  try {
    const Ring& r = common_ring(a, b);
    return a.to_ring(r).terms_ == b.to_ring(r).terms_;
  } catch (const DimensionMismatch&) {
    return false;
  }
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(ring_, Cyclo(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * Cyclo(static_cast<long>(e[var])));
  }
  return out;
}

Polynomial Polynomial::derivative(std::string_view var) const {
  auto idx = ring_.index_of(var);
  if (!idx) return Polynomial(ring_);
  return derivative(*idx);
}

Polynomial Polynomial::to_ring(const Ring& target) const {
  if (target == ring_) return *this;
  std::vector<std::optional<std::size_t>> map(ring_.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) map[i] = target.index_of(ring_.name(i));
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) throw Error("variable '" + ring_.name(i) + "' is not in the target ring");
      f[*map[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::specialized_to_zero(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) {
    if (auto i = ring_.index_of(v)) idx.push_back(*i);
  }
  Polynomial out(ring_);
  for (const auto& [e, c] : terms_) {
    bool keep = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return e[i] == 0; });
    if (keep) out.terms_.emplace(e, c);
  }
  return out;
}

std::vector<std::size_t> Polynomial::used_variables() const {
  std::vector<bool> used(ring_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

std::string monomial_to_string(const Ring& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool unit_monomial = exponent_sum(e) == 0;
    std::string mono = monomial_to_string(ring_, e);
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      mpq_class mag = abs(c.rational());
      negative = c.rational() < 0;
      if (unit_monomial) {
        body = rational_to_string(mag);
      } else if (mag == 1) {
        body = mono;
      } else {
        body = rational_to_string(mag) + "*" + mono;
      }
    } else if (c.is_compound()) {
      body = "(" + c.to_string() + ")";
      if (!unit_monomial) body += "*" + mono;
    } else {
      std::string lit = c.to_string();
      if (lit[0] == '-') {
        negative = true;
        lit.erase(0, 1);
      }
      body = unit_monomial ? lit : lit + "*" + mono;
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    out << body;
    first = false;
  }
  return out.str();
}

Polynomial substitute(const Polynomial& p, const Substitution& images, const Ring& target) {
  const Ring& ring = p.ring();
  std::vector<const Polynomial*> img(ring.size(), nullptr);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    auto it = images.find(ring.name(i));
    if (it != images.end()) img[i] = &it->second;
  }
  for (std::size_t i : p.used_variables()) {
    if (!img[i]) throw Error("missing image for variable '" + ring.name(i) + "'");
  }
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(ring.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial(target, Cyclo(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * img[i]->to_ring(target));
    return cache[static_cast<std::size_t>(k)];
  };
  Polynomial out(target);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const Substitution& images) {
  if (images.empty()) {
    if (!p.used_variables().empty()) throw Error("missing image for variable '" + p.ring().name(p.used_variables()[0]) + "'");
    return Polynomial(Ring(), p.constant_term());
  }
  Ring target = images.begin()->second.ring();
  for (const auto& [name, img] : images) {
    if (img.ring() != target) {
      if (img.ring().size() == 0) continue;
      if (target.size() == 0) {
        target = img.ring();
        continue;
      }
      throw DimensionMismatch("substitution images live on different rings");
    }
  }
  return substitute(p, images, target);
}

Substitution identity_substitution(const Ring& ring) {
  Substitution s;
  for (const auto& n : ring.names()) s.emplace(n, Polynomial::variable(ring, n));
  return s;
}

Substitution compose(const Substitution& first, const Substitution& second, const Ring& target) {
  Substitution out;
  for (const auto& [name, img] : first) out.emplace(name, substitute(img, second, target));
  return out;
}

bool substitutions_equal(const Substitution& a, const Substitution& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [name, img] : a) {
    auto it = b.find(name);
    if (it == b.end() || !(it->second == img)) return false;
  }
  return true;
}

}  // namespace mfkit
