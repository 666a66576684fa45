#include "mfkit/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mfkit/error.hpp"

namespace mfkit {
namespace {

using QPoly = std::vector<mpq_class>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// a = q*b + r
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

// Reduce modulo a monic integer polynomial of degree phi.
void reduce_mod(QPoly& p, const std::vector<mpz_class>& modulus) {
  std::size_t phi = modulus.size() - 1;
  for (std::size_t i = p.size(); i-- > phi;) {
    if (p[i] == 0) continue;
    mpq_class c = p[i];
    for (std::size_t j = 0; j < phi; ++j) p[i - phi + j] -= c * modulus[j];
    p[i] = 0;
  }
  p.resize(phi);
}

std::vector<mpz_class> compute_cyclotomic(unsigned k) {
  // t^k - 1 divided by every Phi_d for proper divisors d.
  QPoly num(k + 1);
  num[0] = -1;
  num[k] = 1;
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    const auto& phi_d = cyclotomic_polynomial(d);
    QPoly den(phi_d.begin(), phi_d.end());
    QPoly q, r;
    qdivmod(num, den, q, r);
    num = q;
  }
  std::vector<mpz_class> out;
  out.reserve(num.size());
  for (auto& c : num) out.push_back(c.get_num());
  return out;
}

long legendre(long a, long p) {
  long result = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
  long acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  result = acc;
  return result == 1 ? 1 : (result == 0 ? 0 : -1);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned order) {
  static std::recursive_mutex mutex;
  static std::map<unsigned, std::vector<mpz_class>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order == 0) throw Error("cyclotomic order must be positive");
  std::vector<mpz_class> poly;
  if (order == 1) {
    poly = {mpz_class(-1), mpz_class(1)};
  } else {
    poly = compute_cyclotomic(order);
  }
  return cache.emplace(order, std::move(poly)).first->second;
}

Cyclo::Cyclo() : order_(1), coords_{mpq_class(0)} {}
Cyclo::Cyclo(long value) : order_(1), coords_{mpq_class(value)} {}
Cyclo::Cyclo(const mpq_class& value) : order_(1), coords_{value} {}

Cyclo::Cyclo(unsigned order, std::vector<mpq_class> coords) : order_(order), coords_(std::move(coords)) {
  if (order_ == 0) throw Error("cyclotomic order must be positive");
  const auto& modulus = cyclotomic_polynomial(order_);
  reduce_mod(coords_, modulus);
  normalize();
}

Cyclo Cyclo::zeta(unsigned order, long power) {
  if (order == 0) throw Error("cyclotomic order must be positive");
  long e = power % static_cast<long>(order);
  if (e < 0) e += order;
  std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = 1;
  return Cyclo(order, std::move(c));
}

void Cyclo::normalize() {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return;
  }
  mpq_class c = coords_.empty() ? mpq_class(0) : coords_[0];
  order_ = 1;
  coords_.assign(1, c);
}

bool Cyclo::is_zero() const { return order_ == 1 && coords_[0] == 0; }
bool Cyclo::is_one() const { return order_ == 1 && coords_[0] == 1; }
bool Cyclo::is_rational() const { return order_ == 1; }

const mpq_class& Cyclo::rational() const {
  if (order_ != 1) throw Error("cyclotomic number is not rational");
  return coords_[0];
}

Cyclo Cyclo::lifted(unsigned target) const {
  if (target % order_ != 0) throw Error("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" + std::to_string(target) + ")");
  if (target == order_) return *this;
  unsigned step = target / order_;
  std::vector<mpq_class> c(coords_.size() * step + 1);
  for (std::size_t j = 0; j < coords_.size(); ++j) c[j * step] = coords_[j];
  Cyclo out;
  out.order_ = target;
  out.coords_ = std::move(c);
  reduce_mod(out.coords_, cyclotomic_polynomial(target));
  // Keep the lifted representation even if rational; callers need a common order.
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  unsigned k = lcm_order(order_, other.order_);
  if (k != order_) *this = lifted(k);
  if (other.order_ == k) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  } else {
    Cyclo b = other.lifted(k);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
  }
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) { return *this += -other; }

Cyclo& Cyclo::operator*=(const Cyclo& other) {
  if (order_ == 1 && other.order_ == 1) {
    coords_[0] *= other.coords_[0];
    return *this;
  }
  if (other.order_ == 1) {
    for (auto& c : coords_) c *= other.coords_[0];
    normalize();
    return *this;
  }
  if (order_ == 1) {
    mpq_class s = coords_[0];
    *this = other;
    for (auto& c : coords_) c *= s;
    normalize();
    return *this;
  }
  unsigned k = lcm_order(order_, other.order_);
  Cyclo a = lifted(k), b = other.lifted(k);
  QPoly prod = qmul(a.coords_, b.coords_);
  reduce_mod(prod, cyclotomic_polynomial(k));
  order_ = k;
  coords_ = std::move(prod);
  normalize();
  return *this;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error("division by zero in cyclotomic field");
  if (order_ == 1) return Cyclo(mpq_class(1) / coords_[0]);
  const auto& modulus = cyclotomic_polynomial(order_);
  QPoly m(modulus.begin(), modulus.end());
  QPoly a = coords_;
  trim(a);
  // Extended Euclid: track s with s*a == r (mod m).
  QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi_k is irreducible.
  mpq_class c = r0[0];
  for (auto& v : s0) v /= c;
  return Cyclo(order_, s0);
}

Cyclo& Cyclo::operator/=(const Cyclo& other) { return *this *= other.inverse(); }

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclo Cyclo::pow(long exponent) const {
  Cyclo base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Cyclo result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_) return a.coords_ == b.coords_;
  // Normalized numbers of different orders can still be equal (zeta_3 in order 6).
  unsigned k = lcm_order(a.order_, b.order_);
  return a.lifted(k).coords_ == b.lifted(k).coords_;
}

bool Cyclo::is_compound() const {
  int nonzero = 0;
  for (auto& c : coords_) nonzero += (c != 0);
  if (nonzero > 1) return true;
  return false;
}

std::string Cyclo::to_string() const {
  if (order_ == 1) return rational_to_string(coords_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const mpq_class& c = coords_[j];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << rational_to_string(mag);
      continue;
    }
    if (mag != 1) out << rational_to_string(mag) << "*";
    out << "zeta" << order_;
    if (j > 1) out << "^" << j;
  }
  return out.str();
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("invalid rational literal '" + text + "'");
  q.canonicalize();
  if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  return q;
}

std::string rational_to_string(const mpq_class& value) { return value.get_str(); }

bool cyclo_sqrt(const mpq_class& value, Cyclo& out, unsigned prime_limit) {
  if (value == 0) {
    out = Cyclo(0);
    return true;
  }
  mpz_class n = value.get_num() * value.get_den();
  Cyclo result(mpq_class(1, 1) / mpq_class(value.get_den()));
  if (n < 0) {
    result *= Cyclo::zeta(4);
    n = -n;
  }
  mpz_class square_part = 1;
  for (unsigned p = 2; p <= prime_limit; ++p) {
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
    if (!prime) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) square_part *= p;
    if (e % 2 == 0) continue;
    if (p == 2) {
      result *= Cyclo::zeta(8, 1) + Cyclo::zeta(8, -1);
      continue;
    }
    Cyclo gauss;
    for (long a = 1; a < static_cast<long>(p); ++a) {
      long s = legendre(a, p);
      gauss += Cyclo(s) * Cyclo::zeta(p, a);
    }
    if (p % 4 == 3) gauss *= Cyclo::zeta(4);
    result *= gauss;
  }
  if (n != 1) {
    mpz_class root = sqrt(n);
    if (root * root != n) return false;
    square_part *= root;
  }
  out = result * Cyclo(mpq_class(square_part));
  return true;
}

}  // namespace mfkit
