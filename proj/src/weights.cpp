#include "mfkit/weights.hpp"

#include <numeric>

#include "mfkit/error.hpp"

namespace mfkit {

WeightSystem::WeightSystem(std::map<std::string, long> weights, std::optional<long> degree)
    : weights_(std::move(weights)), degree_(degree) {
  for (const auto& [v, w] : weights_) {
    if (w <= 0) throw Error("weight of '" + v + "' must be positive");
  }
  if (degree_ && *degree_ <= 0) throw Error("degree must be positive");
}

WeightSystem WeightSystem::from_charges(const std::map<std::string, mpq_class>& charges) {
  mpz_class l = 1;
  for (const auto& [v, q] : charges) {
    if (q <= 0) throw Error("charge of '" + v + "' must be positive");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::map<std::string, mpz_class> ints;
  mpz_class g = l;
  for (const auto& [v, q] : charges) {
    mpz_class w = q.get_num() * (l / q.get_den());
    ints[v] = w;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
  }
  std::map<std::string, long> out;
  for (auto& [v, w] : ints) out[v] = mpz_class(w / g).get_si();
  return WeightSystem(std::move(out), mpz_class(l / g).get_si());
}

long WeightSystem::weight(const std::string& var) const {
  auto it = weights_.find(var);
  if (it == weights_.end()) throw Error("no weight for variable '" + var + "'");
  return it->second;
}

std::map<std::string, mpq_class> WeightSystem::charges() const {
  if (!degree_) throw Error("weight system has no degree");
  std::map<std::string, mpq_class> out;
  for (const auto& [v, w] : weights_) {
    mpq_class q(w, *degree_);
    q.canonicalize();
    out[v] = q;
  }
  return out;
}

WeightSystem WeightSystem::merged(const WeightSystem& other) const {
  if (degree_ && other.degree_ && *degree_ != *other.degree_) throw Error("weight systems have different degrees");
  auto w = weights_;
  for (const auto& [v, x] : other.weights_) {
    auto [it, inserted] = w.emplace(v, x);
    if (!inserted && it->second != x) throw Error("conflicting weights for '" + v + "'");
  }
  return WeightSystem(std::move(w), degree_ ? degree_ : other.degree_);
}

mpq_class monomial_weight(const Ring& ring, const Exponents& e, const WeightSystem& w) {
  mpq_class total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) total += mpq_class(e[i]) * w.weight(ring.name(i));
  }
  return total;
}

DegreeInfo weighted_degree(const Polynomial& p, const WeightSystem& w) {
  DegreeInfo info;
  if (p.is_zero()) return info;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    mpq_class d = monomial_weight(p.ring(), e, w);
    if (first) {
      info.degree = d;
      first = false;
    } else if (d != info.degree) {
      info.kind = DegreeInfo::Kind::Inhomogeneous;
      return info;
    }
  }
  info.kind = DegreeInfo::Kind::Homogeneous;
  return info;
}

std::optional<WeightSystem> infer_weights(const Polynomial& f) {
  auto used = f.used_variables();
  if (used.empty()) return std::nullopt;
  std::size_t n = used.size();
  // Rows: exponent vector restricted to used variables | 1.
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& [e, c] : f.terms()) {
    std::vector<mpq_class> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = e[used[j]];
    row[n] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    mpq_class inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      mpq_class factor = rows[i][col];
      for (std::size_t j = 0; j <= n; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][n] != 0) return std::nullopt;  // inconsistent
  }
  std::vector<mpq_class> q(n, mpq_class(1, 2));
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::size_t i = 0; i < r; ++i) {
    auto col = static_cast<std::size_t>(pivot_col[i]);
    mpq_class v = rows[i][n];
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_pivot[j]) v -= rows[i][j] * q[j];
    }
    q[col] = v;
  }
  std::map<std::string, mpq_class> charges;
  for (std::size_t j = 0; j < n; ++j) {
    if (q[j] <= 0) return std::nullopt;
    charges[f.ring().name(used[j])] = q[j];
  }
  WeightSystem w = WeightSystem::from_charges(charges);
  auto info = weighted_degree(f, w);
  if (info.kind != DegreeInfo::Kind::Homogeneous || info.degree != *w.degree()) return std::nullopt;
  return w;
}

mpq_class central_charge(const Polynomial& f, const WeightSystem& w) {
  auto q = w.charges();
  mpq_class c = 0;
  for (const auto& name : f.ring().names()) {
    auto it = q.find(name);
    if (it == q.end()) throw Error("no weight for variable '" + name + "'");
    c += 1 - 2 * it->second;
  }
  return c;
}

}  // namespace mfkit
