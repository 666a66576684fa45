#include "mfkit/qdim.hpp"

#include <exception>
#include <map>
#include <memory>
#include <mutex>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Polynomial>>;
using SparseMatrix = std::vector<SparseRow>;

SparseMatrix to_sparse(const PolyMatrix& m) {
  SparseMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) s[i].emplace_back(j, m(i, j));
  return s;
}

// Entry (i, i) of the product of the factors, reducing after each step.
Polynomial diagonal_entry(std::size_t i, const std::vector<SparseMatrix>& factors, const Ring& ring,
                          const GroebnerBasis* gb) {
  std::map<std::size_t, Polynomial> v;
  v.emplace(i, Polynomial(ring, Cyclo(1)));
  for (const auto& f : factors) {
    std::map<std::size_t, Polynomial> next;
    for (const auto& [k, vk] : v)
      for (const auto& [j, mkj] : f[k]) {
        auto it = next.try_emplace(j, Polynomial(ring)).first;
        it->second += vk * mkj;
      }
    for (auto it = next.begin(); it != next.end();) {
      if (gb) it->second = gb->normal_form(it->second);
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    }
    v = std::move(next);
    if (v.empty()) break;
  }
  auto it = v.find(i);
  return it == v.end() ? Polynomial(ring) : it->second;
}

// Supertrace of the product; the parallel kernel splits over diagonal positions.
Polynomial product_supertrace(const std::vector<SparseMatrix>& factors, std::size_t even, std::size_t total,
                              const Ring& ring, const GroebnerBasis* gb, Kernel kernel) {
  std::vector<Polynomial> diag(total, Polynomial(ring));
  if (kernel == Kernel::Serial) {
    for (std::size_t i = 0; i < total; ++i) diag[i] = diagonal_entry(i, factors, ring, gb);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(total); ++i) {
      try {
        diag[i] = diagonal_entry(static_cast<std::size_t>(i), factors, ring, gb);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  Polynomial s(ring);
  for (std::size_t i = 0; i < total; ++i) {
    if (i < even) s += diag[i];
    else s -= diag[i];
  }
  return s;
}

const JacobiData* side_jacobi(const Polynomial& f, const std::optional<WeightSystem>& weights,
                              const GroebnerOptions& options, std::unique_ptr<JacobiData>& holder) {
  try {
    return &cached_jacobi(f, options);
  } catch (const Inhomogeneous&) {
    if (!weights) throw Ungraded("potential " + f.to_string() + " is not quasi-homogeneous");
  }
  try {
    holder = std::make_unique<JacobiData>(jacobi_build(f, *weights, MonomialOrder::grevlex(), options));
  } catch (const Inhomogeneous& e) {
    throw Ungraded(e.what());
  }
  return holder.get();
}

// Residue over one side with the other side's variables set to zero.
Cyclo side_residue(const MatrixFactorization& X, bool over_target, const QDimOptions& options) {
  const Ring& keep = over_target ? X.target : X.source;
  const Ring& drop = over_target ? X.source : X.target;
  const Polynomial f = over_target ? X.target_potential() : X.source_potential();
  std::optional<WeightSystem> w;
  if (X.grading) w = over_target ? X.grading->target_weights : X.grading->source_weights;

  const JacobiData* jd = nullptr;
  std::unique_ptr<JacobiData> holder;
  if (keep.size() > 0) jd = side_jacobi(f, w, options.groebner, holder);

  const PolyMatrix d = X.full();
  std::vector<SparseMatrix> factors;
  for (std::size_t k = 0; k < X.ring.size(); ++k)
    factors.push_back(to_sparse(d.derivative(k).specialized_to_zero(drop.names()).to_ring(keep)));
  const Polynomial s = product_supertrace(factors, X.even_rank(), X.even_rank() + X.odd_rank(), keep,
                                          jd ? &jd->gb : nullptr, options.kernel);
  if (!jd) return s.constant_term();
  return residue(s, *jd);
}

bool all_equal(const Dims& d, const Cyclo& v) { return d.left == v && d.right == v; }

std::string exponent_name(SignExponent e) {
  switch (e) {
    case SignExponent::BinomSource: return "binom(m+1,2)";
    case SignExponent::BinomTarget: return "binom(n+1,2)";
    case SignExponent::BinomSourcePlusOne: return "binom(m+1,2)+1";
    case SignExponent::BinomTargetPlusOne: return "binom(n+1,2)+1";
  }
  return "?";
}

std::string parity_name(DaggerParity p) {
  switch (p) {
    case DaggerParity::Total: return "total";
    case DaggerParity::Source: return "source";
    case DaggerParity::Target: return "target";
  }
  return "?";
}

// Conventions that agree on left*right for every arity pair with nonzero dimensions.
bool same_products(const SignConvention& a, const SignConvention& b) {
  for (std::size_t m = 0; m <= 16; ++m)
    for (std::size_t n = m % 2; n <= 16; n += 2)
      if (a.sign(a.left_exponent, m, n) * a.sign(a.right_exponent, m, n) !=
          b.sign(b.left_exponent, m, n) * b.sign(b.right_exponent, m, n))
        return false;
  return true;
}

}  // namespace

Polynomial supertrace(const PolyMatrix& M, std::size_t even_rank) {
  if (M.rows() != M.cols()) throw DimensionMismatch("supertrace needs a square matrix");
  if (even_rank > M.rows()) throw DimensionMismatch("even rank exceeds matrix size");
  Polynomial s(M.ring());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i < even_rank) s += M(i, i);
    else s -= M(i, i);
  }
  return s;
}

const JacobiData& cached_jacobi(const Polynomial& f, const GroebnerOptions& options) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<JacobiData>> cache;
  std::string key;
  for (const auto& n : f.ring().names()) key += n + ",";
  key += "|" + f.to_string();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto jd = std::make_unique<JacobiData>(jacobi_build(f, MonomialOrder::grevlex(), options));
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(jd));
  return *it->second;
}

RawResidues raw_residues(const MatrixFactorization& X, const QDimOptions& options) {
  if (X.d0.rows() != X.d1.cols() || X.d0.cols() != X.d1.rows())
    throw DimensionMismatch("factorization blocks have incompatible shapes");
  RawResidues r;
  r.m = X.source.size();
  r.n = X.target.size();
  r.over_target = side_residue(X, true, options);
  r.over_source = side_residue(X, false, options);
  return r;
}

int SignConvention::sign(SignExponent e, std::size_t m, std::size_t n) const {
  std::size_t k = 0;
  switch (e) {
    case SignExponent::BinomSource: k = m * (m + 1) / 2; break;
    case SignExponent::BinomTarget: k = n * (n + 1) / 2; break;
    case SignExponent::BinomSourcePlusOne: k = m * (m + 1) / 2 + 1; break;
    case SignExponent::BinomTargetPlusOne: k = n * (n + 1) / 2 + 1; break;
  }
  return k % 2 == 0 ? 1 : -1;
}

std::string SignConvention::describe() const {
  return std::string("left = (-1)^") + exponent_name(left_exponent) + " * Res over " +
         (left_over_target ? "target" : "source") + ", right = (-1)^" + exponent_name(right_exponent) +
         " * Res over " + (left_over_target ? "source" : "target") + ", dagger parity " + parity_name(dagger_parity);
}

std::vector<SignConvention> candidate_conventions(DaggerParity parity) {
  const SignExponent all[] = {SignExponent::BinomSource, SignExponent::BinomTarget, SignExponent::BinomSourcePlusOne,
                              SignExponent::BinomTargetPlusOne};
  std::vector<SignConvention> out;
  for (auto l : all)
    for (auto r : all) out.push_back({true, l, r, parity});
  return out;
}

Dims apply_convention(const RawResidues& raw, const SignConvention& c) {
  const Cyclo& l = c.left_over_target ? raw.over_target : raw.over_source;
  const Cyclo& r = c.left_over_target ? raw.over_source : raw.over_target;
  return {l * Cyclo(c.sign(c.left_exponent, raw.m, raw.n)), r * Cyclo(c.sign(c.right_exponent, raw.m, raw.n))};
}

Dims qdims(const MatrixFactorization& X, const SignConvention& c, const QDimOptions& options) {
  return apply_convention(raw_residues(X, options), c);
}

MatrixFactorization koszul_of_potential(const Polynomial& W) {
  const Ring& ring = W.ring();
  std::vector<KoszulPair> pairs;
  for (std::size_t i = 0; i < ring.size(); ++i)
    pairs.push_back({Polynomial::variable(ring, ring.name(i)), Polynomial(ring)});
  for (const auto& [e, c] : W.terms()) {
    std::size_t first = 0;
    while (first < e.size() && e[first] == 0) ++first;
    if (first == e.size()) throw Error("potential has a constant term");
    Exponents rest = e;
    --rest[first];
    pairs[first].b.add_term(rest, c);
  }
  return koszul(pairs, Ring(), ring, Polynomial(Ring()), W);
}

CalibrationReport calibrate(const std::vector<Polynomial>& suite, const QDimOptions& options) {
  bool odd = false, even = false;
  for (const auto& w : suite) (w.ring().size() % 2 ? odd : even) = true;
  if (!odd || !even) throw CalibrationError("ambiguous: suite must contain potentials with odd and even variable counts");

  struct Item {
    MatrixFactorization mf;
    bool unit;
    RawResidues raw;
  };
  std::vector<Item> items;
  for (const auto& w : suite) {
    const MatrixFactorization delta = diagonal_delta(w);
    const MatrixFactorization k = knorrer_certificate(w);
    for (const auto& [mf, unit] : {std::pair{delta, true}, std::pair{k, false}, std::pair{dual(k), false}})
      items.push_back({mf, unit, raw_residues(mf, options)});
  }

  for (DaggerParity parity : {DaggerParity::Total, DaggerParity::Source, DaggerParity::Target}) {
    std::vector<RawResidues> dagger_raw;
    for (const auto& it : items) dagger_raw.push_back(raw_residues(dagger(it.mf, parity), options));
    std::vector<SignConvention> passing;
    for (const auto& c : candidate_conventions(parity)) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < items.size(); ++i) {
        const Dims d = apply_convention(items[i].raw, c);
        if (items[i].unit && !all_equal(d, Cyclo(1))) ok = false;
        if (ok && !(d.left == apply_convention(dagger_raw[i], c).right)) ok = false;
      }
      if (ok) passing.push_back(c);
    }
    if (passing.empty()) continue;
    for (const auto& c : passing)
      if (!same_products(c, passing.front()))
        throw CalibrationError("ambiguous: " + std::to_string(passing.size()) + " sign conventions fit the suite");
    return {passing.front(), passing.size(), items.size()};
  }
  throw CalibrationError("no consistent convention");
}

std::vector<Polynomial> default_calibration_suite() {
  const Ring x({"x"});
  const Ring xy({"x", "y"});
  const Polynomial X = Polynomial::variable(x, "x");
  const Polynomial X2 = Polynomial::variable(xy, "x"), Y2 = Polynomial::variable(xy, "y");
  return {X.pow(2), X.pow(3), X2.pow(3) + Y2.pow(3), X2.pow(4) + Y2.pow(2)};
}

const CalibrationReport& session_calibration() {
  static std::once_flag flag;
  static CalibrationReport report;
  std::call_once(flag, [] { report = calibrate(default_calibration_suite()); });
  return report;
}

const SignConvention& session_convention() { return session_calibration().convention; }

MatrixFactorization calibrated_dagger(const MatrixFactorization& X) {
  return dagger(X, session_convention().dagger_parity);
}

Cyclo qdim_left(const MatrixFactorization& X, const QDimOptions& options) {
  return qdims(X, session_convention(), options).left;
}

Cyclo qdim_right(const MatrixFactorization& X, const QDimOptions& options) {
  return qdims(X, session_convention(), options).right;
}

bool is_positive_rational(const Cyclo& c) { return c.is_rational() && c.rational() > 0; }

QDimResult qdim_result(const MatrixFactorization& X, const QDimOptions& options) {
  const Dims d = qdims(X, session_convention(), options);
  QDimResult r;
  r.left = d.left;
  r.right = d.right;
  r.product = d.left * d.right;
  r.invertible_left = !d.left.is_zero();
  r.invertible_right = !d.right.is_zero();
  r.rational_positive_product = is_positive_rational(r.product);
  return r;
}

EquivalenceCertificate certify_equivalence(const MatrixFactorization& X, std::optional<long> claimed_group_order,
                                           const QDimOptions& options) {
  EquivalenceCertificate c;
  c.mf = X;
  c.dims = qdim_result(X, options);
  c.group_order_claim = claimed_group_order;
  c.verdict = c.dims.invertible_left && c.dims.invertible_right;
  if (claimed_group_order) c.product_matches_group_order = c.dims.product == Cyclo(*claimed_group_order);
  return c;
}

bool scalarity_holds(const MatrixFactorization& X, const QDimOptions& options) {
  const RawResidues raw = raw_residues(X, options);
  const PolyMatrix d = X.full();
  PolyMatrix lambda = PolyMatrix::identity(d.rows(), X.ring);
  for (std::size_t k = 0; k < X.ring.size(); ++k) lambda = lambda * d.derivative(k);
  const Polynomial s = supertrace(lambda, X.even_rank());
  for (bool over_target : {true, false}) {
    const Ring& keep = over_target ? X.target : X.source;
    const Ring& other = over_target ? X.source : X.target;
    const Cyclo expected = over_target ? raw.over_target : raw.over_source;
    Polynomial value;
    if (keep.size() == 0) {
      value = s;
    } else {
      value = residue_parametric(s, cached_jacobi(over_target ? X.target_potential() : X.source_potential(),
                                                  options.groebner));
    }
    value = value.to_ring(other);
    if (other.size() > 0) {
      const Polynomial pot = over_target ? X.source_potential() : X.target_potential();
      value = cached_jacobi(pot, options.groebner).gb.normal_form(value);
    }
    if (!value.is_constant() || !(value.constant_term() == expected)) return false;
  }
  return true;
}

}  // namespace mfkit
