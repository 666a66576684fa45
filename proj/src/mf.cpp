#include "mfkit/mf.hpp"

#include <set>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

PolyMatrix zero_block(std::size_t r, std::size_t c, const Ring& ring) { return PolyMatrix(r, c, ring); }

PolyMatrix parity_matrix(std::size_t even, std::size_t odd, const Ring& ring) {
  PolyMatrix s(even + odd, even + odd, ring);
  for (std::size_t i = 0; i < even + odd; ++i) s(i, i) = Polynomial(ring, Cyclo(i < even ? 1 : -1));
  return s;
}

// Splits a full-index permutation into even and odd index lists of the product.
void split_indices(std::size_t xe, std::size_t xo, std::size_t ye, std::size_t yo, std::vector<std::size_t>& even,
                   std::vector<std::size_t>& odd) {
  const std::size_t yt = ye + yo;
  for (const auto& [i, j] : tensor_index_map(xe, xo, ye, yo)) {
    const bool par = (i >= xe) != (j >= ye);
    (par ? odd : even).push_back(i * yt + j);
  }
}

void add_violation(VerifyReport& r, std::string check, std::size_t row, std::size_t col, std::string detail) {
  r.pass = false;
  r.violations.push_back({std::move(check), row, col, std::move(detail)});
}

bool disjoint(const Ring& a, const Ring& b) {
  for (const auto& n : a.names())
    if (b.contains(n)) return false;
  return true;
}

PolyMatrix apply_substitution(const PolyMatrix& m, const Substitution& g) { return m.substituted(g, m.ring()); }

// Extends an action substitution with the identity on the remaining ring variables.
Substitution extend_to(const Substitution& g, const Ring& ring) {
  Substitution out = identity_substitution(ring);
  for (const auto& [name, image] : g) {
    if (!ring.contains(name)) continue;
    out[name] = image.to_ring(ring);
  }
  return out;
}

}  // namespace

PolyMatrix MatrixFactorization::full() const {
  return block_matrix(zero_block(even_rank(), even_rank(), ring), d1, d0, zero_block(odd_rank(), odd_rank(), ring));
}

MatrixFactorization make_factorization(const Ring& source, const Ring& target, const Polynomial& U, const Polynomial& V,
                                       const PolyMatrix& d1, const PolyMatrix& d0, std::optional<Grading> grading) {
  if (!disjoint(source, target)) throw Error("source and target variables overlap");
  MatrixFactorization X;
  X.source = source;
  X.target = target;
  X.ring = source.joined(target);
  X.U = U.to_ring(source).to_ring(X.ring);
  X.V = V.to_ring(target).to_ring(X.ring);
  X.d1 = d1.to_ring(X.ring);
  X.d0 = d0.to_ring(X.ring);
  if (grading) {
    if (grading->even_degrees.size() != d1.rows() || grading->odd_degrees.size() != d1.cols())
      throw DimensionMismatch("generator degrees do not match block ranks");
  }
  X.grading = std::move(grading);
  return X;
}

VerifyReport mf_verify(const MatrixFactorization& X) {
  if (X.d0.rows() != X.d1.cols() || X.d0.cols() != X.d1.rows())
    throw DimensionMismatch("d1 is " + std::to_string(X.d1.rows()) + "x" + std::to_string(X.d1.cols()) + " but d0 is " +
                            std::to_string(X.d0.rows()) + "x" + std::to_string(X.d0.cols()));
  VerifyReport report;
  const Polynomial w = X.potential();
  auto check = [&](const PolyMatrix& prod, const std::string& name) {
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        const Polynomial expected = i == j ? w : Polynomial(X.ring);
        const Polynomial diff = prod(i, j) - expected;
        if (!diff.is_zero()) add_violation(report, name, i, j, "residual " + diff.to_string());
      }
  };
  check(X.d1 * X.d0, "d1*d0");
  check(X.d0 * X.d1, "d0*d1");

  if (X.grading) {
    const Grading& g = *X.grading;
    if (g.even_degrees.size() != X.even_rank() || g.odd_degrees.size() != X.odd_rank())
      throw DimensionMismatch("generator degrees do not match block ranks");
    const WeightSystem w_all = g.source_weights.merged(g.target_weights);
    const DegreeInfo dw = weighted_degree(w, w_all);
    if (dw.kind == DegreeInfo::Kind::Inhomogeneous || (dw.kind == DegreeInfo::Kind::Homogeneous && dw.degree != g.degree))
      add_violation(report, "grading potential", 0, 0, "potential is not homogeneous of degree " + g.degree.get_str());
    const mpq_class half = g.degree / 2;
    auto entry = [&](const Polynomial& p, const mpq_class& want, const std::string& name, std::size_t i, std::size_t j) {
      if (p.is_zero()) return;
      const DegreeInfo d = weighted_degree(p, w_all);
      if (d.kind != DegreeInfo::Kind::Homogeneous || d.degree != want)
        add_violation(report, name, i, j, "entry " + p.to_string() + " should have degree " + want.get_str());
    };
    for (std::size_t i = 0; i < X.even_rank(); ++i)
      for (std::size_t j = 0; j < X.odd_rank(); ++j) {
        entry(X.d1(i, j), g.odd_degrees[j] - g.even_degrees[i] + half, "grading d1", i, j);
        entry(X.d0(j, i), g.even_degrees[i] - g.odd_degrees[j] + half, "grading d0", j, i);
      }
  }
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> tensor_index_map(std::size_t x_even, std::size_t x_odd,
                                                                   std::size_t y_even, std::size_t y_odd) {
  std::vector<std::pair<std::size_t, std::size_t>> even, odd;
  for (std::size_t i = 0; i < x_even + x_odd; ++i)
    for (std::size_t j = 0; j < y_even + y_odd; ++j) {
      const bool par = (i >= x_even) != (j >= y_even);
      (par ? odd : even).emplace_back(i, j);
    }
  even.insert(even.end(), odd.begin(), odd.end());
  return even;
}

MatrixFactorization external_tensor(const MatrixFactorization& X, const MatrixFactorization& Y) {
  if (!disjoint(X.ring, Y.ring)) throw Error("external tensor needs disjoint variable sets");
  const Ring source = X.source.joined(Y.source);
  const Ring target = X.target.joined(Y.target);
  const Ring ring = source.joined(target);
  const std::size_t xe = X.even_rank(), xo = X.odd_rank(), ye = Y.even_rank(), yo = Y.odd_rank();

  const PolyMatrix dx = X.full().to_ring(ring);
  const PolyMatrix dy = Y.full().to_ring(ring);
  const PolyMatrix d = dx.kronecker(PolyMatrix::identity(ye + yo, ring)) + parity_matrix(xe, xo, ring).kronecker(dy);

  std::vector<std::size_t> even, odd;
  split_indices(xe, xo, ye, yo, even, odd);

  std::optional<Grading> grading;
  if (X.grading && Y.grading) {
    if (X.grading->degree != Y.grading->degree) throw Error("tensor factors have different degrees");
    Grading g;
    g.source_weights = X.grading->source_weights.merged(Y.grading->source_weights);
    g.target_weights = X.grading->target_weights.merged(Y.grading->target_weights);
    g.degree = X.grading->degree;
    auto gen = [&](std::size_t i, const Grading& gr, std::size_t ev) {
      return i < ev ? gr.even_degrees[i] : gr.odd_degrees[i - ev];
    };
    for (const auto& [i, j] : tensor_index_map(xe, xo, ye, yo)) {
      const mpq_class deg = gen(i, *X.grading, xe) + gen(j, *Y.grading, ye);
      const bool par = (i >= xe) != (j >= ye);
      (par ? g.odd_degrees : g.even_degrees).push_back(deg);
    }
    grading = std::move(g);
  }
  return make_factorization(source, target, X.U.to_ring(ring) + Y.U.to_ring(ring), X.V.to_ring(ring) + Y.V.to_ring(ring),
                            d.submatrix(even, odd), d.submatrix(odd, even), std::move(grading));
}

MatrixFactorization unit_factorization() {
  const Ring empty;
  return make_factorization(empty, empty, Polynomial(empty), Polynomial(empty), PolyMatrix(1, 0, empty),
                            PolyMatrix(0, 1, empty));
}

MatrixFactorization koszul(const std::vector<KoszulPair>& pairs, const Ring& source, const Ring& target,
                           const Polynomial& U, const Polynomial& V) {
  const Ring ring = source.joined(target);
  Polynomial sum(ring);
  for (const auto& p : pairs) sum += p.a.to_ring(ring) * p.b.to_ring(ring);
  const Polynomial w = V.to_ring(ring) - U.to_ring(ring);
  if (sum != w) throw Error("Koszul pairs do not sum to the potential; difference " + (sum - w).to_string());

  MatrixFactorization X = make_factorization(source, target, U, V, PolyMatrix(1, 0, ring), PolyMatrix(0, 1, ring));
  for (const auto& p : pairs) {
    PolyMatrix a(1, 1, ring), b(1, 1, ring);
    a(0, 0) = p.a.to_ring(ring);
    b(0, 0) = p.b.to_ring(ring);
    const PolyMatrix full = block_matrix(zero_block(1, 1, ring), a, b, zero_block(1, 1, ring));
    const PolyMatrix d = X.full().kronecker(PolyMatrix::identity(2, ring)) +
                         parity_matrix(X.even_rank(), X.odd_rank(), ring).kronecker(full);
    std::vector<std::size_t> even, odd;
    split_indices(X.even_rank(), X.odd_rank(), 1, 1, even, odd);
    X.d1 = d.submatrix(even, odd);
    X.d0 = d.submatrix(odd, even);
  }
  return X;
}

Polynomial divide_by_difference(const Polynomial& p, std::size_t y, std::size_t x) {
  const Ring& ring = p.ring();
  // Collect p as sum_k c_k y^k.
  std::map<int, Polynomial> by_power;
  int top = 0;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    const int k = rest[y];
    rest[y] = 0;
    auto it = by_power.try_emplace(k, Polynomial(ring)).first;
    it->second.add_term(rest, c);
    top = std::max(top, k);
  }
  if (p.is_zero()) return Polynomial(ring);
  const Polynomial xv = Polynomial::variable(ring, ring.name(x));
  const Polynomial yv = Polynomial::variable(ring, ring.name(y));
  // Synthetic division by (y - x): q_{k-1} = c_k + x q_k.
  Polynomial carry(ring), quotient(ring);
  for (int k = top; k >= 1; --k) {
    auto it = by_power.find(k);
    carry = (it == by_power.end() ? Polynomial(ring) : it->second) + xv * carry;
    quotient += carry * yv.pow(static_cast<unsigned>(k - 1));
  }
  auto it0 = by_power.find(0);
  const Polynomial remainder = (it0 == by_power.end() ? Polynomial(ring) : it0->second) + xv * carry;
  if (!remainder.is_zero()) throw Error("polynomial is not divisible by " + ring.name(y) + " - " + ring.name(x));
  return quotient;
}

std::vector<std::string> target_names(const Ring& source) {
  std::vector<std::string> out;
  for (const auto& n : source.names()) {
    std::string t = n + "_t";
    while (source.contains(t)) t += "_t";
    out.push_back(t);
  }
  return out;
}

std::vector<KoszulPair> delta_pairs(const Polynomial& W, const Ring& joint) {
  const std::size_t n = joint.size() / 2;
  std::vector<KoszulPair> pairs;
  // W(y_1..y_{i}, x_{i+1}..x_n) as substitutions from W's ring.
  auto partial = [&](std::size_t i) {
    Substitution s;
    for (std::size_t k = 0; k < n; ++k)
      s[W.ring().name(k)] = Polynomial::variable(joint, joint.name(k < i ? n + k : k));
    return substitute(W, s, joint);
  };
  Polynomial prev = partial(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial next = partial(i + 1);
    const Polynomial a = Polynomial::variable(joint, joint.name(n + i)) - Polynomial::variable(joint, joint.name(i));
    pairs.push_back({a, divide_by_difference(next - prev, n + i, i)});
    prev = next;
  }
  return pairs;
}

MatrixFactorization diagonal_delta(const Polynomial& W) {
  const Ring source = W.ring();
  const Ring target(target_names(source));
  const Ring joint = source.joined(target);
  Substitution rename;
  for (std::size_t i = 0; i < source.size(); ++i) rename[source.name(i)] = Polynomial::variable(joint, target.name(i));
  const Polynomial V = substitute(W, rename, joint);
  MatrixFactorization X = koszul(delta_pairs(W, joint), source, target, W.to_ring(joint), V);

  if (const auto w = infer_weights(W); w && source.size() > 0) {
    std::map<std::string, long> tw;
    for (std::size_t i = 0; i < source.size(); ++i) tw[target.name(i)] = w->weight(source.name(i));
    Grading g;
    g.source_weights = *w;
    g.target_weights = WeightSystem(tw, w->degree());
    g.degree = mpq_class(*w->degree());
    // Pair i has a = y_i - x_i of degree w_i; generators of the rank-one
    // piece sit at (0, w_i - D/2).
    Grading acc{WeightSystem(), WeightSystem(), g.degree, {mpq_class(0)}, {}};
    std::size_t ev = 1, od = 0;
    for (std::size_t i = 0; i < source.size(); ++i) {
      const mpq_class o = mpq_class(w->weight(source.name(i))) - g.degree / 2;
      std::vector<mpq_class> even, odd;
      for (const auto& [a, b] : tensor_index_map(ev, od, 1, 1)) {
        const mpq_class da = a < ev ? acc.even_degrees[a] : acc.odd_degrees[a - ev];
        const mpq_class deg = da + (b == 0 ? mpq_class(0) : o);
        const bool par = (a >= ev) != (b >= 1);
        (par ? odd : even).push_back(deg);
      }
      acc.even_degrees = even;
      acc.odd_degrees = odd;
      ev = even.size();
      od = odd.size();
    }
    g.even_degrees = acc.even_degrees;
    g.odd_degrees = acc.odd_degrees;
    X.grading = std::move(g);
  }
  return X;
}

MatrixFactorization shift(const MatrixFactorization& X) {
  MatrixFactorization Y = X;
  Y.d1 = X.d0;
  Y.d0 = X.d1;
  if (Y.grading) std::swap(Y.grading->even_degrees, Y.grading->odd_degrees);
  return Y;
}

MatrixFactorization dual(const MatrixFactorization& X) {
  std::optional<Grading> grading;
  if (X.grading) {
    Grading g = *X.grading;
    std::swap(g.source_weights, g.target_weights);
    for (auto& d : g.even_degrees) d = -d;
    for (auto& d : g.odd_degrees) d = -d;
    grading = std::move(g);
  }
  return make_factorization(X.target, X.source, X.V, X.U, -X.d0.transposed(), X.d1.transposed(), std::move(grading));
}

MatrixFactorization dagger(const MatrixFactorization& X, DaggerParity parity) {
  std::size_t count = 0;
  switch (parity) {
    case DaggerParity::Total: count = X.source.size() + X.target.size(); break;
    case DaggerParity::Source: count = X.source.size(); break;
    case DaggerParity::Target: count = X.target.size(); break;
  }
  MatrixFactorization D = dual(X);
  return count % 2 == 1 ? shift(D) : D;
}

MatrixFactorization knorrer_certificate(const Polynomial& W) {
  const MatrixFactorization delta = diagonal_delta(W);
  std::string u = "u", v = "v";
  for (int k = 1; delta.ring.contains(u) || delta.ring.contains(v); ++k) {
    u = "u" + std::to_string(k);
    v = "v" + std::to_string(k);
  }
  const Ring empty;
  const Ring uv({u, v});
  const Polynomial pu = Polynomial::variable(uv, u), pv = Polynomial::variable(uv, v);
  MatrixFactorization K = koszul({{pu, pv}}, empty, uv, Polynomial(empty), pu * pv);
  if (delta.grading) {
    const mpq_class D = delta.grading->degree;
    // u and v each get half the degree; double everything when D is odd.
    const long scale = mpz_class(D.get_num() % 2).get_si() != 0 ? 2 : 1;
    auto scaled = [&](const WeightSystem& w) {
      std::map<std::string, long> m;
      for (const auto& [k, val] : w.weights()) m[k] = val * scale;
      return m;
    };
    const long Dn = D.get_num().get_si() * scale;
    Grading dg = *delta.grading;
    dg.source_weights = WeightSystem(scaled(dg.source_weights), Dn);
    dg.target_weights = WeightSystem(scaled(dg.target_weights), Dn);
    dg.degree = Dn;
    for (auto& d : dg.even_degrees) d *= scale;
    for (auto& d : dg.odd_degrees) d *= scale;
    MatrixFactorization scaled_delta = delta;
    scaled_delta.grading = dg;
    Grading kg;
    kg.source_weights = WeightSystem({}, Dn);
    kg.target_weights = WeightSystem({{u, Dn / 2}, {v, Dn - Dn / 2}}, Dn);
    kg.degree = Dn;
    kg.even_degrees = {mpq_class(0)};
    kg.odd_degrees = {mpq_class(0)};
    K.grading = kg;
    return external_tensor(scaled_delta, K);
  }
  return external_tensor(delta, K);
}

VerifyReport equivariant_verify(const MatrixFactorization& X, const EquivariantStructure& E) {
  const GroupAction& act = E.action;
  if (E.reps.size() != act.generators.size()) throw DimensionMismatch("one representation per generator is required");
  if (act.orders.size() != act.generators.size()) throw DimensionMismatch("one order per generator is required");
  VerifyReport report;
  const PolyMatrix d = X.full();
  const std::size_t n = X.even_rank() + X.odd_rank();
  const Polynomial w = X.potential();

  std::vector<Substitution> gens;
  std::vector<PolyMatrix> reps;
  for (std::size_t k = 0; k < act.generators.size(); ++k) {
    const auto& [a0, a1] = E.reps[k];
    if (a0.rows() != X.even_rank() || a0.cols() != X.even_rank() || a1.rows() != X.odd_rank() ||
        a1.cols() != X.odd_rank())
      throw DimensionMismatch("representation blocks do not match factorization ranks");
    gens.push_back(extend_to(act.generators[k], X.ring));
    reps.push_back(block_matrix(a0.to_ring(X.ring), zero_block(X.even_rank(), X.odd_rank(), X.ring),
                                zero_block(X.odd_rank(), X.even_rank(), X.ring), a1.to_ring(X.ring)));
  }
  const PolyMatrix id = PolyMatrix::identity(n, X.ring);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string tag = "generator " + std::to_string(k);
    if (substitute(w, gens[k], X.ring) != w) add_violation(report, tag + " invariance", 0, 0, "potential is not invariant");
    const PolyMatrix lhs = reps[k] * apply_substitution(d, gens[k]);
    const PolyMatrix rhs = d * reps[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (lhs(i, j) != rhs(i, j))
          add_violation(report, tag + " intertwining", i, j, "residual " + (lhs(i, j) - rhs(i, j)).to_string());
    // A_g (A_g)^g ... (A_g)^{g^{o-1}} must be the identity.
    PolyMatrix prod = id, twisted = reps[k];
    for (unsigned j = 0; j < act.orders[k]; ++j) {
      prod = prod * twisted;
      twisted = apply_substitution(twisted, gens[k]);
    }
    if (prod != id) add_violation(report, tag + " order cocycle", 0, 0, "product over the cyclic orbit is not the identity");
    for (std::size_t l = k + 1; l < gens.size(); ++l) {
      const PolyMatrix gh = reps[k] * apply_substitution(reps[l], gens[k]);
      const PolyMatrix hg = reps[l] * apply_substitution(reps[k], gens[l]);
      if (gh != hg)
        add_violation(report, tag + " commutation with generator " + std::to_string(l), 0, 0,
                      "A_g A_h^g differs from A_h A_g^h");
    }
  }
  return report;
}

EquivariantStructure koszul_equivariant_reps(const std::vector<KoszulPair>& pairs, const GroupAction& action) {
  EquivariantStructure E;
  E.action = action;
  for (const auto& g : action.generators) {
    PolyMatrix a0 = PolyMatrix::identity(1, Ring());
    PolyMatrix a1(0, 0, Ring());
    std::size_t ev = 1, od = 0;
    for (const auto& p : pairs) {
      const Ring& ring = p.a.ring();
      const Substitution sub = extend_to(g, ring);
      const Polynomial ga = substitute(p.a, sub, ring);
      const Polynomial gb = substitute(p.b.to_ring(ring), sub, ring);
      if (p.a.is_zero()) throw Error("Koszul pair with zero first entry has no scaling character");
      const Cyclo alpha = ga.terms().begin()->second / p.a.terms().begin()->second;
      if (ga != p.a * alpha || gb != p.b.to_ring(ring) * alpha.inverse())
        throw Error("generator does not act on Koszul pair " + p.a.to_string() + " by a scalar character");
      const Ring empty;
      PolyMatrix step = PolyMatrix::identity(2, empty);
      step(1, 1) = Polynomial(empty, alpha);
      const PolyMatrix cur = block_matrix(a0, zero_block(ev, od, empty), zero_block(od, ev, empty), a1);
      const PolyMatrix prod = cur.kronecker(step);
      std::vector<std::size_t> even, odd;
      split_indices(ev, od, 1, 1, even, odd);
      a0 = prod.submatrix(even, even);
      a1 = prod.submatrix(odd, odd);
      ev = even.size();
      od = odd.size();
    }
    E.reps.emplace_back(a0, a1);
  }
  return E;
}

}  // namespace mfkit
