#include "mfkit/jacobi.hpp"

#include "mfkit/error.hpp"
#include "mfkit/polymatrix.hpp"

namespace mfkit {

Polynomial hessian_determinant(const Polynomial& f) {
  const Ring& ring = f.ring();
  PolyMatrix h(ring.size(), ring.size(), ring);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Polynomial fi = f.derivative(i);
    for (std::size_t j = 0; j < ring.size(); ++j) h(i, j) = fi.derivative(j);
  }
  return h.determinant();
}

JacobiData jacobi_build(const Polynomial& f, const WeightSystem& w, const MonomialOrder& order,
                        const GroebnerOptions& options) {
  const Ring& ring = f.ring();
  auto info = weighted_degree(f, w);
  if (info.kind == DegreeInfo::Kind::Inhomogeneous) throw Inhomogeneous("potential " + f.to_string() + " is not quasi-homogeneous");
  for (const auto& [e, c] : f.terms()) {
    if (exponent_sum(e) <= 1) throw Error("potential " + f.to_string() + " has a constant or linear part");
  }
  JacobiData jd;
  jd.potential = f;
  jd.weights = w;
  for (std::size_t i = 0; i < ring.size(); ++i) jd.partials.push_back(f.derivative(i));
  jd.gb = buchberger(ring, jd.partials, order, options);
  QuotientBasis qb = quotient_basis(jd.gb);
  if (!qb.finite || qb.monomials.empty()) throw NotIsolated("potential " + f.to_string() + " does not have an isolated singularity");
  jd.basis = qb.monomials;
  jd.milnor = qb.dimension();
  jd.hessian = hessian_determinant(f);
  jd.hessian_nf = jd.gb.normal_form(jd.hessian);
  if (jd.hessian_nf.size() != 1) {
    throw Inhomogeneous("Hessian of " + f.to_string() + " does not reduce to a single socle monomial");
  }
  jd.socle_monomial = jd.hessian_nf.terms().begin()->first;
  jd.socle_scale = Cyclo(static_cast<long>(jd.milnor)) / jd.hessian_nf.terms().begin()->second;
  return jd;
}

JacobiData jacobi_build(const Polynomial& f, const MonomialOrder& order, const GroebnerOptions& options) {
  if (f.ring().size() == 0) return jacobi_build(f, WeightSystem(), order, options);
  auto w = infer_weights(f);
  if (!w) throw Inhomogeneous("potential " + f.to_string() + " is not quasi-homogeneous");
  return jacobi_build(f, *w, order, options);
}

Cyclo residue(const Polynomial& h, const JacobiData& jd) {
  Polynomial nf = jd.gb.normal_form(h.to_ring(jd.potential.ring()));
  return nf.coefficient(jd.socle_monomial) * jd.socle_scale;
}

Polynomial residue_parametric(const Polynomial& h, const JacobiData& jd) {
  const Ring& big = h.ring();
  const Ring& small = jd.potential.ring();
  std::vector<std::size_t> pos;
  for (const auto& n : small.names()) {
    auto i = big.index_of(n);
    if (!i) throw Error("variable '" + n + "' missing from the parametric ring");
    pos.push_back(*i);
  }
  for (std::size_t k = 1; k < pos.size(); ++k) {
    if (pos[k] < pos[k - 1]) throw Error("parametric ring must preserve the potential's variable order");
  }
  std::vector<Polynomial> gens;
  for (const auto& g : jd.gb.generators()) gens.push_back(g.to_ring(big));
  GroebnerBasis embedded(big, jd.gb.order(), std::move(gens), 0);
  Polynomial nf = embedded.normal_form(h);
  Polynomial out(big);
  for (const auto& [e, c] : nf.terms()) {
    bool match = true;
    Exponents rest = e;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      match = match && e[pos[k]] == jd.socle_monomial[k];
      rest[pos[k]] = 0;
    }
    if (match) out.add_term(rest, c * jd.socle_scale);
  }
  return out;
}

}  // namespace mfkit
