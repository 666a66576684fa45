#include "mfkit/equivariance.hpp"

#include <functional>

#include "mfkit/error.hpp"
#include "mfkit/jacobi.hpp"
#include "mfkit/parse.hpp"
#include "mfkit/polymatrix.hpp"

namespace mfkit {

namespace {

Ring union_ring(const Ring& a, const Ring& b) {
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names())
    if (!a.contains(n)) names.push_back(n);
  return Ring(names);
}

// Generator with identity images filled in, all on the action ring.
Substitution completed(const Substitution& g, const Ring& vars) {
  Substitution out = identity_substitution(vars);
  for (const auto& [name, image] : g) {
    if (!vars.contains(name)) throw Error("action moves variable '" + name + "' outside its ring");
    out[name] = image.to_ring(vars);
  }
  return out;
}

bool is_identity(const Substitution& g, const Ring& vars) { return substitutions_equal(g, identity_substitution(vars)); }

void fail(ActionReport& r, std::string msg) {
  r.pass = false;
  r.failures.push_back(std::move(msg));
}

// All exponent vectors of n variables with total degree d.
void compositions(std::size_t n, int d, Exponents& cur, std::size_t i, std::vector<Exponents>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[i] = k;
    compositions(n, d - k, cur, i + 1, out);
  }
}

bool divides_properly(const Exponents& a, const Exponents& b) {
  bool equal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    equal = equal && a[i] == b[i];
  }
  return !equal;
}

// True when e is a product of the given exponent vectors.
bool decomposes(const Exponents& e, const std::vector<Exponents>& gens) {
  if (exponent_sum(e) == 0) return true;
  for (const auto& g : gens) {
    bool fits = true;
    for (std::size_t i = 0; i < e.size() && fits; ++i) fits = g[i] <= e[i];
    if (!fits) continue;
    Exponents rest = e;
    for (std::size_t i = 0; i < e.size(); ++i) rest[i] -= g[i];
    if (decomposes(rest, gens)) return true;
  }
  return false;
}

std::optional<std::size_t> milnor_of(const Polynomial& f, const GroebnerOptions& options, std::string& error) {
  try {
    return jacobi_build(f, MonomialOrder::grevlex(), options).milnor;
  } catch (const Error& e) {
    error = e.what();
    return std::nullopt;
  }
}

}  // namespace

GroupAction make_action(const Ring& vars, const std::vector<std::map<std::string, std::string>>& generators,
                        const std::vector<unsigned>& orders, unsigned cyclotomic_order) {
  if (generators.size() != orders.size()) throw DimensionMismatch("one order per generator is required");
  GroupAction a;
  a.vars = vars;
  a.orders = orders;
  a.group_order = 1;
  for (unsigned o : orders) a.group_order *= o;
  for (const auto& g : generators) {
    Substitution s = identity_substitution(vars);
    for (const auto& [name, text] : g) {
      if (!vars.contains(name)) throw Error("unknown action variable '" + name + "'");
      s[name] = parse_polynomial(text, vars, cyclotomic_order);
    }
    a.generators.push_back(std::move(s));
  }
  return a;
}

ActionReport action_verify(const GroupAction& a) {
  ActionReport r;
  if (a.orders.size() != a.generators.size()) throw DimensionMismatch("one order per generator is required");
  const Ring& vars = a.vars;
  std::vector<Substitution> gens;
  for (const auto& g : a.generators) gens.push_back(completed(g, vars));

  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string tag = "generator " + std::to_string(k);
    PolyMatrix linear(vars.size(), vars.size(), Ring());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const Polynomial& img = gens[k].at(vars.name(i));
      if (!img.constant_term().is_zero()) fail(r, tag + " moves the origin");
      for (std::size_t j = 0; j < vars.size(); ++j) {
        Exponents e(vars.size(), 0);
        e[j] = 1;
        linear(i, j) = Polynomial(Ring(), img.coefficient(e));
      }
    }
    if (vars.size() > 0 && linear.determinant().is_zero())
      throw Error(tag + " is not invertible: its linear part is singular");
    const unsigned order = a.orders[k];
    if (order == 0) {
      fail(r, tag + " has order 0");
      continue;
    }
    Substitution p = identity_substitution(vars);
    for (unsigned j = 1; j <= order; ++j) {
      p = compose(p, gens[k], vars);
      const bool id = is_identity(p, vars);
      if (j < order && id) fail(r, tag + " already has order " + std::to_string(j) + " < " + std::to_string(order));
      if (j == order && !id) fail(r, tag + " raised to its order " + std::to_string(order) + " is not the identity");
    }
    for (std::size_t l = k + 1; l < gens.size(); ++l)
      if (!substitutions_equal(compose(gens[k], gens[l], vars), compose(gens[l], gens[k], vars)))
        fail(r, tag + " does not commute with generator " + std::to_string(l));
  }
  if (r.pass) {
    const std::size_t n = group_elements(a).size();
    if (n != a.group_order)
      fail(r, "group has " + std::to_string(n) + " elements, declared " + std::to_string(a.group_order));
  }
  return r;
}

std::vector<Substitution> group_elements(const GroupAction& a) {
  const Ring& vars = a.vars;
  std::vector<Substitution> gens;
  for (const auto& g : a.generators) gens.push_back(completed(g, vars));
  std::vector<Substitution> elems{identity_substitution(vars)};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems.size() > 100000) throw ResourceLimit("group enumeration exceeded 100000 elements");
    for (const auto& g : gens) {
      Substitution next = compose(elems[i], g, vars);
      bool seen = false;
      for (const auto& e : elems) seen = seen || substitutions_equal(e, next);
      if (!seen) elems.push_back(std::move(next));
    }
  }
  return elems;
}

Polynomial act(const Polynomial& p, const Substitution& g) {
  Ring ring = p.ring();
  for (const auto& [name, image] : g)
    if (p.ring().contains(name)) ring = union_ring(ring, image.ring());
  Substitution s = identity_substitution(ring);
  for (const auto& [name, image] : g)
    if (p.ring().contains(name)) s[name] = image.to_ring(ring);
  return substitute(p.to_ring(ring), s, ring);
}

bool invariance_check(const Polynomial& f, const GroupAction& a) {
  for (const auto& g : a.generators)
    if (act(f, g) != f) return false;
  return true;
}

Polynomial reynolds(const Polynomial& f, const GroupAction& a) {
  const auto elems = group_elements(a);
  Polynomial sum = f - f;
  for (const auto& g : elems) sum += act(f, g);
  return sum * Cyclo(mpq_class(1) / mpq_class(static_cast<long>(elems.size())));
}

InvariantData invariant_generators(const GroupAction& a, unsigned degree_bound,
                                   const std::optional<Linearization>& linearization, const GroebnerOptions& options) {
  const Ring& vars = a.vars;
  const std::size_t n = vars.size();
  InvariantData out;
  out.linearization = linearization;
  Substitution coords = identity_substitution(vars);
  if (linearization)
    for (const auto& [name, expr] : *linearization) {
      if (!vars.contains(name)) throw Error("linearization names unknown variable '" + name + "'");
      coords[name] = expr.to_ring(vars);
    }

  for (const auto& g : a.generators) {
    std::vector<Cyclo> chi;
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial& c = coords.at(vars.name(i));
      const Polynomial img = act(c, g).to_ring(vars);
      if (c.is_zero()) throw Error("linearization sends '" + vars.name(i) + "' to zero");
      const Cyclo ratio = img.terms().empty() ? Cyclo(0) : img.terms().begin()->second / c.terms().begin()->second;
      if (img != c * ratio)
        throw Error("action is not diagonal in the given coordinates at '" + vars.name(i) + "'");
      chi.push_back(ratio);
    }
    out.characters.push_back(std::move(chi));
  }

  auto invariant = [&](const Exponents& e) {
    for (const auto& chi : out.characters) {
      Cyclo c(1);
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] != 0) c = c * chi[i].pow(e[i]);
      if (!c.is_one()) return false;
    }
    return true;
  };

  const unsigned bound = degree_bound ? degree_bound : static_cast<unsigned>(a.group_order);
  const unsigned noether = std::max<unsigned>(bound, static_cast<unsigned>(a.group_order));
  std::vector<Exponents> minimal;
  std::vector<Exponents> all_invariant;
  for (unsigned d = 1; n > 0 && d <= noether; ++d) {
    std::vector<Exponents> monos;
    Exponents cur(n, 0);
    compositions(n, static_cast<int>(d), cur, 0, monos);
    for (const auto& e : monos) {
      if (!invariant(e)) continue;
      all_invariant.push_back(e);
      if (d > bound) continue;
      bool reducible = false;
      for (const auto& m : minimal) reducible = reducible || divides_properly(m, e);
      if (!reducible) minimal.push_back(e);
    }
  }
  for (const auto& e : all_invariant)
    if (!decomposes(e, minimal))
      throw Error("degree bound " + std::to_string(bound) + " is too small: " + monomial_to_string(vars, e) +
                  " is not generated");

  std::vector<std::string> znames;
  for (std::size_t j = 0; j < minimal.size(); ++j) {
    std::string z = "z" + std::to_string(j + 1);
    while (vars.contains(z)) z = "z" + z;
    znames.push_back(z);
  }
  out.z_ring = Ring(znames);
  for (const auto& e : minimal) {
    const Polynomial mono = Polynomial::monomial(vars, e);
    out.gens.push_back(substitute(mono, coords, vars));
  }
  if (!minimal.empty()) {
    const Ring big = vars.joined(out.z_ring);
    std::vector<Polynomial> graph;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      Exponents e = minimal[j];
      e.resize(big.size(), 0);
      graph.push_back(Polynomial::variable(big, znames[j]) - Polynomial::monomial(big, e));
    }
    for (const auto& r : eliminate(graph, vars.names(), options)) out.relations.push_back(r.to_ring(out.z_ring));
  }
  return out;
}

DescentReport descent_verify(const DescentWitness& w, const GroebnerOptions& options) {
  DescentReport rep;
  auto row = [&](std::string check, bool ok, std::string detail = {}) {
    rep.pass = rep.pass && ok;
    rep.rows.push_back({std::move(check), ok, std::move(detail)});
  };
  try {
    const ActionReport ar = action_verify(w.action);
    row("action", ar.pass, ar.failures.empty() ? "" : ar.failures.front());
  } catch (const Error& e) {
    row("action", false, e.what());
  }
  row("f invariant", invariance_check(w.f, w.action));
  bool gens_ok = true;
  for (const auto& g : w.invariant_gens) gens_ok = gens_ok && invariance_check(g, w.action);
  row("generators invariant", gens_ok);

  const Ring& fr = w.f.ring();
  if (w.invariant_gens.size() != w.z_ring.size()) {
    row("generator count", false, "z ring and generator list differ in length");
    return rep;
  }
  Substitution to_gens;
  for (std::size_t j = 0; j < w.z_ring.size(); ++j) to_gens[w.z_ring.name(j)] = w.invariant_gens[j].to_ring(fr);
  try {
    const Polynomial back = substitute(w.F.to_ring(w.z_ring), to_gens, fr);
    row("F(generators) = f", back == w.f, back == w.f ? "" : "difference " + (back - w.f).to_string());
    bool rel_ok = true;
    for (const auto& r : w.relations) rel_ok = rel_ok && substitute(r.to_ring(w.z_ring), to_gens, fr).is_zero();
    row("relations vanish on generators", rel_ok);

    const Ring& cr = w.f_hat.ring();
    Substitution chart;
    for (const auto& [z, img] : w.chart_map) chart[z] = img.to_ring(cr);
    bool chart_rel = true;
    for (const auto& r : w.relations) chart_rel = chart_rel && substitute(r.to_ring(w.z_ring), chart, cr).is_zero();
    row("relations vanish on chart", chart_rel);
    const Polynomial fh = substitute(w.F.to_ring(w.z_ring), chart, cr);
    row("F(chart) = f_hat", fh == w.f_hat, fh == w.f_hat ? "" : "difference " + (fh - w.f_hat).to_string());
  } catch (const Error& e) {
    row("substitution", false, e.what());
  }
  std::string err;
  rep.milnor_f = milnor_of(w.f, options, err);
  if (!rep.milnor_f) row("milnor f", false, err);
  rep.milnor_f_hat = milnor_of(w.f_hat, options, err);
  if (!rep.milnor_f_hat) row("milnor f_hat", false, err);
  return rep;
}

}  // namespace mfkit
