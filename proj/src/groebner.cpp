#include "mfkit/groebner.hpp"

#include <algorithm>
#include <set>

#include "mfkit/error.hpp"

namespace mfkit {
namespace {

using TermList = std::vector<std::pair<Exponents, Cyclo>>;

int grevlex_compare(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

TermList to_terms(const Polynomial& p, const MonomialOrder& order) {
  TermList t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [&](const auto& x, const auto& y) { return order.compare(x.first, y.first) > 0; });
  return t;
}

Polynomial from_terms(const Ring& ring, const TermList& t) {
  Polynomial p(ring);
  for (const auto& [e, c] : t) p.add_term(e, c);
  return p;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

void make_monic(TermList& t) {
  if (t.empty() || t.front().second.is_one()) return;
  Cyclo inv = t.front().second.inverse();
  for (auto& term : t) term.second *= inv;
}

class Reducer {
 public:
  Reducer(const MonomialOrder& order, std::size_t max_steps, std::size_t& steps)
      : order_(order), max_steps_(max_steps), steps_(steps) {}

  // p[start..] - c * x^shift * g[1..], where c*x^shift*g[0] cancelled p[start-1].
  TermList sub_mul(const TermList& p, std::size_t start, const Cyclo& c, const Exponents& shift, const TermList& g) const {
    TermList out;
    out.reserve(p.size() - start + g.size());
    std::size_t i = start, j = 1;
    Exponents m(shift.size());
    while (i < p.size() || j < g.size()) {
      if (j < g.size()) {
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = g[j].first[k] + shift[k];
      }
      int cmp;
      if (i >= p.size()) {
        cmp = -1;
      } else if (j >= g.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(p[i].first, m);
      }
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.emplace_back(m, -(c * g[j].second));
        ++j;
      } else {
        Cyclo v = p[i].second - c * g[j].second;
        if (!v.is_zero()) out.emplace_back(p[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction modulo monic basis elements.
  TermList reduce(TermList p, const std::vector<TermList>& basis) const {
    TermList result;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Exponents& lead = p[pos].first;
      const TermList* divisor = nullptr;
      for (const auto& g : basis) {
        if (!g.empty() && divides(g.front().first, lead)) {
          divisor = &g;
          break;
        }
      }
      if (!divisor) {
        result.push_back(p[pos++]);
        continue;
      }
      if (++steps_ > max_steps_) throw ResourceLimit("Groebner step budget of " + std::to_string(max_steps_) + " exceeded");
      Cyclo c = p[pos].second;  // divisor is monic
      p = sub_mul(p, pos + 1, c, quotient(lead, divisor->front().first), *divisor);
      pos = 0;
    }
    return result;
  }

 private:
  const MonomialOrder& order_;
  std::size_t max_steps_;
  std::size_t& steps_;
};

struct Pair {
  std::size_t i, j;
  Exponents lcm;
  int sugar;
};

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Elimination: {
      std::size_t k = std::min(block, a.size());
      int c = grevlex_compare(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_compare(a, b, k, a.size());
    }
    case Kind::GradedReverseLex:
    default:
      return grevlex_compare(a, b, 0, a.size());
  }
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elimination(" + std::to_string(block) + ")";
    default:
      return "grevlex";
  }
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

LeadingTerm leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> reduced_generators, std::size_t steps)
    : ring_(std::move(ring)), order_(order), generators_(std::move(reduced_generators)), steps_(steps) {
  for (const auto& g : generators_) {
    sorted_.push_back(to_terms(g, order_));
    leading_.push_back(sorted_.back().front().first);
  }
}

bool GroebnerBasis::is_unit() const {
  for (const auto& e : leading_) {
    if (exponent_sum(e) == 0) return true;
  }
  return false;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.ring() != ring_ && p.ring().size() != 0) throw DimensionMismatch("polynomial is not on the basis ring");
  Polynomial q = p.ring() == ring_ ? p : p.to_ring(ring_);
  std::size_t steps = 0;
  Reducer reducer(order_, static_cast<std::size_t>(-1), steps);
  return from_terms(ring_, reducer.reduce(to_terms(q, order_), sorted_));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (generators.empty()) return GroebnerBasis(Ring(), order, {}, 0);
  return buchberger(generators.front().ring(), generators, order, options);
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  std::size_t steps = 0;
  Reducer reducer(order, options.max_steps, steps);
  std::vector<TermList> basis;
  std::vector<int> sugar;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](TermList h, int s) {
    make_monic(h);
    std::size_t t = basis.size();
    for (std::size_t i = 0; i < t; ++i) {
      const Exponents& a = basis[i].front().first;
      const Exponents& b = h.front().first;
      if (coprime(a, b)) continue;  // product criterion
      Exponents l = lcm_of(a, b);
      int si = sugar[i] + exponent_sum(quotient(l, a));
      int sh = s + exponent_sum(quotient(l, b));
      pairs.push_back({i, t, l, std::max(si, sh)});
      pending.insert({i, t});
    }
    basis.push_back(std::move(h));
    sugar.push_back(s);
  };

  for (const auto& g : generators) {
    if (g.ring() != ring) throw DimensionMismatch("generators are not on a common ring");
    if (g.is_zero()) continue;
    TermList h = reducer.reduce(to_terms(g, order), basis);
    if (!h.empty()) add(std::move(h), g.total_degree());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});

    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis[k].front().first, p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    const TermList& f = basis[p.i];
    const TermList& g = basis[p.j];
    // S = (lcm/lm f) f - (lcm/lm g) g, both monic.
    TermList sf;
    Exponents uf = quotient(p.lcm, f.front().first);
    for (const auto& [e, c] : f) {
      Exponents m(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) m[k] = e[k] + uf[k];
      sf.emplace_back(std::move(m), c);
    }
    TermList s = reducer.sub_mul(sf, 1, Cyclo(1), quotient(p.lcm, g.front().first), g);
    if (++steps > options.max_steps) throw ResourceLimit("Groebner step budget of " + std::to_string(options.max_steps) + " exceeded");
    TermList h = reducer.reduce(std::move(s), basis);
    if (!h.empty()) {
      if (exponent_sum(h.front().first) == 0) {
        basis.clear();
        TermList one{{Exponents(ring.size(), 0), Cyclo(1)}};
        return GroebnerBasis(ring, order, {from_terms(ring, one)}, steps);
      }
      add(std::move(h), p.sugar);
    }
  }

  // Minimize.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(basis[a].front().first, basis[b].front().first) < 0;
  });
  std::vector<TermList> kept;
  for (std::size_t i : idx) {
    bool redundant = false;
    for (const auto& k : kept) redundant = redundant || divides(k.front().first, basis[i].front().first);
    if (!redundant) kept.push_back(basis[i]);
  }
  // Interreduce tails.
  std::vector<TermList> reduced;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<TermList> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    TermList tail(kept[i].begin() + 1, kept[i].end());
    TermList r = reducer.reduce(std::move(tail), others);
    r.insert(r.begin(), kept[i].front());
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermList& a, const TermList& b) {
    return order.compare(a.front().first, b.front().first) > 0;
  });
  std::vector<Polynomial> out;
  for (const auto& r : reduced) out.push_back(from_terms(ring, r));
  return GroebnerBasis(ring, order, std::move(out), steps);
}

QuotientBasis quotient_basis(const GroebnerBasis& gb) {
  QuotientBasis qb;
  const std::size_t n = gb.ring().size();
  if (gb.is_unit()) {
    qb.finite = true;
    return qb;
  }
  std::vector<int> bound(n, -1);
  for (const auto& lm : gb.leading_monomials()) {
    std::size_t nonzero = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] > 0) {
        ++nonzero;
        var = i;
      }
    }
    if (nonzero == 1 && (bound[var] < 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (int b : bound) {
    if (b < 0) return qb;  // some pure power survives: infinite
  }
  qb.finite = true;
  Exponents e(n, 0);
  while (true) {
    bool standard = true;
    for (const auto& lm : gb.leading_monomials()) {
      if (divides(lm, e)) {
        standard = false;
        break;
      }
    }
    if (standard) qb.monomials.push_back(e);
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(qb.monomials.begin(), qb.monomials.end(), [](const Exponents& a, const Exponents& b) {
    return GrlexGreater{}(b, a);
  });
  return qb;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& generators, const std::vector<std::string>& drop,
                                  const GroebnerOptions& options) {
  if (generators.empty()) return {};
  const Ring& ring = generators.front().ring();
  std::vector<std::string> order_names, keep_names;
  for (const auto& d : drop) {
    if (!ring.contains(d)) throw Error("cannot eliminate unknown variable '" + d + "'");
  }
  for (const auto& n : ring.names()) {
    if (std::find(drop.begin(), drop.end(), n) != drop.end()) {
      order_names.push_back(n);
    }
  }
  for (const auto& n : ring.names()) {
    if (std::find(drop.begin(), drop.end(), n) == drop.end()) {
      order_names.push_back(n);
      keep_names.push_back(n);
    }
  }
  Ring work(order_names), kept(keep_names);
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(g.to_ring(work));
  GroebnerBasis gb = buchberger(work, gens, MonomialOrder::elimination(drop.size()), options);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool free_of_dropped = true;
    for (const auto& [e, c] : g.terms()) {
      for (std::size_t i = 0; i < drop.size(); ++i) free_of_dropped = free_of_dropped && e[i] == 0;
    }
    if (free_of_dropped) out.push_back(g.to_ring(kept));
  }
  return out;
}

}  // namespace mfkit
