#include "mfkit/polysolve.hpp"

#include <algorithm>

#include "mfkit/error.hpp"

namespace mfkit {
namespace {

void trim(std::vector<Cyclo>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Cyclo horner(const std::vector<Cyclo>& c, const Cyclo& x) {
  Cyclo acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Divides by (t - r); the remainder must be zero.
std::vector<Cyclo> deflate(const std::vector<Cyclo>& c, const Cyclo& r) {
  std::vector<Cyclo> q(c.size() - 1);
  Cyclo carry;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> divisors(mpz_class n, bool& ok) {
  n = abs(n);
  ok = true;
  if (n > mpz_class("1000000000000")) {
    ok = false;
    return {};
  }
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

void push_unique(std::vector<Cyclo>& roots, const Cyclo& r) {
  if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
}

}  // namespace

std::vector<Cyclo> univariate_roots(std::vector<Cyclo> c, bool& complete, unsigned sqrt_prime_limit) {
  std::vector<Cyclo> roots;
  trim(c);
  if (c.empty()) throw Error("roots of the zero polynomial");
  while (c.size() > 1 && c.front().is_zero()) {
    push_unique(roots, Cyclo(0));
    c.erase(c.begin());
  }
  // Monic; a rational multiple of a rational polynomial becomes rational.
  Cyclo lead_inv = c.back().inverse();
  for (auto& v : c) v *= lead_inv;

  bool rational = std::all_of(c.begin(), c.end(), [](const Cyclo& v) { return v.is_rational(); });
  if (rational && c.size() > 3) {
    mpz_class l = 1;
    for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rational().get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& v : c) ints.push_back(mpz_class(v.rational() * l));
    bool ok_p = true, ok_q = true;
    auto ps = divisors(ints.front(), ok_p);
    auto qs = divisors(ints.back(), ok_q);
    if (ok_p && ok_q) {
      for (const auto& p : ps) {
        for (const auto& q : qs) {
          for (int sign : {1, -1}) {
            mpq_class cand(sign * p, q);
            cand.canonicalize();
            Cyclo x(cand);
            while (c.size() > 1 && horner(c, x).is_zero()) {
              push_unique(roots, x);
              c = deflate(c, x);
            }
          }
        }
      }
    } else {
      complete = false;
    }
  }
  if (c.size() == 2) {
    push_unique(roots, -c[0] / c[1]);
  } else if (c.size() == 3) {
    Cyclo disc = c[1] * c[1] - Cyclo(4) * c[0] * c[2];
    Cyclo s;
    if (disc.is_rational() && cyclo_sqrt(disc.rational(), s, sqrt_prime_limit)) {
      Cyclo two_a = Cyclo(2) * c[2];
      push_unique(roots, (-c[1] + s) / two_a);
      push_unique(roots, (-c[1] - s) / two_a);
    } else {
      complete = false;
    }
  } else if (c.size() > 3) {
    complete = false;
  }
  return roots;
}

SolveOutcome solve_zero_dimensional(const std::vector<Polynomial>& equations, const Ring& ring,
                                    const SolveOptions& options) {
  SolveOutcome out;
  std::vector<Polynomial> eqs;
  for (const auto& e : equations) {
    if (!e.is_zero()) eqs.push_back(e.to_ring(ring));
  }
  GroebnerBasis gb = buchberger(ring, eqs, MonomialOrder::lex(), options.groebner);
  out.steps += gb.steps();
  if (gb.is_unit()) return out;
  if (ring.size() == 0) {
    out.solutions.push_back({});
    return out;
  }
  if (!quotient_basis(gb).finite) {
    out.zero_dimensional = false;
    return out;
  }
  const std::size_t last = ring.size() - 1;
  // The eliminant: the basis element involving only the last variable.
  const Polynomial* eliminant = nullptr;
  for (const auto& g : gb.generators()) {
    auto used = g.used_variables();
    if (used.size() == 1 && used[0] == last) eliminant = &g;
  }
  if (!eliminant) throw Error("lex basis of a zero-dimensional ideal has no eliminant");
  std::vector<Cyclo> coeffs(static_cast<std::size_t>(eliminant->total_degree()) + 1);
  for (const auto& [e, c] : eliminant->terms()) coeffs[static_cast<std::size_t>(e[last])] = c;
  bool complete = true;
  auto roots = univariate_roots(coeffs, complete, options.sqrt_prime_limit);
  if (!complete) {
    out.complete = false;
    out.notes.push_back("unsolved factor in " + ring.name(last) + ": " + eliminant->to_string());
  }
  std::vector<std::string> rest_names(ring.names().begin(), ring.names().end() - 1);
  Ring rest(rest_names);
  for (const auto& r : roots) {
    Substitution sub = identity_substitution(rest);
    sub.emplace(ring.name(last), Polynomial(rest, r));
    std::vector<Polynomial> reduced;
    for (const auto& g : gb.generators()) {
      Polynomial h = substitute(g, sub, rest);
      if (!h.is_zero()) reduced.push_back(h);
    }
    SolveOutcome sub_out = solve_zero_dimensional(reduced, rest, options);
    out.steps += sub_out.steps;
    out.complete = out.complete && sub_out.complete;
    out.zero_dimensional = out.zero_dimensional && sub_out.zero_dimensional;
    for (auto& n : sub_out.notes) out.notes.push_back(std::move(n));
    for (auto& s : sub_out.solutions) {
      s.push_back(r);
      out.solutions.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace mfkit
