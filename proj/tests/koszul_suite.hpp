#pragma once

// Seeded family of Koszul factorizations of V(y) - U(x) with U = sum x_i^{q_i} and
// V = sum y_{pi(i)}^{q_i}. Central charges agree by construction, so dimensions are
// generally nonzero; a few items split one variable into two pairs.

#include <random>
#include <string>
#include <vector>

#include "mfkit/mf.hpp"

namespace suite {

using namespace mfkit;

struct Piece {
  unsigned q = 2;     // exponent of x_src and y_tgt
  unsigned a = 1;     // pair (y^a - zeta x^a, quotient); a divides q
  long zeta = 0;      // zeta_q^zeta with (zeta_q^zeta)^{q/a} = 1
  long c_num = 1;     // pair scaled by c and c^-1
  long c_den = 1;
  bool split = false; // pairs (y^a, y^{q-a}) and (x^a, -x^{q-a}) instead
  std::size_t src = 0;
  std::size_t tgt = 0;
};

struct Item {
  std::size_t vars = 1;  // source and target variable count
  std::vector<Piece> pieces;
};

inline std::vector<unsigned> divisors_below(unsigned q) {
  std::vector<unsigned> d;
  for (unsigned a = 1; a < q; ++a)
    if (q % a == 0) d.push_back(a);
  return d;
}

inline Item random_item(std::mt19937_64& rng, std::size_t vars) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  Item it;
  it.vars = vars;
  std::vector<std::size_t> perm(vars);
  for (std::size_t i = 0; i < vars; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  static const unsigned exps[] = {2, 3, 4, 6};
  static const long cs[][2] = {{1, 1}, {2, 1}, {-1, 1}, {1, 3}, {-3, 2}};
  for (std::size_t i = 0; i < vars; ++i) {
    Piece p;
    p.q = exps[pick(vars == 3 ? 2 : 4)];  // three variables stay at small exponents
    const auto ds = divisors_below(p.q);
    p.a = ds[pick(ds.size())];
    // zeta^(q/a) = 1 in Q(zeta_q): zeta = zeta_q^(a*j).
    p.zeta = static_cast<long>(p.a * pick(p.q / p.a));
    const auto& c = cs[pick(5)];
    p.c_num = c[0];
    p.c_den = c[1];
    p.split = pick(8) == 0;
    p.src = i;
    p.tgt = perm[i];
    it.pieces.push_back(p);
  }
  return it;
}

inline std::vector<Item> make_suite(unsigned long seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Item> items;
  for (std::size_t k = 0; k < count; ++k) items.push_back(random_item(rng, 1 + k % 3));
  return items;
}

inline MatrixFactorization build(const Item& it, std::size_t offset = 0) {
  std::vector<std::string> xs, ys;
  for (std::size_t i = 0; i < it.vars; ++i) {
    xs.push_back("x" + std::to_string(offset + i + 1));
    ys.push_back("y" + std::to_string(offset + i + 1));
  }
  const Ring source(xs), target(ys);
  const Ring joint = source.joined(target);
  Polynomial U(joint), V(joint);
  std::vector<KoszulPair> pairs;
  for (const auto& p : it.pieces) {
    const Polynomial x = Polynomial::variable(joint, xs[p.src]);
    const Polynomial y = Polynomial::variable(joint, ys[p.tgt]);
    U += x.pow(p.q);
    V += y.pow(p.q);
    const Cyclo c(mpq_class(p.c_num, p.c_den));
    if (p.split) {
      pairs.push_back({c * y.pow(p.a), c.inverse() * y.pow(p.q - p.a)});
      pairs.push_back({c * x.pow(p.a), -(c.inverse() * x.pow(p.q - p.a))});
      continue;
    }
    const Cyclo z = Cyclo::zeta(p.q, p.zeta);
    const Polynomial ya = y.pow(p.a), zxa = z * x.pow(p.a);
    // (y^a)^r - (zeta x^a)^r with r = q/a, divided by y^a - zeta x^a.
    Polynomial quotient(joint);
    const unsigned r = p.q / p.a;
    for (unsigned k = 0; k < r; ++k) quotient += ya.pow(r - 1 - k) * zxa.pow(k);
    pairs.push_back({c * (ya - zxa), c.inverse() * quotient});
  }
  return koszul(pairs, source, target, U.to_ring(source), V.to_ring(target));
}

}  // namespace suite
