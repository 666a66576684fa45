// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is exact;
// the only tolerances are the wall-clock limits below.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "koszul_suite.hpp"
#include "mfkit/catalog.hpp"
#include "mfkit/equivariance.hpp"
#include "mfkit/jacobi.hpp"
#include "mfkit/parse.hpp"
#include "mfkit/qdim.hpp"
#include "mfkit/search.hpp"

using namespace mfkit;

namespace {

constexpr double kLimitUnit = 10.0;
constexpr double kLimitAdjunction = 60.0;
constexpr double kLimitTensor = 60.0;
constexpr double kLimitMilnor = 10.0;
constexpr double kLimitActions = 5.0;
constexpr double kLimitSearchEach = 300.0;
constexpr double kLimitKnorrer = 30.0;
constexpr double kLimitChains = 1.0;
constexpr double kLimitOracles = 30.0;

constexpr std::size_t kSuiteSize = 60;
constexpr std::size_t kMinTensorPairs = 50;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  double limit;
  std::function<Outcome(unsigned long)> run;
};

Polynomial W(const std::string& text) { return parse_polynomial(text, variables_of(text), 3); }

Outcome unit_law(unsigned long) {
  Outcome o;
  std::size_t n = 0;
  for (const char* f : {"x^2", "x^3", "x^4 + y^2", "x^5 + y^2", "x^6 + y^2", "x^3 + x*y^2", "x^3 + y^3", "x^3 + y^4"}) {
    const MatrixFactorization d = diagonal_delta(W(f));
    const Cyclo l = qdim_left(d), r = qdim_right(d);
    if (!(l == Cyclo(1) && r == Cyclo(1))) {
      o.pass = false;
      o.detail += std::string(f) + ": " + l.to_string() + ", " + r.to_string() + "; ";
    }
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " potentials, dims 1, 1";
  return o;
}

Outcome adjunction(unsigned long seed) {
  Outcome o;
  std::size_t nonzero = 0, checked = 0;
  for (const auto& it : suite::make_suite(seed, kSuiteSize)) {
    const MatrixFactorization X = suite::build(it);
    const MatrixFactorization Xd = calibrated_dagger(X);
    const Cyclo l = qdim_left(X);
    if (!(l == qdim_right(Xd))) {
      o.pass = false;
      o.detail = "mismatch at item " + std::to_string(checked);
    }
    if (!l.is_zero()) ++nonzero;
    ++checked;
  }
  if (checked < 50) o.pass = false;
  if (o.pass) o.detail = std::to_string(checked) + " factorizations, " + std::to_string(nonzero) + " with nonzero dims";
  return o;
}

Outcome multiplicativity(unsigned long seed) {
  Outcome o;
  const auto items = suite::make_suite(seed, kSuiteSize);
  std::size_t pairs = 0, nonzero = 0;
  for (std::size_t i = 0; i < items.size() && pairs < kMinTensorPairs; ++i)
    for (std::size_t j = i + 1; j < items.size() && pairs < kMinTensorPairs; ++j) {
      if (items[i].vars + items[j].vars > 3) continue;
      const MatrixFactorization a = suite::build(items[i]);
      const MatrixFactorization b = suite::build(items[j], items[i].vars);
      const MatrixFactorization t = external_tensor(a, b);
      const Cyclo l = qdim_left(t);
      if (!(l == qdim_left(b) * qdim_left(a)) || !(qdim_right(t) == qdim_right(b) * qdim_right(a))) {
        o.pass = false;
        o.detail = "mismatch at pair " + std::to_string(i) + "," + std::to_string(j);
      }
      if (!l.is_zero()) ++nonzero;
      ++pairs;
    }
  if (pairs < kMinTensorPairs) o.pass = false;
  if (o.pass) o.detail = std::to_string(pairs) + " tensor products, " + std::to_string(nonzero) + " with nonzero dims";
  return o;
}

Outcome milnor(unsigned long) {
  Outcome o;
  auto expect = [&](const std::string& name, const Polynomial& f, std::size_t mu) {
    const std::size_t got = jacobi_build(f).milnor;
    if (got != mu) {
      o.pass = false;
      o.detail += name + " has mu " + std::to_string(got) + " not " + std::to_string(mu) + "; ";
    }
  };
  for (unsigned n = 1; n <= 10; ++n) expect("A" + std::to_string(n), normal_form_A(n), n);
  for (unsigned n = 3; n <= 10; ++n) expect("D" + std::to_string(n), normal_form_D(n), n);
  expect("E6", W("x^3 + y^4"), 6);
  expect("E7", W("x^3 + x*y^3"), 7);
  expect("E8", W("x^3 + y^5"), 8);
  expect("Z13", W("x1^6*x2 + x2^3 + x3^2"), 13);
  if (o.pass) o.detail = "A1..A10, D3..D10, E6..E8, Z13";
  return o;
}

Outcome actions(unsigned long) {
  Outcome o;
  const Ring uv({"u", "v"}), y12({"y1", "y2"}), x123({"x1", "x2", "x3"}), y123({"y1", "y2", "y3"}),
      uvw({"u", "v", "w"}), xyz({"x", "y", "z"});
  const std::vector<std::pair<std::string, GroupAction>> quoted{
      {"(-u,-v)", make_action(uv, {{{"u", "-u"}, {"v", "-v"}}}, {2})},
      {"(zeta3 y1, zeta3^-1 y2)", make_action(y12, {{{"y1", "zeta3*y1"}, {"y2", "zeta3^2*y2"}}}, {3}, 3)},
      {"(-x1,x2,-x3)", make_action(x123, {{{"x1", "-x1"}, {"x3", "-x3"}}}, {2})},
      {"(-y1,y2,-y3)", make_action(y123, {{{"y1", "-y1"}, {"y3", "-y3"}}}, {2})},
      {"(-u,v,-w-u^4)", make_action(uvw, {{{"u", "-u"}, {"w", "-w - u^4"}}}, {2})},
      {"(-u,v,-w+u^8)", make_action(uvw, {{{"u", "-u"}, {"w", "-w + u^8"}}}, {2})},
      {"(-x,y,-z)", make_action(xyz, {{{"x", "-x"}, {"z", "-z"}}}, {2})},
  };
  for (const auto& [name, a] : quoted) {
    const ActionReport r = action_verify(a);
    if (!r.pass) {
      o.pass = false;
      o.detail += name + ": " + (r.failures.empty() ? "" : r.failures.front()) + "; ";
    }
  }
  std::size_t enabled = 0;
  for (const auto& p : catalog_load().pairs) {
    if (!p.enabled) continue;
    ++enabled;
    if (!invariance_check(p.f, p.action)) {
      o.pass = false;
      o.detail += p.source + "~" + p.target + " potential not invariant; ";
    }
  }
  if (o.pass) o.detail = std::to_string(quoted.size()) + " actions, " + std::to_string(enabled) + " invariant pairs";
  return o;
}

Outcome mckay_one(const std::string& u, const std::string& v, const std::string& label) {
  SearchRequest r;
  r.U = W(u);
  r.V = W(v);
  r.group_order_claim = 2;
  SearchOptions opts;
  opts.group_order_claim = 2;
  const auto t0 = std::chrono::steady_clock::now();
  const SearchResult res = search(r, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  o.pass = false;
  for (std::size_t i = 0; i < res.certificates.size(); ++i)
    if (res.certificates[i].product == Cyclo(2) && res.solutions[i].even_rank() == 2 &&
        res.solutions[i].grading.has_value() && mf_verify(res.solutions[i]).pass)
      o.pass = true;
  if (secs > kLimitSearchEach) o.pass = false;
  std::ostringstream s;
  s << label << (o.pass ? " product 2" : " no certificate") << " in " << std::fixed << std::setprecision(2) << secs
    << " s";
  o.detail = s.str();
  return o;
}

Outcome mckay(unsigned long) {
  const Outcome a = mckay_one("x^3 + x*y^2", "u^6 + v^2", "D4-A5");
  const Outcome b = mckay_one("x^2 + x*y^2", "u^4 + v^2", "D3-A3");
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome knorrer(unsigned long) {
  Outcome o;
  for (const char* f : {"x^2", "x^3", "x^3 + y^3"}) {
    const QDimResult r = qdim_result(knorrer_certificate(W(f)));
    const bool ok = r.invertible_left && r.invertible_right && (r.product == Cyclo(1) || r.product == Cyclo(-1));
    o.pass = o.pass && ok;
    o.detail += std::string(f) + ": product " + r.product.to_string() + "; ";
  }
  return o;
}

Outcome chains(unsigned long) {
  const Catalog c = catalog_load();
  Outcome o;
  const ChainReport r =
      chain_check(c, {"A5-D4-A2xA2", {{"A5", "D4", StepKind::McKay}, {"D4", "A2xA2", StepKind::McKay}}});
  o.pass = r.product_known && r.product == Cyclo(6) && r.positive_rational && !r.necessary_condition_fails;
  o.detail = "A5-D4-A2xA2 product " + (r.product_known ? r.product.to_string() : std::string("unknown"));
  for (const auto& n : c.nonexamples) {
    const ChainReport x = chain_check(c, {"", {{n.source, n.target, StepKind::Nonexample}}});
    o.pass = o.pass && x.necessary_condition_fails;
    o.detail += "; " + n.source + "~" + n.target + (x.necessary_condition_fails ? " flagged" : " NOT flagged");
  }
  return o;
}

Outcome oracles(unsigned long) {
  Outcome o;
  CatalogOptions opts;
  opts.enable_external = true;
  std::size_t n = 0;
  for (const auto& e : catalog_load(opts).entries) {
    const JacobiData g = jacobi_build(e.potential, e.weights, MonomialOrder::grevlex());
    const JacobiData l = jacobi_build(e.potential, e.weights, MonomialOrder::lex());
    const bool ok = residue(g.hessian, g) == Cyclo(static_cast<long>(g.milnor)) && g.basis.size() == l.basis.size() &&
                    quotient_basis(g.gb).dimension() == quotient_basis(l.gb).dimension();
    if (!ok) {
      o.pass = false;
      o.detail += e.name + "; ";
    }
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " entries, grevlex and lex";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  unsigned criterion = 0;
  unsigned long seed = 20240917;
  app.add_option("--criterion", criterion, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--seed", seed, "Seed for the Koszul suite");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {"unit law on diagonals", kLimitUnit, unit_law},
      {"adjunction symmetry on the Koszul suite", kLimitAdjunction, adjunction},
      {"multiplicativity under external tensor", kLimitTensor, multiplicativity},
      {"Milnor numbers", kLimitMilnor, milnor},
      {"group actions and invariance", kLimitActions, actions},
      {"McKay product law via search", 2 * kLimitSearchEach, mckay},
      {"Knorrer certificates", kLimitKnorrer, knorrer},
      {"chain product and nonexample flags", kLimitChains, chains},
      {"residue and quotient basis oracles", kLimitOracles, oracles},
  };

  // Calibration is process-wide setup, kept outside the timed sections.
  session_calibration();

  bool ok = true;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (criterion && criterion != k + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[k].run(seed);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    while (o.detail.size() >= 2 && o.detail.compare(o.detail.size() - 2, 2, "; ") == 0) o.detail.resize(o.detail.size() - 2);
    const bool pass = o.pass && secs <= all[k].limit;
    ok = ok && pass;
    std::cout << "criterion " << k + 1 << " " << (pass ? "PASS" : "FAIL") << "  " << all[k].name << ": " << o.detail
              << " [" << std::fixed << std::setprecision(2) << secs << " s, limit " << all[k].limit << " s]\n";
  }
  return ok ? 0 : 1;
}
