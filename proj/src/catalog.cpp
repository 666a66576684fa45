#include "mfkit/catalog.hpp"

#include <exception>
#include <functional>
#include <iomanip>
#include <sstream>

#include "mfkit/error.hpp"
#include "mfkit/parse.hpp"

namespace mfkit {

namespace {

Polynomial poly(const std::string& text, const std::vector<std::string>& vars, unsigned order = 1) {
  return parse_polynomial(text, Ring(vars), order);
}

SingularityEntry make_entry(std::string name, Polynomial f, std::size_t mu, Provenance p) {
  auto w = infer_weights(f);
  if (!w) throw Error("catalog potential " + name + " is not quasi-homogeneous");
  return {std::move(name), std::move(f), *w, mu, p};
}

// Witness from the invariant ring of the action and the descended potential
// F, written in z1..zk, pulled back along the chart.
DescentWitness make_witness(const GroupAction& action, const Polynomial& f, const std::string& F,
                            const std::map<std::string, std::string>& chart, const std::string& f_hat,
                            const std::vector<std::string>& chart_vars,
                            const std::optional<Linearization>& lin = std::nullopt, unsigned order = 1) {
  const InvariantData inv = invariant_generators(action, 0, lin);
  DescentWitness w;
  w.action = action;
  w.f = f;
  w.invariant_gens = inv.gens;
  w.z_ring = inv.z_ring;
  w.relations = inv.relations;
  w.F = parse_polynomial(F, inv.z_ring, order);
  const Ring cr(chart_vars);
  for (const auto& [z, text] : chart) w.chart_map[z] = parse_polynomial(text, cr, order);
  w.f_hat = parse_polynomial(f_hat, cr, order);
  w.linearization = lin;
  return w;
}

// Rank-2 factorization of (x^b + x y^2) - (u^{2b} + v^2) with its Z/2 structure.
EmbeddedCertificate ad_certificate(unsigned b) {
  const Ring src({"u", "v"}), tgt({"x", "y"});
  const Ring joint = src.joined(tgt);
  std::string e;
  for (unsigned k = 0; k < b; ++k) {
    if (k) e += " + ";
    e += "x^" + std::to_string(b - 1 - k) + "*u^" + std::to_string(2 * k);
  }
  e += " + y^2";
  PolyMatrix d1(2, 2, joint), d0(2, 2, joint);
  d1(0, 0) = parse_polynomial("x - u^2", joint);
  d1(0, 1) = parse_polynomial("u*y + v", joint);
  d1(1, 0) = parse_polynomial("v - u*y", joint);
  d1(1, 1) = parse_polynomial(e, joint);
  d0(0, 0) = d1(1, 1);
  d0(0, 1) = -d1(0, 1);
  d0(1, 0) = -d1(1, 0);
  d0(1, 1) = d1(0, 0);
  const long D = 2 * static_cast<long>(b);
  Grading g;
  g.source_weights = WeightSystem({{"u", 1}, {"v", static_cast<long>(b)}}, D);
  g.target_weights = WeightSystem({{"x", 2}, {"y", static_cast<long>(b) - 1}}, D);
  g.degree = D;
  // Entry degrees (2, b; b, 2b-2).
  g.even_degrees = {mpq_class(0), mpq_class(2 - D / 2)};
  g.odd_degrees = {mpq_class(2) - mpq_class(D) / 2, mpq_class(static_cast<long>(b)) - mpq_class(D) / 2};
  EmbeddedCertificate c;
  c.mf = make_factorization(src, tgt, poly("u^" + std::to_string(2 * b) + " + v^2", {"u", "v"}),
                            poly("x^" + std::to_string(b) + " + x*y^2", {"x", "y"}), d1, d0, g);
  EquivariantStructure E;
  E.action = make_action(joint, {{{"u", "-u"}, {"v", "-v"}}}, {2});
  PolyMatrix s(2, 2, Ring());
  s(0, 0) = Polynomial(Ring(), Cyclo(1));
  s(1, 1) = Polynomial(Ring(), Cyclo(-1));
  E.reps.emplace_back(s, s);
  c.equivariance = E;
  return c;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// Product dim_l * dim_r of one chain step.
Cyclo step_product(const Catalog& c, const ChainStep& s, ChainReport& rep) {
  switch (s.kind) {
    case StepKind::Knorrer: {
      const SingularityEntry* e = c.entry(s.from);
      if (!e) throw Error("Knorrer step needs a catalog entry for '" + s.from + "'");
      return qdim_result(knorrer_certificate(e->potential)).product;
    }
    case StepKind::Nonexample:
      rep.product_known = false;
      rep.notes.push_back(s.from + " ~ " + s.to + " is a recorded nonexample: product not in Q>0");
      return Cyclo(1);
    case StepKind::McKay: break;
  }
  const EquivalencePair* p = c.pair(s.from, s.to);
  if (!p) throw Error("no McKay pair joins " + s.from + " and " + s.to);
  if (p->certificate) return qdim_result(p->certificate->mf).product;
  // Without an explicit factorization the step contributes |G|.
  rep.notes.push_back(s.from + " ~ " + s.to + " contributes |G| = " + std::to_string(p->group_order));
  return Cyclo(static_cast<long>(p->group_order));
}

}  // namespace

Polynomial normal_form_A(unsigned n) { return poly("x^" + std::to_string(n + 1) + " + y^2", {"x", "y"}); }

Polynomial normal_form_D(unsigned n) { return poly("x^" + std::to_string(n - 1) + " + x*y^2", {"x", "y"}); }

const SingularityEntry* Catalog::entry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const EquivalencePair* Catalog::pair(const std::string& a, const std::string& b) const {
  for (const auto& p : pairs)
    if ((p.source == a && p.target == b) || (p.source == b && p.target == a)) return &p;
  return nullptr;
}

bool Catalog::is_nonexample(const std::string& a, const std::string& b) const {
  for (const auto& n : nonexamples)
    if ((n.source == a && n.target == b) || (n.source == b && n.target == a)) return true;
  return false;
}

Catalog catalog_load(const CatalogOptions& options) {
  Catalog c;
  const auto P = Provenance::Paper;
  const auto N = Provenance::StandardNormalForm;
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 11u, 17u, 29u})
    c.entries.push_back(make_entry("A" + std::to_string(n), normal_form_A(n), n, N));
  for (unsigned n = 3; n <= 10; ++n) c.entries.push_back(make_entry("D" + std::to_string(n), normal_form_D(n), n, N));
  const std::vector<std::string> xy{"x", "y"}, xyz{"x", "y", "z"};
  c.entries.push_back(make_entry("E6", poly("x^3 + y^4", xy), 6, N));
  c.entries.push_back(make_entry("E7", poly("x^3 + x*y^3", xy), 7, N));
  c.entries.push_back(make_entry("E8", poly("x^3 + y^5", xy), 8, N));
  c.entries.push_back(make_entry("A2xA2", poly("y1^3 + y2^3", {"y1", "y2"}), 4, N));
  c.entries.push_back(make_entry("Z13", poly("x1^6*x2 + x2^3 + x3^2", {"x1", "x2", "x3"}), 13, P));
  c.entries.push_back(make_entry("Q10", poly("x^3 + y^4 + y*z^2", xyz), 10, N));
  c.entries.push_back(make_entry("Q11", poly("x^3 + y^2*z + x*z^3", xyz), 11, N));
  c.entries.push_back(make_entry("Q12", poly("x^3 + y^5 + y*z^2", xyz), 12, N));
  c.entries.push_back(make_entry("Q18", poly("x^3 + y^8 + y*z^2", xyz), 18, N));
  c.entries.push_back(make_entry("S11", poly("x^4 + y^2*z + x*z^2", xyz), 11, N));
  c.entries.push_back(make_entry("W13", poly("x^4 + x*y^4 + z^2", xyz), 13, N));
  c.entries.push_back(make_entry("K14", poly("x^3 + y^8 + z^2", xyz), 14, N));
  c.entries.push_back(make_entry("E18", poly("x^3 + y^10 + z^2", xyz), 18, N));
  c.entries.push_back(make_entry("E30", poly("x^3 + y^16 + z^2", xyz), 30, N));

  const std::vector<std::string> st{"s", "t"}, rst{"r", "s", "t"}, swt{"s", "t", "w"};
  const std::map<std::string, std::string> blowup{{"z1", "s"}, {"z2", "s*t"}, {"z3", "s*t^2"}};
  const std::map<std::string, std::string> blowup4{{"z1", "r"}, {"z2", "s"}, {"z3", "s*t"}, {"z4", "s*t^2"}};

  for (unsigned b = 2; b <= 6; ++b) {
    EquivalencePair p;
    p.source = "A" + std::to_string(2 * b - 1);
    p.target = "D" + std::to_string(b + 1);
    p.action = make_action(Ring({"u", "v"}), {{{"u", "-u"}, {"v", "-v"}}}, {2});
    p.group_order = 2;
    p.f = poly("u^" + std::to_string(2 * b) + " + v^2", {"u", "v"});
    p.witness = make_witness(p.action, p.f, "z1^" + std::to_string(b) + " + z3", blowup,
                             "s^" + std::to_string(b) + " + s*t^2", st);
    p.certificate = ad_certificate(b);
    p.origin_citation = "explicit rank-2 factorization; Z/2 acts by (u,v) -> (-u,-v)";
    c.pairs.push_back(std::move(p));
  }
  {
    EquivalencePair p;
    p.source = "A2xA2";
    p.target = "D4";
    p.action = make_action(Ring({"y1", "y2"}), {{{"y1", "zeta3*y1"}, {"y2", "zeta3^2*y2"}}}, {3}, 3);
    p.group_order = 3;
    p.f = poly("y1^3 + y2^3", {"y1", "y2"});
    p.witness = make_witness(p.action, p.f, "z2 + z3", {{"z1", "s*t"}, {"z2", "s^2*t"}, {"z3", "s*t^2"}},
                             "s^2*t + s*t^2", st);
    p.origin_citation = "Z/3 acts by (y1,y2) -> (zeta3*y1, zeta3^-1*y2)";
    c.pairs.push_back(std::move(p));
  }
  {
    EquivalencePair p;
    p.source = "Z13";
    p.target = "Q11";
    const std::vector<std::string> x123{"x1", "x2", "x3"};
    p.action = make_action(Ring(x123), {{{"x1", "-x1"}, {"x3", "-x3"}}}, {2});
    p.group_order = 2;
    p.f = poly("x1^6*x2 + x2^3 + x3^2", x123);
    p.witness = make_witness(p.action, p.f, "z2^3*z1 + z1^3 + z4",
                             {{"z1", "w"}, {"z2", "s"}, {"z3", "s*t"}, {"z4", "s*t^2"}}, "s^3*w + w^3 + s*t^2", swt);
    p.origin_citation = "Z/2 acts by (x1,x2,x3) -> (-x1,x2,-x3)";
    c.pairs.push_back(std::move(p));
  }
  const std::string external = "requires external normal form";
  {
    EquivalencePair p;
    p.source = "W13";
    p.target = "S11";
    const std::vector<std::string> y123{"y1", "y2", "y3"};
    p.action = make_action(Ring(y123), {{{"y1", "-y1"}, {"y3", "-y3"}}}, {2});
    p.group_order = 2;
    p.f = poly("y1^4*y2 + y2^4 + y3^2", y123);
    p.witness = make_witness(p.action, p.f, "z2^2*z1 + z1^4 + z4",
                             {{"z1", "w"}, {"z2", "s"}, {"z3", "s*t"}, {"z4", "s*t^2"}}, "s^2*w + w^4 + s*t^2", swt);
    p.origin_citation = "Z/2 acts by (y1,y2,y3) -> (-y1,y2,-y3)";
    p.enabled = options.enable_external;
    p.disabled_reason = external;
    c.pairs.push_back(std::move(p));
  }
  const std::vector<std::string> uvw{"u", "v", "w"};
  const Ring ruvw(uvw);
  {
    EquivalencePair p;
    p.source = "K14";
    p.target = "Q10";
    p.action = make_action(ruvw, {{{"u", "-u"}, {"w", "-w - u^4"}}}, {2});
    p.group_order = 2;
    p.f = poly("v^3 + u^8 + (w + 1/2*u^4)^2", uvw);
    p.witness = make_witness(p.action, p.f, "z1^3 + z2^4 + z4", blowup4, "r^3 + s^4 + s*t^2", rst,
                             Linearization{{"w", poly("w + 1/2*u^4", uvw)}});
    p.origin_citation = "version 1: Z/2 acts by (u,v,w) -> (-u,v,-w-u^4)";
    p.enabled = options.enable_external;
    p.disabled_reason = external;
    c.pairs.push_back(std::move(p));
  }
  {
    EquivalencePair p;
    p.source = "K14";
    p.target = "Q10";
    p.action = make_action(ruvw, {{{"v", "-v"}, {"w", "-w"}}}, {2});
    p.group_order = 2;
    p.f = poly("u^3 + v^8 + w^2", uvw);
    p.witness = make_witness(p.action, p.f, "z1^3 + z2^4 + z4", blowup4, "r^3 + s^4 + s*t^2", rst);
    p.origin_citation = "version 2: Z/2 acts by (u,v,w) -> (u,-v,-w)";
    p.enabled = options.enable_external;
    p.disabled_reason = external;
    c.pairs.push_back(std::move(p));
  }
  {
    EquivalencePair p;
    p.source = "E18";
    p.target = "Q12";
    p.action = make_action(Ring(xyz), {{{"x", "-x"}, {"z", "-z"}}}, {2});
    p.group_order = 2;
    p.f = poly("y^3 + x^10 + z^2", xyz);
    p.witness = make_witness(p.action, p.f, "z1^3 + z2^5 + z4", blowup4, "r^3 + s^5 + s*t^2", rst);
    p.origin_citation = "Z/2 acts by (x,y,z) -> (-x,y,-z)";
    p.enabled = options.enable_external;
    p.disabled_reason = external;
    c.pairs.push_back(std::move(p));
  }
  {
    EquivalencePair p;
    p.source = "E30";
    p.target = "Q18";
    p.action = make_action(ruvw, {{{"u", "-u"}, {"w", "-w + u^8"}}}, {2});
    p.group_order = 2;
    p.f = poly("v^3 + u^16 + (w - 1/2*u^8)^2", uvw);
    p.witness = make_witness(p.action, p.f, "z1^3 + z2^8 + z4", blowup4, "r^3 + s^8 + s*t^2", rst,
                             Linearization{{"w", poly("w - 1/2*u^8", uvw)}});
    p.origin_citation = "Z/2 acts by (u,v,w) -> (-u,v,-w+u^8)";
    p.enabled = options.enable_external;
    p.disabled_reason = external;
    c.pairs.push_back(std::move(p));
  }

  const std::string nx = "quantum dimension product outside Q>0";
  c.nonexamples = {{"A11", "E6", nx}, {"A17", "E7", nx}, {"A29", "E8", nx}};
  c.chains.push_back({"A5-D4-A2xA2", {{"A5", "D4", StepKind::McKay}, {"D4", "A2xA2", StepKind::McKay}}});
  for (const auto& n : c.nonexamples)
    c.chains.push_back({n.source + "-" + n.target, {{n.source, n.target, StepKind::Nonexample}}});
  return c;
}

std::string format_weights(const WeightSystem& w) {
  std::vector<std::string> parts;
  for (const auto& [v, k] : w.weights()) parts.push_back(v + ":" + std::to_string(k));
  std::string out = join(parts, ",");
  if (w.degree()) out += "/" + std::to_string(*w.degree());
  return out;
}

ChainReport chain_check(const Catalog& catalog, const EquivalenceChain& chain) {
  ChainReport rep;
  for (std::size_t i = 1; i < chain.steps.size(); ++i)
    if (chain.steps[i].from != chain.steps[i - 1].to)
      throw Error("chain step " + std::to_string(i) + " starts at " + chain.steps[i].from + " but the previous ends at " +
                  chain.steps[i - 1].to);
  std::vector<std::size_t> orders;
  bool all_mckay = true;
  for (const auto& s : chain.steps) {
    if (s.kind == StepKind::Nonexample || catalog.is_nonexample(s.from, s.to)) {
      ChainStep marked = s;
      marked.kind = StepKind::Nonexample;
      step_product(catalog, marked, rep);
      all_mckay = false;
      continue;
    }
    rep.product = rep.product * step_product(catalog, s, rep);
    if (s.kind == StepKind::McKay) orders.push_back(catalog.pair(s.from, s.to)->group_order);
    else all_mckay = false;
  }
  rep.positive_rational = rep.product_known && is_positive_rational(rep.product);
  rep.necessary_condition_fails = !rep.positive_rational;
  if (all_mckay) rep.group_orders = orders;
  return rep;
}

CatalogReport catalog_verify(const Catalog& catalog, bool parallel) {
  std::vector<std::function<CatalogRow()>> tasks;
  for (const auto& e : catalog.entries)
    tasks.push_back([&e] {
      CatalogRow row{"entry", e.name, true, std::nullopt, format_weights(e.weights), ""};
      const DegreeInfo info = weighted_degree(e.potential, e.weights);
      if (info.kind != DegreeInfo::Kind::Homogeneous) {
        row.pass = false;
        row.status = "not quasi-homogeneous";
        return row;
      }
      row.milnor = cached_jacobi(e.potential).milnor;
      row.pass = *row.milnor == e.expected_milnor;
      row.status = row.pass ? "ok" : "milnor " + std::to_string(*row.milnor) + " != " + std::to_string(e.expected_milnor);
      return row;
    });
  for (const auto& p : catalog.pairs)
    tasks.push_back([&catalog, &p] {
      CatalogRow row{"pair", p.source + "~" + p.target, true, std::nullopt, "", ""};
      std::vector<std::string> status;
      auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
          row.pass = false;
          status.push_back(what + " FAILED");
        }
      };
      const ActionReport ar = action_verify(p.action);
      check(ar.pass, "action" + (ar.failures.empty() ? std::string() : " (" + ar.failures.front() + ")"));
      check(ar.pass && p.action.group_order == p.group_order, "group order");
      if (!p.enabled) {
        status.push_back("disabled: " + p.disabled_reason);
        row.status = join(status, "; ");
        return row;
      }
      check(invariance_check(p.f, p.action), "invariance");
      const SingularityEntry* src = catalog.entry(p.source);
      const SingularityEntry* tgt = catalog.entry(p.target);
      row.milnor = cached_jacobi(p.f).milnor;
      check(src && *row.milnor == src->expected_milnor, "source milnor");
      if (auto w = infer_weights(p.f)) row.weights = format_weights(*w);
      if (p.witness) {
        const DescentReport dr = descent_verify(*p.witness);
        for (const auto& r : dr.rows)
          if (!r.pass) check(false, r.check);
        check(tgt && dr.milnor_f_hat && *dr.milnor_f_hat == tgt->expected_milnor, "target milnor");
        if (dr.milnor_f_hat) status.push_back("mu(f_hat) " + std::to_string(*dr.milnor_f_hat));
      }
      if (p.certificate) {
        check(mf_verify(p.certificate->mf).pass, "certificate factorization");
        const QDimResult q = qdim_result(p.certificate->mf);
        check(q.product == Cyclo(static_cast<long>(p.group_order)), "certificate product");
        status.push_back("dims " + q.left.to_string() + ", " + q.right.to_string());
        if (p.certificate->equivariance)
          check(equivariant_verify(p.certificate->mf, *p.certificate->equivariance).pass, "certificate equivariance");
      }
      if (row.pass) status.insert(status.begin(), "ok");
      row.status = join(status, "; ");
      return row;
    });
  for (const auto& n : catalog.nonexamples)
    tasks.push_back([&n] {
      return CatalogRow{"nonexample", n.source + "~" + n.target, true, std::nullopt, "", "recorded: " + n.origin_citation};
    });
  for (const auto& ch : catalog.chains)
    tasks.push_back([&catalog, &ch] {
      CatalogRow row{"chain", ch.name, true, std::nullopt, "", ""};
      const ChainReport r = chain_check(catalog, ch);
      row.status = r.product_known ? "product " + r.product.to_string() + (r.positive_rational ? " in Q>0" : " not in Q>0")
                                   : "necessary condition fails";
      return row;
    });

  std::vector<CatalogRow> rows(tasks.size());
  auto run = [&](std::size_t i) {
    try {
      rows[i] = tasks[i]();
    } catch (const std::exception& e) {
      rows[i] = CatalogRow{"error", "task " + std::to_string(i), false, std::nullopt, "", e.what()};
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) run(i);
  }
  CatalogReport rep;
  rep.rows = std::move(rows);
  for (const auto& r : rep.rows) rep.pass = rep.pass && r.pass;
  return rep;
}

std::string catalog_table(const CatalogReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "name" << std::setw(6) << "mu" << std::setw(28) << "weights" << "status\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(14) << r.name << std::setw(6) << (r.milnor ? std::to_string(*r.milnor) : "-")
        << std::setw(28) << (r.weights.empty() ? "-" : r.weights) << (r.pass ? "" : "FAIL: ") << r.status << "\n";
  }
  return out.str();
}

}  // namespace mfkit
