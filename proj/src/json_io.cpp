#include "mfkit/json_io.hpp"

#include "mfkit/error.hpp"
#include "mfkit/parse.hpp"

namespace mfkit {

namespace {

Ring ring_of(const Json& names) { return Ring(names.get<std::vector<std::string>>()); }

Json names_of(const Ring& r) { return Json(r.names()); }

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

PolyMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const Ring& ring, unsigned order) {
  if (!j.is_array() || j.size() != rows) throw DimensionMismatch("matrix has the wrong number of rows");
  PolyMatrix m(rows, cols, ring);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw DimensionMismatch("matrix row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_polynomial(j[i][k].get<std::string>(), ring, order);
  }
  return m;
}

std::size_t row_count(const Json& j) { return j.is_array() ? j.size() : 0; }

std::size_t col_count(const Json& j) { return j.is_array() && !j.empty() && j[0].is_array() ? j[0].size() : 0; }

Json weights_to_json(const WeightSystem& w) {
  Json o = Json::object();
  for (const auto& [k, v] : w.weights()) o[k] = v;
  return o;
}

WeightSystem weights_from_json(const Json& j, std::optional<long> degree) {
  std::map<std::string, long> m;
  for (const auto& [k, v] : j.items()) m[k] = v.get<long>();
  return WeightSystem(m, degree);
}

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Json rationals_to_json(const std::vector<mpq_class>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_to_string(q));
  return a;
}

Json polys_to_json(const std::vector<Polynomial>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

std::vector<Polynomial> polys_from_json(const Json& j, const Ring& ring, unsigned order) {
  std::vector<Polynomial> out;
  for (const auto& t : j) out.push_back(parse_polynomial(t.get<std::string>(), ring, order));
  return out;
}

Json substitution_to_json(const Substitution& s) {
  Json o = Json::object();
  for (const auto& [k, v] : s) o[k] = v.to_string();
  return o;
}

Substitution substitution_from_json(const Json& j, const Ring& ring, unsigned order) {
  Substitution s;
  for (const auto& [k, v] : j.items()) s[k] = parse_polynomial(v.get<std::string>(), ring, order);
  return s;
}

unsigned order_of(const Json& j) { return j.contains("cyclotomic_order") ? j.at("cyclotomic_order").get<unsigned>() : 1; }

std::optional<long> optional_long(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<long>();
}

const char* kind_name(StepKind k) {
  switch (k) {
    case StepKind::McKay: return "mckay";
    case StepKind::Knorrer: return "knorrer";
    case StepKind::Nonexample: return "nonexample";
  }
  return "mckay";
}

StepKind kind_from(const std::string& s) {
  if (s == "mckay") return StepKind::McKay;
  if (s == "knorrer") return StepKind::Knorrer;
  if (s == "nonexample") return StepKind::Nonexample;
  throw Error("unknown chain step kind '" + s + "'");
}

Json equivariance_to_json(const EquivariantStructure& E) {
  Json reps = Json::array();
  for (const auto& [a0, a1] : E.reps) reps.push_back({{"even", matrix_to_json(a0)}, {"odd", matrix_to_json(a1)}});
  return {{"action", action_to_json(E.action)}, {"reps", reps}};
}

EquivariantStructure equivariance_from_json(const Json& j) {
  EquivariantStructure E;
  E.action = action_from_json(j.at("action"));
  const unsigned order = order_of(j.at("action"));
  for (const auto& r : j.at("reps")) {
    const Json& e = r.at("even");
    const Json& o = r.at("odd");
    E.reps.emplace_back(matrix_from_json(e, row_count(e), col_count(e), Ring(), order),
                        matrix_from_json(o, row_count(o), col_count(o), Ring(), order));
  }
  return E;
}

}  // namespace

unsigned field_order_of(const std::vector<Polynomial>& polys) {
  unsigned k = 1;
  for (const auto& p : polys) k = lcm_order(k, p.field_order());
  return k;
}

Json mf_to_json(const MatrixFactorization& X) {
  std::vector<Polynomial> all{X.U, X.V};
  for (const PolyMatrix* m : {&X.d0, &X.d1})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j) all.push_back((*m)(i, j));
  Json j;
  j["source_vars"] = names_of(X.source);
  j["target_vars"] = names_of(X.target);
  j["U"] = X.U.to_string();
  j["V"] = X.V.to_string();
  j["d0"] = matrix_to_json(X.d0);
  j["d1"] = matrix_to_json(X.d1);
  if (X.grading) {
    const Grading& g = *X.grading;
    j["grading"] = {{"weights_source", weights_to_json(g.source_weights)},
                    {"weights_target", weights_to_json(g.target_weights)},
                    {"degree", rational_to_string(g.degree)},
                    {"generator_degrees_even", rationals_to_json(g.even_degrees)},
                    {"generator_degrees_odd", rationals_to_json(g.odd_degrees)}};
  } else {
    j["grading"] = nullptr;
  }
  j["cyclotomic_order"] = field_order_of(all);
  return j;
}

MatrixFactorization mf_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("factorization JSON must be an object", 0);
  const Ring source = ring_of(j.at("source_vars"));
  const Ring target = ring_of(j.at("target_vars"));
  const Ring joint = source.joined(target);
  const unsigned order = order_of(j);
  const Polynomial U = parse_polynomial(j.at("U").get<std::string>(), joint, order);
  const Polynomial V = parse_polynomial(j.at("V").get<std::string>(), joint, order);
  const Json& jd1 = j.at("d1");
  const Json& jd0 = j.at("d0");
  const std::size_t r0 = row_count(jd1), r1 = row_count(jd0);
  const PolyMatrix d1 = matrix_from_json(jd1, r0, r0 ? col_count(jd1) : r1, joint, order);
  const PolyMatrix d0 = matrix_from_json(jd0, r1, r1 ? col_count(jd0) : r0, joint, order);
  std::optional<Grading> grading;
  if (j.contains("grading") && !j.at("grading").is_null()) {
    const Json& g = j.at("grading");
    Grading out;
    out.degree = rational_from_json(g.at("degree"));
    std::optional<long> D;
    if (out.degree.get_den() == 1 && out.degree > 0) D = out.degree.get_num().get_si();
    out.source_weights = weights_from_json(g.at("weights_source"), D);
    out.target_weights = weights_from_json(g.at("weights_target"), D);
    for (const auto& q : g.at("generator_degrees_even")) out.even_degrees.push_back(rational_from_json(q));
    for (const auto& q : g.at("generator_degrees_odd")) out.odd_degrees.push_back(rational_from_json(q));
    grading = std::move(out);
  }
  return make_factorization(source, target, U, V, d1, d0, std::move(grading));
}

Json qdim_result_to_json(const QDimResult& r) {
  return {{"dim_left", r.left.to_string()},
          {"dim_right", r.right.to_string()},
          {"product", r.product.to_string()},
          {"invertible_left", r.invertible_left},
          {"invertible_right", r.invertible_right},
          {"product_in_positive_rationals", r.rational_positive_product}};
}

Json certificate_to_json(const EquivalenceCertificate& c) {
  Json j;
  j["mf"] = mf_to_json(c.mf);
  j["dim_left"] = c.dims.left.to_string();
  j["dim_right"] = c.dims.right.to_string();
  j["product"] = c.dims.product.to_string();
  j["group_order_claim"] = c.group_order_claim ? Json(*c.group_order_claim) : Json(nullptr);
  j["verdict"] = c.verdict;
  j["product_matches_group_order"] = c.product_matches_group_order ? Json(*c.product_matches_group_order) : Json(nullptr);
  j["product_in_positive_rationals"] = c.dims.rational_positive_product;
  return j;
}

EquivalenceCertificate certificate_from_json(const Json& j) {
  EquivalenceCertificate c;
  c.mf = mf_from_json(j.at("mf"));
  c.dims.left = parse_cyclo(j.at("dim_left").get<std::string>());
  c.dims.right = parse_cyclo(j.at("dim_right").get<std::string>());
  c.dims.product = parse_cyclo(j.at("product").get<std::string>());
  c.dims.invertible_left = !c.dims.left.is_zero();
  c.dims.invertible_right = !c.dims.right.is_zero();
  c.dims.rational_positive_product = j.at("product_in_positive_rationals").get<bool>();
  c.group_order_claim = optional_long(j, "group_order_claim");
  c.verdict = j.at("verdict").get<bool>();
  if (j.contains("product_matches_group_order") && !j.at("product_matches_group_order").is_null())
    c.product_matches_group_order = j.at("product_matches_group_order").get<bool>();
  return c;
}

Json action_to_json(const GroupAction& a) {
  Json gens = Json::array();
  std::vector<Polynomial> all;
  for (const auto& g : a.generators) {
    gens.push_back(substitution_to_json(g));
    for (const auto& [k, v] : g) all.push_back(v);
  }
  return {{"variables", names_of(a.vars)},
          {"generators", gens},
          {"orders", a.orders},
          {"group_order", a.group_order},
          {"cyclotomic_order", field_order_of(all)}};
}

GroupAction action_from_json(const Json& j) {
  GroupAction a;
  a.vars = ring_of(j.at("variables"));
  const unsigned order = order_of(j);
  for (const auto& g : j.at("generators")) a.generators.push_back(substitution_from_json(g, a.vars, order));
  a.orders = j.at("orders").get<std::vector<unsigned>>();
  a.group_order = j.at("group_order").get<std::size_t>();
  return a;
}

Json witness_to_json(const DescentWitness& w) {
  std::vector<Polynomial> all{w.f, w.F, w.f_hat};
  for (const auto& g : w.invariant_gens) all.push_back(g);
  for (const auto& [k, v] : w.chart_map) all.push_back(v);
  Json j;
  j["action"] = action_to_json(w.action);
  j["variables"] = names_of(w.f.ring());
  j["f"] = w.f.to_string();
  j["invariant_gens"] = polys_to_json(w.invariant_gens);
  j["z_vars"] = names_of(w.z_ring);
  j["relations"] = polys_to_json(w.relations);
  j["F"] = w.F.to_string();
  j["chart_vars"] = names_of(w.f_hat.ring());
  j["chart_map"] = substitution_to_json(w.chart_map);
  j["f_hat"] = w.f_hat.to_string();
  j["linearization"] = w.linearization ? substitution_to_json(*w.linearization) : Json(nullptr);
  j["cyclotomic_order"] = field_order_of(all);
  return j;
}

DescentWitness witness_from_json(const Json& j) {
  DescentWitness w;
  const unsigned order = order_of(j);
  w.action = action_from_json(j.at("action"));
  const Ring vars = ring_of(j.at("variables"));
  w.f = parse_polynomial(j.at("f").get<std::string>(), vars, order);
  w.invariant_gens = polys_from_json(j.at("invariant_gens"), vars, order);
  w.z_ring = ring_of(j.at("z_vars"));
  w.relations = polys_from_json(j.at("relations"), w.z_ring, order);
  w.F = parse_polynomial(j.at("F").get<std::string>(), w.z_ring, order);
  const Ring chart = ring_of(j.at("chart_vars"));
  w.chart_map = substitution_from_json(j.at("chart_map"), chart, order);
  w.f_hat = parse_polynomial(j.at("f_hat").get<std::string>(), chart, order);
  if (j.contains("linearization") && !j.at("linearization").is_null())
    w.linearization = substitution_from_json(j.at("linearization"), vars, order);
  return w;
}

Json search_request_to_json(const SearchRequest& r, const SearchBudget& b) {
  Json j;
  j["U"] = r.U.to_string();
  j["V"] = r.V.to_string();
  j["source_vars"] = names_of(r.U.ring());
  j["target_vars"] = names_of(r.V.ring());
  j["weights_source"] = r.weights_source ? weights_to_json(*r.weights_source) : Json(nullptr);
  j["weights_target"] = r.weights_target ? weights_to_json(*r.weights_target) : Json(nullptr);
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["group_order_claim"] = r.group_order_claim ? Json(*r.group_order_claim) : Json(nullptr);
  j["budget"] = {{"max_profiles", b.max_profiles},
                 {"groebner_steps", b.groebner_steps},
                 {"max_candidates", b.max_candidates},
                 {"max_certificates", b.max_certificates},
                 {"soft_time_limit_seconds", b.soft_time_limit_seconds}};
  return j;
}

SearchRequest search_request_from_json(const Json& j, SearchOptions& options) {
  SearchRequest r;
  const unsigned order = order_of(j);
  auto vars_for = [&](const char* key, const std::string& text) {
    return j.contains(key) ? ring_of(j.at(key)) : variables_of(text);
  };
  const std::string u = j.at("U").get<std::string>(), v = j.at("V").get<std::string>();
  r.U = parse_polynomial(u, vars_for("source_vars", u), order);
  r.V = parse_polynomial(v, vars_for("target_vars", v), order);
  r.degree = optional_long(j, "degree");
  if (j.contains("weights_source") && !j.at("weights_source").is_null())
    r.weights_source = weights_from_json(j.at("weights_source"), std::nullopt);
  if (j.contains("weights_target") && !j.at("weights_target").is_null())
    r.weights_target = weights_from_json(j.at("weights_target"), std::nullopt);
  r.group_order_claim = optional_long(j, "group_order_claim");
  if (j.contains("budget") && j.at("budget").is_object()) {
    const Json& b = j.at("budget");
    if (b.contains("max_profiles")) options.budget.max_profiles = b.at("max_profiles").get<std::size_t>();
    if (b.contains("groebner_steps")) options.budget.groebner_steps = b.at("groebner_steps").get<std::size_t>();
    if (b.contains("max_candidates")) options.budget.max_candidates = b.at("max_candidates").get<std::size_t>();
    if (b.contains("max_certificates")) options.budget.max_certificates = b.at("max_certificates").get<std::size_t>();
    if (b.contains("soft_time_limit_seconds"))
      options.budget.soft_time_limit_seconds = b.at("soft_time_limit_seconds").get<double>();
  }
  return r;
}

Json search_response_to_json(const SearchResult& r, std::optional<long> claim) {
  Json certs = Json::array();
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    EquivalenceCertificate c;
    c.mf = r.solutions[i];
    c.dims = r.certificates[i];
    c.group_order_claim = claim;
    c.verdict = c.dims.invertible_left && c.dims.invertible_right;
    if (claim) c.product_matches_group_order = c.dims.product == Cyclo(*claim);
    certs.push_back(certificate_to_json(c));
  }
  Json j;
  j["certificates"] = certs;
  j["stats"] = {{"profiles_total", r.stats.profiles_total},
                {"profiles_tried", r.stats.profiles_tried},
                {"candidates_tried", r.stats.candidates_tried},
                {"linear_solutions", r.stats.linear_solutions},
                {"groebner_steps", r.stats.groebner_steps},
                {"elapsed_seconds", r.stats.elapsed_seconds},
                {"budget_exhausted", r.stats.budget_exhausted},
                {"prefilter_rejected", r.stats.prefilter_rejected},
                {"notes", r.stats.notes}};
  return j;
}

Json catalog_to_json(const Catalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"name", e.name},
                       {"variables", names_of(e.potential.ring())},
                       {"potential", e.potential.to_string()},
                       {"weights", weights_to_json(e.weights)},
                       {"degree", e.weights.degree() ? Json(*e.weights.degree()) : Json(nullptr)},
                       {"expected_milnor", e.expected_milnor},
                       {"provenance", e.provenance == Provenance::Paper ? "paper" : "standard-normal-form"},
                       {"cyclotomic_order", e.potential.field_order()}});
  Json pairs = Json::array();
  for (const auto& p : c.pairs) {
    Json cert = nullptr;
    if (p.certificate) {
      cert = {{"mf", mf_to_json(p.certificate->mf)},
              {"equivariance", p.certificate->equivariance ? equivariance_to_json(*p.certificate->equivariance)
                                                           : Json(nullptr)}};
    }
    pairs.push_back({{"source", p.source},
                     {"target", p.target},
                     {"action", action_to_json(p.action)},
                     {"group_order", p.group_order},
                     {"variables", names_of(p.f.ring())},
                     {"f", p.f.to_string()},
                     {"witness", p.witness ? witness_to_json(*p.witness) : Json(nullptr)},
                     {"certificate", cert},
                     {"origin_citation", p.origin_citation},
                     {"enabled", p.enabled},
                     {"disabled_reason", p.disabled_reason},
                     {"cyclotomic_order", p.f.field_order()}});
  }
  Json nonex = Json::array();
  for (const auto& n : c.nonexamples)
    nonex.push_back({{"source", n.source}, {"target", n.target}, {"origin_citation", n.origin_citation}});
  Json chains = Json::array();
  for (const auto& ch : c.chains) {
    Json steps = Json::array();
    for (const auto& s : ch.steps) steps.push_back({{"from", s.from}, {"to", s.to}, {"kind", kind_name(s.kind)}});
    chains.push_back({{"name", ch.name}, {"steps", steps}});
  }
  return {{"entries", entries}, {"pairs", pairs}, {"nonexamples", nonex}, {"chains", chains}};
}

Catalog catalog_from_json(const Json& j) {
  Catalog c;
  for (const auto& e : j.at("entries")) {
    SingularityEntry s;
    s.name = e.at("name").get<std::string>();
    s.potential = parse_polynomial(e.at("potential").get<std::string>(), ring_of(e.at("variables")), order_of(e));
    s.weights = weights_from_json(e.at("weights"), optional_long(e, "degree"));
    s.expected_milnor = e.at("expected_milnor").get<std::size_t>();
    s.provenance = e.value("provenance", "standard-normal-form") == "paper" ? Provenance::Paper
                                                                            : Provenance::StandardNormalForm;
    c.entries.push_back(std::move(s));
  }
  if (j.contains("pairs"))
    for (const auto& p : j.at("pairs")) {
      EquivalencePair q;
      q.source = p.at("source").get<std::string>();
      q.target = p.at("target").get<std::string>();
      q.action = action_from_json(p.at("action"));
      q.group_order = p.at("group_order").get<std::size_t>();
      q.f = parse_polynomial(p.at("f").get<std::string>(), ring_of(p.at("variables")), order_of(p));
      if (p.contains("witness") && !p.at("witness").is_null()) q.witness = witness_from_json(p.at("witness"));
      if (p.contains("certificate") && !p.at("certificate").is_null()) {
        EmbeddedCertificate ec;
        ec.mf = mf_from_json(p.at("certificate").at("mf"));
        const Json& eq = p.at("certificate").at("equivariance");
        if (!eq.is_null()) ec.equivariance = equivariance_from_json(eq);
        q.certificate = std::move(ec);
      }
      q.origin_citation = p.value("origin_citation", "");
      q.enabled = p.value("enabled", true);
      q.disabled_reason = p.value("disabled_reason", "");
      c.pairs.push_back(std::move(q));
    }
  if (j.contains("nonexamples"))
    for (const auto& n : j.at("nonexamples"))
      c.nonexamples.push_back(
          {n.at("source").get<std::string>(), n.at("target").get<std::string>(), n.value("origin_citation", "")});
  if (j.contains("chains"))
    for (const auto& ch : j.at("chains")) {
      EquivalenceChain chain;
      chain.name = ch.value("name", "");
      for (const auto& s : ch.at("steps"))
        chain.steps.push_back({s.at("from").get<std::string>(), s.at("to").get<std::string>(),
                               kind_from(s.value("kind", "mckay"))});
      c.chains.push_back(std::move(chain));
    }
  return c;
}

Json catalog_report_to_json(const CatalogReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"kind", row.kind},
                    {"name", row.name},
                    {"pass", row.pass},
                    {"milnor", row.milnor ? Json(*row.milnor) : Json(nullptr)},
                    {"weights", row.weights},
                    {"status", row.status}});
  return {{"pass", r.pass}, {"rows", rows}};
}

Json chain_report_to_json(const ChainReport& r) {
  Json j;
  j["product"] = r.product_known ? Json(r.product.to_string()) : Json(nullptr);
  j["product_in_positive_rationals"] = r.positive_rational;
  j["necessary_condition_fails"] = r.necessary_condition_fails;
  j["group_orders"] = r.group_orders ? Json(*r.group_orders) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

}  // namespace mfkit
