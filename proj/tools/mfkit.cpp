// mfkit: command-line front end. Every subcommand prints one JSON document
// (or a table with --format table) on stdout.
//
// Exit codes:
//   0  pass
//   1  the checked property fails (verification, verdict, non-isolated, budget)
//   2  I/O, JSON or expression parse error, malformed input, usage error
//   3  input lacks a grading (ungraded or inhomogeneous)

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mfkit/error.hpp"
#include "mfkit/jacobi.hpp"
#include "mfkit/json_io.hpp"
#include "mfkit/parse.hpp"

using namespace mfkit;

namespace {

enum Exit { Pass = 0, Fail = 1, InputError = 2, NoGrading = 3 };

struct CliConfig {
  unsigned order = 1;
  unsigned long seed = 20240917;
  int jobs = 0;  // 0: MFKIT_JOBS, else the OpenMP default
  std::string format = "json";
  std::size_t budget_steps = 1000000;
  bool verbose = false;
};

CliConfig config;

bool table() { return config.format == "table"; }

Kernel kernel() { return omp_get_max_threads() > 1 ? Kernel::Parallel : Kernel::Serial; }

QDimOptions qdim_options() {
  QDimOptions o;
  o.kernel = kernel();
  o.groebner.max_steps = config.budget_steps;
  return o;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  return Json::parse(in);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void log_calibration() {
  if (!config.verbose) return;
  const CalibrationReport& c = session_calibration();
  std::cerr << "calibration: " << c.convention.describe() << " (" << c.passing << " consistent candidates on "
            << c.objects_checked << " objects)\n";
}

Polynomial parse_expression(const std::string& text, const std::string& vars) {
  Ring ring = vars.empty() ? variables_of(text) : Ring([&] {
    std::vector<std::string> names;
    std::stringstream ss(vars);
    for (std::string v; std::getline(ss, v, ',');)
      if (!v.empty()) names.push_back(v);
    return names;
  }());
  return parse_polynomial(text, ring, config.order);
}

void print_matrix(const std::string& name, const PolyMatrix& m) {
  std::cout << name << " (" << m.rows() << "x" << m.cols() << ")\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? ", " : "") << m(i, j).to_string();
    std::cout << "]\n";
  }
}

void emit_mf(const MatrixFactorization& X) {
  if (!table()) return emit(mf_to_json(X));
  std::cout << "source " << Json(X.source.names()).dump() << "  U = " << X.U.to_string() << "\n";
  std::cout << "target " << Json(X.target.names()).dump() << "  V = " << X.V.to_string() << "\n";
  print_matrix("d1", X.d1);
  print_matrix("d0", X.d0);
}

int cmd_verify(const std::string& path) {
  const MatrixFactorization X = mf_from_json(read_json(path));
  const VerifyReport r = mf_verify(X);
  if (table()) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& v : r.violations)
      std::cout << "  " << v.check << " (" << v.row << "," << v.col << "): " << v.detail << "\n";
  } else {
    Json vs = Json::array();
    for (const auto& v : r.violations)
      vs.push_back({{"check", v.check}, {"row", v.row}, {"col", v.col}, {"detail", v.detail}});
    emit({{"pass", r.pass}, {"violations", vs}});
  }
  return r.pass ? Pass : Fail;
}

int cmd_qdim(const std::string& path, std::optional<long> group_order) {
  const MatrixFactorization X = mf_from_json(read_json(path));
  const VerifyReport v = mf_verify(X);
  log_calibration();
  EquivalenceCertificate c = certify_equivalence(X, group_order, qdim_options());
  if (!v.pass) {
    // Dimensions are still reported, but nothing is certified for a non-factorization.
    std::cerr << "not a matrix factorization: " << v.violations.front().check << "\n";
    c.verdict = false;
  }
  if (table()) {
    std::cout << "dim_left   " << c.dims.left.to_string() << "\n"
              << "dim_right  " << c.dims.right.to_string() << "\n"
              << "product    " << c.dims.product.to_string() << "\n"
              << "verdict    " << (c.verdict ? "equivalence" : "no certificate") << "\n";
    if (c.product_matches_group_order)
      std::cout << "|G| match  " << (*c.product_matches_group_order ? "yes" : "no") << "\n";
  } else {
    emit(certificate_to_json(c));
  }
  return c.verdict && c.product_matches_group_order.value_or(true) ? Pass : Fail;
}

int cmd_milnor(const std::string& expr, const std::string& vars) {
  const Polynomial f = parse_expression(expr, vars);
  GroebnerOptions g;
  g.max_steps = config.budget_steps;
  const JacobiData jd = jacobi_build(f, MonomialOrder::grevlex(), g);
  if (table()) {
    std::cout << jd.milnor << "\n";
  } else {
    emit({{"potential", f.to_string()},
          {"variables", f.ring().names()},
          {"weights", format_weights(jd.weights)},
          {"milnor", jd.milnor}});
  }
  return Pass;
}

int cmd_catalog(const std::string& action, const std::string& file, bool enable_external) {
  CatalogOptions opts;
  opts.enable_external = enable_external;
  // User catalogs are never trusted: `list` and `export` still go through the reader,
  // and `verify` re-checks every row.
  const Catalog catalog = file.empty() ? catalog_load(opts) : catalog_from_json(read_json(file));
  if (action == "export") {
    emit(catalog_to_json(catalog));
    return Pass;
  }
  if (action == "list") {
    CatalogReport listing;
    for (const auto& e : catalog.entries)
      listing.rows.push_back({"entry", e.name, true, e.expected_milnor, format_weights(e.weights),
                              e.provenance == Provenance::Paper ? "paper" : "standard normal form"});
    for (const auto& p : catalog.pairs)
      listing.rows.push_back({"pair", p.source + "~" + p.target, true, std::nullopt, "",
                              p.enabled ? "|G|=" + std::to_string(p.group_order) : "disabled: " + p.disabled_reason});
    for (const auto& n : catalog.nonexamples)
      listing.rows.push_back({"nonexample", n.source + "~" + n.target, true, std::nullopt, "", "product not in Q>0"});
    if (table()) {
      std::cout << catalog_table(listing);
    } else {
      Json j = catalog_report_to_json(listing);
      j.erase("pass");
      emit(j);
    }
    return Pass;
  }
  // Chain rows are part of the report; chains through nonexample records pass when flagged.
  const CatalogReport report = catalog_verify(catalog, omp_get_max_threads() > 1);
  if (table())
    std::cout << catalog_table(report);
  else
    emit(catalog_report_to_json(report));
  return report.pass ? Pass : Fail;
}

int cmd_search(const std::string& path) {
  SearchOptions opts;
  opts.budget.groebner_steps = config.budget_steps;
  opts.kernel = kernel();
  const SearchRequest request = search_request_from_json(read_json(path), opts);
  opts.group_order_claim = request.group_order_claim;
  log_calibration();
  const SearchResult r = search(request, opts);
  const Json j = search_response_to_json(r, request.group_order_claim);
  bool found = false;
  for (const auto& c : j["certificates"])
    if (c["verdict"].get<bool>() && c["product_matches_group_order"] != false) found = true;
  if (table()) {
    std::cout << std::left << std::setw(4) << "#" << std::setw(12) << "dim_left" << std::setw(12) << "dim_right"
              << "product\n";
    std::size_t k = 0;
    for (const auto& c : j["certificates"])
      std::cout << std::setw(4) << k++ << std::setw(12) << c["dim_left"].get<std::string>() << std::setw(12)
                << c["dim_right"].get<std::string>() << c["product"].get<std::string>() << "\n";
    std::cout << "profiles " << r.stats.profiles_tried << "/" << r.stats.profiles_total << ", "
              << std::setprecision(3) << r.stats.elapsed_seconds << " s"
              << (r.stats.budget_exhausted ? ", budget exhausted" : "") << "\n";
  } else {
    emit(j);
  }
  return found ? Pass : Fail;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Ungraded& e) {
    std::cerr << "ungraded: " << e.what() << "\n";
    return NoGrading;
  } catch (const Inhomogeneous& e) {
    std::cerr << "inhomogeneous: " << e.what() << "\n";
    return NoGrading;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return InputError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return InputError;
  } catch (const Json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return InputError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return InputError;
  } catch (const NotIsolated& e) {
    std::cerr << "not isolated: " << e.what() << "\n";
    return Fail;
  } catch (const ResourceLimit& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return Fail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Fail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrix factorizations, quantum dimensions and orbifold equivalence certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--order", config.order, "Cyclotomic order for parsed expressions")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized routines");
  app.add_option("--jobs", config.jobs, "Worker threads (fallback: MFKIT_JOBS)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--budget-steps", config.budget_steps, "Groebner step budget per computation");
  app.add_flag("-v,--verbose", config.verbose, "Print the calibrated sign convention");

  std::string path, expr, vars, catalog_action, catalog_file;
  std::optional<long> group_order;
  bool enable_external = false;
  std::function<int()> body;

  auto* verify = app.add_subcommand("verify", "Check d1*d0 = d0*d1 = (V-U)*Id and the grading");
  verify->add_option("path", path, "Factorization JSON")->required();
  verify->callback([&] { body = [&] { return cmd_verify(path); }; });

  auto* qdim = app.add_subcommand("qdim", "Quantum dimensions and equivalence verdict");
  qdim->add_option("path", path, "Factorization JSON")->required();
  qdim->add_option("--group-order", group_order, "Claimed |G| for the product law");
  qdim->callback([&] { body = [&] { return cmd_qdim(path, group_order); }; });

  auto* milnor = app.add_subcommand("milnor", "Milnor number of a potential");
  milnor->add_option("expr", expr, "Polynomial")->required();
  milnor->add_option("--vars", vars, "Comma-separated variable order");
  milnor->callback([&] { body = [&] { return cmd_milnor(expr, vars); }; });

  auto* catalog = app.add_subcommand("catalog", "Built-in singularity catalog");
  catalog->add_option("action", catalog_action, "verify | list | export")
      ->required()
      ->check(CLI::IsMember({"verify", "list", "export"}));
  catalog->add_option("--file", catalog_file, "Catalog JSON to use instead of the built-in one");
  catalog->add_flag("--enable-external", enable_external, "Enable pairs whose potentials are external normal forms");
  catalog->callback([&] { body = [&] { return cmd_catalog(catalog_action, catalog_file, enable_external); }; });

  auto* search_cmd = app.add_subcommand("search", "Search for a graded rank-2 certificate");
  search_cmd->add_option("path", path, "Search request JSON")->required();
  search_cmd->callback([&] { body = [&] { return cmd_search(path); }; });

  auto* knorrer = app.add_subcommand("knorrer", "Factorization of W(x) -> W(y) + uv");
  knorrer->add_option("expr", expr, "Potential W")->required();
  knorrer->add_option("--vars", vars, "Comma-separated variable order");
  knorrer->callback([&] { body = [&] { return emit_mf(knorrer_certificate(parse_expression(expr, vars))), 0; }; });

  auto* delta = app.add_subcommand("delta", "Diagonal factorization of W(y) - W(x)");
  delta->add_option("expr", expr, "Potential W")->required();
  delta->add_option("--vars", vars, "Comma-separated variable order");
  delta->callback([&] { body = [&] { return emit_mf(diagonal_delta(parse_expression(expr, vars))), 0; }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Pass : InputError;
  }

  if (config.jobs == 0)
    if (const char* env = std::getenv("MFKIT_JOBS")) config.jobs = std::atoi(env);
  if (config.jobs > 0) omp_set_num_threads(config.jobs);

  return run_guarded(body);
}
