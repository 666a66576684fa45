#include "mfkit/search.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "mfkit/error.hpp"
#include "mfkit/polysolve.hpp"

namespace mfkit {

namespace {

using Entries = std::array<Polynomial, 4>;

constexpr std::array<std::array<int, 2>, 4> kLines{{{0, 1}, {2, 3}, {0, 2}, {1, 3}}};

// det(d1) = a e - b c; the cofactor multiplying entry j, up to sign.
Polynomial multiplier(const Entries& d, int j) {
  switch (j) {
    case 0: return d[3];
    case 1: return -d[2];
    case 2: return -d[1];
    default: return d[0];
  }
}

// Solves A x = b with free unknowns set to zero.
std::optional<std::vector<Cyclo>> solve_linear(std::vector<std::vector<Cyclo>> A, std::vector<Cyclo> b,
                                               std::size_t unknowns) {
  const std::size_t rows = A.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    const Cyclo inv = A[r][c].inverse();
    for (std::size_t k = c; k < unknowns; ++k) A[r][k] = A[r][k] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      const Cyclo f = A[i][c];
      for (std::size_t k = c; k < unknowns; ++k)
        if (!A[r][k].is_zero()) A[i][k] = A[i][k] - f * A[r][k];
      b[i] = b[i] - f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Cyclo> x(unknowns, Cyclo(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

Polynomial combination(const Ring& ring, const std::vector<Exponents>& monos, const std::vector<Cyclo>& coeffs,
                       std::size_t offset) {
  Polynomial p(ring);
  for (std::size_t k = 0; k < monos.size(); ++k)
    if (!coeffs[offset + k].is_zero()) p.add_term(monos[k], coeffs[offset + k]);
  return p;
}

// Candidate number idx for the fixed line: completes the other two entries by
// linear algebra, or returns nothing.
std::optional<Entries> try_candidate(const Ansatz& a, int line, std::size_t idx, const std::vector<Cyclo>& values) {
  const auto [f0, f1] = kLines[line];
  std::vector<int> free_entries;
  for (int j = 0; j < 4; ++j)
    if (j != f0 && j != f1) free_entries.push_back(j);

  Entries d{Polynomial(a.joint), Polynomial(a.joint), Polynomial(a.joint), Polynomial(a.joint)};
  const std::size_t base = values.size();
  for (int j : {f0, f1})
    for (const auto& m : a.monomials[j]) {
      const Cyclo& v = values[idx % base];
      idx /= base;
      if (!v.is_zero()) d[j].add_term(m, v);
    }
  if (d[f0].is_zero() && d[f1].is_zero()) return std::nullopt;

  const Polynomial target = a.V - a.U;
  std::vector<Polynomial> columns;
  for (int j : free_entries) {
    const Polynomial mult = multiplier(d, j);
    for (const auto& m : a.monomials[j]) columns.push_back(mult * Polynomial::monomial(a.joint, m));
  }
  std::map<Exponents, std::size_t, GrlexGreater> row_of;
  auto row_index = [&](const Exponents& e) { return row_of.try_emplace(e, row_of.size()).first->second; };
  for (const auto& col : columns)
    for (const auto& [e, c] : col.terms()) row_index(e);
  for (const auto& [e, c] : target.terms()) row_index(e);
  std::vector<std::vector<Cyclo>> A(row_of.size(), std::vector<Cyclo>(columns.size(), Cyclo(0)));
  std::vector<Cyclo> b(row_of.size(), Cyclo(0));
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [e, c] : columns[k].terms()) A[row_of.at(e)][k] = c;
  for (const auto& [e, c] : target.terms()) b[row_of.at(e)] = c;

  const auto x = solve_linear(std::move(A), std::move(b), columns.size());
  if (!x) return std::nullopt;
  std::size_t offset = 0;
  for (int j : free_entries) {
    d[j] = combination(a.joint, a.monomials[j], *x, offset);
    offset += a.monomials[j].size();
  }
  if (d[0] * d[3] - d[1] * d[2] != target) return std::nullopt;
  return d;
}

std::string entries_key(const Entries& d) {
  return d[0].to_string() + ";" + d[1].to_string() + ";" + d[2].to_string() + ";" + d[3].to_string();
}

MatrixFactorization to_factorization(const Ansatz& a, const Entries& d) {
  PolyMatrix d1(2, 2, a.joint), d0(2, 2, a.joint);
  d1(0, 0) = d[0];
  d1(0, 1) = d[1];
  d1(1, 0) = d[2];
  d1(1, 1) = d[3];
  d0(0, 0) = d[3];
  d0(0, 1) = -d[1];
  d0(1, 0) = -d[2];
  d0(1, 1) = d[0];
  Grading g;
  std::map<std::string, long> ws, wt;
  for (const auto& n : a.source.names()) ws[n] = a.weights.weight(n);
  for (const auto& n : a.target.names()) wt[n] = a.weights.weight(n);
  g.source_weights = WeightSystem(ws, a.degree);
  g.target_weights = WeightSystem(wt, a.degree);
  g.degree = a.degree;
  const mpq_class half = mpq_class(a.degree) / 2;
  const auto& p = a.profile;
  g.even_degrees = {mpq_class(0), mpq_class(p[0] - p[2])};
  g.odd_degrees = {mpq_class(p[0]) - half, mpq_class(p[1]) - half};
  return make_factorization(a.source, a.target, a.U, a.V, d1, d0, g);
}

// Whole-system attempt for small profiles; empty when not zero-dimensional.
std::vector<Entries> nonlinear_solutions(const Ansatz& a, const SearchOptions& options, SearchStats& stats) {
  std::size_t total = 0;
  for (const auto& m : a.monomials) total += m.size();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < total; ++k) {
    std::string t = "t" + std::to_string(k);
    while (a.joint.contains(t)) t = "_" + t;
    names.push_back(t);
  }
  const Ring params(names);
  const Ring big = a.joint.joined(params);
  Entries d{Polynomial(big), Polynomial(big), Polynomial(big), Polynomial(big)};
  std::size_t k = 0;
  for (int j = 0; j < 4; ++j)
    for (const auto& m : a.monomials[j]) {
      Exponents e = m;
      e.resize(big.size(), 0);
      e[a.joint.size() + k] = 1;
      d[j].add_term(e, Cyclo(1));
      ++k;
    }
  const Polynomial eq = d[0] * d[3] - d[1] * d[2] - (a.V - a.U).to_ring(big);
  std::map<Exponents, Polynomial> by_monomial;
  for (const auto& [e, c] : eq.terms()) {
    Exponents outer(e.begin(), e.begin() + static_cast<long>(a.joint.size()));
    Exponents inner(e.begin() + static_cast<long>(a.joint.size()), e.end());
    by_monomial.try_emplace(outer, Polynomial(params)).first->second.add_term(inner, c);
  }
  std::vector<Polynomial> eqs;
  for (auto& [e, p] : by_monomial) eqs.push_back(p);
  SolveOptions so;
  so.groebner.max_steps = options.budget.groebner_steps;
  const SolveOutcome out = solve_zero_dimensional(eqs, params, so);
  stats.groebner_steps += out.steps;
  for (const auto& n : out.notes) stats.notes.push_back(n);
  std::vector<Entries> result;
  if (!out.zero_dimensional) return result;
  for (const auto& sol : out.solutions) {
    Entries e{Polynomial(a.joint), Polynomial(a.joint), Polynomial(a.joint), Polynomial(a.joint)};
    std::size_t off = 0;
    for (int j = 0; j < 4; ++j) {
      e[j] = combination(a.joint, a.monomials[j], sol, off);
      off += a.monomials[j].size();
    }
    result.push_back(std::move(e));
  }
  return result;
}

struct Collector {
  const Ansatz& ansatz;
  const SearchOptions& options;
  SearchResult& result;
  std::set<std::string>& seen;
  bool done = false;

  void offer(const Entries& d) {
    if (done || !seen.insert(entries_key(d)).second) return;
    MatrixFactorization X = to_factorization(ansatz, d);
    if (!mf_verify(X).pass) return;
    QDimOptions qo;
    qo.kernel = options.kernel;
    const QDimResult q = qdim_result(X, qo);
    if (options.require_invertible && !(q.invertible_left && q.invertible_right)) return;
    result.solutions.push_back(std::move(X));
    result.certificates.push_back(q);
    if (result.certificates.size() >= options.budget.max_certificates) done = true;
    if (options.stop_on_claim && options.group_order_claim && q.product == Cyclo(*options.group_order_claim))
      done = true;
  }
};

SearchResult solve_ansatz_with(const Ansatz& a, const SearchOptions& options, std::set<std::string>& seen,
                               std::chrono::steady_clock::time_point start, bool& stop) {
  SearchResult result;
  Collector collect{a, options, result, seen};

  std::size_t total = 0;
  for (const auto& m : a.monomials) total += m.size();
  if (total <= options.nonlinear_unknown_limit) {
    for (const auto& d : nonlinear_solutions(a, options, result.stats)) collect.offer(d);
    if (collect.done) {
      stop = true;
      return result;
    }
  }

  int line = 0;
  for (int l = 1; l < 4; ++l)
    if (a.monomials[kLines[l][0]].size() + a.monomials[kLines[l][1]].size() <
        a.monomials[kLines[line][0]].size() + a.monomials[kLines[line][1]].size())
      line = l;
  const std::size_t k = a.monomials[kLines[line][0]].size() + a.monomials[kLines[line][1]].size();
  std::size_t count = 1;
  bool truncated = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > options.budget.max_candidates / options.coefficient_values.size()) {
      truncated = true;
      count = options.budget.max_candidates;
      break;
    }
    count *= options.coefficient_values.size();
  }
  if (truncated) {
    result.stats.budget_exhausted = true;
    result.stats.notes.push_back("candidate budget truncated a profile");
  }

  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_size);
  for (std::size_t begin = 0; begin < count && !collect.done; begin += chunk) {
    const std::size_t end = std::min(count, begin + chunk);
    std::vector<std::optional<Entries>> slots(end - begin);
    if (options.kernel == Kernel::Serial) {
      for (std::size_t i = begin; i < end; ++i) slots[i - begin] = try_candidate(a, line, i, options.coefficient_values);
    } else {
      std::exception_ptr failure;
      std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 8)
      for (long i = static_cast<long>(begin); i < static_cast<long>(end); ++i) {
        try {
          slots[static_cast<std::size_t>(i) - begin] =
              try_candidate(a, line, static_cast<std::size_t>(i), options.coefficient_values);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    }
    result.stats.candidates_tried += end - begin;
    for (const auto& s : slots)
      if (s) {
        ++result.stats.linear_solutions;
        collect.offer(*s);
      }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > options.budget.soft_time_limit_seconds) {
      result.stats.budget_exhausted = true;
      result.stats.notes.push_back("soft time limit reached");
      stop = true;
      break;
    }
  }
  if (collect.done) stop = true;
  return result;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

void merge(SearchResult& into, SearchResult&& from) {
  for (auto& s : from.solutions) into.solutions.push_back(std::move(s));
  for (auto& c : from.certificates) into.certificates.push_back(std::move(c));
  into.stats.candidates_tried += from.stats.candidates_tried;
  into.stats.linear_solutions += from.stats.linear_solutions;
  into.stats.groebner_steps += from.stats.groebner_steps;
  into.stats.budget_exhausted = into.stats.budget_exhausted || from.stats.budget_exhausted;
  for (auto& n : from.stats.notes) into.stats.notes.push_back(std::move(n));
}

}  // namespace

std::vector<Exponents> monomials_of_degree(const Ring& joint, const WeightSystem& weights, long degree) {
  std::vector<Exponents> out;
  Exponents cur(joint.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == joint.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const long w = weights.weight(joint.name(i));
    if (w <= 0) throw Error("weights must be positive");
    for (long k = left / w; k >= 0; --k) {
      cur[i] = static_cast<int>(k);
      rec(i + 1, left - k * w);
    }
    cur[i] = 0;
  };
  if (degree >= 0) rec(0, degree);
  std::sort(out.begin(), out.end(), GrlexGreater());
  return out;
}

std::vector<DegreeProfile> entry_degree_profiles(const Ring& joint, const WeightSystem& weights, long degree) {
  std::vector<DegreeProfile> out;
  std::map<long, bool> admissible;
  auto has = [&](long d) {
    auto it = admissible.find(d);
    if (it != admissible.end()) return it->second;
    return admissible[d] = !monomials_of_degree(joint, weights, d).empty();
  };
  for (long a = 1; a < degree; ++a)
    for (long b = 1; b < degree; ++b) {
      const long c = degree - b, e = degree - a;
      if (has(a) && has(b) && has(c) && has(e)) out.push_back({a, b, c, e});
    }
  return out;
}

Ansatz make_ansatz(const Polynomial& U, const Polynomial& V, const WeightSystem& weights, long degree,
                   const DegreeProfile& profile) {
  Ansatz a;
  a.source = U.ring();
  a.target = V.ring();
  a.joint = a.source.joined(a.target);
  a.U = U.to_ring(a.joint);
  a.V = V.to_ring(a.joint);
  a.weights = weights;
  a.degree = degree;
  a.profile = profile;
  for (int j = 0; j < 4; ++j) {
    a.monomials[j] = monomials_of_degree(a.joint, weights, profile[j]);
    if (a.monomials[j].empty()) throw Error("no admissible monomials of degree " + std::to_string(profile[j]));
  }
  return a;
}

SearchResult solve_ansatz(const Ansatz& a, const SearchOptions& options) {
  std::set<std::string> seen;
  bool stop = false;
  const auto start = std::chrono::steady_clock::now();
  SearchResult r = solve_ansatz_with(a, options, seen, start, stop);
  r.stats.profiles_total = r.stats.profiles_tried = 1;
  r.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::pair<WeightSystem, long> common_weights(const SearchRequest& r) {
  auto side = [](const Polynomial& f, const std::optional<WeightSystem>& given) -> std::pair<WeightSystem, long> {
    if (f.ring().size() == 0) return {WeightSystem(), 0};
    std::optional<WeightSystem> w = given ? given : infer_weights(f);
    if (!w) throw Ungraded("potential " + f.to_string() + " is not quasi-homogeneous");
    const DegreeInfo info = weighted_degree(f, *w);
    if (info.kind != DegreeInfo::Kind::Homogeneous || info.degree.get_den() != 1)
      throw Ungraded("potential " + f.to_string() + " is not homogeneous for the given weights");
    return {*w, info.degree.get_num().get_si()};
  };
  auto [ws, ds] = side(r.U, r.weights_source);
  auto [wt, dt] = side(r.V, r.weights_target);
  long D = ds && dt ? ds / gcd_long(ds, dt) * dt : std::max(ds, dt);
  if (r.degree) {
    if (*r.degree <= 0 || (ds && *r.degree % ds) || (dt && *r.degree % dt))
      throw Ungraded("requested degree " + std::to_string(*r.degree) + " is not a common multiple of the side degrees");
    D = *r.degree;
  }
  if (D <= 0) throw Ungraded("both potentials are trivial");
  std::map<std::string, long> all;
  for (const auto& [n, w] : ws.weights()) all[n] = w * (D / ds);
  for (const auto& [n, w] : wt.weights()) {
    if (all.count(n)) throw Error("source and target share variable '" + n + "'");
    all[n] = w * (D / dt);
  }
  return {WeightSystem(all, D), D};
}

SearchResult search(const SearchRequest& request, SearchOptions options) {
  const auto start = std::chrono::steady_clock::now();
  if (request.group_order_claim) options.group_order_claim = request.group_order_claim;
  SearchResult result;
  const auto [weights, D] = common_weights(request);
  const Ring joint = request.U.ring().joined(request.V.ring());

  auto side_charge = [&](const Polynomial& f) {
    if (f.ring().size() == 0) return mpq_class(0);
    std::map<std::string, long> w;
    for (const auto& n : f.ring().names()) w[n] = weights.weight(n);
    return central_charge(f, WeightSystem(w, D));
  };
  if (side_charge(request.U) != side_charge(request.V)) {
    result.stats.prefilter_rejected = true;
    result.stats.notes.push_back("central charges differ");
    return result;
  }

  const auto profiles = entry_degree_profiles(joint, weights, D);
  result.stats.profiles_total = profiles.size();
  std::set<std::string> seen;
  bool stop = false;
  for (std::size_t i = 0; i < profiles.size() && !stop; ++i) {
    if (i >= options.budget.max_profiles) {
      result.stats.budget_exhausted = true;
      result.stats.notes.push_back("profile budget reached");
      break;
    }
    const Ansatz a = make_ansatz(request.U, request.V, weights, D, profiles[i]);
    SearchOptions local = options;
    local.budget.max_certificates = options.budget.max_certificates - result.certificates.size();
    merge(result, solve_ansatz_with(a, local, seen, start, stop));
    ++result.stats.profiles_tried;
  }
  result.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace mfkit
