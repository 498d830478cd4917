// btkit: verification suites for the braids-and-ties algebra and its
// partition Temperley-Lieb quotient.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "btkit/btkit.hpp"

namespace {

using btkit::BtAlgebra;
using btkit::Rational;
using btkit::Scalar;
using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Config {
  std::string suite;
  int n = 3;
  int n_max = 0;
  std::vector<std::string> points_text{"5/7", "3/2"};
  std::vector<Rational> points;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  std::string element;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collects failed checks across a run.
struct Failures {
  Json list = Json::array();

  void add(const std::string& suite, int n, const std::string& id, const std::string& statement,
           const std::string& detail) {
    list.push_back({{"suite", suite}, {"n", n}, {"id", id}, {"statement", statement}, {"detail", detail}});
  }
};

Json checks_json(const std::vector<btkit::IdentityCheck>& checks, const std::string& suite, int n, Failures& f) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back({{"family", c.family}, {"id", c.id}, {"statement", c.statement}, {"passed", c.passed}});
    if (!c.passed) f.add(suite, n, c.id, c.statement, c.detail);
  }
  return arr;
}

Json summary(const std::vector<btkit::IdentityCheck>& checks) {
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.passed;
  return {{"total", checks.size()}, {"passed", passed}};
}

// ---- relations ---------------------------------------------------------------

Json run_relations(const Config& cfg, int n, Failures& f) {
  BtAlgebra<Scalar> alg(n);
  auto defining = btkit::defining_relations(n);
  auto lemmas = btkit::lemma_identities(n);
  auto eng_def = btkit::verify_in_algebra(alg, defining, cfg.jobs);
  auto eng_lem = btkit::verify_in_algebra(alg, lemmas, cfg.jobs);
  btkit::TensorRep<Scalar> rep(n);
  const bool full = n <= 3;
  auto rep_def = btkit::verify_in_representation(rep, defining, full, cfg.jobs);
  auto hom = btkit::check_homomorphism(alg, rep, 100, cfg.seed, cfg.jobs);
  for (const auto& h : hom.failed) f.add("relations", n, "homomorphism", "J(ab) = J(a)J(b)", h);
  Json j;
  j["n"] = n;
  j["algebra_dimension"] = alg.dimension();
  j["engine"] = {{"defining", summary(eng_def)}, {"lemmas", summary(eng_lem)}};
  j["representation"] = {{"inputs", full ? "all basis vectors" : "canonical basis vectors"},
                         {"defining", summary(rep_def)},
                         {"homomorphism_pairs", hom.pairs},
                         {"homomorphism_failures", hom.failures}};
  j["engine_defining_checks"] = checks_json(eng_def, "relations", n, f);
  j["engine_lemma_checks"] = checks_json(eng_lem, "relations", n, f);
  j["representation_checks"] = checks_json(rep_def, "relations", n, f);
  return j;
}

Json run_classical(Failures& f) {
  auto checks = btkit::classical_jimbo_check();
  return {{"summary", summary(checks)}, {"checks", checks_json(checks, "relations", 3, f)}};
}

// ---- quotient ----------------------------------------------------------------

template <btkit::Field F>
Json quotient_at(const BtAlgebra<F>& alg, unsigned jobs, Failures& f, const std::string& label) {
  const int n = alg.n();
  auto ib = btkit::build_ptl_ideal(alg, jobs);
  auto closed = btkit::ideal_is_closed(ib, jobs);
  auto single = btkit::single_relation_suffices(ib, jobs);
  auto span = btkit::spanning_check(ib, jobs);
  auto pres = btkit::verify_presentations(ib, jobs);
  bool idempotent = true;
  for (std::size_t k = 0; k < alg.dimension(); k += 7) {
    auto b = alg.basis_element(alg.basis(k));
    auto r = ib.reduce(b);
    idempotent = idempotent && ib.reduce(r) == r && ib.contains(b - r);
  }
  auto g = alg.eval(btkit::ideal_generator_word(1, 2));
  bool g_zero = ib.reduce(g).is_zero();
  if (!closed) f.add("quotient", n, "ideal-closure", "ideal closed under generators", label);
  if (!idempotent) f.add("quotient", n, "reduce-idempotent", "reduce(reduce(a)) = reduce(a)", label);
  if (!g_zero) f.add("quotient", n, "generator-reduces", "E1E2T12 = 0 mod ideal", label);
  if (!single) f.add("quotient", n, "single-relation", "E_iE_jT_ij generate the same ideal", label);
  if (span.rank != span.quotient_dim) {
    f.add("quotient", n, "spanning", "E_I F span the quotient",
          label + ": rank " + std::to_string(span.rank) + " vs quotient dimension " + std::to_string(span.quotient_dim));
  }
  Json checks = Json::array();
  for (const auto& c : pres) {
    checks.push_back({{"family", c.identity.family},
                      {"id", c.identity.id},
                      {"statement", c.identity.statement},
                      {"diagnostic", c.diagnostic},
                      {"expected_in_algebra", c.expected_in_algebra},
                      {"holds_in_algebra", c.holds_in_algebra},
                      {"holds_mod_ideal", c.holds_mod_ideal},
                      {"passed", c.identity.passed}});
    if (!c.identity.passed && !c.diagnostic) {
      f.add("quotient", n, c.identity.id, c.identity.statement,
            label + (c.holds_in_algebra ? ": holds in E_n" : ": fails in E_n") +
                (c.holds_mod_ideal ? ", holds mod ideal" : ", fails mod ideal"));
    }
  }
  return {{"point", label},
          {"ideal_dim", ib.dimension()},
          {"quotient_dim", ib.quotient_dimension()},
          {"spanning_rank", span.rank},
          {"spanning_candidates", span.candidates},
          {"zero_candidates", span.zero_candidates},
          {"ideal_closed", closed},
          {"reduce_idempotent", idempotent},
          {"generator_reduces_to_zero", g_zero},
          {"single_relation_suffices", single},
          {"presentation_checks", checks}};
}

Json run_quotient(const Config& cfg, int n, Failures& f) {
  Json j;
  j["n"] = n;
  std::vector<Json> per;
  Json pts = Json::array();
  if (n <= 3) {
    per.push_back(quotient_at(BtAlgebra<Scalar>(n), cfg.jobs, f, "symbolic"));
  } else {
    for (const auto& p : cfg.points) {
      per.push_back(quotient_at(BtAlgebra<Rational>(n, {p}), cfg.jobs, f, "s=" + p.to_string()));
      pts.push_back(p.to_string());
    }
  }
  bool agree = true;
  for (const auto& r : per) agree = agree && r["quotient_dim"] == per.front()["quotient_dim"];
  if (!agree) f.add("quotient", n, "point-agreement", "quotient dimension agrees across points", "");
  j["ideal_dim"] = per.front()["ideal_dim"];
  j["quotient_dim"] = per.front()["quotient_dim"];
  j["conjectured_dim"] = btkit::bell(n) * btkit::catalan(n);
  j["conjecture_agrees"] = per.front()["quotient_dim"] == j["conjectured_dim"];
  j["spanning_rank"] = per.front()["spanning_rank"];
  j["presentation_checks"] = per.front()["presentation_checks"];
  j["specialization_points"] = pts;
  j["points_agree"] = agree;
  Json detail = Json::array();
  for (auto& r : per) {
    r.erase("presentation_checks");
    detail.push_back(r);
  }
  j["per_point"] = detail;
  return j;
}

// ---- rank --------------------------------------------------------------------

Json run_rank(const Config& cfg, int n, Failures& f) {
  Json j;
  j["n"] = n;
  j["algebra_dimension"] = btkit::bell(n) * btkit::factorial(n);
  Json ranks = Json::array();
  std::set<std::size_t> seen;
  if (n <= 3) {
    auto r = btkit::representation_rank(BtAlgebra<Scalar>(n), btkit::TensorRep<Scalar>(n), cfg.jobs);
    ranks.push_back({{"point", r.point}, {"rank", r.rank}, {"kernel_dim", r.kernel_dim}});
    seen.insert(r.rank);
  }
  for (const auto& p : cfg.points) {
    auto r = btkit::representation_rank(BtAlgebra<Rational>(n, {p}), btkit::TensorRep<Rational>(n, {p}), cfg.jobs);
    ranks.push_back({{"point", r.point}, {"rank", r.rank}, {"kernel_dim", r.kernel_dim}});
    seen.insert(r.rank);
  }
  j["ranks"] = ranks;
  j["ranks_agree"] = seen.size() <= 1;
  if (seen.size() > 1) f.add("rank", n, "rank-agreement", "rank agrees across points", "");
  // With lower indices restricted to {1, 2} the representation is built on
  // the same rules with dim V = 2n.
  if (n >= 3 && !cfg.points.empty()) {
    const auto& p = cfg.points.front();
    auto r = btkit::representation_rank(BtAlgebra<Rational>(n, {p}), btkit::TensorRep<Rational>(n, {p}, 2), cfg.jobs);
    j["lower_range_2"] = {{"point", r.point}, {"rank", r.rank}, {"kernel_dim", r.kernel_dim}};
  }
  if (n >= 3) {
    BtAlgebra<Scalar> alg(n);
    auto g = alg.eval(btkit::ideal_generator_word(1, 2));
    auto count_nonzero = [&](const btkit::TensorRep<Scalar>& rep) {
      std::size_t nz = 0;
      for (auto c : rep.canonical_inputs()) {
        nz += !rep.apply(g, btkit::SparseVector<Scalar>::from_entries({{c, Scalar(1)}})).is_zero();
      }
      return nz;
    };
    std::size_t full = count_nonzero(btkit::TensorRep<Scalar>(n));
    std::size_t restricted = count_nonzero(btkit::TensorRep<Scalar>(n, {}, 2));
    j["ideal_generator_image"] = {{"canonical_inputs_not_killed", full},
                                  {"canonical_inputs_not_killed_lower_range_2", restricted}};
    if (full != 0) {
      f.add("rank", n, "ideal-generator-killed", "J(E1E2T12) = 0",
            std::to_string(full) + " canonical basis vectors have nonzero image");
    }
  }
  return j;
}

// ---- trace -------------------------------------------------------------------

Json run_trace(const Config& cfg, int n, Failures& f) {
  btkit::TraceOptions opt;
  opt.jobs = cfg.jobs;
  opt.redundancy = n <= 3;
  auto tower = btkit::solve_trace_tower<Scalar>(n, {}, opt);
  Json levels = Json::array();
  for (const auto& t : tower) {
    Json red = Json::array();
    for (const auto& r : t.redundancy) red.push_back({{"rule", r.rule}, {"instances", r.instances}, {"implied", r.implied}});
    levels.push_back({{"n", t.n},
                      {"exists", t.exists},
                      {"unique", t.unique},
                      {"unknowns", t.unknowns},
                      {"constraints", t.constraints},
                      {"nullity", t.nullity},
                      {"witness", t.witness},
                      {"rule_redundancy", red}});
    if (!t.exists) f.add("trace", t.n, "trace-exists", "linear system consistent", t.witness);
    if (t.exists && !t.unique) f.add("trace", t.n, "trace-unique", "solution unique", "nullity " + std::to_string(t.nullity));
  }
  Json j;
  j["n"] = n;
  j["levels"] = levels;
  const auto& top = tower.back();
  if (top.n != n || !top.exists) return j;
  BtAlgebra<Scalar> alg(n);
  Json table = Json::object();
  for (std::size_t k = 0; k < alg.dimension(); ++k) {
    auto b = alg.basis(k);
    table[b.I.rgs_string() + " " + b.w.to_string()] = top.values[k].to_string();
  }
  j["table"] = table;
  j["symmetry_failures"] = btkit::check_trace_symmetry(alg, top, 100, cfg.seed);
  if (j["symmetry_failures"] != 0) f.add("trace", n, "trace-symmetry", "rho(ab) = rho(ba)", "");
  if (n == 3) {
    using namespace btkit::words;
    struct Expect {
      std::string id;
      btkit::AlgebraElement<Scalar> x;
      std::string value;
    };
    std::vector<Expect> ex = {
        {"example E1T1T2T1", alg.eval(E(1) * T(1) * T(2) * T(1)), "uAB+(u-1)A^2"},
        {"rho(T12)", alg.steinberg(1, 2), "(u+1)A^2+3A+(u-1)AB+1"},
        {"rho(E{1,2,3}T12)", alg.mul(alg.E_of_partition(btkit::SetPartition::full(3)), alg.steinberg(1, 2)),
         "(u+1)A^2+(u+2)AB+B^2"},
    };
    for (const auto& I : alg.partitions()) {
      if (I.block_count() == 2) {
        ex.push_back({"rho(E" + I.to_string() + "T12)", alg.mul(alg.E_of_partition(I), alg.steinberg(1, 2)),
                      "(u+1)A^2+(u+1)AB+A+B"});
      }
    }
    Json values = Json::array();
    for (const auto& e : ex) {
      auto v = btkit::evaluate_trace(alg, top, e.x);
      bool ok = v == btkit::parse_poly_ab(e.value);
      values.push_back({{"id", e.id}, {"value", v.to_string()}, {"expected", e.value}, {"passed", ok}});
      if (!ok) f.add("trace", n, e.id, e.id + " = " + e.value, v.to_string());
    }
    j["values"] = values;
    auto fc = btkit::factorization_condition(alg, top);
    j["factorization"] = {{"rho(E1E2T12)", fc.value.to_string()},
                          {"matches_expected", fc.matches_expected},
                          {"roots", {"A=-B", "A=-B/(1+u)"}},
                          {"vanishes_at_A=-B", fc.vanishes_at_minus_B},
                          {"vanishes_at_A=-B/(1+u)", fc.vanishes_at_minus_B_over_1pu},
                          {"value_at_A=B", fc.value_at_A_eq_B.to_string()},
                          {"scalar_multiple_count", fc.scalar_multiple_count},
                          {"basis_size", fc.basis_size}};
    bool ok = fc.matches_expected && fc.vanishes_at_minus_B && fc.vanishes_at_minus_B_over_1pu &&
              fc.nonzero_at_A_eq_B && fc.scalar_multiple_count == fc.basis_size;
    if (!ok) f.add("trace", n, "factorization", "rho passes to the quotient iff A = -B or A = -B/(1+u)", "");
  }
  return j;
}

// ---- export ------------------------------------------------------------------

int run_export(const Config& cfg, std::ostream& os) {
  auto a = btkit::parse_element(cfg.element, cfg.n);
  btkit::TensorRep<Scalar> rep(cfg.n);
  os << "# rows/cols index basis vectors of V^(x)" << cfg.n << ", first factor most significant\n";
  os << "# dim " << rep.space_dimension() << "\n";
  for (const auto& [r, c, v] : rep.triplets(a, rep.all_inputs())) os << r << " " << c << " " << v.to_string() << "\n";
  return 0;
}

// ---- markdown ----------------------------------------------------------------

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void markdown(const Json& j, std::ostream& os, int depth) {
  std::string head(static_cast<std::size_t>(std::min(depth, 6)), '#');
  for (const auto& [key, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << "\n" << head << " " << key << "\n\n";
      std::vector<std::string> cols;
      for (const auto& row : v) {
        for (const auto& [k, x] : row.items()) {
          if (!x.is_structured() && std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
        }
      }
      os << "|";
      for (const auto& c : cols) os << " " << c << " |";
      os << "\n|";
      for (std::size_t k = 0; k < cols.size(); ++k) os << " --- |";
      os << "\n";
      for (const auto& row : v) {
        os << "|";
        for (const auto& c : cols) os << " " << (row.contains(c) ? cell(row[c]) : "") << " |";
        os << "\n";
      }
      for (std::size_t k = 0; k < v.size(); ++k) {
        bool nested = false;
        for (const auto& [kk, x] : v[k].items()) nested = nested || x.is_structured();
        if (nested) {
          os << "\n" << head << "# " << key << " [" << k << "]\n";
          Json sub = Json::object();
          for (const auto& [kk, x] : v[k].items()) {
            if (x.is_structured()) sub[kk] = x;
          }
          markdown(sub, os, depth + 2);
        }
      }
    } else if (v.is_object()) {
      os << "\n" << head << " " << key << "\n\n";
      markdown(v, os, depth + 1);
    } else {
      os << "- **" << key << "**: " << cell(v) << "\n";
    }
  }
}

void check_range(const std::string& suite, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw UsageError("suite '" + suite + "' supports n in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  cfg.jobs = btkit::default_jobs();
  CLI::App app{"Verification suites for the braids-and-ties algebra E_n(u) and its quotient PTL_n(u)"};
  app.add_option("suite,--suite", cfg.suite, "relations | quotient | rank | trace | export")
      ->required()
      ->check(CLI::IsMember({"relations", "quotient", "rank", "trace", "export"}));
  app.add_option("--n", cfg.n, "degree n");
  app.add_option("--n-max", cfg.n_max, "run every degree from --n to --n-max");
  app.add_option("--points", cfg.points_text, "values of sqrt(u) for specialized runs")->delimiter(',');
  app.add_option("--jobs", cfg.jobs, "worker threads (default: BTKIT_JOBS or hardware)")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--element", cfg.element, "algebra element for export, e.g. \"E{{1,2},{3}}T[2,1,3]\"");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& t : cfg.points_text) {
      Rational p = Rational::parse(t);
      Rational u = p * p;
      if (p.is_zero() || u == Rational(1)) throw UsageError("point " + t + " makes u one of 0, 1");
      cfg.points.push_back(p);
    }
    const int lo = cfg.n;
    const int hi = cfg.n_max > 0 ? cfg.n_max : cfg.n;
    if (hi < lo) throw UsageError("--n-max is smaller than --n");

    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw UsageError("cannot open " + cfg.out);
    }
    std::ostream& os = cfg.out.empty() ? std::cout : file;

    if (cfg.suite == "export") {
      check_range("export", cfg.n, 2, 4);
      if (cfg.element.empty()) throw UsageError("export needs --element");
      return run_export(cfg, os);
    }

    Failures f;
    Json runs = Json::array();
    for (int n = lo; n <= hi; ++n) {
      if (cfg.suite == "relations") {
        check_range("relations", n, 2, 4);
        runs.push_back(run_relations(cfg, n, f));
      } else if (cfg.suite == "quotient") {
        check_range("quotient", n, 3, 5);
        if (n > 3 && cfg.points.empty()) throw UsageError("quotient above n = 3 needs --points");
        runs.push_back(run_quotient(cfg, n, f));
      } else if (cfg.suite == "rank") {
        check_range("rank", n, 2, 4);
        if (n > 3 && cfg.points.empty()) throw UsageError("rank above n = 3 needs --points");
        runs.push_back(run_rank(cfg, n, f));
      } else {
        check_range("trace", n, 1, 4);
        runs.push_back(run_trace(cfg, n, f));
      }
    }
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["suite"] = cfg.suite;
    Json pts = Json::array();
    for (const auto& p : cfg.points) pts.push_back(p.to_string());
    report["config"] = {{"n", lo}, {"n_max", hi}, {"points", pts}, {"seed", cfg.seed}};
    if (cfg.suite == "relations") report["classical"] = run_classical(f);
    report["runs"] = runs;
    report["passed"] = f.list.empty();
    report["failures"] = f.list;
    if (cfg.format == "json") {
      os << report.dump(2) << "\n";
    } else {
      os << "# btkit " << cfg.suite << "\n\n";
      markdown(report, os, 2);
    }
    return f.list.empty() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const btkit::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const btkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
