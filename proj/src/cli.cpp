// Copyright 2026 The wstar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wstar/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wstar/bounds.hpp"
#include "wstar/codes.hpp"
#include "wstar/enumerators.hpp"
#include "wstar/filtration.hpp"
#include "wstar/random.hpp"
#include "wstar/su2rep.hpp"
#include "wstar/tverberg.hpp"

namespace wstar::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<double> tol;  // explicit flag or WSTAR_TOL
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";

  double tol_or(double fallback) const { return tol.value_or(fallback); }
};

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rationals_json(const std::vector<Rational>& qs) {
  Json a = Json::array();
  for (const auto& q : qs) a.push_back(to_string(q));
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteMetric load_metric(const std::string& path) {
  const Json j = Json::parse(read_file(path));
  if (!j.contains("dist")) throw UsageError("metric file has no \"dist\" field");
  const auto& rows = j.at("dist");
  const Index n = static_cast<Index>(rows.size());
  FiniteMetric m;
  m.dist.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    if (rows[i].size() != static_cast<std::size_t>(n)) {
      throw DomainError("metric: distance matrix is not square");
    }
    for (Index k = 0; k < n; ++k) m.dist(i, k) = rows[i][k].get<double>();
  }
  if (j.contains("labels")) {
    m.labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<Index>(m.labels.size()) != n) {
      throw DomainError("metric: label count differs from matrix size");
    }
  } else {
    for (Index i = 0; i < n; ++i) m.labels.push_back(std::to_string(i));
  }
  validate_metric(m);
  return m;
}

Json metric_json(const FiniteMetric& m) {
  Json dist = Json::array();
  for (Index i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.size(); ++k) row.push_back(m.dist(i, k));
    dist.push_back(std::move(row));
  }
  return Json{{"labels", m.labels}, {"dist", std::move(dist)}};
}

Json detection_json(const DetectionReport& r) {
  return Json{{"grade", r.grade},
              {"max_residual", r.max_residual},
              {"checked", r.checked},
              {"pass", r.pass}};
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const Json& j) { emit_text(j.dump(2) + "\n"); }
  void emit_text(const std::string& s) {
    if (cfg_.out.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(cfg_.out);
    if (!f) throw UsageError("cannot write '" + cfg_.out + "'");
    f << s;
  }
  void require_json(const char* cmd) const {
    if (cfg_.format != "json") {
      throw UsageError(std::string(cmd) + " only supports --format json");
    }
  }

  int rep();
  int filtration_verify();
  int metric();
  int tverberg();
  int code_build();
  int code_recover();
  int enumerate();
  int identity_check();
  int bound();

  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;

  int two_j_ = -1;
  int n_ = 0;
  int detect_ = 0;
  int dim_ = 0;
  int parts_ = 0;
  int error_grade_ = 0;
  long trials_ = 100;
  std::string instance_;
  std::string metric_path_;
  std::string code_path_;
  std::optional<std::uint64_t> random_seed_;
  std::vector<std::string> affine_;
};

int Runner::rep() {
  require_json("rep");
  const Irrep r = build_irrep(two_j_);
  emit(Json{{"two_j", r.two_j},
            {"dim", r.dim},
            {"h", matrix_json(r.h)},
            {"e", matrix_json(r.e)},
            {"f", matrix_json(r.f)},
            {"casimir_scalar", casimir(r)(0, 0).real()}});
  return kExitOk;
}

int Runner::filtration_verify() {
  require_json("filtration verify");
  Filtration f;
  if (instance_ == "su2") {
    if (two_j_ < 0) throw UsageError("--instance su2 needs --two-j");
    f = su2_filtration(build_irrep(two_j_));
  } else if (instance_ == "hamming") {
    if (n_ < 1) throw UsageError("--instance hamming needs --n");
    f = hamming_filtration(n_);
  } else if (instance_ == "classical") {
    if (metric_path_.empty()) throw UsageError("--instance classical needs --metric");
    f = classical_filtration(load_metric(metric_path_));
  } else {
    throw UsageError("unknown instance '" + instance_ + "'");
  }
  const AxiomReport r = verify_axioms(f, cfg_.tol_or(kDefaultTol));
  Json grades = Json::array();
  for (const auto& g : f.grades) {
    grades.push_back(Json{{"label", g.label}, {"dim", g.basis.size()}});
  }
  emit(Json{{"instance", instance_},
            {"ambient_dim", f.ambient_dim},
            {"grades", std::move(grades)},
            {"identity_ok", r.identity_ok},
            {"adjoint_ok", r.adjoint_ok},
            {"nesting_ok", r.nesting_ok},
            {"product_ok", r.product_ok},
            {"intersection_skipped", r.intersection_skipped},
            {"max_residual", r.max_residual},
            {"pass", r.ok()}});
  return r.ok() ? kExitOk : kExitFailed;
}

int Runner::metric() {
  require_json("metric");
  const FiniteMetric m = load_metric(metric_path_);
  FiniteMetric back = metric_from_filtration(classical_filtration(m),
                                             cfg_.tol_or(kDefaultTol));
  back.labels = m.labels;
  const bool exact = back.dist == m.dist;
  Json j = metric_json(back);
  j["round_trip_exact"] = exact;
  emit(j);
  return exact ? kExitOk : kExitFailed;
}

int Runner::tverberg() {
  require_json("tverberg");
  TverbergPartition p = construct(dim_, parts_);
  if (!affine_.empty()) {
    if (affine_.size() != 2) throw UsageError("--affine takes two rationals a b");
    p = transport(p, parse_rational(affine_[0]), parse_rational(affine_[1]));
  }
  const bool ok = verify(p);
  emit(Json{{"dim", p.dim},
            {"parts", p.parts},
            {"points", rationals_json(p.points)},
            {"colors", p.color},
            {"coeffs", rationals_json(p.coeff)},
            {"common_point", rationals_json(p.common_point)},
            {"verified", ok}});
  return ok ? kExitOk : kExitFailed;
}

int Runner::code_build() {
  require_json("code build");
  const Code c = build_code(two_j_, detect_, dim_);
  const Filtration f = su2_filtration(build_irrep(two_j_));
  const DetectionReport r = verify_detection(c, f, detect_, cfg_.tol_or(kDefaultTol));
  Json vectors = Json::array();
  for (Index j = 0; j < c.vectors.cols(); ++j) {
    Json v = Json::array();
    for (Index i = 0; i < c.vectors.rows(); ++i) v.push_back(complex_json(c.vectors(i, j)));
    vectors.push_back(std::move(v));
  }
  emit(Json{{"two_j", c.two_j},
            {"detect", c.detect_grade},
            {"dim", c.k},
            {"vectors", std::move(vectors)},
            {"weight_support", c.weight_support},
            {"partition",
             Json{{"colors", c.partition.color},
                  {"coeffs", rationals_json(c.partition.coeff)}}},
            {"detection_report", detection_json(r)}});
  return r.pass ? kExitOk : kExitFailed;
}

int Runner::code_recover() {
  require_json("code recover");
  const Code c = build_code(two_j_, detect_, dim_);
  const Filtration f = su2_filtration(build_irrep(two_j_));
  const SubspaceBasis& errors = f.at(error_grade_);
  const double tol = cfg_.tol_or(kRecoveryTol);
  Json j{{"two_j", two_j_},      {"detect", detect_}, {"dim", dim_},
         {"error_grade", error_grade_}, {"trials", trials_}, {"seed", cfg_.seed}};
  try {
    const RecoveryChannel ch = build_recovery(c, errors, cfg_.tol_or(kDefaultTol));
    const RecoveryReport r = verify_recovery(ch, errors, trials_, cfg_.seed, tol);
    j["correctable"] = true;
    j["kraus_count"] = ch.kraus_operators().size();
    j["max_residual"] = r.max_residual;
    j["completeness_residual"] = r.completeness_residual;
    j["pass"] = r.pass;
    emit(j);
    return r.pass ? kExitOk : kExitFailed;
  } catch (const NotCorrectableError& e) {
    j["correctable"] = false;
    j["condition_residual"] = e.residual();
    j["pass"] = false;
    emit(j);
    err_ << e.what() << "\n";
    return kExitFailed;
  }
}

int Runner::enumerate() {
  ComplexMatrix x, y;
  std::string operands;
  if (!code_path_.empty() == random_seed_.has_value()) {
    throw UsageError("enumerate needs exactly one of --code FILE or --random SEED");
  }
  const Index n = two_j_ + 1;
  if (!code_path_.empty()) {
    const Json j = Json::parse(read_file(code_path_));
    if (j.contains("two_j") && j.at("two_j").get<int>() != two_j_) {
      throw DomainError("enumerate: code file has a different two_j");
    }
    const auto& vs = j.at("vectors");
    ComplexMatrix v(n, static_cast<Index>(vs.size()));
    for (std::size_t c = 0; c < vs.size(); ++c) {
      if (vs[c].size() != static_cast<std::size_t>(n)) {
        throw ShapeError("enumerate: code vector length differs from 2j+1");
      }
      for (Index i = 0; i < n; ++i) {
        v(i, static_cast<Index>(c)) = {vs[c][i][0].get<double>(), vs[c][i][1].get<double>()};
      }
    }
    x = y = v * v.adjoint();
    operands = "P,P from " + code_path_;
  } else {
    x = random_hermitian(*random_seed_, 0, n);
    y = random_hermitian(*random_seed_, 1, n);
    operands = "random Hermitian X,Y seed " + std::to_string(*random_seed_);
  }
  const WeightTable t = weight_table(two_j_, x, y, operands);
  const double dev = macwilliams_deviation(t);
  if (cfg_.format == "csv") {
    std::ostringstream s;
    s.precision(17);
    s << "d,A,B\n";
    for (std::size_t d = 0; d < t.A.size(); ++d) {
      s << d << "," << t.A[d].real() << "," << t.B[d].real() << "\n";
    }
    emit_text(s.str());
    return kExitOk;
  }
  Json a = Json::array(), b = Json::array();
  double imag = 0.0;
  for (std::size_t d = 0; d < t.A.size(); ++d) {
    a.push_back(t.A[d].real());
    b.push_back(t.B[d].real());
    imag = std::max({imag, std::abs(t.A[d].imag()), std::abs(t.B[d].imag())});
  }
  emit(Json{{"two_j", t.two_j},
            {"operands", t.operands},
            {"A", std::move(a)},
            {"B", std::move(b)},
            {"max_imag", imag},
            {"identity_deviation", dev}});
  return kExitOk;
}

int Runner::identity_check() {
  require_json("identity-check");
  const Index n = two_j_ + 1;
  const double tol = cfg_.tol_or(1e-8);
  double worst = 0.0;
  for (long t = 0; t < trials_; ++t) {
    const auto i = static_cast<std::uint64_t>(t);
    worst = std::max(worst, macwilliams_check(two_j_, random_hermitian(cfg_.seed, 2 * i, n),
                                              random_hermitian(cfg_.seed, 2 * i + 1, n)));
  }
  const bool pass = worst < tol;
  emit(Json{{"two_j", two_j_},
            {"trials", trials_},
            {"seed", cfg_.seed},
            {"max_deviation", worst},
            {"pass", pass}});
  return pass ? kExitOk : kExitFailed;
}

int Runner::bound() {
  const MaxKResult r = max_k(two_j_, detect_, cfg_.tol_or(kLpTol));
  if (cfg_.format == "csv") {
    std::string s = "k,feasible\n";
    for (const auto& p : r.per_k) {
      s += std::to_string(p.k) + "," + (p.feasible ? "true" : "false") + "\n";
    }
    emit_text(s);
  } else {
    Json per = Json::array();
    for (const auto& p : r.per_k) per.push_back(Json{{"k", p.k}, {"feasible", p.feasible}});
    std::vector<double> point(r.feasible_point.data(),
                              r.feasible_point.data() + r.feasible_point.size());
    emit(Json{{"two_j", r.two_j},
              {"detect", r.s},
              {"k_max", r.k_max},
              {"feasible_point", point},
              {"per_k", std::move(per)},
              {"next_infeasible", r.next_infeasible}});
  }
  return r.k_max >= 1 ? kExitOk : kExitFailed;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Codes, filtrations and weight enumerators on su(2)-metric spaces", "wstar"};
  app.require_subcommand(1);
  std::optional<double> tol_flag;
  app.add_option("--tol", tol_flag, "Tolerance (> 0); overrides WSTAR_TOL");
  app.add_option("--seed", cfg_.seed, "Random seed");
  app.add_option("--out", cfg_.out, "Write the report to this file");
  app.add_option("--format", cfg_.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* rep = app.add_subcommand("rep", "Spin-j representation matrices");
  rep->add_option("--two-j", two_j_, "2j")->required()->check(CLI::NonNegativeNumber);

  auto* filt = app.add_subcommand("filtration", "Filtration tools");
  filt->require_subcommand(1);
  auto* fverify = filt->add_subcommand("verify", "Check the filtration axioms");
  fverify->add_option("--instance", instance_, "su2, hamming or classical")->required();
  fverify->add_option("--two-j", two_j_, "2j")->check(CLI::NonNegativeNumber);
  fverify->add_option("--n", n_, "Number of qubits");
  fverify->add_option("--metric", metric_path_, "FiniteMetric JSON file");

  auto* met = app.add_subcommand("metric", "Metric to filtration to metric round trip");
  met->add_option("--metric", metric_path_, "FiniteMetric JSON file")->required();

  auto* tv = app.add_subcommand("tverberg", "Partition of moment-curve points");
  tv->add_option("--dim", dim_, "Dimension")->required();
  tv->add_option("--parts", parts_, "Number of parts")->required();
  tv->add_option("--affine", affine_, "Transport by t -> a t + b")->expected(2);

  auto* code = app.add_subcommand("code", "Code construction and recovery");
  code->require_subcommand(1);
  auto* cbuild = code->add_subcommand("build", "Build and verify a code");
  auto* crecover = code->add_subcommand("recover", "Synthesize and test recovery");
  for (auto* c : {cbuild, crecover}) {
    c->add_option("--two-j", two_j_, "2j")->required()->check(CLI::NonNegativeNumber);
    c->add_option("--detect", detect_, "Detected grade s")->required();
    c->add_option("--dim", dim_, "Code dimension k")->required();
  }
  crecover->add_option("--error-grade", error_grade_, "Error grade")->required();
  crecover->add_option("--trials", trials_, "Random trials")->check(CLI::NonNegativeNumber);

  auto* en = app.add_subcommand("enumerate", "Weight enumerators A_d, B_d");
  en->add_option("--two-j", two_j_, "2j")->required()->check(CLI::NonNegativeNumber);
  en->add_option("--code", code_path_, "Code JSON from `code build`");
  en->add_option("--random", random_seed_, "Seed for random Hermitian operands");

  auto* ic = app.add_subcommand("identity-check", "Check the 6j identity on random pairs");
  ic->add_option("--two-j", two_j_, "2j")->required()->check(CLI::NonNegativeNumber);
  ic->add_option("--trials", trials_, "Random trials")->check(CLI::NonNegativeNumber);

  auto* bd = app.add_subcommand("bound", "Linear-programming bound on k");
  bd->add_option("--two-j", two_j_, "2j")->required()->check(CLI::NonNegativeNumber);
  bd->add_option("--detect", detect_, "Detected grade s")->required();

  for (auto* sub : {rep, filt, fverify, met, tv, code, cbuild, crecover, en, ic, bd}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (const char* env = std::getenv("WSTAR_TOL"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0') throw UsageError("WSTAR_TOL is not a number");
      cfg_.tol = v;
    }
    if (tol_flag) cfg_.tol = tol_flag;
    if (cfg_.tol && !(*cfg_.tol > 0.0)) throw UsageError("tolerance must be > 0");
    if (cfg_.format == "csv" && !en->parsed() && !bd->parsed()) {
      throw UsageError("--format csv is only available for enumerate and bound");
    }

    if (rep->parsed()) return this->rep();
    if (fverify->parsed()) return filtration_verify();
    if (met->parsed()) return metric();
    if (tv->parsed()) return tverberg();
    if (cbuild->parsed()) return code_build();
    if (crecover->parsed()) return code_recover();
    if (en->parsed()) return enumerate();
    if (ic->parsed()) return identity_check();
    if (bd->parsed()) return bound();
    throw UsageError("no command");
  } catch (const CapacityError& e) {
    err_ << "capacity error: " << e.what() << " (minimal 2j+1 = " << e.minimal_dim()
         << ")\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err_ << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err_ << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, out, err);
}

}  // namespace wstar::cli
