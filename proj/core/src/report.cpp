#include "arcbound/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "arcbound/oracle.hpp"

namespace arcbound {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr size_t kViolationCap = 100;

ordered_json real_to_json(const Real& v) {
  const int bits = static_cast<int>(v.bits());
  return ordered_json{{"bits", bits}, {"dec", v.str(digits_for_bits(bits))}};
}

Real real_from_json(const ordered_json& j) {
  return Real::from_decimal(j.at("dec").get<std::string>(),
                            j.at("bits").get<int>());
}

ordered_json spec_to_json(const BoundSpec& spec) {
  ordered_json j;
  j["family"] = std::string(to_string(spec.family));
  if (spec.family == Family::SqrtTwoParam) {
    j["alpha"] = real_to_json(spec.alpha);
  }
  j["beta"] = real_to_json(spec.beta);
  return j;
}

BoundSpec spec_from_json(const ordered_json& j) {
  const Family fam = family_from_string(j.at("family").get<std::string>());
  const Real beta = real_from_json(j.at("beta"));
  switch (fam) {
    case Family::AlgebraicShafer:
      return BoundSpec::algebraic_shafer(beta);
    case Family::SqrtTwoParam:
      return BoundSpec::sqrt_two_param(real_from_json(j.at("alpha")), beta);
    case Family::SqrtMatched:
      return BoundSpec::sqrt_matched(beta);
  }
  throw std::invalid_argument("spec_from_json: unknown family");
}

bool spec_equal(const BoundSpec& a, const BoundSpec& b) {
  if (a.family != b.family || a.beta != b.beta) return false;
  if (a.family == Family::SqrtTwoParam && a.alpha != b.alpha) return false;
  return true;
}

std::string pair_label(size_t j) {
  const auto& names = chain_member_names();
  return std::string(names[j]) + "<=" + std::string(names[j + 1]);
}

// Fixed column for table output; full precision lives in json/csv.
std::string short_dec(const Real& v) { return v.str(15); }

}  // namespace

int digits_for_bits(int bits) {
  return static_cast<int>(std::ceil(bits * 0.30102999566398119521)) + 2;
}

std::string_view to_string(GridKind kind) {
  return kind == GridKind::Uniform ? "uniform" : "chebyshev";
}

GridKind grid_kind_from_string(std::string_view text) {
  if (text == "uniform") return GridKind::Uniform;
  if (text == "chebyshev") return GridKind::Chebyshev;
  throw std::invalid_argument("grid_kind_from_string: unknown grid kind: " +
                              std::string(text));
}

std::vector<Real> make_grid(long grid_size, GridKind kind, mpfr_prec_t bits) {
  if (grid_size < 2) {
    throw std::invalid_argument("make_grid: grid needs at least 2 points");
  }
  std::vector<Real> xs;
  xs.reserve(static_cast<size_t>(grid_size));
  const long last = grid_size - 1;
  if (kind == GridKind::Uniform) {
    for (long i = 0; i <= last; ++i) {
      xs.push_back(Real(i, bits) / last);
    }
    return xs;
  }
  const Real pi = Real::pi(bits);
  for (long i = 0; i <= last; ++i) {
    if (i == 0) {
      xs.push_back(Real(0L, bits));
    } else if (i == last) {
      xs.push_back(Real(1L, bits));
    } else {
      xs.push_back((1 - cos(pi * i / last)).mul_pow2(-1));
    }
  }
  return xs;
}

ChainReport verify_chain(long grid_size, GridKind kind, const PrecisionConfig& prec,
                         const ChainRowSink& row_sink) {
  prec.validate();
  if (grid_size < 2) {
    throw std::invalid_argument("verify_chain: grid_size must be at least 2");
  }

  ChainReport rep;
  rep.grid_size = grid_size;
  rep.grid_kind = kind;
  rep.precision_bits = prec.mantissa_bits;
  rep.per_pair_min_gap.resize(5);
  for (size_t j = 0; j < 5; ++j) {
    rep.per_pair_min_gap[j].pair = pair_label(j);
  }

  const Real tol = prec.equality_tolerance();
  const Real zero(0L, prec.mantissa_bits);
  const std::vector<Real> xs = make_grid(grid_size, kind, prec.working_bits());

  bool first_row = true;
  std::vector<Real> gaps(5, zero);
  for (const Real& x : xs) {
    const std::vector<Real> values = eval_chain(x, prec);
    const Real xr = x.round_to(prec.mantissa_bits);
    for (size_t j = 0; j < 5; ++j) {
      Real g = values[j + 1] - values[j];
      if (abs(g) <= tol) {
        g = zero;
      } else if (g < zero) {
        ++rep.violation_count;
        if (rep.violations.size() < kViolationCap) {
          rep.violations.push_back({xr, pair_label(j), g});
        }
      }
      gaps[j] = g;
      PairGap& pg = rep.per_pair_min_gap[j];
      if (first_row || g < pg.min_gap) {
        pg.min_gap = g;
        pg.argmin_x = xr;
      }
    }
    first_row = false;
    if (row_sink) row_sink(xr, values, gaps);
  }

  rep.verdict = rep.violation_count == 0;
  return rep;
}

BenchReport run_bench(const BoundSpec& spec, long iterations, long grid_size,
                      std::uint64_t seed, const PrecisionConfig& prec) {
  prec.validate();
  spec.validate();
  if (iterations < 1) {
    throw std::invalid_argument("run_bench: iterations must be at least 1");
  }
  if (grid_size < 2) {
    throw std::invalid_argument("run_bench: grid_size must be at least 2");
  }

  BenchReport rep;
  rep.spec = spec;
  rep.iterations = iterations;
  rep.grid_size = grid_size;
  rep.seed = seed;
  rep.precision_bits = prec.mantissa_bits;

  const size_t pool =
      static_cast<size_t>(std::min<long>(iterations, 1L << 20));
  std::vector<double> xs(pool);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (double& x : xs) x = dist(rng);

  using clock = std::chrono::steady_clock;
  volatile double guard = 0.0;

  const auto t0 = clock::now();
  for (long i = 0; i < iterations; ++i) {
    guard = guard + eval_bound_fp64(spec, xs[static_cast<size_t>(i) % pool]);
  }
  const auto t1 = clock::now();
  for (long i = 0; i < iterations; ++i) {
    guard = guard + std::asin(xs[static_cast<size_t>(i) % pool]);
  }
  const auto t2 = clock::now();
  (void)guard;

  const double ns1 =
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  const double ns2 =
      std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
  rep.ns_per_eval_bound = ns1 / static_cast<double>(iterations);
  rep.ns_per_eval_reference = ns2 / static_cast<double>(iterations);

  const mpfr_prec_t wp = prec.working_bits();
  Real worst(0L, wp);
  Real worst_x(0L, wp);
  for (const Real& x : make_grid(grid_size, GridKind::Uniform, wp)) {
    const Real err =
        abs(detail::eval_bound_bits(spec, x, wp) - detail::arcsin_bits(x, wp));
    if (err > worst) {
      worst = err;
      worst_x = x;
    }
  }
  rep.max_abs_error_on_grid = worst.round_to(prec.mantissa_bits);
  rep.max_abs_error_x = worst_x.round_to(prec.mantissa_bits);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const ChainReport& rep) {
  ordered_json j;
  j["report"] = "chain";
  j["grid_size"] = rep.grid_size;
  j["grid_kind"] = std::string(to_string(rep.grid_kind));
  j["precision_bits"] = rep.precision_bits;
  j["per_pair_min_gap"] = ordered_json::array();
  for (const PairGap& pg : rep.per_pair_min_gap) {
    j["per_pair_min_gap"].push_back(ordered_json{{"pair", pg.pair},
                                                 {"min_gap", real_to_json(pg.min_gap)},
                                                 {"argmin_x", real_to_json(pg.argmin_x)}});
  }
  j["violations"] = ordered_json::array();
  for (const ChainViolation& v : rep.violations) {
    j["violations"].push_back(ordered_json{{"x", real_to_json(v.x)},
                                           {"pair", v.pair},
                                           {"gap", real_to_json(v.gap)}});
  }
  j["violation_count"] = rep.violation_count;
  j["verdict"] = rep.verdict;
  return j.dump(2);
}

ChainReport chain_report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  ChainReport rep;
  rep.grid_size = j.at("grid_size").get<long>();
  rep.grid_kind = grid_kind_from_string(j.at("grid_kind").get<std::string>());
  rep.precision_bits = j.at("precision_bits").get<int>();
  for (const auto& e : j.at("per_pair_min_gap")) {
    rep.per_pair_min_gap.push_back({e.at("pair").get<std::string>(),
                                    real_from_json(e.at("min_gap")),
                                    real_from_json(e.at("argmin_x"))});
  }
  for (const auto& e : j.at("violations")) {
    rep.violations.push_back({real_from_json(e.at("x")),
                              e.at("pair").get<std::string>(),
                              real_from_json(e.at("gap"))});
  }
  rep.violation_count = j.at("violation_count").get<long>();
  rep.verdict = j.at("verdict").get<bool>();
  return rep;
}

std::string to_json(const BenchReport& rep) {
  ordered_json j;
  j["report"] = "bench";
  j["spec"] = spec_to_json(rep.spec);
  j["iterations"] = rep.iterations;
  j["grid_size"] = rep.grid_size;
  j["seed"] = rep.seed;
  j["precision_bits"] = rep.precision_bits;
  j["ns_per_eval_bound"] = rep.ns_per_eval_bound;
  j["ns_per_eval_reference"] = rep.ns_per_eval_reference;
  j["max_abs_error_on_grid"] = real_to_json(rep.max_abs_error_on_grid);
  j["max_abs_error_x"] = real_to_json(rep.max_abs_error_x);
  return j.dump(2);
}

BenchReport bench_report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  BenchReport rep;
  rep.spec = spec_from_json(j.at("spec"));
  rep.iterations = j.at("iterations").get<long>();
  rep.grid_size = j.at("grid_size").get<long>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.precision_bits = j.at("precision_bits").get<int>();
  rep.ns_per_eval_bound = j.at("ns_per_eval_bound").get<double>();
  rep.ns_per_eval_reference = j.at("ns_per_eval_reference").get<double>();
  rep.max_abs_error_on_grid = real_from_json(j.at("max_abs_error_on_grid"));
  rep.max_abs_error_x = real_from_json(j.at("max_abs_error_x"));
  return rep;
}

std::string to_json(const NonnegCertificate& cert) {
  ordered_json j;
  j["report"] = "certificate";
  j["b"] = real_to_json(cert.b);
  j["interval"] = ordered_json{{"lo", real_to_json(cert.interval_lo)},
                               {"hi", real_to_json(cert.interval_hi)}};
  j["critical_points"] = ordered_json::array();
  for (const Real& u : cert.critical_points) {
    j["critical_points"].push_back(real_to_json(u));
  }
  j["endpoint_values"] = ordered_json::array(
      {real_to_json(cert.endpoint_values.first), real_to_json(cert.endpoint_values.second)});
  j["extremum_values"] = ordered_json::array();
  for (const Real& v : cert.extremum_values) {
    j["extremum_values"].push_back(real_to_json(v));
  }
  j["min_value"] = real_to_json(cert.min_value);
  j["min_location"] = real_to_json(cert.min_location);
  j["verdict"] = cert.verdict;
  j["precision_used"] = cert.precision_used;
  return j.dump(2);
}

NonnegCertificate certificate_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  NonnegCertificate cert;
  cert.b = real_from_json(j.at("b"));
  cert.interval_lo = real_from_json(j.at("interval").at("lo"));
  cert.interval_hi = real_from_json(j.at("interval").at("hi"));
  for (const auto& e : j.at("critical_points")) {
    cert.critical_points.push_back(real_from_json(e));
  }
  cert.endpoint_values = {real_from_json(j.at("endpoint_values").at(0)),
                          real_from_json(j.at("endpoint_values").at(1))};
  for (const auto& e : j.at("extremum_values")) {
    cert.extremum_values.push_back(real_from_json(e));
  }
  cert.min_value = real_from_json(j.at("min_value"));
  cert.min_location = real_from_json(j.at("min_location"));
  cert.verdict = j.at("verdict").get<bool>();
  cert.precision_used = j.at("precision_used").get<int>();
  return cert;
}

std::string to_json(const CrossoverResult& res) {
  ordered_json j;
  j["report"] = "crossover";
  j["c"] = real_to_json(res.c);
  j["bracket"] = ordered_json{{"lo", real_to_json(res.bracket_lo)},
                              {"hi", real_to_json(res.bracket_hi)}};
  j["residual"] = real_to_json(res.residual);
  j["left_order"] = std::string(to_string(res.left_order));
  j["right_order"] = std::string(to_string(res.right_order));
  j["extra_sign_changes"] = ordered_json::array();
  for (const Real& x : res.extra_sign_changes) {
    j["extra_sign_changes"].push_back(real_to_json(x));
  }
  return j.dump(2);
}

CrossoverResult crossover_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  CrossoverResult res;
  res.c = real_from_json(j.at("c"));
  res.bracket_lo = real_from_json(j.at("bracket").at("lo"));
  res.bracket_hi = real_from_json(j.at("bracket").at("hi"));
  res.residual = real_from_json(j.at("residual"));
  res.left_order = ordering_from_string(j.at("left_order").get<std::string>());
  res.right_order = ordering_from_string(j.at("right_order").get<std::string>());
  for (const auto& e : j.at("extra_sign_changes")) {
    res.extra_sign_changes.push_back(real_from_json(e));
  }
  return res;
}

std::string to_json(const DominanceReport& rep) {
  ordered_json j;
  j["report"] = "dominance";
  j["grid_size"] = rep.grid_size;
  j["less_count"] = rep.less_count;
  j["equal_count"] = rep.equal_count;
  j["greater_count"] = rep.greater_count;
  j["uniform"] = rep.uniform;
  j["order_when_uniform"] = std::string(to_string(rep.order_when_uniform));
  j["sign_change_cells"] = ordered_json::array();
  for (const SignChangeCell& cell : rep.sign_change_cells) {
    j["sign_change_cells"].push_back(ordered_json{{"lo", real_to_json(cell.lo)},
                                                  {"hi", real_to_json(cell.hi)}});
  }
  j["min_abs_gap"] = real_to_json(rep.min_abs_gap);
  j["min_abs_gap_x"] = real_to_json(rep.min_abs_gap_x);
  return j.dump(2);
}

DominanceReport dominance_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  DominanceReport rep;
  rep.grid_size = j.at("grid_size").get<long>();
  rep.less_count = j.at("less_count").get<long>();
  rep.equal_count = j.at("equal_count").get<long>();
  rep.greater_count = j.at("greater_count").get<long>();
  rep.uniform = j.at("uniform").get<bool>();
  rep.order_when_uniform =
      ordering_from_string(j.at("order_when_uniform").get<std::string>());
  for (const auto& e : j.at("sign_change_cells")) {
    rep.sign_change_cells.push_back(
        {real_from_json(e.at("lo")), real_from_json(e.at("hi"))});
  }
  rep.min_abs_gap = real_from_json(j.at("min_abs_gap"));
  rep.min_abs_gap_x = real_from_json(j.at("min_abs_gap_x"));
  return rep;
}

std::string to_json(const DiscrepancyReport& rep) {
  ordered_json j;
  j["report"] = "discrepancy";
  j["order"] = rep.order;
  j["beta"] = real_to_json(rep.beta);
  j["analytic"] = real_to_json(rep.analytic);
  j["numeric"] = real_to_json(rep.numeric);
  j["abs_diff"] = real_to_json(rep.abs_diff);
  return j.dump(2);
}

DiscrepancyReport discrepancy_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  DiscrepancyReport rep;
  rep.order = j.at("order").get<int>();
  rep.beta = real_from_json(j.at("beta"));
  rep.analytic = real_from_json(j.at("analytic"));
  rep.numeric = real_from_json(j.at("numeric"));
  rep.abs_diff = real_from_json(j.at("abs_diff"));
  return rep;
}

std::string to_json(const OptimalityReport& rep) {
  ordered_json j;
  j["report"] = "optimality";
  j["b1"] = real_to_json(rep.b1);
  j["endpoint_residual"] = real_to_json(rep.endpoint_residual);
  j["upper_strictness_witness"] =
      ordered_json{{"b", real_to_json(rep.upper_strictness_witness.b)},
                   {"x", real_to_json(rep.upper_strictness_witness.x)},
                   {"gap", real_to_json(rep.upper_strictness_witness.gap)}};
  j["lower_counterexample"] =
      ordered_json{{"b", real_to_json(rep.lower_counterexample.b)},
                   {"xi", real_to_json(rep.lower_counterexample.xi)},
                   {"g_xi", real_to_json(rep.lower_counterexample.g_xi)}};
  return j.dump(2);
}

OptimalityReport optimality_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  OptimalityReport rep;
  rep.b1 = real_from_json(j.at("b1"));
  rep.endpoint_residual = real_from_json(j.at("endpoint_residual"));
  const auto& uw = j.at("upper_strictness_witness");
  rep.upper_strictness_witness.b = real_from_json(uw.at("b"));
  rep.upper_strictness_witness.x = real_from_json(uw.at("x"));
  rep.upper_strictness_witness.gap = real_from_json(uw.at("gap"));
  const auto& lc = j.at("lower_counterexample");
  rep.lower_counterexample.b = real_from_json(lc.at("b"));
  rep.lower_counterexample.xi = real_from_json(lc.at("xi"));
  rep.lower_counterexample.g_xi = real_from_json(lc.at("g_xi"));
  return rep;
}

std::string to_json(const SolveReport& rep) {
  ordered_json j;
  j["report"] = "solve";
  j["target"] = real_to_json(rep.target);
  j["b"] = real_to_json(rep.b);
  j["precision_bits"] = rep.precision_bits;
  return j.dump(2);
}

SolveReport solve_report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  SolveReport rep;
  rep.target = real_from_json(j.at("target"));
  rep.b = real_from_json(j.at("b"));
  rep.precision_bits = j.at("precision_bits").get<int>();
  return rep;
}

// ---------------------------------------------------------------------------
// Tables

std::string to_table(const ChainReport& rep) {
  std::ostringstream os;
  os << "chain verification\n";
  os << "  grid_size:      " << rep.grid_size << "\n";
  os << "  grid_kind:      " << to_string(rep.grid_kind) << "\n";
  os << "  precision_bits: " << rep.precision_bits << "\n";
  os << "  verdict:        " << (rep.verdict ? "pass" : "FAIL") << "\n";
  os << "  violations:     " << rep.violation_count << "\n";
  os << "  per-pair minimum gaps:\n";
  for (const PairGap& pg : rep.per_pair_min_gap) {
    os << "    " << pg.pair << ": min_gap=" << short_dec(pg.min_gap)
       << " at x=" << short_dec(pg.argmin_x) << "\n";
  }
  for (const ChainViolation& v : rep.violations) {
    os << "  violation: x=" << short_dec(v.x) << " pair=" << v.pair
       << " gap=" << short_dec(v.gap) << "\n";
  }
  return os.str();
}

std::string to_table(const BenchReport& rep) {
  std::ostringstream os;
  os << "bound evaluation benchmark\n";
  os << "  family:                " << to_string(rep.spec.family) << "\n";
  if (rep.spec.family == Family::SqrtTwoParam) {
    os << "  alpha:                 " << short_dec(rep.spec.alpha) << "\n";
  }
  os << "  beta:                  " << short_dec(rep.spec.beta) << "\n";
  os << "  iterations:            " << rep.iterations << "\n";
  os << "  grid_size:             " << rep.grid_size << "\n";
  os << "  seed:                  " << rep.seed << "\n";
  os << "  precision_bits:        " << rep.precision_bits << "\n";
  os << "  ns_per_eval_bound:     " << rep.ns_per_eval_bound << "\n";
  os << "  ns_per_eval_reference: " << rep.ns_per_eval_reference << "\n";
  os << "  max_abs_error_on_grid: " << short_dec(rep.max_abs_error_on_grid)
     << " at x=" << short_dec(rep.max_abs_error_x) << "\n";
  return os.str();
}

std::string to_table(const NonnegCertificate& cert) {
  std::ostringstream os;
  os << "nonnegativity certificate\n";
  os << "  b:              " << short_dec(cert.b) << "\n";
  os << "  interval:       [" << short_dec(cert.interval_lo) << ", "
     << short_dec(cert.interval_hi) << "]\n";
  os << "  verdict:        " << (cert.verdict ? "pass" : "FAIL") << "\n";
  os << "  precision_used: " << cert.precision_used << "\n";
  os << "  endpoint_values: w(lo)=" << short_dec(cert.endpoint_values.first)
     << " w(hi)=" << short_dec(cert.endpoint_values.second) << "\n";
  for (size_t i = 0; i < cert.critical_points.size(); ++i) {
    os << "  critical point: u=" << short_dec(cert.critical_points[i])
       << " w(u)=" << short_dec(cert.extremum_values[i]) << "\n";
  }
  os << "  min_value:      " << short_dec(cert.min_value)
     << " at u=" << short_dec(cert.min_location) << "\n";
  return os.str();
}

std::string to_table(const CrossoverResult& res) {
  std::ostringstream os;
  os << "crossover\n";
  os << "  c:           " << short_dec(res.c) << "\n";
  os << "  bracket:     [" << short_dec(res.bracket_lo) << ", "
     << short_dec(res.bracket_hi) << "]\n";
  os << "  residual:    " << short_dec(res.residual) << "\n";
  os << "  left_order:  " << to_string(res.left_order) << "\n";
  os << "  right_order: " << to_string(res.right_order) << "\n";
  for (const Real& x : res.extra_sign_changes) {
    os << "  extra sign change near x=" << short_dec(x) << "\n";
  }
  return os.str();
}

std::string to_table(const DominanceReport& rep) {
  std::ostringstream os;
  os << "dominance summary\n";
  os << "  grid_size:     " << rep.grid_size << "\n";
  os << "  less_count:    " << rep.less_count << "\n";
  os << "  equal_count:   " << rep.equal_count << "\n";
  os << "  greater_count: " << rep.greater_count << "\n";
  os << "  uniform:       " << (rep.uniform ? "yes" : "no") << "\n";
  if (rep.uniform) {
    os << "  order:         " << to_string(rep.order_when_uniform) << "\n";
  }
  for (const SignChangeCell& cell : rep.sign_change_cells) {
    os << "  sign change in (" << short_dec(cell.lo) << ", "
       << short_dec(cell.hi) << ")\n";
  }
  os << "  min_abs_gap:   " << short_dec(rep.min_abs_gap)
     << " at x=" << short_dec(rep.min_abs_gap_x) << "\n";
  return os.str();
}

std::string to_table(const DiscrepancyReport& rep) {
  std::ostringstream os;
  os << "derivative discrepancy\n";
  os << "  order:    " << rep.order << "\n";
  os << "  beta:     " << short_dec(rep.beta) << "\n";
  os << "  analytic: " << short_dec(rep.analytic) << "\n";
  os << "  numeric:  " << short_dec(rep.numeric) << "\n";
  os << "  abs_diff: " << short_dec(rep.abs_diff) << "\n";
  return os.str();
}

std::string to_table(const OptimalityReport& rep) {
  std::ostringstream os;
  os << "optimality evidence\n";
  os << "  b1:                " << short_dec(rep.b1) << "\n";
  os << "  endpoint_residual: " << short_dec(rep.endpoint_residual) << "\n";
  os << "  upper witness:     b=" << short_dec(rep.upper_strictness_witness.b)
     << " x=" << short_dec(rep.upper_strictness_witness.x)
     << " gap=" << short_dec(rep.upper_strictness_witness.gap) << "\n";
  os << "  lower witness:     b=" << short_dec(rep.lower_counterexample.b)
     << " xi=" << short_dec(rep.lower_counterexample.xi)
     << " g(xi)=" << short_dec(rep.lower_counterexample.g_xi) << "\n";
  return os.str();
}

std::string to_table(const SolveReport& rep) {
  std::ostringstream os;
  os << "endpoint solve\n";
  os << "  target:         " << short_dec(rep.target) << "\n";
  os << "  b:              " << rep.b.str(digits_for_bits(rep.precision_bits))
     << "\n";
  os << "  precision_bits: " << rep.precision_bits << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_real(const Real& v, int digits) { return v.str(digits); }

}  // namespace

std::string csv_chain_header() {
  std::ostringstream os;
  os << "x";
  for (const auto& name : chain_member_names()) {
    os << "," << name;
  }
  for (size_t j = 0; j < 5; ++j) {
    os << ",gap_" << (j + 1);
  }
  os << "\n";
  return os.str();
}

std::string csv_chain_row(const Real& x, const std::vector<Real>& values,
                          const std::vector<Real>& gaps, int digits) {
  std::ostringstream os;
  os << csv_real(x, digits);
  for (const Real& v : values) os << "," << csv_real(v, digits);
  for (const Real& g : gaps) os << "," << csv_real(g, digits);
  os << "\n";
  return os.str();
}

namespace {

std::string kv_csv(std::initializer_list<std::pair<std::string, std::string>> rows) {
  std::ostringstream os;
  os << "field,value\n";
  for (const auto& [k, v] : rows) os << k << "," << v << "\n";
  return os.str();
}

}  // namespace

std::string to_csv(const BenchReport& rep) {
  const int d = digits_for_bits(rep.precision_bits);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"family", std::string(to_string(rep.spec.family))},
      {"beta", csv_real(rep.spec.beta, d)},
      {"iterations", std::to_string(rep.iterations)},
      {"grid_size", std::to_string(rep.grid_size)},
      {"seed", std::to_string(rep.seed)},
      {"precision_bits", std::to_string(rep.precision_bits)},
      {"ns_per_eval_bound", std::to_string(rep.ns_per_eval_bound)},
      {"ns_per_eval_reference", std::to_string(rep.ns_per_eval_reference)},
      {"max_abs_error_on_grid", csv_real(rep.max_abs_error_on_grid, d)},
      {"max_abs_error_x", csv_real(rep.max_abs_error_x, d)},
  };
  if (rep.spec.family == Family::SqrtTwoParam) {
    rows.insert(rows.begin() + 1, {"alpha", csv_real(rep.spec.alpha, d)});
  }
  std::ostringstream os;
  os << "field,value\n";
  for (const auto& [k, v] : rows) os << k << "," << v << "\n";
  return os.str();
}

std::string to_csv(const NonnegCertificate& cert) {
  const int d = digits_for_bits(cert.precision_used);
  std::ostringstream os;
  os << "field,value\n";
  os << "b," << csv_real(cert.b, d) << "\n";
  os << "interval_lo," << csv_real(cert.interval_lo, d) << "\n";
  os << "interval_hi," << csv_real(cert.interval_hi, d) << "\n";
  for (size_t i = 0; i < cert.critical_points.size(); ++i) {
    os << "critical_point_" << i << "," << csv_real(cert.critical_points[i], d)
       << "\n";
    os << "extremum_value_" << i << "," << csv_real(cert.extremum_values[i], d)
       << "\n";
  }
  os << "endpoint_value_lo," << csv_real(cert.endpoint_values.first, d) << "\n";
  os << "endpoint_value_hi," << csv_real(cert.endpoint_values.second, d) << "\n";
  os << "min_value," << csv_real(cert.min_value, d) << "\n";
  os << "min_location," << csv_real(cert.min_location, d) << "\n";
  os << "verdict," << (cert.verdict ? "true" : "false") << "\n";
  os << "precision_used," << cert.precision_used << "\n";
  return os.str();
}

std::string to_csv(const CrossoverResult& res) {
  const int d = digits_for_bits(static_cast<int>(res.c.bits()));
  std::ostringstream os;
  os << "field,value\n";
  os << "c," << csv_real(res.c, d) << "\n";
  os << "bracket_lo," << csv_real(res.bracket_lo, d) << "\n";
  os << "bracket_hi," << csv_real(res.bracket_hi, d) << "\n";
  os << "residual," << csv_real(res.residual, d) << "\n";
  os << "left_order," << to_string(res.left_order) << "\n";
  os << "right_order," << to_string(res.right_order) << "\n";
  for (size_t i = 0; i < res.extra_sign_changes.size(); ++i) {
    os << "extra_sign_change_" << i << ","
       << csv_real(res.extra_sign_changes[i], d) << "\n";
  }
  return os.str();
}

std::string to_csv(const DominanceReport& rep) {
  const int d = digits_for_bits(static_cast<int>(rep.min_abs_gap.bits()));
  std::ostringstream os;
  os << "field,value\n";
  os << "grid_size," << rep.grid_size << "\n";
  os << "less_count," << rep.less_count << "\n";
  os << "equal_count," << rep.equal_count << "\n";
  os << "greater_count," << rep.greater_count << "\n";
  os << "uniform," << (rep.uniform ? "true" : "false") << "\n";
  os << "order_when_uniform," << to_string(rep.order_when_uniform) << "\n";
  for (size_t i = 0; i < rep.sign_change_cells.size(); ++i) {
    os << "sign_change_lo_" << i << "," << csv_real(rep.sign_change_cells[i].lo, d)
       << "\n";
    os << "sign_change_hi_" << i << "," << csv_real(rep.sign_change_cells[i].hi, d)
       << "\n";
  }
  os << "min_abs_gap," << csv_real(rep.min_abs_gap, d) << "\n";
  os << "min_abs_gap_x," << csv_real(rep.min_abs_gap_x, d) << "\n";
  return os.str();
}

std::string to_csv(const DiscrepancyReport& rep) {
  const int d = digits_for_bits(static_cast<int>(rep.beta.bits()));
  return kv_csv({{"order", std::to_string(rep.order)},
                 {"beta", csv_real(rep.beta, d)},
                 {"analytic", csv_real(rep.analytic, d)},
                 {"numeric", csv_real(rep.numeric, d)},
                 {"abs_diff", csv_real(rep.abs_diff, d)}});
}

std::string to_csv(const OptimalityReport& rep) {
  const int d = digits_for_bits(static_cast<int>(rep.b1.bits()));
  return kv_csv(
      {{"b1", csv_real(rep.b1, d)},
       {"endpoint_residual", csv_real(rep.endpoint_residual, d)},
       {"upper_witness_b", csv_real(rep.upper_strictness_witness.b, d)},
       {"upper_witness_x", csv_real(rep.upper_strictness_witness.x, d)},
       {"upper_witness_gap", csv_real(rep.upper_strictness_witness.gap, d)},
       {"lower_witness_b", csv_real(rep.lower_counterexample.b, d)},
       {"lower_witness_xi", csv_real(rep.lower_counterexample.xi, d)},
       {"lower_witness_g_xi", csv_real(rep.lower_counterexample.g_xi, d)}});
}

std::string to_csv(const SolveReport& rep) {
  const int d = digits_for_bits(rep.precision_bits);
  return kv_csv({{"target", csv_real(rep.target, d)},
                 {"b", csv_real(rep.b, d)},
                 {"precision_bits", std::to_string(rep.precision_bits)}});
}

// ---------------------------------------------------------------------------
// Equality (round-trip checks)

bool operator==(const ChainReport& a, const ChainReport& b) {
  if (a.grid_size != b.grid_size || a.grid_kind != b.grid_kind ||
      a.precision_bits != b.precision_bits ||
      a.violation_count != b.violation_count || a.verdict != b.verdict ||
      a.per_pair_min_gap.size() != b.per_pair_min_gap.size() ||
      a.violations.size() != b.violations.size()) {
    return false;
  }
  for (size_t i = 0; i < a.per_pair_min_gap.size(); ++i) {
    if (a.per_pair_min_gap[i].pair != b.per_pair_min_gap[i].pair ||
        a.per_pair_min_gap[i].min_gap != b.per_pair_min_gap[i].min_gap ||
        a.per_pair_min_gap[i].argmin_x != b.per_pair_min_gap[i].argmin_x) {
      return false;
    }
  }
  for (size_t i = 0; i < a.violations.size(); ++i) {
    if (a.violations[i].x != b.violations[i].x ||
        a.violations[i].pair != b.violations[i].pair ||
        a.violations[i].gap != b.violations[i].gap) {
      return false;
    }
  }
  return true;
}

bool operator==(const BenchReport& a, const BenchReport& b) {
  return spec_equal(a.spec, b.spec) && a.iterations == b.iterations &&
         a.grid_size == b.grid_size && a.seed == b.seed &&
         a.precision_bits == b.precision_bits &&
         a.ns_per_eval_bound == b.ns_per_eval_bound &&
         a.ns_per_eval_reference == b.ns_per_eval_reference &&
         a.max_abs_error_on_grid == b.max_abs_error_on_grid &&
         a.max_abs_error_x == b.max_abs_error_x;
}

bool operator==(const NonnegCertificate& a, const NonnegCertificate& b) {
  if (a.b != b.b || a.interval_lo != b.interval_lo ||
      a.interval_hi != b.interval_hi || a.verdict != b.verdict ||
      a.precision_used != b.precision_used ||
      a.critical_points.size() != b.critical_points.size() ||
      a.extremum_values.size() != b.extremum_values.size() ||
      a.endpoint_values.first != b.endpoint_values.first ||
      a.endpoint_values.second != b.endpoint_values.second ||
      a.min_value != b.min_value || a.min_location != b.min_location) {
    return false;
  }
  for (size_t i = 0; i < a.critical_points.size(); ++i) {
    if (a.critical_points[i] != b.critical_points[i]) return false;
  }
  for (size_t i = 0; i < a.extremum_values.size(); ++i) {
    if (a.extremum_values[i] != b.extremum_values[i]) return false;
  }
  return true;
}

bool operator==(const CrossoverResult& a, const CrossoverResult& b) {
  if (a.c != b.c || a.bracket_lo != b.bracket_lo || a.bracket_hi != b.bracket_hi ||
      a.residual != b.residual || a.left_order != b.left_order ||
      a.right_order != b.right_order ||
      a.extra_sign_changes.size() != b.extra_sign_changes.size()) {
    return false;
  }
  for (size_t i = 0; i < a.extra_sign_changes.size(); ++i) {
    if (a.extra_sign_changes[i] != b.extra_sign_changes[i]) return false;
  }
  return true;
}

bool operator==(const DominanceReport& a, const DominanceReport& b) {
  if (a.grid_size != b.grid_size || a.less_count != b.less_count ||
      a.equal_count != b.equal_count || a.greater_count != b.greater_count ||
      a.uniform != b.uniform || a.order_when_uniform != b.order_when_uniform ||
      a.sign_change_cells.size() != b.sign_change_cells.size() ||
      a.min_abs_gap != b.min_abs_gap || a.min_abs_gap_x != b.min_abs_gap_x) {
    return false;
  }
  for (size_t i = 0; i < a.sign_change_cells.size(); ++i) {
    if (a.sign_change_cells[i].lo != b.sign_change_cells[i].lo ||
        a.sign_change_cells[i].hi != b.sign_change_cells[i].hi) {
      return false;
    }
  }
  return true;
}

bool operator==(const DiscrepancyReport& a, const DiscrepancyReport& b) {
  return a.order == b.order && a.beta == b.beta && a.analytic == b.analytic &&
         a.numeric == b.numeric && a.abs_diff == b.abs_diff;
}

bool operator==(const OptimalityReport& a, const OptimalityReport& b) {
  return a.b1 == b.b1 && a.endpoint_residual == b.endpoint_residual &&
         a.upper_strictness_witness.b == b.upper_strictness_witness.b &&
         a.upper_strictness_witness.x == b.upper_strictness_witness.x &&
         a.upper_strictness_witness.gap == b.upper_strictness_witness.gap &&
         a.lower_counterexample.b == b.lower_counterexample.b &&
         a.lower_counterexample.xi == b.lower_counterexample.xi &&
         a.lower_counterexample.g_xi == b.lower_counterexample.g_xi;
}

bool operator==(const SolveReport& a, const SolveReport& b) {
  return a.target == b.target && a.b == b.b &&
         a.precision_bits == b.precision_bits;
}

}  // namespace arcbound
