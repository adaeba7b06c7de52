#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "arcbound/bounds.hpp"
#include "arcbound/certifier.hpp"
#include "arcbound/crossover.hpp"
#include "arcbound/lambda.hpp"
#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

enum class GridKind { Uniform, Chebyshev };

std::string_view to_string(GridKind kind);
// Accepts "uniform" or "chebyshev"; throws std::invalid_argument otherwise.
GridKind grid_kind_from_string(std::string_view text);

// The grid abscissas over [0,1] used by chain verification: equally spaced,
// or cosine-spaced points clustering at both endpoints.
std::vector<Real> make_grid(long grid_size, GridKind kind, mpfr_prec_t bits);

struct PairGap {
  // Label "<left member><=<right member>".
  std::string pair;
  Real min_gap;
  Real argmin_x;
};

struct ChainViolation {
  Real x;
  std::string pair;
  Real gap;
};

struct ChainReport {
  long grid_size = 0;
  GridKind grid_kind = GridKind::Uniform;
  int precision_bits = 0;
  std::vector<PairGap> per_pair_min_gap;
  // First violations up to a cap; violation_count has the full number.
  std::vector<ChainViolation> violations;
  long violation_count = 0;
  bool verdict = false;
};

// Receives each grid row as it is evaluated: x, the six member values, the
// five consecutive gaps. Used to stream CSV without a second pass.
using ChainRowSink =
    std::function<void(const Real& x, const std::vector<Real>& values,
                       const std::vector<Real>& gaps)>;

// Evaluates the six-member chain on the grid and checks every consecutive
// pair keeps its order. Gaps within the equality tolerance count as exact
// ties and are reported as zero; only gaps below minus the tolerance are
// violations. Throws std::invalid_argument for grid_size < 2.
ChainReport verify_chain(long grid_size, GridKind kind, const PrecisionConfig& prec,
                         const ChainRowSink& row_sink = nullptr);

struct BenchReport {
  BoundSpec spec;
  long iterations = 0;
  long grid_size = 0;
  std::uint64_t seed = 0;
  int precision_bits = 0;
  double ns_per_eval_bound = 0.0;
  double ns_per_eval_reference = 0.0;
  Real max_abs_error_on_grid;
  Real max_abs_error_x;
};

// Times the machine-precision path of eval_bound against std::asin over
// seeded random abscissas, and measures the bound's worst absolute
// distance from arcsin over a uniform verification grid.
// Throws std::invalid_argument for iterations < 1 or grid_size < 2.
BenchReport run_bench(const BoundSpec& spec, long iterations, long grid_size,
                      std::uint64_t seed, const PrecisionConfig& prec);

struct SolveReport {
  Real target;
  Real b;
  int precision_bits = 0;
};

// JSON serialization. Deterministic: fixed key order, reals as decimal
// strings carrying their bit width, re-parseable losslessly.
std::string to_json(const ChainReport& rep);
std::string to_json(const BenchReport& rep);
std::string to_json(const NonnegCertificate& cert);
std::string to_json(const CrossoverResult& res);
std::string to_json(const DominanceReport& rep);
std::string to_json(const DiscrepancyReport& rep);
std::string to_json(const OptimalityReport& rep);
std::string to_json(const SolveReport& rep);

ChainReport chain_report_from_json(const std::string& text);
BenchReport bench_report_from_json(const std::string& text);
NonnegCertificate certificate_from_json(const std::string& text);
CrossoverResult crossover_from_json(const std::string& text);
DominanceReport dominance_from_json(const std::string& text);
DiscrepancyReport discrepancy_from_json(const std::string& text);
OptimalityReport optimality_from_json(const std::string& text);
SolveReport solve_report_from_json(const std::string& text);

// Human-readable fixed-layout rendering.
std::string to_table(const ChainReport& rep);
std::string to_table(const BenchReport& rep);
std::string to_table(const NonnegCertificate& cert);
std::string to_table(const CrossoverResult& res);
std::string to_table(const DominanceReport& rep);
std::string to_table(const DiscrepancyReport& rep);
std::string to_table(const OptimalityReport& rep);
std::string to_table(const SolveReport& rep);

// Key,value CSV for the summary types. Chain CSV is row-per-grid-point and
// produced by streaming through verify_chain's row sink; csv_chain_header
// gives its header line.
std::string csv_chain_header();
std::string csv_chain_row(const Real& x, const std::vector<Real>& values,
                          const std::vector<Real>& gaps, int digits);
std::string to_csv(const BenchReport& rep);
std::string to_csv(const NonnegCertificate& cert);
std::string to_csv(const CrossoverResult& res);
std::string to_csv(const DominanceReport& rep);
std::string to_csv(const DiscrepancyReport& rep);
std::string to_csv(const OptimalityReport& rep);
std::string to_csv(const SolveReport& rep);

// Decimal digits that reproduce a binary value of the given width exactly.
int digits_for_bits(int bits);

bool operator==(const ChainReport& a, const ChainReport& b);
bool operator==(const BenchReport& a, const BenchReport& b);
bool operator==(const NonnegCertificate& a, const NonnegCertificate& b);
bool operator==(const CrossoverResult& a, const CrossoverResult& b);
bool operator==(const DominanceReport& a, const DominanceReport& b);
bool operator==(const DiscrepancyReport& a, const DiscrepancyReport& b);
bool operator==(const OptimalityReport& a, const OptimalityReport& b);
bool operator==(const SolveReport& a, const SolveReport& b);

}  // namespace arcbound
