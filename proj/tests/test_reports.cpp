#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "arcbound/bounds.hpp"
#include "arcbound/certifier.hpp"
#include "arcbound/crossover.hpp"
#include "arcbound/lambda.hpp"
#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"
#include "arcbound/report.hpp"

using namespace arcbound;

namespace {

const PrecisionConfig kPrec{128};

// pi/2 minus the matched family at beta=4 evaluated at x=1.
constexpr const char* kGapAtOne =
    "0.003573077012447964142712450137411879";

BoundSpec algebraic_upper() {
  return BoundSpec::algebraic_shafer(algebraic_upper_b(160));
}

BoundSpec offset4_upper() {
  return BoundSpec::sqrt_two_param(zhu_numerator_alpha(160), Real(4L, 160));
}

}  // namespace

TEST_CASE("uniform grid hits dyadic nodes exactly") {
  const std::vector<Real> g = make_grid(5, GridKind::Uniform, 160);
  REQUIRE(g.size() == 5);
  CHECK(g[0] == Real(0L, 64));
  CHECK(g[1] == Real(0.25, 64));
  CHECK(g[2] == Real(0.5, 64));
  CHECK(g[3] == Real(0.75, 64));
  CHECK(g[4] == Real(1L, 64));
}

TEST_CASE("cosine grid keeps exact endpoints and clusters inside") {
  const std::vector<Real> g = make_grid(9, GridKind::Chebyshev, 160);
  REQUIRE(g.size() == 9);
  CHECK(g.front().sign() == 0);
  CHECK(g.back() == Real(1L, 64));
  for (size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);
  // Cosine spacing packs the first step tighter than the uniform step.
  CHECK(g[1] < Real(1L, 160) / 8L);
}

TEST_CASE("grid validation and kind names") {
  CHECK_THROWS_AS((void)make_grid(1, GridKind::Uniform, 160),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_grid(-3, GridKind::Chebyshev, 160),
                  std::invalid_argument);
  CHECK(grid_kind_from_string("uniform") == GridKind::Uniform);
  CHECK(grid_kind_from_string("chebyshev") == GridKind::Chebyshev);
  CHECK(to_string(GridKind::Chebyshev) == "chebyshev");
  CHECK_THROWS_AS((void)grid_kind_from_string("log"), std::invalid_argument);
}

TEST_CASE("chain verification on a coarse grid") {
  long rows = 0;
  std::vector<Real> last_values;
  std::vector<Real> last_gaps;
  const ChainReport rep = verify_chain(
      3, GridKind::Uniform, kPrec,
      [&](const Real&, const std::vector<Real>& values,
          const std::vector<Real>& gaps) {
        ++rows;
        last_values = values;
        last_gaps = gaps;
      });

  CHECK(rep.verdict);
  CHECK(rep.violation_count == 0);
  CHECK(rep.violations.empty());
  CHECK(rep.grid_size == 3);
  CHECK(rep.grid_kind == GridKind::Uniform);
  CHECK(rep.precision_bits == 128);

  REQUIRE(rep.per_pair_min_gap.size() == 5);
  CHECK(rep.per_pair_min_gap[0].pair == "algebraic_lower<=sqrt_lower");
  CHECK(rep.per_pair_min_gap[2].pair == "arcsin<=sqrt_upper");
  CHECK(rep.per_pair_min_gap[4].pair == "offset4_upper<=pi_numerator_upper");
  // Every member vanishes at x=0, so each pair attains gap zero there.
  for (const PairGap& pg : rep.per_pair_min_gap) {
    CHECK(pg.min_gap.sign() == 0);
    CHECK(pg.argmin_x.sign() == 0);
  }

  CHECK(rows == 3);
  REQUIRE(last_values.size() == 6);
  REQUIRE(last_gaps.size() == 5);
  // Last row is x=1, where the top four members all equal pi/2 and the
  // snapped gaps vanish.
  CHECK(last_gaps[2].sign() == 0);
  CHECK(last_gaps[3].sign() == 0);
  CHECK(last_gaps[4].sign() == 0);
  CHECK(last_gaps[0] > Real(0L, 64));
  CHECK(last_values[0] == Real(1.5, 64));

  CHECK(verify_chain(4, GridKind::Chebyshev, kPrec).verdict);
  CHECK_THROWS_AS((void)verify_chain(1, GridKind::Uniform, kPrec),
                  std::invalid_argument);
}

TEST_CASE("bench envelope pins the worst grid error") {
  const BenchReport rep =
      run_bench(BoundSpec::sqrt_matched(Real(4L, 160)), 2000, 101, 42, kPrec);
  CHECK(rep.iterations == 2000);
  CHECK(rep.grid_size == 101);
  CHECK(rep.seed == 42);
  CHECK(rep.precision_bits == 128);
  CHECK(rep.ns_per_eval_bound > 0.0);
  CHECK(rep.ns_per_eval_reference > 0.0);
  // The gap to arcsin grows with x, so the grid maximum sits at x=1.
  CHECK(rep.max_abs_error_x == Real(1L, 64));
  CHECK(abs(rep.max_abs_error_on_grid - Real::from_decimal(kGapAtOne, 256)) <
        Real::from_decimal("1e-30", 64));

  const BenchReport again =
      run_bench(BoundSpec::sqrt_matched(Real(4L, 160)), 2000, 101, 42, kPrec);
  CHECK(again.max_abs_error_on_grid == rep.max_abs_error_on_grid);
  CHECK(again.max_abs_error_x == rep.max_abs_error_x);

  CHECK_THROWS_AS(
      (void)run_bench(BoundSpec::sqrt_matched(Real(4L, 160)), 0, 101, 1, kPrec),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)run_bench(BoundSpec::sqrt_matched(Real(4L, 160)), 10, 1, 1, kPrec),
      std::invalid_argument);
}

TEST_CASE("decimal width covers the mantissa") {
  CHECK(digits_for_bits(64) == 22);
  CHECK(digits_for_bits(128) == 41);
  CHECK(digits_for_bits(256) == 80);
}

TEST_CASE("chain report json round trip") {
  const ChainReport rep = verify_chain(3, GridKind::Uniform, kPrec);
  const std::string text = to_json(rep);
  CHECK(chain_report_from_json(text) == rep);
  CHECK(text.find("\"report\": \"chain\"") != std::string::npos);
}

TEST_CASE("bench report json round trip") {
  const BenchReport rep =
      run_bench(offset4_upper(), 200, 33, 7, kPrec);
  CHECK(bench_report_from_json(to_json(rep)) == rep);
}

TEST_CASE("certificate json round trip") {
  const NonnegCertificate cert =
      certify_upper_bound(matched_upper_beta(160), kPrec);
  CHECK(certificate_from_json(to_json(cert)) == cert);

  const NonnegCertificate failing = certify_upper_bound(Real(4.5, 160), kPrec);
  CHECK(certificate_from_json(to_json(failing)) == failing);
}

TEST_CASE("crossover json round trip") {
  const CrossoverResult res =
      find_crossover(algebraic_upper(), offset4_upper(), kPrec);
  CHECK(crossover_from_json(to_json(res)) == res);
}

TEST_CASE("dominance json round trip") {
  const DominanceReport crossing =
      order_report(algebraic_upper(), offset4_upper(), 64, kPrec);
  CHECK_FALSE(crossing.sign_change_cells.empty());
  CHECK(dominance_from_json(to_json(crossing)) == crossing);

  const DominanceReport uniform = order_report(
      BoundSpec::sqrt_matched(Real(4L, 160)), reference_arcsin, 33, kPrec);
  CHECK(dominance_from_json(to_json(uniform)) == uniform);
}

TEST_CASE("discrepancy json round trip") {
  const DiscrepancyReport rep = discrepancy(3, matched_upper_beta(160), kPrec);
  CHECK(discrepancy_from_json(to_json(rep)) == rep);
}

TEST_CASE("optimality json round trip") {
  const OptimalityReport rep = optimality_report(kPrec);
  CHECK(optimality_from_json(to_json(rep)) == rep);
}

TEST_CASE("solve report json round trip") {
  const SolveReport rep{Real::pi(128).mul_pow2(-1), solve_endpoint(kPrec), 128};
  CHECK(solve_report_from_json(to_json(rep)) == rep);
}

TEST_CASE("tables stay human readable") {
  const ChainReport chain = verify_chain(3, GridKind::Uniform, kPrec);
  const std::string chain_table = to_table(chain);
  CHECK(chain_table.find("verdict:        pass") != std::string::npos);
  CHECK(chain_table.find("arcsin<=sqrt_upper") != std::string::npos);

  const NonnegCertificate cert = certify_upper_bound(Real(4.5, 160), kPrec);
  CHECK(to_table(cert).find("FAIL") != std::string::npos);

  const SolveReport solve{Real::pi(128).mul_pow2(-1), solve_endpoint(kPrec), 128};
  CHECK_FALSE(to_table(solve).empty());
  CHECK_FALSE(to_table(discrepancy(5, Real(4L, 160), kPrec)).empty());
  CHECK_FALSE(to_table(optimality_report(kPrec)).empty());
  CHECK_FALSE(
      to_table(find_crossover(algebraic_upper(), offset4_upper(), kPrec)).empty());
  CHECK_FALSE(
      to_table(order_report(algebraic_upper(), offset4_upper(), 16, kPrec)).empty());
  CHECK_FALSE(to_table(run_bench(offset4_upper(), 100, 17, 3, kPrec)).empty());
}

TEST_CASE("csv layouts") {
  CHECK(csv_chain_header() ==
        "x,algebraic_lower,sqrt_lower,arcsin,sqrt_upper,offset4_upper,"
        "pi_numerator_upper,gap_1,gap_2,gap_3,gap_4,gap_5\n");

  std::string rows;
  (void)verify_chain(2, GridKind::Uniform, kPrec,
                     [&](const Real& x, const std::vector<Real>& values,
                         const std::vector<Real>& gaps) {
                       rows += csv_chain_row(x, values, gaps, 20);
                     });
  CHECK(rows.find("1.5000000000000000000e+00") != std::string::npos);

  const std::string bench_csv = to_csv(run_bench(offset4_upper(), 100, 17, 3, kPrec));
  CHECK(bench_csv.rfind("field,value\n", 0) == 0);
  CHECK(bench_csv.find("alpha,") != std::string::npos);
  CHECK(bench_csv.find("iterations,100") != std::string::npos);

  const std::string solve_csv =
      to_csv(SolveReport{Real::pi(128).mul_pow2(-1), solve_endpoint(kPrec), 128});
  CHECK(solve_csv.rfind("field,value\n", 0) == 0);
  CHECK(solve_csv.find("\nb,3.87645254513397913") != std::string::npos);

  CHECK_FALSE(to_csv(certify_upper_bound(Real(4L, 160), kPrec)).empty());
  CHECK_FALSE(
      to_csv(find_crossover(algebraic_upper(), offset4_upper(), kPrec)).empty());
  CHECK_FALSE(
      to_csv(order_report(algebraic_upper(), offset4_upper(), 16, kPrec)).empty());
  CHECK_FALSE(to_csv(discrepancy(3, Real(4L, 160), kPrec)).empty());
  CHECK_FALSE(to_csv(optimality_report(kPrec)).empty());
}
