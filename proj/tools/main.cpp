#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arcbound/bounds.hpp"
#include "arcbound/certifier.hpp"
#include "arcbound/crossover.hpp"
#include "arcbound/errors.hpp"
#include "arcbound/lambda.hpp"
#include "arcbound/precision.hpp"
#include "arcbound/report.hpp"

namespace {

using namespace arcbound;

struct CommonOpts {
  int precision_bits = 128;
  std::string format = "table";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--precision-bits", opts.precision_bits,
                  "Mantissa bits used for every computation")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Report rendering")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output,
                  "Write the report to this file instead of stdout");
}

void write_out(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + opts.output);
  }
  file << text;
}

// Decimal literal or a named parameter: b1, zhu-alpha, upper-b, pi, pi/2,
// sqrt2.
Real parse_real_token(const std::string& text, mpfr_prec_t bits) {
  if (text == "b1") return matched_upper_beta(bits);
  if (text == "zhu-alpha") return zhu_numerator_alpha(bits);
  if (text == "upper-b") return algebraic_upper_b(bits);
  if (text == "pi") return Real::pi(bits);
  if (text == "pi/2") return Real::pi(bits).mul_pow2(-1);
  if (text == "sqrt2") return Real::sqrt2(bits);
  return Real::from_decimal(text, bits);
}

BoundSpec build_spec(const std::string& family, const std::string& alpha,
                     const std::string& beta, mpfr_prec_t bits) {
  const Family fam = family_from_string(family);
  const Real b = parse_real_token(beta, bits);
  switch (fam) {
    case Family::AlgebraicShafer:
      return BoundSpec::algebraic_shafer(b);
    case Family::SqrtTwoParam:
      if (alpha.empty()) {
        throw std::invalid_argument("family sqrt2p needs --alpha");
      }
      return BoundSpec::sqrt_two_param(parse_real_token(alpha, bits), b);
    case Family::SqrtMatched:
      return BoundSpec::sqrt_matched(b);
  }
  throw std::invalid_argument("unknown family");
}

template <typename Report>
std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return to_json(rep);
  if (format == "csv") return to_csv(rep);
  return to_table(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lower and upper bounds for arcsin on [0,1]: evaluation, parameter "
      "derivation, certification"};
  app.require_subcommand(1);

  int exit_code = 0;

  // chain
  CommonOpts chain_opts;
  long chain_grid = 1000;
  std::string chain_kind = "uniform";
  CLI::App* chain = app.add_subcommand(
      "chain", "Verify the six-member inequality chain on a grid");
  chain->add_option("--grid", chain_grid, "Number of grid points")
      ->capture_default_str();
  chain->add_option("--grid-kind", chain_kind, "Grid spacing")
      ->check(CLI::IsMember({"uniform", "chebyshev"}))
      ->capture_default_str();
  add_common(chain, chain_opts);
  chain->callback([&]() {
    const PrecisionConfig prec{chain_opts.precision_bits};
    const GridKind kind = grid_kind_from_string(chain_kind);
    if (chain_opts.format == "csv") {
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!chain_opts.output.empty()) {
        file.open(chain_opts.output, std::ios::binary);
        if (!file) {
          throw std::invalid_argument("cannot open output file: " +
                                      chain_opts.output);
        }
        os = &file;
      }
      const int digits = digits_for_bits(prec.mantissa_bits);
      *os << csv_chain_header();
      const ChainReport rep = verify_chain(
          chain_grid, kind, prec,
          [&](const Real& x, const std::vector<Real>& values,
              const std::vector<Real>& gaps) {
            *os << csv_chain_row(x, values, gaps, digits);
          });
      exit_code = rep.verdict ? 0 : 1;
      return;
    }
    const ChainReport rep = verify_chain(chain_grid, kind, prec);
    write_out(chain_opts,
              chain_opts.format == "json" ? to_json(rep) : to_table(rep));
    exit_code = rep.verdict ? 0 : 1;
  });

  // certify
  CommonOpts certify_opts;
  std::string certify_b = "b1";
  CLI::App* certify = app.add_subcommand(
      "certify",
      "Certify nonnegativity of the endpoint difference for a parameter b");
  certify->add_option("--b", certify_b,
                      "Family parameter, decimal or named (default the "
                      "endpoint-exact b1)")
      ->capture_default_str();
  add_common(certify, certify_opts);
  certify->callback([&]() {
    const PrecisionConfig prec{certify_opts.precision_bits};
    const Real b = parse_real_token(certify_b, prec.working_bits());
    const NonnegCertificate cert = certify_upper_bound(b, prec);
    write_out(certify_opts, render(cert, certify_opts.format));
    exit_code = cert.verdict ? 0 : 1;
  });

  // solve
  CommonOpts solve_opts;
  std::string solve_target = "pi/2";
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the endpoint equation f_b(1) = target for b");
  solve->add_option("--target", solve_target, "Right-hand side at x=1")
      ->capture_default_str();
  add_common(solve, solve_opts);
  solve->callback([&]() {
    const PrecisionConfig prec{solve_opts.precision_bits};
    SolveReport rep;
    rep.target = parse_real_token(solve_target, prec.mantissa_bits);
    rep.b = solve_endpoint(rep.target, prec);
    rep.precision_bits = prec.mantissa_bits;
    write_out(solve_opts, render(rep, solve_opts.format));
  });

  // crossover
  CommonOpts cross_opts;
  std::string cross_family = "algebraic";
  std::string cross_alpha;
  std::string cross_beta = "upper-b";
  std::string cross_family2 = "sqrt2p";
  std::string cross_alpha2 = "zhu-alpha";
  std::string cross_beta2 = "4";
  CLI::App* cross = app.add_subcommand(
      "crossover",
      "Locate where two bounds exchange order (default: the two upper "
      "bounds exact at x=1)");
  cross->add_option("--family", cross_family, "First bound family")
      ->capture_default_str();
  cross->add_option("--alpha", cross_alpha, "First bound numerator constant");
  cross->add_option("--beta", cross_beta, "First bound parameter")
      ->capture_default_str();
  cross->add_option("--family2", cross_family2, "Second bound family")
      ->capture_default_str();
  cross->add_option("--alpha2", cross_alpha2, "Second bound numerator constant")
      ->capture_default_str();
  cross->add_option("--beta2", cross_beta2, "Second bound parameter")
      ->capture_default_str();
  add_common(cross, cross_opts);
  cross->callback([&]() {
    const PrecisionConfig prec{cross_opts.precision_bits};
    const mpfr_prec_t wp = prec.working_bits();
    const BoundSpec a = build_spec(cross_family, cross_alpha, cross_beta, wp);
    const BoundSpec b = build_spec(cross_family2, cross_alpha2, cross_beta2, wp);
    const CrossoverResult res = find_crossover(a, b, prec);
    write_out(cross_opts, render(res, cross_opts.format));
  });

  // lambda
  CommonOpts lambda_opts;
  int lambda_order = 5;
  std::string lambda_beta = "4";
  bool lambda_optimality = false;
  CLI::App* lambda = app.add_subcommand(
      "lambda",
      "Derivative matching at x=0 and optimality evidence for the matched "
      "family");
  lambda->add_option("--order", lambda_order, "Derivative order, 0 to 5")
      ->capture_default_str();
  lambda->add_option("--beta", lambda_beta, "Family parameter")
      ->capture_default_str();
  lambda->add_flag("--optimality", lambda_optimality,
                   "Report optimality evidence instead of one discrepancy");
  add_common(lambda, lambda_opts);
  lambda->callback([&]() {
    const PrecisionConfig prec{lambda_opts.precision_bits};
    if (lambda_optimality) {
      const OptimalityReport rep = optimality_report(prec);
      write_out(lambda_opts, render(rep, lambda_opts.format));
      return;
    }
    const Real beta = parse_real_token(lambda_beta, prec.working_bits());
    const DiscrepancyReport rep = discrepancy(lambda_order, beta, prec);
    write_out(lambda_opts, render(rep, lambda_opts.format));
  });

  // bench
  CommonOpts bench_opts;
  std::string bench_family = "matched";
  std::string bench_alpha;
  std::string bench_beta = "4";
  long bench_iterations = 100000;
  long bench_grid = 1000;
  std::uint64_t bench_seed = 12345;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time the machine-precision bound path against std::asin");
  bench->add_option("--family", bench_family, "Bound family")
      ->capture_default_str();
  bench->add_option("--alpha", bench_alpha, "Numerator constant for sqrt2p");
  bench->add_option("--beta", bench_beta, "Family parameter")
      ->capture_default_str();
  bench->add_option("--iterations", bench_iterations, "Timed evaluations")
      ->capture_default_str();
  bench->add_option("--grid", bench_grid, "Error-envelope grid points")
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Seed for the random abscissas")
      ->capture_default_str();
  add_common(bench, bench_opts);
  bench->callback([&]() {
    const PrecisionConfig prec{bench_opts.precision_bits};
    const BoundSpec spec =
        build_spec(bench_family, bench_alpha, bench_beta, prec.working_bits());
    const BenchReport rep =
        run_bench(spec, bench_iterations, bench_grid, bench_seed, prec);
    write_out(bench_opts, render(rep, bench_opts.format));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const NoSolutionError& e) {
    std::cerr << "no solution: " << e.what() << "\n";
    return 1;
  } catch (const NoCrossoverError& e) {
    std::cerr << "no crossover: " << e.what() << "\n";
    return 1;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return 1;
  } catch (const ComplexRootError& e) {
    std::cerr << "no real critical points: " << e.what() << "\n";
    return 1;
  } catch (const SingularDenominatorError& e) {
    std::cerr << "singular denominator: " << e.what() << "\n";
    return 1;
  } catch (const StepCollapseError& e) {
    std::cerr << "derivative step collapsed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
