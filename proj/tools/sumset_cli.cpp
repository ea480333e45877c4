// sumset: iterated sumsets and monomial-curve invariants from the command line.
//
//   sumset analyze 0,2,4,5,7 [--s-max N] [--s N] [--cap N] [--json]
//   sumset decompose 0,2,4,5,7 --s 5 [--json]
//   sumset ideal 0,7,8,9,10 [--cap N] [--json]
//   sumset verify 0,1,3,4 [--json]
//   sumset sweep --n-max 5 --a-max 16 [--checks all] [--threads N] [--out FILE]
//
// Exit codes: 0 ok, 1 usage, 2 resource limit, 3 theorem violation (sweep).

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sumset/report.hpp"
#include "sumset/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitLimit = 2;
constexpr int kExitViolation = 3;

void note_normalization(const sumset::NormalForm& a) {
  if (a.shift() != 0 || a.scale() != 1)
    std::cerr << "note: normalized to {" << sumset::format_set(a.elements()) << "} with shift "
              << a.shift() << ", scale " << a.scale() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated sumsets, Hilbert functions and toric ideals of monomial curves"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  std::string set_text;
  std::optional<std::int64_t> s_max, s_fold, cap;

  auto* analyze = app.add_subcommand("analyze", "Full invariant report for a set");
  analyze->add_option("set", set_text, "Comma-separated non-negative integers")->required();
  analyze->add_option("--s-max", s_max, "Growth table length (default rho + 4)");
  analyze->add_option("--s", s_fold, "Fold count for the decomposition (default sigma)");
  analyze->add_option("--cap", cap, "Degree cap for ideal generators (default rho + 1)");

  auto* decompose = app.add_subcommand("decompose", "Structure decomposition of sA");
  decompose->add_option("set", set_text, "Comma-separated non-negative integers")->required();
  std::int64_t decompose_s = 1;
  decompose->add_option("--s", decompose_s, "Fold count")->required();

  auto* ideal = app.add_subcommand("ideal", "Minimal binomial generators of the toric ideal");
  ideal->add_option("set", set_text, "Comma-separated non-negative integers")->required();
  ideal->add_option("--cap", cap, "Degree cap (default rho + 1)");

  auto* verify = app.add_subcommand("verify", "Run every invariant check on a set");
  verify->add_option("set", set_text, "Comma-separated non-negative integers")->required();

  auto* sweep = app.add_subcommand("sweep", "Check every normalized set in a family; CSV on stdout");
  sumset::SweepOptions sweep_opts;
  std::string checks = "all";
  std::string out_path;
  sweep->add_option("--n-max", sweep_opts.n_max, "Largest set size")->required();
  sweep->add_option("--a-max", sweep_opts.a_max, "Largest element a_n")->required();
  sweep->add_option("--checks", checks,
                    "all, or a comma list of growth,hilbert,structure,lev,rigidity,cm,ideal");
  sweep->add_option("--threads", sweep_opts.threads, "Worker threads (default: OpenMP default)");
  sweep->add_option("--out", out_path, "Write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) {
      const auto raw = sumset::parse_set(set_text);
      const auto report = sumset::analyze(raw, {s_max, s_fold, cap});
      if (as_json)
        std::cout << sumset::dump_json(sumset::to_json(report));
      else
        std::cout << sumset::render_text(report);
    } else if (*decompose) {
      const auto a = sumset::NormalForm::normalize(sumset::parse_set(set_text));
      note_normalization(a);
      const auto d = sumset::decompose_at(a, decompose_s);
      if (as_json)
        std::cout << sumset::dump_json(sumset::decomposition_json(d));
      else
        std::cout << sumset::render_text(d);
    } else if (*ideal) {
      const auto a = sumset::NormalForm::normalize(sumset::parse_set(set_text));
      note_normalization(a);
      const auto g = cap ? sumset::minimal_generators(a, *cap) : sumset::minimal_generators(a);
      if (as_json)
        std::cout << sumset::dump_json(sumset::ideal_json(g));
      else
        std::cout << sumset::render_text(g);
    } else if (*verify) {
      const auto a = sumset::NormalForm::normalize(sumset::parse_set(set_text));
      note_normalization(a);
      const auto reports = sumset::verify_suite(a);
      if (as_json)
        std::cout << sumset::dump_json(sumset::theorems_json(reports));
      else
        std::cout << sumset::render_text(std::span<const sumset::TheoremReport>(reports));
    } else if (*sweep) {
      sweep_opts.checks = sumset::SuiteOptions::parse(checks);
      const auto result = sumset::run_sweep(sweep_opts);
      if (out_path.empty()) {
        sumset::write_csv(std::cout, result);
      } else {
        std::ofstream out(out_path);
        if (!out) throw sumset::ValidationError("cannot open " + out_path);
        sumset::write_csv(out, result);
      }
      sumset::write_failures(std::cerr, result);
      std::cerr << result.rows.size() << " sets, " << result.failure_count() << " failures\n";
      if (result.failure_count() > 0) return kExitViolation;
    }
  } catch (const sumset::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sumset::LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kExitLimit;
  }
  return 0;
}
