#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sumset/theorems.hpp"

namespace sumset {

/// Every normalized set with 2 <= n <= n_max and a_n <= a_max, ordered by n,
/// then a_n, then lexicographically. Throws ValidationError unless
/// n_max >= 2 and a_max >= n_max - 1, and LimitError past the sweep budget.
std::vector<std::vector<std::int64_t>> enumerate_normal_sets(std::int64_t n_max, std::int64_t a_max);

/// Largest a_max a sweep accepts.
inline constexpr std::int64_t kMaxSweepElement = 64;

struct SweepOptions {
  std::int64_t n_max = 4;
  std::int64_t a_max = 10;
  SuiteOptions checks;
  /// 0 keeps the OpenMP default.
  int threads = 0;
};

struct SweepRow {
  SuiteSummary summary;
  std::vector<TheoremReport> failures;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // enumeration order
  std::size_t failure_count() const;
};

/// Runs the suite on every enumerated set across an OpenMP worker pool.
SweepResult run_sweep(const SweepOptions& options);

std::string csv_header();
std::string csv_row(const SuiteSummary& s);
void write_csv(std::ostream& os, const SweepResult& result);
void write_failures(std::ostream& os, const SweepResult& result);

}  // namespace sumset
