#include "sumset/sweep.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sumset/curve.hpp"
#include "sumset/errors.hpp"

namespace sumset {

namespace {

void extend(std::vector<std::int64_t>& cur, std::int64_t next_min, std::int64_t an,
            std::size_t interior, std::vector<std::vector<std::int64_t>>& out) {
  if (interior == 0) {
    cur.push_back(an);
    std::int64_t g = 0;
    for (std::int64_t x : cur) g = std::gcd(g, x);
    if (g == 1) out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t x = next_min; x + static_cast<std::int64_t>(interior) <= an; ++x) {
    cur.push_back(x);
    extend(cur, x + 1, an, interior - 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_normal_sets(std::int64_t n_max, std::int64_t a_max) {
  if (n_max < 2) throw ValidationError("n_max must be at least 2");
  if (a_max < n_max - 1) throw ValidationError("a_max must be at least n_max - 1");
  if (a_max > kMaxSweepElement)
    throw LimitError("a_max = " + std::to_string(a_max) + " exceeds sweep limit " +
                     std::to_string(kMaxSweepElement));
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur{0};
  for (std::int64_t n = 2; n <= n_max; ++n)
    for (std::int64_t an = n - 1; an <= a_max; ++an)
      extend(cur, 1, an, static_cast<std::size_t>(n - 2), out);
  return out;
}

std::size_t SweepResult::failure_count() const {
  std::size_t total = 0;
  for (const auto& row : rows) total += row.failures.size();
  return total;
}

SweepResult run_sweep(const SweepOptions& options) {
  const auto sets = enumerate_normal_sets(options.n_max, options.a_max);
  SweepResult result;
  result.rows.resize(sets.size());
#ifdef _OPENMP
  if (options.threads > 0) omp_set_num_threads(options.threads);
#endif
  const auto count = static_cast<std::ptrdiff_t>(sets.size());
  std::vector<std::string> errors(sets.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      const NormalForm a = NormalForm::from_normal(sets[idx]);
      SuiteResult res = run_suite(a, options.checks);
      SweepRow& row = result.rows[idx];
      row.summary = std::move(res.summary);
      for (auto& rep : res.reports)
        if (!rep.holds) row.failures.push_back(std::move(rep));
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t k = 0; k < errors.size(); ++k)
    if (!errors[k].empty())
      throw LimitError("set {" + format_set(sets[k]) + "}: " + errors[k]);
  return result;
}

std::string csv_header() {
  return "n,a_list,a_n,delta1,delta2,hp_const,r,rho,sigma,num_generators,cm,bermejo_bound,lev_ok,"
         "rigidity_ok";
}

std::string csv_row(const SuiteSummary& s) {
  std::ostringstream os;
  os << s.n << ',' << format_set(s.a, " ") << ',' << s.a.back() << ',' << s.delta1 << ','
     << s.delta2 << ',' << s.hp_const << ',' << s.r << ',' << s.rho << ',' << s.sigma << ',';
  if (s.num_generators) os << *s.num_generators;
  os << ',' << (s.cm ? "true" : "false") << ',';
  if (s.bermejo) os << *s.bermejo;
  os << ',' << (s.lev_ok ? "true" : "false") << ',' << (s.rigidity_ok ? "true" : "false");
  return os.str();
}

void write_csv(std::ostream& os, const SweepResult& result) {
  os << csv_header() << '\n';
  for (const auto& row : result.rows) os << csv_row(row.summary) << '\n';
}

void write_failures(std::ostream& os, const SweepResult& result) {
  for (const auto& row : result.rows)
    for (const auto& f : row.failures) {
      os << "FAIL {" << format_set(row.summary.a) << "} " << f.id << ": " << f.witness;
      if (f.s) os << " (s = " << *f.s << ")";
      os << '\n';
    }
}

}  // namespace sumset
