// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "sumset/report.hpp"
#include "sumset/sweep.hpp"

using nlohmann::json;
using V = std::vector<std::int64_t>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(Outcome& out) : out_(out) {}
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }

 private:
  Outcome& out_;
};

struct CliRun {
  int exit_code = -1;
  std::string out;
  double seconds = 0;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = std::string(SUMSET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<std::string> generator_texts(const json& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.at("generators")) out.push_back(g.at("text").get<std::string>());
  return out;
}

V prefix(const json& arr, std::size_t len) {
  V all = arr.get<V>();
  if (all.size() > len) all.resize(len);
  return all;
}

// 1. HF prefix, HP and the six generators of {0,2,4,5,7}, under a second.
Outcome calcul_ca() {
  Outcome o;
  Criterion c(o);
  const CliRun run = run_cli("analyze 0,2,4,5,7 --json");
  c.expect(run.exit_code == 0, "exit code " + std::to_string(run.exit_code));
  if (!o.ok) return o;
  const json j = json::parse(run.out);
  c.expect(prefix(j["growth_table"], 6) == V{1, 5, 12, 19, 26, 33}, "HF prefix");
  c.expect(j["hilbert"]["slope"] == 7 && j["hilbert"]["constant"] == -2, "HP != 7s - 2");
  c.expect(j["ideal"]["count"] == 6, "generator count");
  c.expect(generator_texts(j["ideal"]) ==
               std::vector<std::string>{"x2^2 - x1*x3", "x2*x4 - x1*x5", "x3*x4 - x2*x5",
                                        "x2*x3^2 - x1*x4^2", "x3^3 - x1*x4*x5", "x4^3 - x3^2*x5"},
           "generator list");
  c.expect(run.seconds < 1.0, "took " + std::to_string(run.seconds) + " s");
  return o;
}

// 2. 5A = {0,2} ⊔ [4,33] ⊔ {35} with c1 = 4, C1 = {0,2}, c2 = 2, C2 = {0}, delta = (2, 1).
Outcome pol_cd() {
  Outcome o;
  Criterion c(o);
  const CliRun text = run_cli("decompose 0,2,4,5,7 --s 5");
  c.expect(text.exit_code == 0, "exit code");
  c.expect(text.out.find("{0,2} ⊔ [4,33] ⊔ {35}") != std::string::npos, "rendered decomposition");
  const CliRun js = run_cli("decompose 0,2,4,5,7 --s 5 --json");
  if (js.exit_code != 0) {
    c.expect(false, "json exit code");
    return o;
  }
  const json d = json::parse(js.out);
  c.expect(d["valid"] == true, "decomposition invalid");
  c.expect(d["c1"] == 4 && d["C1"] == json::array({0, 2}), "c1/C1");
  c.expect(d["c2"] == 2 && d["C2"] == json::array({0}), "c2/C2");
  c.expect(d["middle"] == json::array({4, 33}), "middle interval");
  const json rep = json::parse(run_cli("analyze 0,2,4,5,7 --json").out);
  c.expect(rep["singularities"]["delta1"] == 2 && rep["singularities"]["delta2"] == 1, "deltas");
  return o;
}

// 3. Macaulay's curve {0,1,3,4}.
Outcome mac_ex() {
  Outcome o;
  Criterion c(o);
  const CliRun run = run_cli("analyze 0,1,3,4 --json");
  c.expect(run.exit_code == 0, "exit code");
  if (!o.ok) return o;
  const json j = json::parse(run.out);
  c.expect(prefix(j["growth_table"], 6) == V{1, 4, 9, 13, 17, 21}, "HF prefix");
  c.expect(j["hilbert"]["slope"] == 4 && j["hilbert"]["constant"] == 1, "HP != 4s + 1");
  c.expect(j["singularities"]["smooth1"] == true && j["singularities"]["smooth2"] == true,
           "points not smooth");
  c.expect(j["cohen_macaulay"] == false, "cm_test should be false");
  return o;
}

// 4. The Cohen-Macaulay curve {0,7,8,9,10}.
Outcome cm_curve() {
  Outcome o;
  Criterion c(o);
  const CliRun run = run_cli("analyze 0,7,8,9,10 --s-max 8 --cap 5 --json");
  c.expect(run.exit_code == 0, "exit code");
  if (!o.ok) return o;
  const json j = json::parse(run.out);
  c.expect(j["growth_table"].get<V>() == V{1, 5, 12, 22, 32, 42, 52, 62, 72}, "HF prefix");
  c.expect(j["hilbert"]["slope"] == 10 && j["hilbert"]["constant"] == -8, "HP != 10s - 8");
  c.expect(j["cohen_macaulay"] == true, "cm_test should be true");
  c.expect(j["ideal"]["count"] == 6, "generator count");
  c.expect(generator_texts(j["ideal"]) ==
               std::vector<std::string>{"x3^2 - x2*x4", "x3*x4 - x2*x5", "x4^2 - x3*x5",
                                        "x2^4 - x1*x3*x5^2", "x2^3*x3 - x1*x4*x5^2",
                                        "x2^3*x4 - x1*x5^3"},
           "generator list");
  c.expect(j["bermejo_bound"] == 3, "bound != 3");
  const std::int64_t r = j["hilbert"]["regularity_index"].get<std::int64_t>();
  c.expect(r == 2, "r = " + std::to_string(r) + ", HF list gives 2");
  c.expect(r + 1 <= 3, "r + 1 > 3");
  // The default cap rho + 1 = 10 finds nothing beyond these six.
  const json dflt = json::parse(run_cli("ideal 0,7,8,9,10 --json").out);
  c.expect(dflt["count"] == 6, "default cap count");
  return o;
}

// 5. verify_suite over every normalized set with n <= 5, a_n <= 16, single-threaded, < 2 min.
Outcome property_sweep() {
  Outcome o;
  Criterion c(o);
  sumset::SweepOptions opt;
  opt.n_max = 5;
  opt.a_max = 16;
  opt.threads = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = sumset::run_sweep(opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(res.rows.size() == oracle::count_normal_sets(5, 16), "row count");
  c.expect(res.rows.size() > 2000, "family too small");
  if (res.failure_count() > 0) {
    std::ostringstream os;
    sumset::write_failures(os, res);
    c.expect(false, std::to_string(res.failure_count()) + " failures, first: " +
                        os.str().substr(0, os.str().find('\n')));
  }
  bool saw_macaulay = false;
  for (const auto& row : res.rows)
    if (row.summary.a == V{0, 1, 3, 4}) saw_macaulay = !row.summary.cm;
  c.expect(saw_macaulay, "Macaulay's set missing or marked CM");
  c.expect(secs < 120.0, "took " + std::to_string(secs) + " s");
  o.detail = o.ok ? std::to_string(res.rows.size()) + " sets in " + std::to_string(secs) + " s"
                  : o.detail;
  return o;
}

// 6. Bitmap sumsets against multiset enumeration: a_n <= 12, n <= 5, s <= 6.
Outcome oracle_equivalence() {
  Outcome o;
  Criterion c(o);
  std::size_t checked = 0;
  for (const auto& a : sumset::enumerate_normal_sets(5, 12)) {
    const auto nf = sumset::NormalForm::from_normal(a);
    const auto chain = sumset::sumset_chain(nf, 6);
    for (int s = 0; s <= 6; ++s) {
      const auto brute = oracle::sumset(a, s);
      const auto fast = chain[static_cast<std::size_t>(s)].elements();
      c.expect(V(brute.begin(), brute.end()) == fast,
               "mismatch at {" + sumset::format_set(a) + "}, s = " + std::to_string(s));
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " (A, s) pairs";
  return o;
}

// 7. Byte-identical JSON across runs.
Outcome determinism() {
  Outcome o;
  Criterion c(o);
  for (const char* set : {"0,2,4,5,7", "0,7,8,9,10", "3,5,9"}) {
    const CliRun first = run_cli(std::string("analyze ") + set + " --json");
    const CliRun second = run_cli(std::string("analyze ") + set + " --json");
    c.expect(first.exit_code == 0 && !first.out.empty(), "run failed");
    c.expect(first.out == second.out, std::string("output differs for ") + set);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 calculCA reproduction", calcul_ca},
      {"2 PolCD decomposition", pol_cd},
      {"3 Macaulay curve", mac_ex},
      {"4 CM curve", cm_curve},
      {"5 property sweep n<=5, a_n<=16", property_sweep},
      {"6 bitmap vs brute-force sumsets", oracle_equivalence},
      {"7 deterministic JSON", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS  " : "FAIL  ") << name;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
