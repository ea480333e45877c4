#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sumset/curve.hpp"
#include "sumset/structure.hpp"
#include "sumset/theorems.hpp"
#include "sumset/toric.hpp"

namespace sumset {

/// Everything the `analyze` command reports about one input set. The JSON
/// layout is documented in docs/report-schema.md.
struct AnalysisReport {
  struct Input {
    std::vector<std::int64_t> raw;
    std::vector<std::int64_t> normal_form;
    std::int64_t shift = 0;
    std::int64_t scale = 1;
    friend bool operator==(const Input&, const Input&) = default;
  };
  struct Rigidity {
    bool some_s = false;
    bool interval = false;
    bool all_s = false;
    std::string verdict;
    friend bool operator==(const Rigidity&, const Rigidity&) = default;
  };

  Input input;
  std::vector<std::int64_t> growth_table;
  HilbertData hilbert;
  std::optional<std::int64_t> smooth_bound;
  SingularityReport singularities;
  std::vector<std::pair<std::int64_t, std::int64_t>> parameterization;
  Decomposition decomposition;
  StabilizationCertificate stabilization;
  GeneratorSet ideal;
  bool cm = false;
  std::optional<std::int64_t> bermejo_bound;
  Rigidity rigidity;
  std::vector<TheoremReport> theorems;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
  std::optional<std::int64_t> s_max;       // growth table length; default rho + 4
  std::optional<std::int64_t> decompose_s;  // default sigma
  std::optional<std::int64_t> degree_cap;   // default rho + 1
};

AnalysisReport analyze(std::span<const std::int64_t> raw, const AnalysisOptions& options = {});

nlohmann::json to_json(const AnalysisReport& report);
/// Throws nlohmann::json::exception on schema mismatch.
AnalysisReport report_from_json(const nlohmann::json& j);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

std::string render_text(const AnalysisReport& report);

nlohmann::json decomposition_json(const Decomposition& d);
std::string render_text(const Decomposition& d);

nlohmann::json ideal_json(const GeneratorSet& g);
std::string render_text(const GeneratorSet& g);

nlohmann::json theorems_json(std::span<const TheoremReport> reports);
std::string render_text(std::span<const TheoremReport> reports);

}  // namespace sumset
