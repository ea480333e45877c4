#include "sumset/report.hpp"

#include <sstream>

#include "sumset/semigroup.hpp"

namespace sumset {

using nlohmann::json;

namespace {

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::int64_t>();
}

DecompositionStatus status_from(const std::string& s) {
  if (s == to_string(DecompositionStatus::Valid)) return DecompositionStatus::Valid;
  if (s == to_string(DecompositionStatus::IntervalEmpty)) return DecompositionStatus::IntervalEmpty;
  if (s == to_string(DecompositionStatus::SetMismatch)) return DecompositionStatus::SetMismatch;
  throw json::other_error::create(501, "unknown decomposition status '" + s + "'", nullptr);
}

json binomial_json(const Binomial& b) {
  return json{{"alpha", b.alpha},
              {"beta", b.beta},
              {"degree", b.degree},
              {"a_degree", b.a_degree},
              {"text", render(b)}};
}

Binomial binomial_from(const json& j) {
  Binomial b;
  b.alpha = j.at("alpha").get<Exponent>();
  b.beta = j.at("beta").get<Exponent>();
  b.degree = j.at("degree").get<std::int64_t>();
  b.a_degree = j.at("a_degree").get<std::int64_t>();
  return b;
}

json theorem_json(const TheoremReport& t) {
  return json{{"id", t.id}, {"holds", t.holds}, {"witness", t.witness}, {"s", optional_int(t.s)}};
}

TheoremReport theorem_from(const json& j) {
  TheoremReport t;
  t.id = j.at("id").get<std::string>();
  t.holds = j.at("holds").get<bool>();
  t.witness = j.at("witness").get<std::string>();
  t.s = read_optional(j.at("s"));
  return t;
}

std::string rigidity_verdict(const RigidityReport& rig) {
  if (!rig.equivalent()) return "theorem violation";
  if (rig.is_interval) return "arithmetic progression / rational normal curve";
  return "not rigid: |sA| > s(n-1)+1 for every s >= 2";
}

std::string hp_text(const HilbertData& h) {
  std::ostringstream os;
  os << h.hp_slope << "s";
  if (h.hp_const > 0) os << " + " << h.hp_const;
  if (h.hp_const < 0) os << " - " << -h.hp_const;
  return os.str();
}

std::string opt_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string("n/a");
}

}  // namespace

AnalysisReport analyze(std::span<const std::int64_t> raw, const AnalysisOptions& options) {
  const NormalForm a = NormalForm::normalize(raw);
  AnalysisReport rep;
  rep.input.raw.assign(raw.begin(), raw.end());
  rep.input.normal_form.assign(a.elements().begin(), a.elements().end());
  rep.input.shift = a.shift();
  rep.input.scale = a.scale();

  const std::int64_t rho = rho_bound(a);
  const std::int64_t s_max = options.s_max.value_or(rho + 4);
  if (s_max < 0) throw ValidationError("s_max must be non-negative");
  rep.growth_table = growth_table(a, s_max).values;
  rep.hilbert = hilbert_polynomial(a, growth_table(a, std::max(s_max, rho)));
  rep.smooth_bound = smooth_reg_bound(a);
  rep.singularities = singularity_report(a);
  rep.parameterization = parameterization(a);
  rep.stabilization = stabilization_threshold(a);

  const std::int64_t ds = options.decompose_s.value_or(rep.stabilization.sigma_empirical);
  if (ds < 1) throw ValidationError("decomposition needs s >= 1");
  rep.decomposition = decompose_at(a, ds);

  rep.ideal = minimal_generators(a, options.degree_cap.value_or(rho + 1));
  rep.cm = cm_test(a);
  if (a.size() >= 3) {
    if (const auto b = sumset::bermejo_bound(a)) rep.bermejo_bound = b->bound;
  }
  const RigidityReport rig = rigidity_classifier(a, std::max<std::int64_t>(2, s_max));
  rep.rigidity = {rig.some_s, rig.is_interval, rig.all_s, rigidity_verdict(rig)};
  rep.theorems = verify_suite(a);
  return rep;
}

json decomposition_json(const Decomposition& d) {
  return json{{"s", d.s},           {"top", d.top},
              {"c1", d.c1},         {"c2", d.c2},
              {"C1", d.C1},         {"C2", d.C2},
              {"middle", json::array({d.middle_lo(), d.middle_hi()})},
              {"valid", d.valid()}, {"status", to_string(d.status)},
              {"text", render(d)}};
}

json ideal_json(const GeneratorSet& g) {
  json gens = json::array();
  for (const Binomial& b : g.generators) gens.push_back(binomial_json(b));
  return json{{"degree_cap", g.degree_cap},
              {"count", static_cast<std::int64_t>(g.generators.size())},
              {"generators", gens}};
}

json theorems_json(std::span<const TheoremReport> reports) {
  json arr = json::array();
  for (const auto& t : reports) arr.push_back(theorem_json(t));
  return arr;
}

json to_json(const AnalysisReport& r) {
  json params = json::array();
  for (const auto& [u, v] : r.parameterization) params.push_back(json::array({u, v}));
  return json{
      {"input",
       {{"raw", r.input.raw},
        {"normal_form", r.input.normal_form},
        {"shift", r.input.shift},
        {"scale", r.input.scale}}},
      {"growth_table", r.growth_table},
      {"hilbert",
       {{"slope", r.hilbert.hp_slope},
        {"constant", r.hilbert.hp_const},
        {"regularity_index", r.hilbert.r},
        {"rho", r.hilbert.rho},
        {"smooth_bound", optional_int(r.smooth_bound)}}},
      {"singularities",
       {{"delta1", r.singularities.delta1},
        {"delta2", r.singularities.delta2},
        {"smooth1", r.singularities.smooth1},
        {"smooth2", r.singularities.smooth2},
        {"arithmetic_genus", r.singularities.pa}}},
      {"parameterization", params},
      {"decomposition", decomposition_json(r.decomposition)},
      {"stabilization",
       {{"sigma_empirical", r.stabilization.sigma_empirical},
        {"sigma_formula", r.stabilization.sigma_formula},
        {"window", r.stabilization.window}}},
      {"ideal", ideal_json(r.ideal)},
      {"cohen_macaulay", r.cm},
      {"bermejo_bound", optional_int(r.bermejo_bound)},
      {"rigidity",
       {{"some_s", r.rigidity.some_s},
        {"interval", r.rigidity.interval},
        {"all_s", r.rigidity.all_s},
        {"verdict", r.rigidity.verdict}}},
      {"theorems", theorems_json(r.theorems)},
  };
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  const json& in = j.at("input");
  r.input.raw = in.at("raw").get<std::vector<std::int64_t>>();
  r.input.normal_form = in.at("normal_form").get<std::vector<std::int64_t>>();
  r.input.shift = in.at("shift").get<std::int64_t>();
  r.input.scale = in.at("scale").get<std::int64_t>();
  r.growth_table = j.at("growth_table").get<std::vector<std::int64_t>>();

  const json& h = j.at("hilbert");
  r.hilbert.hp_slope = h.at("slope").get<std::int64_t>();
  r.hilbert.hp_const = h.at("constant").get<std::int64_t>();
  r.hilbert.r = h.at("regularity_index").get<std::int64_t>();
  r.hilbert.rho = h.at("rho").get<std::int64_t>();
  r.smooth_bound = read_optional(h.at("smooth_bound"));

  const json& sg = j.at("singularities");
  r.singularities.delta1 = sg.at("delta1").get<std::int64_t>();
  r.singularities.delta2 = sg.at("delta2").get<std::int64_t>();
  r.singularities.smooth1 = sg.at("smooth1").get<bool>();
  r.singularities.smooth2 = sg.at("smooth2").get<bool>();
  r.singularities.pa = sg.at("arithmetic_genus").get<std::int64_t>();

  for (const json& p : j.at("parameterization"))
    r.parameterization.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>());

  const json& d = j.at("decomposition");
  r.decomposition.s = d.at("s").get<std::int64_t>();
  r.decomposition.top = d.at("top").get<std::int64_t>();
  r.decomposition.c1 = d.at("c1").get<std::int64_t>();
  r.decomposition.c2 = d.at("c2").get<std::int64_t>();
  r.decomposition.C1 = d.at("C1").get<std::vector<std::int64_t>>();
  r.decomposition.C2 = d.at("C2").get<std::vector<std::int64_t>>();
  r.decomposition.status = status_from(d.at("status").get<std::string>());

  const json& st = j.at("stabilization");
  r.stabilization.sigma_empirical = st.at("sigma_empirical").get<std::int64_t>();
  r.stabilization.sigma_formula = st.at("sigma_formula").get<std::int64_t>();
  r.stabilization.window = st.at("window").get<std::int64_t>();

  const json& id = j.at("ideal");
  r.ideal.degree_cap = id.at("degree_cap").get<std::int64_t>();
  for (const json& b : id.at("generators")) r.ideal.generators.push_back(binomial_from(b));

  r.cm = j.at("cohen_macaulay").get<bool>();
  r.bermejo_bound = read_optional(j.at("bermejo_bound"));

  const json& rg = j.at("rigidity");
  r.rigidity.some_s = rg.at("some_s").get<bool>();
  r.rigidity.interval = rg.at("interval").get<bool>();
  r.rigidity.all_s = rg.at("all_s").get<bool>();
  r.rigidity.verdict = rg.at("verdict").get<std::string>();

  for (const json& t : j.at("theorems")) r.theorems.push_back(theorem_from(t));
  return r;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string render_text(const Decomposition& d) {
  std::ostringstream os;
  os << d.s << "A = " << render(d) << "\n";
  os << "  c1 = " << d.c1 << ", C1 = {" << format_set(d.C1) << "}\n";
  os << "  c2 = " << d.c2 << ", C2 = {" << format_set(d.C2) << "}\n";
  os << "  status: " << to_string(d.status) << "\n";
  return os.str();
}

std::string render_text(const GeneratorSet& g) {
  std::ostringstream os;
  os << g.generators.size() << " minimal generators up to degree " << g.degree_cap << ":\n";
  for (const Binomial& b : g.generators)
    os << "  " << render(b) << "    (degree " << b.degree << ", A-degree " << b.a_degree << ")\n";
  return os.str();
}

std::string render_text(std::span<const TheoremReport> reports) {
  std::ostringstream os;
  for (const auto& t : reports) {
    os << (t.holds ? "  PASS " : "  FAIL ") << t.id;
    if (!t.holds) {
      os << ": " << t.witness;
      if (t.s) os << " (s = " << *t.s << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input: {" << format_set(r.input.raw) << "}\n";
  os << "normal form: {" << format_set(r.input.normal_form) << "}  (shift " << r.input.shift
     << ", scale " << r.input.scale << ")\n";
  os << "growth table |sA|, s = 0.." << r.growth_table.size() - 1 << ": "
     << format_set(r.growth_table) << "\n";
  os << "Hilbert polynomial: HP(s) = " << hp_text(r.hilbert) << "\n";
  os << "regularity index r = " << r.hilbert.r << ", rho = " << r.hilbert.rho
     << ", smooth bound = " << opt_text(r.smooth_bound) << "\n";
  os << "singularities: delta1 = " << r.singularities.delta1
     << ", delta2 = " << r.singularities.delta2 << ", p_a = " << r.singularities.pa
     << ", P1 " << (r.singularities.smooth1 ? "smooth" : "singular") << ", P2 "
     << (r.singularities.smooth2 ? "smooth" : "singular") << "\n";
  os << "parameterization: (";
  for (std::size_t i = 0; i < r.parameterization.size(); ++i) {
    if (i > 0) os << ", ";
    os << "u^" << r.parameterization[i].first << " v^" << r.parameterization[i].second;
  }
  os << ")\n";
  os << "decomposition: " << render_text(r.decomposition);
  os << "stabilization: sigma = " << r.stabilization.sigma_empirical << " (formula "
     << r.stabilization.sigma_formula << ", window " << r.stabilization.window << ")\n";
  os << "ideal: " << render_text(r.ideal);
  os << "Cohen-Macaulay: " << (r.cm ? "yes" : "no") << ", CM regularity bound = "
     << opt_text(r.bermejo_bound) << "\n";
  os << "rigidity: " << r.rigidity.verdict << "\n";
  os << "checks:\n" << render_text(std::span<const TheoremReport>(r.theorems));
  return os.str();
}

}  // namespace sumset
