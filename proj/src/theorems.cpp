#include "sumset/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "sumset/curve.hpp"
#include "sumset/semigroup.hpp"
#include "sumset/structure.hpp"
#include "sumset/toric.hpp"

namespace sumset {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

GrowthTable table_of(const std::vector<SumsetImage>& chain) {
  GrowthTable t;
  t.values.reserve(chain.size());
  for (const auto& img : chain) t.values.push_back(img.card);
  return t;
}

TheoremReport lev_on(const NormalForm& a, const GrowthTable& hf, std::int64_t s_max) {
  const auto n = static_cast<std::int64_t>(a.size());
  const auto& v = hf.values;
  for (std::int64_t s = 2; s <= s_max; ++s) {
    const std::int64_t diff = v[static_cast<std::size_t>(s)] - v[static_cast<std::size_t>(s - 1)];
    const std::int64_t need = std::min(a.back(), s * (n - 2) + 1);
    if (diff < need)
      return TheoremReport::fail("lev", "|sA|-|(s-1)A| = " + str(diff) + " < " + str(need), s);
  }
  return TheoremReport::pass("lev");
}

bool cm_on(const NormalForm& a, const std::vector<SumsetImage>& chain, std::int64_t s_hi) {
  const std::int64_t an = a.back();
  for (std::int64_t s = 1; s <= s_hi; ++s) {
    const SumsetImage& cur = chain[static_cast<std::size_t>(s)];
    const SumsetImage& prev = chain[static_cast<std::size_t>(s - 1)];
    for (std::int64_t x : cur.elements()) {
      if (prev.contains(x)) continue;
      if (cur.contains(x + an)) return false;
    }
  }
  return true;
}

RigidityReport rigidity_on(const NormalForm& a, const GrowthTable& hf, std::int64_t s_max) {
  const auto n = static_cast<std::int64_t>(a.size());
  RigidityReport rep;
  rep.is_interval = a.back() == n - 1;
  rep.all_s = true;
  for (std::int64_t s = 0; s <= s_max; ++s) {
    const bool tight = hf.values[static_cast<std::size_t>(s)] == s * (n - 1) + 1;
    if (!tight) rep.all_s = false;
    if (tight && s >= 2 && !rep.some_s) {
      rep.some_s = true;
      rep.some_s_witness = s;
    }
  }
  if (rep.equivalent()) {
    rep.verdict = TheoremReport::pass("rigidity");
  } else {
    std::ostringstream os;
    os << "conditions diverge: some_s=" << rep.some_s << " interval=" << rep.is_interval
       << " all_s=" << rep.all_s;
    rep.verdict = TheoremReport::fail("rigidity", os.str(), rep.some_s_witness);
  }
  return rep;
}

}  // namespace

TheoremReport lev_check(const NormalForm& a, std::int64_t s_max) {
  if (s_max < 2) throw ValidationError("Lev check needs s_max >= 2");
  return lev_on(a, growth_table(a, s_max), s_max);
}

bool cm_test(const NormalForm& a) {
  const std::int64_t s_hi = rho_bound(a) + 1;
  return cm_on(a, sumset_chain(a, s_hi), s_hi);
}

std::optional<BermejoBound> bermejo_bound(const NormalForm& a) {
  const auto n = static_cast<std::int64_t>(a.size());
  if (n < 3) throw ValidationError("regularity bound for CM curves needs n >= 3");
  if (!cm_test(a)) return std::nullopt;
  BermejoBound b;
  b.bound = (a.back() - 1 + n - 3) / (n - 2);
  b.r_plus_one = hilbert_polynomial(a).r + 1;
  return b;
}

RigidityReport rigidity_classifier(const NormalForm& a, std::int64_t s_max) {
  if (s_max < 2) throw ValidationError("rigidity classifier needs s_max >= 2");
  return rigidity_on(a, growth_table(a, s_max), s_max);
}

SuiteOptions SuiteOptions::parse(const std::string& text) {
  if (text == "all" || text.empty()) return {};
  SuiteOptions o{false, false, false, false, false, false, false};
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "growth") o.growth = true;
    else if (tok == "hilbert") o.hilbert = true;
    else if (tok == "structure") o.structure = true;
    else if (tok == "lev") o.lev = true;
    else if (tok == "rigidity") o.rigidity = true;
    else if (tok == "cm") o.cm = true;
    else if (tok == "ideal") o.ideal = true;
    else if (tok == "all") o = SuiteOptions{};
    else throw ValidationError("unknown check group '" + tok + "'");
  }
  return o;
}

bool SuiteResult::all_hold() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

SuiteResult run_suite(const NormalForm& a, const SuiteOptions& opt) {
  SuiteResult res;
  auto& sum = res.summary;
  auto& out = res.reports;
  const auto n = static_cast<std::int64_t>(a.size());
  const std::int64_t an = a.back();
  sum.n = n;
  sum.a.assign(a.elements().begin(), a.elements().end());

  const NumericalSemigroup left = left_semigroup(a);
  const NumericalSemigroup right = right_semigroup(a);
  const StabilizationCertificate cert = stabilization_threshold(a);
  const std::int64_t rho = rho_bound(a);
  const std::int64_t s_hi = rho + 4;
  const std::int64_t window = std::max(s_hi, cert.window);
  const std::vector<SumsetImage> chain = sumset_chain(a, window);
  const GrowthTable hf = table_of(chain);
  const HilbertData h = hilbert_polynomial(a, hf);
  const SingularityReport sing = singularity_report(a);
  const auto at = [&](std::int64_t s) { return hf.values[static_cast<std::size_t>(s)]; };

  sum.delta1 = sing.delta1;
  sum.delta2 = sing.delta2;
  sum.hp_const = h.hp_const;
  sum.r = h.r;
  sum.rho = rho;
  sum.sigma = cert.sigma_empirical;

  if (opt.growth) {
    GrowthTable prefix{std::vector<std::int64_t>(hf.values.begin(), hf.values.begin() + s_hi + 1)};
    const BoundsReport b = bounds_check(a, prefix);
    if (b.ok())
      out.push_back(TheoremReport::pass("growth.bounds"));
    else
      out.push_back(TheoremReport::fail(
          "growth.bounds",
          "|sA| = " + str(b.violation->card) + " outside [" + str(b.violation->lower) + ", " +
              std::to_string(b.violation->upper) + "]",
          b.violation->s));

    TheoremReport inc = TheoremReport::pass("growth.increment");
    for (std::int64_t s = 0; s < s_hi; ++s)
      if (at(s + 1) < at(s) + n - 1) {
        inc = TheoremReport::fail("growth.increment",
                                  "|(s+1)A| = " + str(at(s + 1)) + " < |sA| + n - 1", s);
        break;
      }
    out.push_back(inc);

    TheoremReport shape = TheoremReport::pass("sumset.shape");
    for (std::int64_t s = 0; s <= window; ++s) {
      const SumsetImage& img = chain[static_cast<std::size_t>(s)];
      if (!img.contains(0) || img.max() != s * an || !img.contains(s * an) ||
          img.card != static_cast<std::int64_t>(img.bits.count())) {
        shape = TheoremReport::fail("sumset.shape", "min/max/cardinality mismatch", s);
        break;
      }
      if (s < window) {
        const SumsetImage& next = chain[static_cast<std::size_t>(s + 1)];
        const auto el = img.elements();
        const auto miss = std::find_if(el.begin(), el.end(), [&](auto x) { return !next.contains(x); });
        if (miss != el.end()) {
          shape = TheoremReport::fail("sumset.shape", str(*miss) + " in sA but not in (s+1)A", s);
          break;
        }
      }
    }
    out.push_back(shape);
  }

  if (opt.hilbert) {
    TheoremReport agree = TheoremReport::pass("hilbert.agreement");
    if (h.r > rho) agree = TheoremReport::fail("hilbert.agreement", "r = " + str(h.r) + " > rho", h.r);
    for (std::int64_t s = h.r; s <= s_hi && agree.holds; ++s) {
      if (at(s) != h.hp(s))
        agree = TheoremReport::fail("hilbert.agreement",
                                    "HF = " + str(at(s)) + " != HP = " + str(h.hp(s)), s);
      else if (s > h.r && at(s) - at(s - 1) != an)
        agree = TheoremReport::fail("hilbert.agreement", "first difference != a_n", s);
    }
    if (agree.holds && h.hp(0) != 1 - sing.pa)
      agree = TheoremReport::fail("hilbert.agreement", "HP(0) != 1 - p_a", 0);
    out.push_back(agree);

    if ((sing.delta1 == 0) == sing.smooth1 && (sing.delta2 == 0) == sing.smooth2)
      out.push_back(TheoremReport::pass("hilbert.smoothness"));
    else
      out.push_back(TheoremReport::fail("hilbert.smoothness",
                                        "delta1=" + str(sing.delta1) + " delta2=" + str(sing.delta2) +
                                            " disagrees with gap-1 smoothness"));

    if (n >= 3 && rho > an - n + 4)
      out.push_back(TheoremReport::fail("hilbert.rho_bound",
                                        "rho = " + str(rho) + " > a_n - n + 4 = " + str(an - n + 4)));
    else
      out.push_back(TheoremReport::pass("hilbert.rho_bound"));

    if (const auto sb = smooth_reg_bound(a); sb && h.r > *sb)
      out.push_back(TheoremReport::fail("hilbert.smooth_bound",
                                        "r = " + str(h.r) + " > " + str(*sb)));
    else
      out.push_back(TheoremReport::pass("hilbert.smooth_bound"));
  }

  if (opt.structure) {
    TheoremReport contain = TheoremReport::pass("structure.containment");
    for (std::int64_t s = 1; s <= window && contain.holds; ++s) {
      for (std::int64_t x : chain[static_cast<std::size_t>(s)].elements()) {
        if (!left.contains(x) || !right.contains(s * an - x)) {
          contain = TheoremReport::fail("structure.containment",
                                        str(x) + " in sA escapes Γ1 or s*a_n - Γ2", s);
          break;
        }
      }
    }
    out.push_back(contain);

    const RefinementReport ref = verify_refinement(a);
    if (ref.ok())
      out.push_back(TheoremReport::pass("structure.refinement"));
    else
      out.push_back(TheoremReport::fail(
          "structure.refinement",
          "from sA: c1=" + str(ref.c1) + " |C1|=" + str(ref.small1) + " c2=" + str(ref.c2) +
              " |C2|=" + str(ref.small2) + "; semigroups: c1=" + str(ref.conductor1) +
              " delta1=" + str(ref.delta1) + " c2=" + str(ref.conductor2) + " delta2=" + str(ref.delta2),
          ref.s));

    TheoremReport dec = TheoremReport::pass("structure.decomposition");
    if (cert.sigma_empirical > cert.window) {
      dec = TheoremReport::fail("structure.decomposition", "never valid inside the window", cert.window);
    }
    for (std::int64_t s = cert.sigma_empirical; s <= window && dec.holds; ++s) {
      const Decomposition d = decompose_at(a, chain[static_cast<std::size_t>(s)], left, right);
      if (!d.valid())
        dec = TheoremReport::fail("structure.decomposition", to_string(d.status), s);
      else if (d.predicted_card() != at(s))
        dec = TheoremReport::fail("structure.decomposition", "cardinality identity fails", s);
    }
    out.push_back(dec);

    if (cert.sigma_empirical == cert.sigma_formula)
      out.push_back(TheoremReport::pass("structure.sigma_formula"));
    else
      out.push_back(TheoremReport::fail("structure.sigma_formula",
                                        "empirical " + str(cert.sigma_empirical) + " != formula " +
                                            str(cert.sigma_formula)));

    // Near 0, a large sumset agrees with Γ1 up to c1 + a_2.
    const std::int64_t s_big = rho + 2;
    const SumsetImage& big = chain[static_cast<std::size_t>(s_big)];
    TheoremReport low = TheoremReport::pass("structure.low_window");
    for (std::int64_t x = 0; x <= left.conductor() + a[1]; ++x) {
      if (big.contains(x) != left.contains(x)) {
        low = TheoremReport::fail("structure.low_window",
                                  "membership of " + str(x) + " differs between sA and Γ1", s_big);
        break;
      }
    }
    out.push_back(low);
  }

  if (opt.lev) {
    TheoremReport lev = lev_on(a, hf, s_hi);
    if (lev.holds && at(1) - at(0) != n - 1)
      lev = TheoremReport::fail("lev", "|A| - |0A| != n - 1", 1);
    sum.lev_ok = lev.holds;
    out.push_back(lev);
  }

  if (opt.rigidity) {
    const RigidityReport rig = rigidity_on(a, hf, s_hi);
    sum.rigidity_ok = rig.verdict.holds;
    out.push_back(rig.verdict);
  }

  sum.cm = cm_on(a, chain, rho + 1);
  if (sum.cm && n >= 3) sum.bermejo = (an - 1 + n - 3) / (n - 2);
  if (opt.cm) {
    TheoremReport cons = TheoremReport::pass("cm.consistency");
    bool exceeded = false;
    for (std::int64_t s = 1; s <= s_hi; ++s) {
      const std::int64_t d = at(s) - at(s - 1);
      if (d > an) exceeded = true;
      if (sum.cm && (d > an || (s >= 2 && d < at(s - 1) - at(s - 2)))) {
        cons = TheoremReport::fail("cm.consistency",
                                   "CM but first difference " + str(d) + " not monotone up to a_n", s);
        break;
      }
    }
    if (cons.holds && exceeded && sum.cm)
      cons = TheoremReport::fail("cm.consistency", "first difference exceeds a_n yet CM");
    out.push_back(cons);

    if (sum.bermejo && h.r + 1 > *sum.bermejo)
      out.push_back(TheoremReport::fail("cm.bermejo",
                                        "r + 1 = " + str(h.r + 1) + " > " + str(*sum.bermejo)));
    else
      out.push_back(TheoremReport::pass("cm.bermejo"));
  }

  if (opt.ideal) {
    const std::int64_t cap = rho + 1;
    const GeneratorSet gens = minimal_generators(a, cap);
    sum.num_generators = static_cast<std::int64_t>(gens.generators.size());

    TheoremReport sound = TheoremReport::pass("ideal.soundness");
    for (const Binomial& b : gens.generators)
      if (!binomial_in_ideal(a, b.alpha, b.beta) || b.alpha == b.beta) {
        sound = TheoremReport::fail("ideal.soundness", render(b) + " is not in I_A", b.degree);
        break;
      }
    out.push_back(sound);

    TheoremReport gen = TheoremReport::pass("ideal.generation");
    for (std::int64_t s = 2; s <= cap && gen.holds; ++s)
      for (const Fiber& f : fibers_of_degree(a, s))
        if (!fiber_connected_by_moves(f, gens.generators)) {
          gen = TheoremReport::fail("ideal.generation",
                                    "fiber (" + str(s) + "," + str(f.m) + ") not connected by moves", s);
          break;
        }
    out.push_back(gen);

    TheoremReport minimal = TheoremReport::pass("ideal.minimality");
    for (std::size_t k = 0; k < gens.generators.size(); ++k) {
      const Binomial& b = gens.generators[k];
      const Fiber f = fiber(a, b.degree, b.a_degree);
      if (fiber_connected_by_moves(f, gens.generators, static_cast<std::ptrdiff_t>(k))) {
        minimal = TheoremReport::fail("ideal.minimality", render(b) + " is redundant", b.degree);
        break;
      }
    }
    out.push_back(minimal);

    const GeneratorSet wider = minimal_generators(a, cap + 2);
    if (wider.generators == gens.generators)
      out.push_back(TheoremReport::pass("ideal.cap_stability"));
    else
      out.push_back(TheoremReport::fail("ideal.cap_stability",
                                        "cap " + str(cap + 2) + " yields " +
                                            str(static_cast<std::int64_t>(wider.generators.size())) +
                                            " generators vs " + str(*sum.num_generators),
                                        cap + 2));
  }
  return res;
}

std::vector<TheoremReport> verify_suite(const NormalForm& a) { return run_suite(a).reports; }

}  // namespace sumset
