// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "krulldim/catalog.hpp"
#include "krulldim/formulas.hpp"
#include "krulldim/oracle.hpp"
#include "krulldim/suites.hpp"

using namespace krulldim;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const CheckReport& r) {
  std::ostringstream os;
  os << r.cases << " cases, " << r.checks << " checks, " << r.failures.size() << " failures";
  if (!r.failures.empty()) {
    const CaseFailure& f = r.failures.front();
    os << "; first: " << f.inputs << " expected " << f.expected << " got " << f.actual;
  }
  return os.str();
}

Outcome suite_outcome(const char* name) {
  const CheckReport r = run_suite(name, Grid{});
  return {r.passed(), describe(r)};
}

Outcome sharp_grid() {
  int cases = 0;
  int bad = 0;
  for (int s = 0; s <= 6; ++s) {
    for (int t = 0; t <= 6; ++t) {
      ++cases;
      const DimReport r = dim_tensor(make_field(s), make_field(t));
      if (r.value != std::min(s, t)) ++bad;
    }
  }
  return {bad == 0 && cases == 49,
          std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
}

Outcome af_agreement() {
  int cases = 0;
  int bad = 0;
  for (int t1 = 0; t1 <= 4; ++t1) {
    for (int d1 = 0; d1 <= t1; ++d1) {
      for (int t2 = 0; t2 <= 4; ++t2) {
        for (int d2 = 0; d2 <= t2; ++d2) {
          ++cases;
          const SpectrumSummary a = summarize(make_af(t1, d1));
          const SpectrumSummary b = summarize(make_af(t2, d2));
          const int v = af_pair_dim(a, b);
          if (v != d_value(t1, d1, b) || v != d_value(t2, d2, a) ||
              v != dim_tensor(a, b).value) {
            ++bad;
          }
        }
      }
    }
  }
  const CheckReport r = run_suite("af-agreement", Grid{});
  return {bad == 0 && r.passed(), std::to_string(cases) + " AF pairs, " +
                                      std::to_string(bad) + " mismatches; catalog: " +
                                      describe(r)};
}

Outcome af_threshold() {
  int pullbacks = 0;
  int bad = 0;
  for (const CatalogEntry& e : build_catalog(Grid{})) {
    if (!e.summary.pullback || e.summary.pullback->td_KD < 1) continue;
    ++pullbacks;
    const int c = e.summary.pullback->td_KD;
    for (int n = 0; n < c; ++n) bad += is_af_poly(e.summary, n) ? 1 : 0;
    bad += is_af_poly(e.summary, c) ? 0 : 1;
  }
  return {bad == 0 && pullbacks > 0,
          std::to_string(pullbacks) + " pullbacks, " + std::to_string(bad) + " mismatches"};
}

Outcome kplusm_anchor() {
  const SpectrumSummary a = summarize(k_plus_m());
  const SpectrumSummary b = summarize(make_af(1, 1));
  const DimReport r = dim_tensor(a, b);
  const int poly = brewer_poly_dim(a, 1);
  const int chain = chain_enumerate(a, b);
  std::ostringstream os;
  os << "dim_tensor " << r.value << " via " << label(r.theorem) << ", brewer_poly_dim " << poly
     << ", chain_enumerate " << chain;
  return {r.value == 3 && r.theorem == Theorem::kPullbackGeneral && poly == 3 && chain == 3,
          os.str()};
}

Outcome pullback_pair() {
  const SpectrumSummary a = summarize(k_plus_m());
  const DimReport r = dim_tensor(a, a);
  const int forward = thm28_dim(a, a).value;
  const int pair = pullback_pair_dim(a, a);
  int reverse = -1;
  for (const Term& t : r.terms) {
    if (t.label == "reverse-orientation") reverse = t.value;
  }
  std::ostringstream os;
  os << "dim_tensor " << r.value << " via " << label(r.theorem) << ", A-side formula " << forward
     << ", B-side formula " << reverse << ", pullback_pair_dim " << pair;
  return {r.value == 3 && r.theorem == Theorem::kPullbackGeneral && forward == 3 &&
              reverse == 3 && pair == 3,
          os.str()};
}

Outcome oracle_tightness() {
  const std::vector<CatalogEntry> cat = build_catalog(Grid{});
  std::size_t pairs = 0;
  std::size_t unsound = 0;
  std::size_t loose = 0;
  for (const CatalogEntry& x : cat) {
    for (const CatalogEntry& y : cat) {
      ++pairs;
      const int dim = dim_tensor(x.summary, y.summary).value;
      const int chain = chain_enumerate(x.summary, y.summary);
      if (chain > dim) ++unsound;
      if (chain != dim) ++loose;
    }
  }
  std::ostringstream os;
  os << pairs << " catalog pairs, " << unsound << " above the formula, " << loose
     << " below it";
  return {unsound == 0 && loose == 0, os.str()};
}

Outcome valuation_towers() {
  int bad = 0;
  int cases = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int t = d; t <= 5; ++t) {
      ++cases;
      const SpectrumSummary s = summarize(make_valuation(t, d));
      if (s.dim != d || !s.is_af) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " towers, " + std::to_string(bad) + " mismatches"};
}

Outcome full_suite() {
  std::size_t failed = 0;
  std::size_t checks = 0;
  for (const std::string& name : suite_names()) {
    const CheckReport r = run_suite(name, Grid{});
    failed += r.failures.size();
    checks += r.checks;
  }
  return {failed == 0, std::to_string(suite_names().size()) + " suites, " +
                           std::to_string(checks) + " checks, " + std::to_string(failed) +
                           " failures"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sharp grid", 1.0, sharp_grid},
      {2, "AF agreement grid", 0, af_agreement},
      {3, "polynomial AF threshold", 0, af_threshold},
      {4, "k+M anchor values", 0, kplusm_anchor},
      {5, "pullback pair", 0, pullback_pair},
      {6, "GSCT identity suite", 10.0, [] { return suite_outcome("gsct-identity"); }},
      {7, "height additivity over pair strata", 0, [] { return suite_outcome("prop24"); }},
      {8, "oracle soundness and tightness", 0, oracle_tightness},
      {9, "valuation towers", 0, valuation_towers},
      {10, "full suite wall-clock", 60.0, full_suite},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = since(start);
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.ok = false;
      o.detail += "; over the time budget";
    }
    if (!o.ok) ++failures;
    std::printf("%s [%d] %s: %s (%.3fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
