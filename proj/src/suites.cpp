#include "krulldim/suites.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>

#include "krulldim/errors.hpp"
#include "krulldim/formulas.hpp"
#include "krulldim/oracle.hpp"

namespace krulldim {

namespace {

struct CaseResult {
  std::size_t checks = 0;
  std::vector<CaseFailure> failures;
};

using Case = std::function<CaseResult()>;
using Catalog = std::vector<CatalogEntry>;

class Checker {
 public:
  explicit Checker(std::string context) : context_(std::move(context)) {}

  template <typename T>
  void eq(const std::string& what, const T& expected, const T& actual) {
    ++result_.checks;
    if (!(expected == actual)) fail(what, str(expected), str(actual));
  }

  void holds(const std::string& what, bool ok, const std::string& expected,
             const std::string& actual) {
    ++result_.checks;
    if (!ok) fail(what, expected, actual);
  }

  CaseResult done() { return std::move(result_); }

 private:
  template <typename T>
  static std::string str(const T& v) {
    std::ostringstream os;
    if constexpr (std::is_same_v<T, bool>) {
      os << (v ? "true" : "false");
    } else {
      os << v;
    }
    return os.str();
  }

  void fail(const std::string& what, std::string expected, std::string actual) {
    result_.failures.push_back({context_ + " :: " + what, std::move(expected), std::move(actual)});
  }

  std::string context_;
  CaseResult result_;
};

std::string pair_context(const SpectrumSummary& a, const SpectrumSummary& b) {
  return a.source + " ⊗ " + b.source;
}

std::string num(int v) { return std::to_string(v); }

CaseResult run_guarded(const Case& c, const std::string& label) {
  try {
    return c();
  } catch (const std::exception& e) {
    return CaseResult{1, {CaseFailure{label, "no exception", e.what()}}};
  }
}

// The data-parallel kernel: independent cases, results gathered by index.
std::vector<CaseResult> evaluate(const std::vector<Case>& cases, Exec exec) {
  std::vector<CaseResult> results(cases.size());
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      results[static_cast<std::size_t>(i)] =
          run_guarded(cases[static_cast<std::size_t>(i)], "case " + std::to_string(i));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      results[static_cast<std::size_t>(i)] =
          run_guarded(cases[static_cast<std::size_t>(i)], "case " + std::to_string(i));
    }
  }
  return results;
}

std::vector<const CatalogEntry*> pullbacks(const Catalog& cat) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : cat) {
    if (e.summary.pullback) out.push_back(&e);
  }
  return out;
}

// One case per ordered catalog pair.
template <typename Fn>
void for_catalog_pairs(const Catalog& cat, std::vector<Case>& cases, Fn fn) {
  for (const CatalogEntry& a : cat) {
    for (const CatalogEntry& b : cat) {
      cases.push_back([&a, &b, fn] { return fn(a.summary, b.summary); });
    }
  }
}

void sharp_grid(const Grid& grid, const Catalog&, std::vector<Case>& cases) {
  for (int s = 0; s <= grid.field_td_max(); ++s) {
    for (int t = 0; t <= grid.field_td_max(); ++t) {
      cases.push_back([s, t] {
        Checker c("field(" + num(s) + ") ⊗ field(" + num(t) + ")");
        const DimReport r = dim_tensor(make_field(s), make_field(t));
        c.eq("value", std::min(s, t), r.value);
        c.eq("theorem", std::string(label(Theorem::kFieldPair)), std::string(label(r.theorem)));
        return c.done();
      });
    }
  }
}

void af_agreement(const Grid& grid, const Catalog& cat, std::vector<Case>& cases) {
  auto algebras = std::make_shared<std::vector<SpectrumSummary>>();
  for (int t = 0; t <= grid.af_td_max(); ++t) {
    for (int d = 0; d <= t; ++d) algebras->push_back(summarize(make_af(t, d)));
  }
  for (const CatalogEntry& e : cat) {
    if (e.summary.is_af) algebras->push_back(e.summary);
  }
  for (std::size_t i = 0; i < algebras->size(); ++i) {
    for (std::size_t j = 0; j < algebras->size(); ++j) {
      cases.push_back([algebras, i, j] {
        const SpectrumSummary& a = (*algebras)[i];
        const SpectrumSummary& b = (*algebras)[j];
        Checker c(pair_context(a, b));
        const int expected = af_pair_dim(a, b);
        c.eq("D(td A, dim A, B)", expected, d_value(a.td, a.dim, b));
        c.eq("D(td B, dim B, A)", expected, d_value(b.td, b.dim, a));
        c.eq("dim_tensor", expected, dim_tensor(a, b).value);
        return c.done();
      });
    }
  }
}

void poly_af_threshold(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  for (const CatalogEntry* e : pullbacks(cat)) {
    const int threshold = e->summary.pullback->td_KD;
    if (threshold < 1) continue;
    cases.push_back([e, threshold] {
      Checker c(e->summary.source);
      for (int n = 0; n <= threshold + 1; ++n) {
        c.eq("is_af_poly(n=" + num(n) + ")", n >= threshold, is_af_poly(e->summary, n));
      }
      return c.done();
    });
  }
}

void kplusm_anchor(const Grid&, const Catalog&, std::vector<Case>& cases) {
  cases.push_back([] {
    const SpectrumSummary a = summarize(k_plus_m());
    const SpectrumSummary b = summarize(make_poly(make_field(0), 1));
    Checker c(pair_context(a, b));
    const DimReport r = dim_tensor(a, b);
    c.eq("dim_tensor", 3, r.value);
    c.eq("theorem", std::string(label(Theorem::kPullbackGeneral)), std::string(label(r.theorem)));
    c.eq("brewer_poly_dim(A,1)", 3, brewer_poly_dim(a, 1));
    c.eq("chain_enumerate", 3, chain_enumerate(a, b));
    return c.done();
  });
}

void pullback_pair(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  cases.push_back([] {
    const SpectrumSummary a = summarize(k_plus_m());
    Checker c(pair_context(a, a));
    const DimReport r = dim_tensor(a, a);
    c.eq("dim_tensor", 3, r.value);
    c.eq("theorem", std::string(label(Theorem::kPullbackGeneral)), std::string(label(r.theorem)));
    c.eq("pullback formula", 3, thm28_dim(a, a).value);
    c.eq("pullback_pair_dim", 3, pullback_pair_dim(a, a));
    return c.done();
  });
  for (const CatalogEntry* x : pullbacks(cat)) {
    for (const CatalogEntry* y : pullbacks(cat)) {
      const PullbackData& px = *x->summary.pullback;
      const PullbackData& py = *y->summary.pullback;
      if (px.m != px.dim_T || py.m != py.dim_T) continue;
      cases.push_back([x, y] {
        Checker c(pair_context(x->summary, y->summary));
        const int pair = pullback_pair_dim(x->summary, y->summary);
        c.eq("A-oriented pullback formula", pair, thm28_dim(x->summary, y->summary).value);
        c.eq("B-oriented pullback formula", pair, thm28_dim(y->summary, x->summary).value);
        return c.done();
      });
    }
  }
}

void gsct_identity(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  for (const CatalogEntry* pa : pullbacks(cat)) {
    for (const CatalogEntry& eb : cat) {
      cases.push_back([pa, &eb] {
        const SpectrumSummary& a = pa->summary;
        const SpectrumSummary& b = eb.summary;
        Checker c(pair_context(a, b));
        for (StratumId p = 0; p < a.strata.size(); ++p) {
          for (StratumId q = 0; q < b.strata.size(); ++q) {
            const int mixed = mixed_ideal_height(a, b, p, q);
            const int fiber = fiber_dim(a.at(p), b.at(q));
            for (int delta = 0; delta <= fiber; ++delta) {
              const std::string at =
                  "p=" + selector_of(a, p) + " q=" + selector_of(b, q) + " delta=" + num(delta);
              const int ht = thm28_ht(a, b, p, q, delta);
              c.eq(at, mixed + delta, ht);
              if (a.is_af) c.eq(at + " (AF special chain)", sct_height_af(a, b, p, q, delta), ht);
            }
          }
        }
        return c.done();
      });
    }
  }
}

void prop24(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  auto extra = std::make_shared<std::vector<SpectrumSummary>>();
  extra->push_back(summarize(make_af(3, 2, false)));
  extra->push_back(summarize(make_af(4, 3, false)));
  extra->push_back(summarize(make_poly(make_af(2, 2, false), 1)));
  extra->push_back(summarize(make_pullback(make_af(4, 3, false), 2, make_field(1), 2)));
  extra->push_back(summarize(make_pullback(make_af(6, 3, false), 3, make_field(0), 3)));
  extra->push_back(summarize(make_pullback(make_valuation(4, 2), 2, make_af(2, 2, false), 1)));
  auto check = [](const SpectrumSummary& s) {
    Checker c(s.source);
    for (const PairStratum& pair : s.pairs) {
      const Stratum& lo = s.at(pair.lower);
      const Stratum& hi = s.at(pair.upper);
      const std::string at = selector_of(s, pair.lower) + "⊆" + selector_of(s, pair.upper);
      c.holds(at + " heights ordered", lo.height <= hi.height, "lower <= upper",
              num(lo.height) + " > " + num(hi.height));
      if (!pair.exact()) continue;
      const int sum = lo.height + pair.quotient->base;
      c.holds(at + " ht(I)+ht(J/I) <= ht(J)", sum <= hi.height, "<= " + num(hi.height),
              num(sum));
      c.eq(at + " catenarian equality", hi.height, sum);
      if (pair.lower == pair.upper) c.eq(at + " reflexive quotient", HeightFn{0, 0} == *pair.quotient, true);
    }
    return c.done();
  };
  for (const CatalogEntry& e : cat) cases.push_back([&e, check] { return check(e.summary); });
  for (std::size_t i = 0; i < extra->size(); ++i) {
    cases.push_back([extra, i, check] { return check((*extra)[i]); });
  }
}

void oracle_tightness(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  for_catalog_pairs(cat, cases, [](const SpectrumSummary& a, const SpectrumSummary& b) {
    Checker c(pair_context(a, b));
    const int formula = dim_tensor(a, b).value;
    const int chain = chain_enumerate(a, b);
    c.holds("chain <= dim", chain <= formula, "<= " + num(formula), num(chain));
    c.eq("chain == dim", formula, chain);
    return c.done();
  });
}

void valuation_towers(const Grid& grid, const Catalog&, std::vector<Case>& cases) {
  for (int d = 1; d <= grid.val_dim_max(); ++d) {
    for (int t = d; t <= grid.val_td_max(); ++t) {
      cases.push_back([t, d] {
        const SpectrumSummary s = summarize(make_valuation(t, d));
        Checker c(s.source);
        c.eq("dim", d, s.dim);
        c.eq("is_af", true, s.is_af);
        c.eq("strata", static_cast<std::size_t>(d + 1), s.strata.size());
        c.eq("chain spectrum (all strata comparable)",
             static_cast<std::size_t>((d + 1) * (d + 2) / 2), s.pairs.size());
        if (t > d) {
          const SpectrumSummary pb =
              summarize(make_pullback(make_valuation(t, d), d, make_field(0), d - 1));
          c.eq("k+M over the tower: dim", d, pb.dim);
          c.eq("k+M over the tower: td(K:D)", t - d, pb.pullback->td_KD);
        }
        return c.done();
      });
    }
  }
}

void height_oracle(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  for_catalog_pairs(cat, cases, [](const SpectrumSummary& a, const SpectrumSummary& b) {
    Checker c(pair_context(a, b));
    if (!a.pullback && !a.is_af) return c.done();
    const std::vector<int> heights = anchored_heights(a, b);
    for (StratumId p = 0; p < a.strata.size(); ++p) {
      for (StratumId q = 0; q < b.strata.size(); ++q) {
        const int formula =
            a.pullback ? mixed_ideal_height(a, b, p, q) : sct_height_af(a, b, p, q, 0);
        c.eq("p=" + selector_of(a, p) + " q=" + selector_of(b, q), formula,
             heights[p * b.strata.size() + q]);
      }
    }
    return c.done();
  });
}

bool lambda_shaped(const AnchoredChain& chain) {
  for (std::size_t i = 0; i + 1 < chain.anchors.size(); ++i) {
    if (chain.anchors[i].q != 0) return false;
  }
  for (ChainMove m : chain.moves) {
    if (m == ChainMove::kJumpA || m == ChainMove::kJumpB) return false;
  }
  return true;
}

void lambda_suite(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  for_catalog_pairs(cat, cases, [](const SpectrumSummary& a, const SpectrumSummary& b) {
    Checker c(pair_context(a, b));
    for_each_chain(
        a, b,
        [&](const AnchoredChain& chain) {
          if (!lambda_shaped(chain)) return;
          const Anchor last = chain.anchors.back();
          const int bound = lambda_bound(a, b, last.p, last.q, chain.segment_lengths.back());
          c.holds("chain to p=" + selector_of(a, last.p) + " q=" + selector_of(b, last.q),
                  chain.total <= bound, "<= " + num(bound), num(chain.total));
        },
        [](const AnchoredChain& chain) {
          return lambda_shaped(chain) && chain.anchors.back().q == 0;
        });
    return c.done();
  });
}

void brewer_poly(const Grid& grid, const Catalog& cat, std::vector<Case>& cases) {
  for (const CatalogEntry& e : cat) {
    cases.push_back([&e, &grid] {
      Checker c(e.summary.source);
      for (int n = 0; n <= grid.poly_vars_max(); ++n) {
        const SpectrumSummary poly = summarize(make_poly(make_field(0), n));
        c.eq("n=" + num(n), brewer_poly_dim(e.summary, n), dim_tensor(e.summary, poly).value);
      }
      return c.done();
    });
  }
}

void ext_field(const Grid& grid, const Catalog& cat, std::vector<Case>& cases) {
  for (const CatalogEntry& e : cat) {
    cases.push_back([&e, &grid] {
      Checker c(e.summary.source);
      for (int s = 0; s <= grid.af_td_max(); ++s) {
        const SpectrumSummary field = summarize(make_field(s));
        c.eq("s=" + num(s), ext_field_dim(e.summary, s), dim_tensor(e.summary, field).value);
      }
      return c.done();
    });
  }
}

void symmetry(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  for_catalog_pairs(cat, cases, [](const SpectrumSummary& a, const SpectrumSummary& b) {
    Checker c(pair_context(a, b));
    c.eq("dim(A⊗B) == dim(B⊗A)", dim_tensor(a, b).value, dim_tensor(b, a).value);
    return c.done();
  });
}

void specialization(const Grid&, const Catalog& cat, std::vector<Case>& cases) {
  for (const CatalogEntry* pa : pullbacks(cat)) {
    for (const CatalogEntry& eb : cat) {
      cases.push_back([pa, &eb] {
        const SpectrumSummary& a = pa->summary;
        const SpectrumSummary& b = eb.summary;
        Checker c(pair_context(a, b));
        for (StratumId q = 0; q < b.strata.size(); ++q) {
          const int inner = inner_pair_max(a, b, q);
          const int at_q = inner_pair_term(a, b, *b.find_pair(q, q));
          const int at_zero = inner_pair_term(a, b, *b.find_pair(b.zero(), q));
          c.holds("q=" + selector_of(b, q) + " q1=q", inner >= at_q, ">= " + num(at_q),
                  num(inner));
          c.holds("q=" + selector_of(b, q) + " q1=0", inner >= at_zero, ">= " + num(at_zero),
                  num(inner));
        }
        return c.done();
      });
    }
  }
}

// Pairs (smaller, larger) differing in one parameter.
std::vector<std::pair<AlgebraExpr, AlgebraExpr>> monotone_steps(const Grid& grid) {
  std::vector<std::pair<AlgebraExpr, AlgebraExpr>> out;
  for (int t = 0; t < grid.af_td_max(); ++t) {
    for (int d = 0; d <= t; ++d) {
      out.emplace_back(make_af(t, d), make_af(t + 1, d));
      if (d < t) out.emplace_back(make_af(t, d), make_af(t, d + 1));
    }
  }
  for (int d = 1; d <= grid.val_dim_max(); ++d) {
    for (int t = d; t < grid.val_td_max(); ++t) {
      out.emplace_back(make_valuation(t, d), make_valuation(t + 1, d));
    }
  }
  for (int td_k = 1; td_k <= 2; ++td_k) {
    for (int m = 1; m < grid.pullback_m_max(); ++m) {
      out.emplace_back(make_pullback(make_valuation(m + td_k, m), m, make_field(0), m - 1),
                       make_pullback(make_valuation(m + 1 + td_k, m + 1), m + 1, make_field(0), m));
    }
    for (int m = 1; m <= grid.pullback_m_max(); ++m) {
      for (int dim_d = 0; dim_d < td_k; ++dim_d) {
        out.emplace_back(
            make_pullback(make_valuation(m + td_k, m), m, make_af(td_k, dim_d), m - 1),
            make_pullback(make_valuation(m + td_k, m), m, make_af(td_k, dim_d + 1), m - 1));
      }
    }
  }
  for (int outside = 1; outside < 3; ++outside) {
    out.emplace_back(make_pullback(make_af(4, 3), 2, make_field(1), outside),
                     make_pullback(make_af(4, 3), 2, make_field(1), outside + 1));
  }
  return out;
}

void monotonicity(const Grid& grid, const Catalog& cat, std::vector<Case>& cases) {
  auto steps = std::make_shared<std::vector<std::pair<SpectrumSummary, SpectrumSummary>>>();
  for (const auto& [lo, hi] : monotone_steps(grid)) steps->emplace_back(summarize(lo), summarize(hi));
  for (std::size_t i = 0; i < steps->size(); ++i) {
    cases.push_back([steps, i, &cat] {
      const auto& [lo, hi] = (*steps)[i];
      Checker c(lo.source + " -> " + hi.source);
      for (const CatalogEntry& e : cat) {
        const int before = dim_tensor(lo, e.summary).value;
        const int after = dim_tensor(hi, e.summary).value;
        c.holds("against " + e.summary.source, before <= after, ">= " + num(before), num(after));
      }
      return c.done();
    });
  }
}

using SuiteBuilder = void (*)(const Grid&, const Catalog&, std::vector<Case>&);

const std::map<std::string, SuiteBuilder, std::less<>>& builders() {
  static const std::map<std::string, SuiteBuilder, std::less<>> table{
      {"sharp-grid", sharp_grid},
      {"af-agreement", af_agreement},
      {"poly-af-threshold", poly_af_threshold},
      {"kplusm-anchor", kplusm_anchor},
      {"pullback-pair", pullback_pair},
      {"gsct-identity", gsct_identity},
      {"prop24", prop24},
      {"oracle-tightness", oracle_tightness},
      {"valuation-towers", valuation_towers},
      {"height-oracle", height_oracle},
      {"lambda-bound", lambda_suite},
      {"brewer-poly", brewer_poly},
      {"ext-field", ext_field},
      {"symmetry", symmetry},
      {"specialization", specialization},
      {"monotonicity", monotonicity},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "sharp-grid",     "af-agreement",   "poly-af-threshold", "kplusm-anchor",
      "pullback-pair",  "gsct-identity",  "prop24",            "oracle-tightness",
      "valuation-towers", "height-oracle", "lambda-bound",     "brewer-poly",
      "ext-field",      "symmetry",       "specialization",    "monotonicity"};
  return names;
}

CheckReport run_suite(std::string_view name, const Grid& grid, Exec exec) {
  const auto it = builders().find(name);
  if (it == builders().end()) {
    throw PreconditionError("unknown suite '" + std::string(name) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  const Catalog catalog = build_catalog(grid);
  std::vector<Case> cases;
  it->second(grid, catalog, cases);

  CheckReport report;
  report.suite = std::string(name);
  report.cases = cases.size();
  for (CaseResult& r : evaluate(cases, exec)) {
    report.checks += r.checks;
    for (CaseFailure& f : r.failures) report.failures.push_back(std::move(f));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace krulldim
