#include "krulldim/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace krulldim {

namespace {

// AF choices for D with transcendence degree td.
std::vector<AlgebraExpr> bottoms(int td) {
  std::vector<AlgebraExpr> out{make_field(td)};
  for (int d = 1; d <= td; ++d) out.push_back(make_af(td, d));
  return out;
}

}  // namespace

Grid Grid::from_env() {
  Grid g;
  if (const char* raw = std::getenv("KRULLDIM_GRID_MAX")) {
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && v >= 1 && v <= 8) g.scale = static_cast<int>(v);
  }
  return g;
}

AlgebraExpr k_plus_m() { return make_pullback(make_valuation(2, 1), 1, make_field(0), 0); }

std::vector<CatalogEntry> build_catalog(const Grid& grid) {
  std::vector<AlgebraExpr> exprs;
  for (int t = 0; t <= grid.af_td_max(); ++t) exprs.push_back(make_field(t));
  for (int t = 1; t <= grid.af_td_max(); ++t) {
    for (int d = 1; d <= t; ++d) exprs.push_back(make_af(t, d));
  }
  exprs.push_back(make_poly(make_field(1), 1));
  exprs.push_back(make_poly(make_field(0), 2));
  exprs.push_back(make_poly(make_valuation(2, 1), 1));
  for (int d = 1; d <= grid.val_dim_max(); ++d) {
    for (int t = d + 1; t <= grid.val_td_max(); ++t) exprs.push_back(make_valuation(t, d));
  }

  // Pullbacks over valuation tops: the chain case, ht(M) = dim(T).
  for (int m = 1; m <= grid.pullback_m_max(); ++m) {
    for (int td_k = 1; td_k <= 2; ++td_k) {
      for (int td_d = std::max(0, td_k - grid.td_kd_max()); td_d <= td_k; ++td_d) {
        for (AlgebraExpr& d : bottoms(td_d)) {
          exprs.push_back(make_pullback(make_valuation(m + td_k, m), m, std::move(d), m - 1));
        }
      }
    }
  }

  // Pullbacks over non-local AF tops with every admissible `outside`.
  const int af_top_max = std::min(grid.af_td_max(), 4);
  for (int t = 2; t <= af_top_max; ++t) {
    for (int dim_t = 1; dim_t < t; ++dim_t) {
      for (int m = 1; m <= std::min(dim_t, grid.pullback_m_max()); ++m) {
        const int td_k = t - m;
        for (int outside = m - 1; outside <= dim_t; ++outside) {
          for (int td_d = std::max(0, td_k - grid.td_kd_max()); td_d <= std::min(td_k, 1);
               ++td_d) {
            exprs.push_back(make_pullback(make_af(t, dim_t), m, make_field(td_d), outside));
          }
        }
      }
    }
  }
  exprs.push_back(make_pullback(make_poly(make_field(1), 1), 1, make_field(0), 1));

  std::vector<CatalogEntry> out;
  out.reserve(exprs.size());
  for (AlgebraExpr& e : exprs) {
    SpectrumSummary s = summarize(e);
    out.push_back(CatalogEntry{std::move(e), std::move(s)});
  }
  return out;
}

}  // namespace krulldim
