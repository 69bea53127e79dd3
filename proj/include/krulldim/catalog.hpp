#pragma once

#include <string>
#include <vector>

#include "krulldim/expr.hpp"
#include "krulldim/spectrum.hpp"

namespace krulldim {

/// Size knob for the built-in algebra catalog and the check grids.
/// With the default scale 4: fields and AF grids up to td 4, valuation
/// towers up to rank 3 and td 5, pullbacks with ht(M) <= 3, td(K:D) <= 2,
/// field pairs up to td 6.
struct Grid {
  int scale = 4;

  int af_td_max() const { return scale; }
  int val_td_max() const { return scale + 1; }
  int val_dim_max() const { return scale > 1 ? scale - 1 : 1; }
  int pullback_m_max() const { return scale > 1 ? scale - 1 : 1; }
  int td_kd_max() const { return 2; }
  int field_td_max() const { return scale + 2; }
  int poly_vars_max() const { return scale; }

  /// Reads KRULLDIM_GRID_MAX; falls back to the default scale.
  static Grid from_env();
};

struct CatalogEntry {
  AlgebraExpr expr;
  SpectrumSummary summary;
};

/// Deterministically ordered catalog: fields, AF grid, polynomial rings,
/// valuation towers, D+M pullbacks over valuation and AF tops.
std::vector<CatalogEntry> build_catalog(const Grid& grid);

/// The classical k + M pullback inside k(y)[x]_(x).
AlgebraExpr k_plus_m();

}  // namespace krulldim
