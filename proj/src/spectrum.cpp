#include "krulldim/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <type_traits>

#include "krulldim/errors.hpp"

namespace krulldim {

namespace {

// Shape data of an expression that compiles to an AF-domain.
struct AfProfile {
  int td = 0;
  int dim = 0;
  bool catenarian = true;
  bool chain = false;  // spectrum totally ordered, unique maximal ideal
};

std::string fmt(const char* what, int value) {
  std::ostringstream os;
  os << what << "=" << value;
  return os.str();
}

void require(bool ok, const char* invariant, const std::string& detail) {
  if (!ok) throw ConstraintError(invariant, detail);
}

AfProfile af_profile(const AlgebraExpr& expr, const char* role);

AfProfile af_profile(const AlgebraExpr& expr, const char* role) {
  return std::visit(
      [role](const auto& node) -> AfProfile {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Field>) {
          require(node.td >= 0, "field.td_nonneg", fmt("td", node.td));
          return {node.td, 0, true, true};
        } else if constexpr (std::is_same_v<T, AfDomain>) {
          require(node.td >= 0 && node.dim >= 0, "af.nonneg",
                  fmt("td", node.td) + ", " + fmt("dim", node.dim));
          require(node.dim <= node.td, "af.dim_le_td",
                  "dim <= td (" + fmt("dim", node.dim) + ", " + fmt("td", node.td) + ")");
          return {node.td, node.dim, node.catenarian, false};
        } else if constexpr (std::is_same_v<T, Valuation>) {
          require(node.dim >= 1, "val.rank_positive", "1 <= dim (" + fmt("dim", node.dim) + ")");
          require(node.dim <= node.td, "val.dim_le_td",
                  "dim <= td (" + fmt("dim", node.dim) + ", " + fmt("td", node.td) + ")");
          return {node.td, node.dim, true, true};
        } else if constexpr (std::is_same_v<T, PolyRing>) {
          require(node.vars >= 0, "poly.vars_nonneg", fmt("vars", node.vars));
          require(!is_pullback(*node.base), "poly.base_is_af",
                  "polynomial rings over a pullback are not modeled");
          AfProfile base = af_profile(*node.base, "poly base");
          if (node.vars == 0) return base;
          return {base.td + node.vars, base.dim + node.vars, base.catenarian, false};
        } else {
          throw ConstraintError(std::string("pullback.") + role + "_is_af",
                                std::string(role) +
                                    " must be an AF constructor (field, af, val, poly); "
                                    "a nested pullback is never AF");
        }
      },
      expr.node);
}

HeightFn flat(int h) { return HeightFn{h, 0}; }

SpectrumSummary af_summary(const AfProfile& p, const std::string& source) {
  SpectrumSummary s;
  s.source = source;
  s.td = p.td;
  s.dim = p.dim;
  for (int h = 0; h <= p.dim; ++h) {
    s.strata.push_back(Stratum{h, p.td - h, flat(h), StratumKind::kPlain, h,
                               source + ":h=" + std::to_string(h)});
  }
  for (int lo = 0; lo <= p.dim; ++lo) {
    for (int hi = lo; hi <= p.dim; ++hi) {
      PairStratum pair{static_cast<StratumId>(lo), static_cast<StratumId>(hi), std::nullopt};
      if (p.catenarian || lo == 0 || lo == hi) pair.quotient = flat(hi - lo);
      s.pairs.push_back(pair);
    }
  }
  return s;
}

SpectrumSummary pullback_summary(const Pullback& pb, const std::string& source) {
  const AfProfile top = af_profile(*pb.top, "T");
  const AfProfile bottom_profile = af_profile(*pb.bottom, "D");
  const int td_k = top.td - pb.m;

  require(pb.m >= 1, "pullback.m_positive",
          "M must be a nonzero maximal ideal (" + fmt("m", pb.m) + ")");
  require(pb.m <= top.dim, "pullback.m_le_dim_T",
          "m <= dim(T) (" + fmt("m", pb.m) + ", " + fmt("dim(T)", top.dim) + ")");
  require(bottom_profile.td <= td_k, "pullback.td_D_le_td_K",
          "td(D) <= td(K) = td(T) - m (" + fmt("td(D)", bottom_profile.td) + ", " +
              fmt("td(K)", td_k) + ")");
  require(pb.outside >= pb.m - 1, "pullback.outside_ge_m_minus_1",
          "outside >= m - 1 (" + fmt("outside", pb.outside) + ", " + fmt("m", pb.m) + ")");
  require(pb.outside <= top.dim, "pullback.outside_le_dim_T",
          "outside <= dim(T) (" + fmt("outside", pb.outside) + ", " + fmt("dim(T)", top.dim) +
              ")");
  if (top.chain && top.dim >= 1) {
    require(pb.m == top.dim, "pullback.valuation_M_is_maximal",
            "a chain-spectrum T has a unique maximal ideal of height dim(T) (" +
                fmt("m", pb.m) + ", " + fmt("dim(T)", top.dim) + ")");
    require(pb.outside == pb.m - 1, "pullback.valuation_outside_forced",
            "outside = m - 1 for a chain-spectrum T (" + fmt("outside", pb.outside) + ")");
  }

  const SpectrumSummary d = af_summary(bottom_profile, to_string(*pb.bottom));
  const int td_kd = td_k - d.td;

  SpectrumSummary s;
  s.source = source;
  s.td = top.td;
  s.pullback = PullbackData{pb.m,  td_k,        d.td,           d.dim,
                            td_kd, pb.outside,  top.dim,        top.catenarian};

  const int out_top = std::max(pb.m - 1, pb.outside);
  for (int h = 0; h <= out_top; ++h) {
    s.strata.push_back(Stratum{h, top.td - h, flat(h), StratumKind::kOutsideM, h,
                               source + ":out:h=" + std::to_string(h)});
  }
  const auto in_first = static_cast<StratumId>(s.strata.size());
  for (const Stratum& ds : d.strata) {
    s.strata.push_back(Stratum{pb.m + ds.height, ds.residue_td,
                               HeightFn{pb.m + ds.height, td_kd}, StratumKind::kContainsM,
                               ds.height, source + ":in:" + ds.provenance});
  }

  for (int lo = 0; lo <= out_top; ++lo) {
    for (int hi = lo; hi <= out_top; ++hi) {
      PairStratum pair{static_cast<StratumId>(lo), static_cast<StratumId>(hi), std::nullopt};
      if (top.catenarian || lo == 0 || lo == hi) pair.quotient = flat(hi - lo);
      s.pairs.push_back(pair);
    }
    if (lo > pb.m - 1) continue;  // only primes strictly inside M lie under M
    for (StratumId e = 0; e < d.strata.size(); ++e) {
      PairStratum pair{static_cast<StratumId>(lo), in_first + e, std::nullopt};
      const PairStratum* dpair = d.find_pair(d.zero(), e);
      if ((top.catenarian || lo == 0) && dpair && dpair->exact()) {
        pair.quotient = HeightFn{pb.m - lo + d.strata[e].height, td_kd};
      }
      s.pairs.push_back(pair);
    }
  }
  for (const PairStratum& dp : d.pairs) {
    s.pairs.push_back(PairStratum{in_first + dp.lower, in_first + dp.upper, dp.quotient});
  }
  return s;
}

void finish(SpectrumSummary& s) {
  s.dim = 0;
  bool af = true;
  for (const Stratum& st : s.strata) {
    s.dim = std::max(s.dim, st.height);
    if (st.height + st.residue_td != s.td || st.poly_height.cap != 0) af = false;
  }
  s.is_af = af;
  s.is_domain = true;
}

}  // namespace

std::string_view to_string(StratumKind kind) {
  switch (kind) {
    case StratumKind::kPlain: return "plain";
    case StratumKind::kOutsideM: return "outsideM";
    case StratumKind::kContainsM: return "containsM";
  }
  return "plain";
}

const PairStratum* SpectrumSummary::find_pair(StratumId lower, StratumId upper) const {
  for (const PairStratum& p : pairs) {
    if (p.lower == lower && p.upper == upper) return &p;
  }
  return nullptr;
}

std::vector<std::size_t> SpectrumSummary::pairs_below(StratumId upper) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].upper == upper) out.push_back(i);
  }
  return out;
}

bool SpectrumSummary::all_pairs_exact() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairStratum& p) { return p.exact(); });
}

SpectrumSummary summarize(const AlgebraExpr& expr) {
  SpectrumSummary s;
  if (const auto* pb = std::get_if<Pullback>(&expr.node)) {
    s = pullback_summary(*pb, to_string(expr));
  } else {
    s = af_summary(af_profile(expr, "algebra"), to_string(expr));
  }
  finish(s);
  return s;
}

void validate(const AlgebraExpr& expr) { (void)summarize(expr); }

bool is_af_poly(const SpectrumSummary& summary, int n) {
  return std::all_of(summary.strata.begin(), summary.strata.end(), [&](const Stratum& st) {
    return st.poly_height.eval(n) + st.residue_td == summary.td;
  });
}

std::string selector_of(const SpectrumSummary& summary, StratumId id) {
  const Stratum& st = summary.at(id);
  switch (st.kind) {
    case StratumKind::kContainsM:
      return st.label == 0 ? "M" : "in:" + std::to_string(st.label);
    case StratumKind::kOutsideM:
      return st.label == 0 ? "0" : "out:" + std::to_string(st.label);
    case StratumKind::kPlain:
      if (st.height == 0) return "0";
      if (st.height == summary.dim) return "M";
      return "out:" + std::to_string(st.height);
  }
  return "?";
}

StratumId resolve_selector(const SpectrumSummary& summary, std::string_view text) {
  auto fail = [&](const std::string& why) -> StratumId {
    throw PreconditionError("stratum selector '" + std::string(text) + "': " + why);
  };
  auto find = [&](StratumKind kind, auto pred) -> StratumId {
    for (StratumId i = 0; i < summary.strata.size(); ++i) {
      if (summary.strata[i].kind == kind && pred(summary.strata[i])) return i;
    }
    return fail("no such stratum in " + summary.source);
  };
  auto number_after = [&](std::size_t prefix) -> int {
    int value = -1;
    const char* first = text.data() + prefix;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) fail("expected a natural number");
    return value;
  };

  const bool pb = summary.pullback.has_value();
  if (text == "0") return summary.zero();
  if (text == "M") {
    if (pb) return find(StratumKind::kContainsM, [](const Stratum& s) { return s.label == 0; });
    return find(StratumKind::kPlain, [&](const Stratum& s) { return s.height == summary.dim; });
  }
  if (text.starts_with("out:")) {
    const int h = number_after(4);
    if (pb) return find(StratumKind::kOutsideM, [h](const Stratum& s) { return s.label == h; });
    return find(StratumKind::kPlain, [h](const Stratum& s) { return s.height == h; });
  }
  if (text.starts_with("in:")) {
    const int e = number_after(3);
    if (!pb) return fail("'in:' selectors apply to pullbacks only");
    return find(StratumKind::kContainsM, [e](const Stratum& s) { return s.label == e; });
  }
  return fail("expected one of 0, M, out:<h>, in:<e>");
}

}  // namespace krulldim
