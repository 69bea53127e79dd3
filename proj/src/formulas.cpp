#include "krulldim/formulas.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "krulldim/errors.hpp"

namespace krulldim {

namespace {

std::string ref(const char* side, const SpectrumSummary& s, StratumId id) {
  return std::string(side) + ":" + selector_of(s, id);
}

std::string pair_ref(const char* side, const SpectrumSummary& s, const PairStratum& p) {
  return std::string(side) + ":(" + selector_of(s, p.lower) + "⊆" + selector_of(s, p.upper) +
         ")";
}

void check_stratum(const SpectrumSummary& s, StratumId id, const char* what) {
  if (id >= s.strata.size()) {
    throw PreconditionError(std::string(what) + " stratum index out of range for " + s.source);
  }
}

void check_delta(const Stratum& p, const Stratum& q, int delta) {
  const int fiber = fiber_dim(p, q);
  if (delta < 0 || delta > fiber) {
    std::ostringstream os;
    os << "delta must lie in 0.." << fiber << " (fiber dimension), got " << delta;
    throw PreconditionError(os.str());
  }
}

const PullbackData& require_pullback(const SpectrumSummary& a) {
  if (!a.pullback) throw PreconditionError(a.source + " is not a pullback");
  if (applicability(a).label == Gate::kUnsupported) {
    throw UnsupportedError("no hypothesis gate admits " + a.source +
                           " (T_M not catenarian, ht(M) > 2 and td(K:D) > 2)");
  }
  return *a.pullback;
}

void require_exact_pairs(const SpectrumSummary& b) {
  if (!b.all_pairs_exact()) {
    throw UnsupportedError("pair-stratum heights of " + b.source +
                           " are unavailable (non-catenarian model)");
  }
}

struct DValue {
  int value = -1;
  std::vector<Witness> witnesses;
};

DValue d_value_detail(int s, int d, const SpectrumSummary& b, const char* side,
                      const std::string& term) {
  if (s < 0 || d < 0 || d > s) {
    std::ostringstream os;
    os << "D(s, d, B) requires 0 <= d <= s, got s=" << s << ", d=" << d;
    throw PreconditionError(os.str());
  }
  DValue out;
  for (StratumId q = 0; q < b.strata.size(); ++q) {
    const Stratum& st = b.strata[q];
    const int v = st.poly_height.eval(s) + std::min(s, d + st.residue_td);
    if (v > out.value) {
      out.value = v;
      out.witnesses.clear();
    }
    if (v == out.value) out.witnesses.push_back(Witness{term, ref(side, b, q), v});
  }
  return out;
}

struct PullbackEval {
  int outside_term = 0;
  int contains_term = 0;
  std::vector<Witness> outside_witnesses;
  std::vector<Witness> contains_witnesses;

  int value() const { return std::max(outside_term, contains_term); }
};

PullbackEval eval_pullback(const SpectrumSummary& a, const SpectrumSummary& b,
                           const char* bside) {
  const PullbackData& pd = require_pullback(a);
  require_exact_pairs(b);

  PullbackEval ev;
  DValue outside = d_value_detail(a.td, pd.outside, b, bside, "outsideM");
  ev.outside_term = outside.value;
  ev.outside_witnesses = std::move(outside.witnesses);

  ev.contains_term = -1;
  for (const PairStratum& pair : b.pairs) {
    const Stratum& q = b.at(pair.upper);
    const int v = pd.m + inner_pair_term(a, b, pair) +
                  std::min(pd.td_D, pd.dim_D + q.residue_td);
    if (v > ev.contains_term) {
      ev.contains_term = v;
      ev.contains_witnesses.clear();
    }
    if (v == ev.contains_term) {
      ev.contains_witnesses.push_back(Witness{"containsM", pair_ref(bside, b, pair), v});
    }
  }
  return ev;
}

void append_gates(DimReport& r, const char* side, const SpectrumSummary& s) {
  for (Gate g : applicability(s).passing) {
    r.gates.push_back(std::string(side) + ":" + std::string(label(g)));
  }
}

[[noreturn]] void disagreement(const std::string& what, int expected, int got) {
  std::ostringstream os;
  os << "formula disagreement: " << what << " gave " << got << ", expected " << expected;
  throw std::logic_error(os.str());
}

void swap_side(std::vector<Witness>& ws) {
  for (Witness& w : ws) {
    if (w.ref.starts_with("B:")) w.ref[0] = 'A';
  }
}

}  // namespace

std::string_view label(Theorem theorem) {
  switch (theorem) {
    case Theorem::kFieldPair: return "Sharp";
    case Theorem::kAfPair: return "Wadsworth3.8";
    case Theorem::kAfGeneral: return "Wadsworth3.7";
    case Theorem::kPullbackPair: return "PullbackPair";
    case Theorem::kPullbackGeneral: return "Thm2.8";
    case Theorem::kUnsupported: return "Unsupported";
  }
  return "Unsupported";
}

std::string_view display_name(Theorem theorem) {
  switch (theorem) {
    case Theorem::kFieldPair: return "Sharp";
    case Theorem::kAfPair: return "Wadsworth 3.8";
    case Theorem::kAfGeneral: return "Wadsworth 3.7";
    case Theorem::kPullbackPair: return "Pullback pair";
    case Theorem::kPullbackGeneral: return "Thm 2.8";
    case Theorem::kUnsupported: return "Unsupported";
  }
  return "Unsupported";
}

std::string_view label(Gate gate) {
  switch (gate) {
    case Gate::kAf: return "AF";
    case Gate::kCatenarian: return "Thm2.8-catenarian";
    case Gate::kSmallMaximalHeight: return "Cor2.9-htM≤2";
    case Gate::kSmallRelativeTd: return "Prop2.10-tdKD≤2";
    case Gate::kUnsupported: return "Unsupported";
  }
  return "Unsupported";
}

int sharp_dim(int s, int t) { return std::min(s, t); }

int d_value(int s, int d, const SpectrumSummary& b) {
  return d_value_detail(s, d, b, "B", "D").value;
}

int af_pair_dim(const SpectrumSummary& a, const SpectrumSummary& b) {
  if (!a.is_af || !b.is_af) {
    throw PreconditionError("af_pair_dim needs two AF-domains, got " + a.source + " and " +
                            b.source);
  }
  return std::min(a.dim + b.td, a.td + b.dim);
}

int pullback_pair_dim(const SpectrumSummary& a1, const SpectrumSummary& a2) {
  for (const SpectrumSummary* s : {&a1, &a2}) {
    if (!s->pullback) throw UnsupportedError(s->source + " is not a pullback");
    if (s->pullback->m != s->pullback->dim_T) {
      throw UnsupportedError("pullback pair formula needs ht(M) = dim(T) for " + s->source);
    }
  }
  const PullbackData& p1 = *a1.pullback;
  const PullbackData& p2 = *a2.pullback;
  const int first = HeightFn{p1.m, p1.td_KD}.eval(a2.td) + d_value(p1.td_D, p1.dim_D, a2);
  const int second = HeightFn{p2.m, p2.td_KD}.eval(a1.td) + d_value(p2.td_D, p2.dim_D, a1);
  return std::max(first, second);
}

int inner_pair_term(const SpectrumSummary& a, const SpectrumSummary& b,
                    const PairStratum& pair) {
  if (!a.pullback) throw PreconditionError(a.source + " is not a pullback");
  if (!pair.exact()) {
    throw UnsupportedError("pair " + selector_of(b, pair.lower) + "⊆" +
                           selector_of(b, pair.upper) + " of " + b.source + " is unavailable");
  }
  const PullbackData& pd = *a.pullback;
  const Stratum& q1 = b.at(pair.lower);
  return q1.poly_height.eval(a.td) + pair.quotient->eval(pd.td_D) +
         std::min(q1.residue_td, pd.td_KD);
}

int inner_pair_max(const SpectrumSummary& a, const SpectrumSummary& b, StratumId q) {
  check_stratum(b, q, "q");
  int best = -1;
  for (std::size_t i : b.pairs_below(q)) best = std::max(best, inner_pair_term(a, b, b.pairs[i]));
  return best;
}

DimReport thm28_dim(const SpectrumSummary& a, const SpectrumSummary& b) {
  PullbackEval ev = eval_pullback(a, b, "B");
  DimReport r;
  r.value = ev.value();
  r.theorem = Theorem::kPullbackGeneral;
  r.terms = {{"outsideM", ev.outside_term}, {"containsM", ev.contains_term}};
  if (ev.outside_term == r.value) r.witnesses = ev.outside_witnesses;
  if (ev.contains_term == r.value) {
    r.witnesses.insert(r.witnesses.end(), ev.contains_witnesses.begin(),
                       ev.contains_witnesses.end());
  }
  append_gates(r, "A", a);
  return r;
}

int fiber_dim(const Stratum& p, const Stratum& q) { return std::min(p.residue_td, q.residue_td); }

int thm28_ht(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p, StratumId q,
             int delta) {
  require_pullback(a);
  check_stratum(a, p, "p");
  check_stratum(b, q, "q");
  const Stratum& ps = a.at(p);
  const Stratum& qs = b.at(q);
  check_delta(ps, qs, delta);
  if (ps.kind == StratumKind::kContainsM) {
    return ps.height + inner_pair_max(a, b, q) + delta;
  }
  return ps.height + qs.poly_height.eval(a.td) + delta;
}

int mixed_ideal_height(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p,
                       StratumId q) {
  return thm28_ht(a, b, p, q, 0);
}

int sct_height_af(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p, StratumId q,
                  int delta) {
  if (!a.is_af) throw PreconditionError(a.source + " is not an AF-domain");
  check_stratum(a, p, "p");
  check_stratum(b, q, "q");
  check_delta(a.at(p), b.at(q), delta);
  return b.at(q).poly_height.eval(a.td) + a.at(p).height + delta;
}

int lambda_bound(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p, StratumId q,
                 int delta) {
  check_stratum(a, p, "p");
  check_stratum(b, q, "q");
  const int residue = a.at(p).residue_td;
  return a.td - residue + b.at(q).poly_height.eval(residue) + delta;
}

Applicability applicability(const SpectrumSummary& a) {
  Applicability out;
  if (a.is_af) {
    out.label = Gate::kAf;
    out.passing = {Gate::kAf};
    out.notes = "altitude formula holds on every stratum";
    return out;
  }
  if (!a.pullback) {
    out.notes = "not AF and not a pullback";
    return out;
  }
  const PullbackData& pd = *a.pullback;
  if (pd.t_catenarian) out.passing.push_back(Gate::kCatenarian);
  if (pd.m <= 2) out.passing.push_back(Gate::kSmallMaximalHeight);
  if (pd.td_KD <= 2) out.passing.push_back(Gate::kSmallRelativeTd);
  if (out.passing.empty()) {
    out.notes = "T_M not catenarian, ht(M) > 2 and td(K:D) > 2";
    return out;
  }
  out.label = out.passing.front();
  std::ostringstream os;
  os << "ht(M)=" << pd.m << ", td(K:D)=" << pd.td_KD
     << (pd.t_catenarian ? ", T catenarian" : ", T not catenarian");
  out.notes = os.str();
  return out;
}

DimReport dim_tensor(const SpectrumSummary& a, const SpectrumSummary& b) {
  const bool field_a = a.is_af && a.dim == 0;
  const bool field_b = b.is_af && b.dim == 0;

  if (field_a && field_b) {
    DimReport r;
    r.value = sharp_dim(a.td, b.td);
    r.theorem = Theorem::kFieldPair;
    r.terms = {{"td(A)", a.td}, {"td(B)", b.td}};
    r.witnesses = {{"min", a.td <= b.td ? "A:0" : "B:0", r.value}};
    append_gates(r, "A", a);
    append_gates(r, "B", b);
    r.dispatch = {"both factors are fields: min of transcendence degrees"};
    return r;
  }

  if (a.is_af && b.is_af) {
    DimReport r;
    r.value = af_pair_dim(a, b);
    r.theorem = Theorem::kAfPair;
    DValue forward = d_value_detail(a.td, a.dim, b, "B", "D(td(A),dim(A),B)");
    DValue backward = d_value_detail(b.td, b.dim, a, "A", "D(td(B),dim(B),A)");
    if (forward.value != r.value) disagreement("D(td(A),dim(A),B)", r.value, forward.value);
    if (backward.value != r.value) disagreement("D(td(B),dim(B),A)", r.value, backward.value);
    r.terms = {{"dim(A)+td(B)", a.dim + b.td},
               {"td(A)+dim(B)", a.td + b.dim},
               {"D(td(A),dim(A),B)", forward.value},
               {"D(td(B),dim(B),A)", backward.value}};
    r.witnesses = std::move(forward.witnesses);
    append_gates(r, "A", a);
    append_gates(r, "B", b);
    r.dispatch = {"both factors are AF-domains: min formula",
                  "cross-checked against D(td,dim,.) in both orientations"};
    return r;
  }

  const bool gated_a = !a.is_af && a.pullback && applicability(a).label != Gate::kUnsupported;
  const bool gated_b = !b.is_af && b.pullback && applicability(b).label != Gate::kUnsupported;

  if (!gated_a && !gated_b) {
    if (a.is_af || b.is_af) {
      const bool af_first = a.is_af;
      const SpectrumSummary& af = af_first ? a : b;
      const SpectrumSummary& other = af_first ? b : a;
      DValue dv = d_value_detail(af.td, af.dim, other, af_first ? "B" : "A", "D(td,dim,.)");
      DimReport r;
      r.value = dv.value;
      r.theorem = Theorem::kAfGeneral;
      r.terms = {{"D(td,dim,.)", dv.value}};
      r.witnesses = std::move(dv.witnesses);
      append_gates(r, "A", a);
      append_gates(r, "B", b);
      r.dispatch = {std::string("AF factor ") + (af_first ? "A" : "B") +
                    " against an ungated algebra: D(td, dim, .)"};
      return r;
    }
    throw UnsupportedError("no formula applies to " + a.source + " ⊗ " + b.source);
  }

  DimReport r;
  r.theorem = Theorem::kPullbackGeneral;
  std::vector<Term> checks;
  if (gated_a) {
    PullbackEval ev = eval_pullback(a, b, "B");
    r.value = ev.value();
    r.terms = {{"outsideM", ev.outside_term}, {"containsM", ev.contains_term}};
    if (ev.outside_term == r.value) r.witnesses = ev.outside_witnesses;
    if (ev.contains_term == r.value) {
      r.witnesses.insert(r.witnesses.end(), ev.contains_witnesses.begin(),
                         ev.contains_witnesses.end());
    }
    r.dispatch.push_back("A is a gated pullback: outsideM/containsM formula with A as pullback");
  }
  if (gated_b) {
    PullbackEval ev = eval_pullback(b, a, "B");
    if (!gated_a) {
      r.value = ev.value();
      r.terms = {{"outsideM", ev.outside_term}, {"containsM", ev.contains_term}};
      if (ev.outside_term == r.value) r.witnesses = ev.outside_witnesses;
      if (ev.contains_term == r.value) {
        r.witnesses.insert(r.witnesses.end(), ev.contains_witnesses.begin(),
                           ev.contains_witnesses.end());
      }
      swap_side(r.witnesses);
      r.dispatch.push_back(
          "B is a gated pullback: outsideM/containsM formula with B as pullback");
    } else {
      if (ev.value() != r.value) disagreement("reverse orientation", r.value, ev.value());
      checks.push_back({"reverse-orientation", ev.value()});
      r.dispatch.push_back("cross-checked with B as pullback");
    }
  }
  if (a.is_af || b.is_af) {
    const SpectrumSummary& af = a.is_af ? a : b;
    const SpectrumSummary& other = a.is_af ? b : a;
    const int general = d_value(af.td, af.dim, other);
    if (general != r.value) disagreement("D(td,dim,.) with AF factor", r.value, general);
    checks.push_back({"af-general-check", general});
    r.dispatch.push_back("cross-checked against D(td, dim, .) with the AF factor");
  }
  if (a.pullback && b.pullback && a.pullback->m == a.pullback->dim_T &&
      b.pullback->m == b.pullback->dim_T) {
    const int pair = pullback_pair_dim(a, b);
    if (pair != r.value) disagreement("pullback pair formula", r.value, pair);
    checks.push_back({"pullback-pair", pair});
    r.dispatch.push_back("cross-checked against the pullback pair formula");
  }
  r.terms.insert(r.terms.end(), checks.begin(), checks.end());
  append_gates(r, "A", a);
  append_gates(r, "B", b);
  return r;
}

DimReport dim_tensor(const AlgebraExpr& a, const AlgebraExpr& b) {
  return dim_tensor(summarize(a), summarize(b));
}

HeightReport height_tensor(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p,
                           StratumId q, int delta) {
  check_stratum(a, p, "p");
  check_stratum(b, q, "q");
  HeightReport r;
  r.fiber = fiber_dim(a.at(p), b.at(q));
  if (a.is_af) {
    r.value = sct_height_af(a, b, p, q, delta);
    r.formula = "SCT";
  } else if (a.pullback && applicability(a).label != Gate::kUnsupported) {
    r.value = thm28_ht(a, b, p, q, delta);
    r.formula = std::string(display_name(Theorem::kPullbackGeneral));
  } else if (b.is_af) {
    r.value = sct_height_af(b, a, q, p, delta);
    r.formula = "SCT";
  } else {
    throw UnsupportedError("no height formula applies to " + a.source + " ⊗ " + b.source);
  }
  return r;
}

}  // namespace krulldim
