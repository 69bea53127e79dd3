#include "krulldim/json_report.hpp"

namespace krulldim {

namespace {

Json height_fn(const HeightFn& f) { return Json{{"base", f.base}, {"cap", f.cap}}; }

}  // namespace

Json to_json(const DimReport& report) {
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    witnesses.push_back({{"term", w.term}, {"ref", w.ref}, {"value", w.value}});
  }
  Json terms = Json::array();
  for (const Term& t : report.terms) terms.push_back({{"label", t.label}, {"value", t.value}});
  Json out;
  out["value"] = report.value;
  out["theorem"] = std::string(label(report.theorem));
  out["witnesses"] = std::move(witnesses);
  out["terms"] = std::move(terms);
  out["gates"] = report.gates;
  return out;
}

Json to_json(const SpectrumSummary& summary) {
  Json strata = Json::array();
  for (StratumId id = 0; id < summary.strata.size(); ++id) {
    const Stratum& s = summary.at(id);
    strata.push_back({{"id", id},
                      {"selector", selector_of(summary, id)},
                      {"kind", std::string(to_string(s.kind))},
                      {"height", s.height},
                      {"residue_td", s.residue_td},
                      {"poly_height", height_fn(s.poly_height)},
                      {"provenance", s.provenance}});
  }
  Json pairs = Json::array();
  for (const PairStratum& p : summary.pairs) {
    pairs.push_back({{"lower", p.lower},
                     {"upper", p.upper},
                     {"quotient", p.quotient ? height_fn(*p.quotient) : Json(nullptr)}});
  }
  Json pullback = nullptr;
  if (summary.pullback) {
    const PullbackData& d = *summary.pullback;
    pullback = {{"m", d.m},         {"td_K", d.td_K},       {"td_D", d.td_D},
                {"dim_D", d.dim_D}, {"td_KD", d.td_KD},     {"outside", d.outside},
                {"dim_T", d.dim_T}, {"t_catenarian", d.t_catenarian}};
  }
  Json out;
  out["strata"] = std::move(strata);
  out["pairs"] = std::move(pairs);
  out["flags"] = {{"source", summary.source},
                  {"td", summary.td},
                  {"dim", summary.dim},
                  {"is_af", summary.is_af},
                  {"is_domain", summary.is_domain},
                  {"pullback", std::move(pullback)}};
  return out;
}

Json to_json(const CheckReport& report) {
  Json failures = Json::array();
  for (const CaseFailure& f : report.failures) {
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  }
  Json out;
  out["suite"] = report.suite;
  out["cases"] = report.cases;
  out["checks"] = report.checks;
  out["failures"] = std::move(failures);
  out["passed"] = report.passed();
  return out;
}

Json to_json(const HeightReport& report) {
  Json out;
  out["value"] = report.value;
  out["formula"] = report.formula;
  out["fiber"] = report.fiber;
  return out;
}

}  // namespace krulldim
