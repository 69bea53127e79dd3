#include "krulldim/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <string>
#include <vector>

#include "krulldim/catalog.hpp"
#include "krulldim/errors.hpp"
#include "krulldim/formulas.hpp"
#include "krulldim/json_report.hpp"
#include "krulldim/parser.hpp"
#include "krulldim/suites.hpp"

namespace krulldim {

namespace {

// Raised once a diagnostic has been written; carries the exit status.
struct Abort {
  int code;
};

struct Options {
  bool json = false;
  std::vector<std::string> exprs;
  std::string p = "0";
  std::string q = "0";
  int delta = 0;
  std::string suite;
  bool serial = false;
};

void caret(std::ostream& err, const std::string& text, std::size_t begin, std::size_t end) {
  err << "  " << text << "\n  " << std::string(begin, ' ')
      << std::string(end > begin ? end - begin : 1, '^') << "\n";
}

SpectrumSummary load(const std::string& text, std::ostream& err) {
  try {
    return summarize(parse_expr(text));
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    caret(err, text, e.position(), e.position() + 1);
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
    if (e.span()) caret(err, text, e.span()->begin, e.span()->end);
  }
  throw Abort{kExitInputError};
}

std::string headline(int value, std::string_view name) {
  return std::to_string(value) + " (" + std::string(name) + ")";
}

void print_spectrum(std::ostream& out, const SpectrumSummary& s) {
  out << s.source << "\n";
  out << "  td " << s.td << ", dim " << s.dim << ", AF " << (s.is_af ? "yes" : "no");
  if (s.pullback) {
    const PullbackData& d = *s.pullback;
    out << ", ht(M) " << d.m << ", td(K:D) " << d.td_KD << ", outside " << d.outside;
  }
  out << "\n  strata:\n";
  for (StratumId id = 0; id < s.strata.size(); ++id) {
    const Stratum& st = s.at(id);
    out << "    " << std::left << std::setw(7) << selector_of(s, id) << " ht " << st.height
        << "  td(A/p) " << st.residue_td << "  ht(p[n]) = " << st.poly_height.base
        << " + min(n, " << st.poly_height.cap << ")  " << st.provenance << "\n";
  }
  out << "  pairs:\n";
  for (const PairStratum& pair : s.pairs) {
    out << "    " << selector_of(s, pair.lower) << " ⊆ " << selector_of(s, pair.upper) << "  ";
    if (pair.quotient) {
      out << "ht((q/p)[n]) = " << pair.quotient->base << " + min(n, " << pair.quotient->cap
          << ")\n";
    } else {
      out << "unavailable\n";
    }
  }
}

int cmd_dim(const Options& o, std::ostream& out, std::ostream& err) {
  const SpectrumSummary a = load(o.exprs[0], err);
  const SpectrumSummary b = load(o.exprs[1], err);
  const DimReport r = dim_tensor(a, b);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << headline(r.value, display_name(r.theorem)) << "\n";
  }
  return kExitOk;
}

int cmd_ht(const Options& o, std::ostream& out, std::ostream& err) {
  const SpectrumSummary a = load(o.exprs[0], err);
  const SpectrumSummary b = load(o.exprs[1], err);
  const StratumId p = resolve_selector(a, o.p);
  const StratumId q = resolve_selector(b, o.q);
  const HeightReport r = height_tensor(a, b, p, q, o.delta);
  if (o.json) {
    Json j = to_json(r);
    j["p"] = selector_of(a, p);
    j["q"] = selector_of(b, q);
    j["delta"] = o.delta;
    out << j.dump(2) << "\n";
  } else {
    out << headline(r.value, r.formula) << "\n";
  }
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
  const SpectrumSummary s = load(o.exprs[0], err);
  if (o.json) {
    out << to_json(s).dump(2) << "\n";
  } else {
    print_spectrum(out, s);
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(o.suite);
  }
  const Grid grid = Grid::from_env();
  const Exec exec = o.serial ? Exec::kSerial : Exec::kParallel;
  bool passed = true;
  Json suites = Json::array();
  for (const std::string& name : names) {
    const CheckReport r = run_suite(name, grid, exec);
    passed = passed && r.passed();
    if (o.json) {
      suites.push_back(to_json(r));
      continue;
    }
    out << r.suite << ": " << r.cases << " cases, " << r.checks << " checks, " << r.failures.size() << " failures ("
        << std::fixed << std::setprecision(3) << r.seconds << "s)\n";
    for (const CaseFailure& f : r.failures) {
      out << "  FAIL " << f.inputs << ": expected " << f.expected << ", got " << f.actual << "\n";
    }
  }
  if (o.json) {
    if (names.size() == 1) {
      out << suites[0].dump(2) << "\n";
    } else {
      Json j;
      j["suites"] = std::move(suites);
      j["passed"] = passed;
      out << j.dump(2) << "\n";
    }
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int cmd_explain(const Options& o, std::ostream& out, std::ostream& err) {
  const SpectrumSummary a = load(o.exprs[0], err);
  const SpectrumSummary b = load(o.exprs[1], err);
  const Applicability app_a = applicability(a);
  const Applicability app_b = applicability(b);
  const DimReport r = dim_tensor(a, b);
  if (o.json) {
    auto side = [](const SpectrumSummary& s, const Applicability& app) {
      std::vector<std::string> passing;
      for (Gate g : app.passing) passing.emplace_back(label(g));
      Json j;
      j["source"] = s.source;
      j["td"] = s.td;
      j["dim"] = s.dim;
      j["gate"] = std::string(label(app.label));
      j["passing"] = passing;
      j["notes"] = app.notes;
      return j;
    };
    Json j;
    j["A"] = side(a, app_a);
    j["B"] = side(b, app_b);
    j["dispatch"] = r.dispatch;
    j["report"] = to_json(r);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  auto side = [&out](const char* name, const SpectrumSummary& s, const Applicability& app) {
    out << name << " = " << s.source << "  (td " << s.td << ", dim " << s.dim << ")\n";
    out << "  gate " << label(app.label);
    if (!app.notes.empty()) out << ": " << app.notes;
    out << "\n";
  };
  side("A", a, app_a);
  side("B", b, app_b);
  out << "dispatch:\n";
  for (const std::string& step : r.dispatch) out << "  " << step << "\n";
  out << "passing gates:\n";
  for (const std::string& g : r.gates) out << "  " << g << "\n";
  out << "terms:\n";
  for (const Term& t : r.terms) out << "  " << t.label << " = " << t.value << "\n";
  out << "maximizing witnesses:\n";
  for (const Witness& w : r.witnesses) {
    out << "  " << w.term << " at " << w.ref << " = " << w.value << "\n";
  }
  out << "dim = " << headline(r.value, display_name(r.theorem)) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Krull dimension and prime heights of tensor products of k-algebras",
               "krulldim"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&o](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "Machine-readable output");
  };
  auto add_pair = [&o](CLI::App* cmd) {
    cmd->add_option("A", o.exprs, "Algebra expressions A and B")->required()->expected(2);
  };

  CLI::App* dim = app.add_subcommand("dim", "dim(A ⊗ B) with the dispatching formula");
  add_pair(dim);
  add_json(dim);

  CLI::App* ht = app.add_subcommand("ht", "Height of a prime of A ⊗ B over (p, q)");
  add_pair(ht);
  ht->add_option("--p", o.p, "Stratum of A: 0, M, out:<h>, in:<e>")->required();
  ht->add_option("--q", o.q, "Stratum of B: 0, M, out:<h>, in:<e>")->required();
  ht->add_option("--delta", o.delta, "Height of P over p⊗B + A⊗q")->check(CLI::NonNegativeNumber);
  add_json(ht);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Stratified model of Spec(A)");
  spectrum->add_option("A", o.exprs, "Algebra expression")->required()->expected(1);
  add_json(spectrum);

  CLI::App* check = app.add_subcommand("check", "Run a verification suite, or all of them");
  check->add_option("suite", o.suite, "Suite name or 'all'")->required();
  check->add_flag("--serial", o.serial, "Evaluate cases on one thread");
  add_json(check);

  CLI::App* explain =
      app.add_subcommand("explain", "Dispatch path, gates and witnesses behind dim(A ⊗ B)");
  add_pair(explain);
  add_json(explain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (dim->parsed()) return cmd_dim(o, out, err);
    if (ht->parsed()) return cmd_ht(o, out, err);
    if (spectrum->parsed()) return cmd_spectrum(o, out, err);
    if (check->parsed()) return cmd_check(o, out);
    return cmd_explain(o, out, err);
  } catch (const Abort& a) {
    return a.code;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    // Two formulas that both apply disagreed: a defect, reported like a
    // failed check.
    err << "internal: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}

}  // namespace krulldim
