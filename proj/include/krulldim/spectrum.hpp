#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krulldim/expr.hpp"

namespace krulldim {

/// n |-> ht(p[n]) for a prime stratum p, always of the shape
/// base + min(n, cap).
struct HeightFn {
  int base = 0;
  int cap = 0;

  constexpr int eval(int n) const { return base + (n < cap ? n : cap); }
  bool operator==(const HeightFn&) const = default;
};

enum class StratumKind { kPlain, kOutsideM, kContainsM };

std::string_view to_string(StratumKind kind);

using StratumId = std::size_t;

/// A class of primes sharing height, residue transcendence degree and
/// polynomial-height behaviour.
struct Stratum {
  int height = 0;
  int residue_td = 0;
  HeightFn poly_height;
  StratumKind kind = StratumKind::kPlain;
  /// For kOutsideM/kPlain the prime's height; for kContainsM the height of
  /// the image prime in D.
  int label = 0;
  std::string provenance;
};

/// Comparable strata lower ⊆ upper. `quotient` is n |-> ht((upper/lower)[n])
/// computed in A/lower; empty when the model cannot certify it.
struct PairStratum {
  StratumId lower = 0;
  StratumId upper = 0;
  std::optional<HeightFn> quotient;

  bool exact() const { return quotient.has_value(); }
};

struct PullbackData {
  int m = 0;
  int td_K = 0;
  int td_D = 0;
  int dim_D = 0;
  int td_KD = 0;  // td_K - td_D
  int outside = 0;
  int dim_T = 0;
  bool t_catenarian = true;
};

/// Finite stratified model of Spec(A).
struct SpectrumSummary {
  std::string source;
  int td = 0;
  int dim = 0;
  std::vector<Stratum> strata;
  std::vector<PairStratum> pairs;
  bool is_af = false;
  bool is_domain = true;
  std::optional<PullbackData> pullback;

  StratumId zero() const { return 0; }
  const Stratum& at(StratumId id) const { return strata.at(id); }

  /// Pair record for lower ⊆ upper, or nullptr if not comparable.
  const PairStratum* find_pair(StratumId lower, StratumId upper) const;
  /// Indices into `pairs` of every pair whose upper end is `upper`.
  std::vector<std::size_t> pairs_below(StratumId upper) const;
  bool all_pairs_exact() const;
};

/// Compiles an expression into its spectrum model, validating every
/// constructor invariant. Throws ConstraintError naming the violated rule.
SpectrumSummary summarize(const AlgebraExpr& expr);

/// Validation only; same errors as summarize().
void validate(const AlgebraExpr& expr);

/// True iff A[n] satisfies the altitude formula on every stratum.
bool is_af_poly(const SpectrumSummary& summary, int n);

/// Selector naming a stratum: "0", "M", "out:<h>", "in:<e>".
std::string selector_of(const SpectrumSummary& summary, StratumId id);

/// Resolves a selector. Throws PreconditionError if the text is malformed
/// or names no stratum of `summary`.
StratumId resolve_selector(const SpectrumSummary& summary, std::string_view text);

}  // namespace krulldim
