#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "krulldim/expr.hpp"
#include "krulldim/spectrum.hpp"

namespace krulldim {

/// Which closed formula produced a dimension.
enum class Theorem {
  kFieldPair,        // min of transcendence degrees of two fields
  kAfPair,           // min(dim A + td B, td A + dim B) for two AF-domains
  kAfGeneral,        // D(td A, dim A, B) for AF A and arbitrary B
  kPullbackPair,     // symmetric formula for two pullbacks with ht(M_i) = dim(T_i)
  kPullbackGeneral,  // max(D(td A, d, B), ht(M) + inner pair maximum)
  kUnsupported,
};

/// Machine label, e.g. "Wadsworth3.8".
std::string_view label(Theorem theorem);
/// Human label used in text output, e.g. "Thm 2.8".
std::string_view display_name(Theorem theorem);

enum class Gate {
  kAf,
  kCatenarian,          // T_M catenarian
  kSmallMaximalHeight,  // ht(M) <= 2
  kSmallRelativeTd,     // td(K:D) <= 2
  kUnsupported,
};

std::string_view label(Gate gate);

struct Applicability {
  Gate label = Gate::kUnsupported;
  std::vector<Gate> passing;
  std::string notes;
};

struct Witness {
  std::string term;
  std::string ref;
  int value = 0;
};

struct Term {
  std::string label;
  int value = 0;
};

struct DimReport {
  int value = 0;
  Theorem theorem = Theorem::kUnsupported;
  std::vector<Witness> witnesses;
  std::vector<Term> terms;
  std::vector<std::string> gates;
  std::vector<std::string> dispatch;  // human-readable dispatch trail
};

int sharp_dim(int s, int t);

/// D(s, d, B) = max over strata q of B of ht(q[s]) + min(s, d + td(B/q)).
/// Requires 0 <= d <= s.
int d_value(int s, int d, const SpectrumSummary& b);

/// Both arguments must be AF; throws PreconditionError otherwise.
int af_pair_dim(const SpectrumSummary& a, const SpectrumSummary& b);

/// Requires two pullback summaries with ht(M_i) = dim(T_i) (UnsupportedError
/// otherwise). The unnamed algebra in D(td(D_1), dim(D_1), .) is the other
/// pullback itself.
int pullback_pair_dim(const SpectrumSummary& a1, const SpectrumSummary& a2);

/// Inner bracket of the contains-M height for one comparable pair q1 ⊆ q of B:
/// ht(q1[td A]) + ht((q/q1)[td D]) + min(td(B/q1), td(K:D)).
int inner_pair_term(const SpectrumSummary& a, const SpectrumSummary& b,
                    const PairStratum& pair);

/// Maximum of inner_pair_term over every pair of B below q.
int inner_pair_max(const SpectrumSummary& a, const SpectrumSummary& b, StratumId q);

/// dim(A ⊗ B) for a pullback A. Witnesses refer to strata of B as "B:<sel>".
DimReport thm28_dim(const SpectrumSummary& a, const SpectrumSummary& b);

/// Height of a prime P of A ⊗ B lying over (p, q) with
/// ht(P / (p⊗B + A⊗q)) = delta, for a pullback A.
int thm28_ht(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p, StratumId q,
             int delta);

/// ht(p⊗B + A⊗q) for a pullback A.
int mixed_ideal_height(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p,
                       StratumId q);

/// dim((A/p) ⊗ (B/q)) over the generic points: min of residue degrees.
int fiber_dim(const Stratum& p, const Stratum& q);

/// Special-chain height for AF A: ht(q[td A]) + ht(p) + delta.
int sct_height_af(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p, StratumId q,
                  int delta);

/// Upper bound on chains ending at (p, q) that stay over (0) in B until
/// the last step: td A - td(A/p) + ht(q[td(A/p)]) + delta.
int lambda_bound(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p, StratumId q,
                 int delta);

Applicability applicability(const SpectrumSummary& a);

/// Dispatches dim(A ⊗ B) to the strongest applicable formula and
/// cross-checks every other formula that also applies.
DimReport dim_tensor(const SpectrumSummary& a, const SpectrumSummary& b);
DimReport dim_tensor(const AlgebraExpr& a, const AlgebraExpr& b);

struct HeightReport {
  int value = 0;
  std::string formula;
  int fiber = 0;
};

/// Height of a prime over (p, q) with fiber offset delta, using whichever
/// of the AF special-chain formula or the pullback formula applies.
HeightReport height_tensor(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p,
                           StratumId q, int delta);

}  // namespace krulldim
