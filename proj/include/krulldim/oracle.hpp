#pragma once

#include <functional>
#include <vector>

#include "krulldim/spectrum.hpp"

namespace krulldim {

/// Independent lower-bound machinery. Nothing here calls the closed
/// formulas: every value is assembled from stratum data through moves that
/// each realize an explicit chain of primes in A ⊗ B.

enum class ChainMove {
  kJumpA,     // (0,0) -> (p,q), p AF-localized: ht(q[td A]) + ht(p)
  kJumpB,     // (0,0) -> (p,q), q AF-localized: ht(p[td B]) + ht(q)
  kAdvanceA,  // (p,q) -> (p',q): ht((p'/p)[td(B/q)])
  kAdvanceB,  // (p,q) -> (p,q'): ht((q'/q)[td(A/p)])
  kFiber,     // saturated chain inside the generic fiber over the last anchor
};

struct Anchor {
  StratumId p = 0;
  StratumId q = 0;
  bool operator==(const Anchor&) const = default;
};

struct AnchoredChain {
  std::vector<Anchor> anchors;           // starts at (0,0)
  std::vector<ChainMove> moves;          // moves[i] leads out of anchors[i]
  std::vector<int> segment_lengths;      // parallel to moves
  int total = 0;
};

/// dim A[n] by the special chain decomposition: max_q ht(q[n]) + n.
int brewer_poly_dim(const SpectrumSummary& a, int n);

/// dim(A ⊗ k(x_1..x_s)) as a localization of A[s] whose fibers are tensor products of fields.
int ext_field_dim(const SpectrumSummary& a, int s);

/// Longest anchored chain; a certified lower bound for dim(A ⊗ B).
/// Throws UnsupportedError if either side has unavailable pair data.
int chain_enumerate(const SpectrumSummary& a, const SpectrumSummary& b);

/// A chain realizing chain_enumerate().
AnchoredChain best_chain(const SpectrumSummary& a, const SpectrumSummary& b);

/// Longest anchored chain from (0,0) ending exactly at (p, q), no fiber
/// segment: a lower bound for ht(p⊗B + A⊗q).
int anchored_height(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p,
                    StratumId q);

/// Longest anchored chain from (0,0) to every anchor, indexed
/// p * |strata(B)| + q.
std::vector<int> anchored_heights(const SpectrumSummary& a, const SpectrumSummary& b);

/// Depth-first enumeration of every anchored chain, each closed by its
/// maximal fiber segment. Serial reference for the memoized search.
/// When `descend` is given, a chain is extended only if it returns true.
void for_each_chain(const SpectrumSummary& a, const SpectrumSummary& b,
                    const std::function<void(const AnchoredChain&)>& visit,
                    const std::function<bool(const AnchoredChain&)>& descend = {});

}  // namespace krulldim
