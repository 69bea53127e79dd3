#include <doctest.h>

#include <random>

#include "krulldim/catalog.hpp"
#include "krulldim/errors.hpp"
#include "krulldim/formulas.hpp"
#include "krulldim/oracle.hpp"

using namespace krulldim;

namespace {

const SpectrumSummary& kpm() {
  static const SpectrumSummary s = summarize(k_plus_m());
  return s;
}

SpectrumSummary af(int t, int d) { return summarize(make_af(t, d)); }
SpectrumSummary field(int t) { return summarize(make_field(t)); }

}  // namespace

TEST_CASE("dimension of polynomial rings") {
  for (int t = 0; t <= 4; ++t) {
    for (int n = 0; n <= 4; ++n) CHECK(brewer_poly_dim(field(t), n) == n);
  }
  for (int t = 0; t <= 4; ++t) {
    for (int d = 0; d <= t; ++d) {
      for (int n = 0; n <= 3; ++n) CHECK(brewer_poly_dim(af(t, d), n) == d + n);
    }
  }
  // dim A[1] = 2 dim A + 1: the largest value a one-dimensional domain allows.
  CHECK(brewer_poly_dim(kpm(), 1) == 3);
  CHECK(brewer_poly_dim(kpm(), 0) == 1);
}

TEST_CASE("dimension after a purely transcendental field extension") {
  for (int t = 0; t <= 4; ++t) {
    for (int s = 0; s <= 4; ++s) CHECK(ext_field_dim(field(t), s) == std::min(t, s));
  }
  CHECK(ext_field_dim(kpm(), 1) == 2);
  CHECK(ext_field_dim(kpm(), 1) == d_value(1, 0, kpm()));
  for (int t = 0; t <= 4; ++t) {
    for (int d = 0; d <= t; ++d) {
      for (int s = 0; s <= 5; ++s) CHECK(ext_field_dim(af(t, d), s) == d_value(s, 0, af(t, d)));
    }
  }
}

TEST_CASE("chain enumeration meets the known values") {
  CHECK(chain_enumerate(field(2), field(3)) == 2);
  CHECK(chain_enumerate(kpm(), af(1, 1)) == 3);
  CHECK(chain_enumerate(af(2, 2), af(1, 1)) == 3);
  CHECK(chain_enumerate(kpm(), kpm()) == 3);
  const SpectrumSummary rank2 =
      summarize(make_pullback(make_valuation(3, 2), 2, make_field(0), 1));
  CHECK(chain_enumerate(kpm(), rank2) == 4);
}

TEST_CASE("best chain is well formed") {
  const AnchoredChain c = best_chain(kpm(), af(1, 1));
  CHECK(c.total == 3);
  REQUIRE_FALSE(c.anchors.empty());
  CHECK(c.anchors.front() == Anchor{0, 0});
  CHECK(c.moves.size() == c.anchors.size());
  CHECK(c.segment_lengths.size() == c.moves.size());
  CHECK(c.moves.back() == ChainMove::kFiber);
  int sum = 0;
  for (int len : c.segment_lengths) sum += len;
  CHECK(sum == c.total);
}

TEST_CASE("anchored heights") {
  const SpectrumSummary b = af(1, 1);
  const StratumId m = resolve_selector(kpm(), "M");
  const StratumId top = resolve_selector(b, "M");
  CHECK(anchored_height(kpm(), b, 0, 0) == 0);
  CHECK(anchored_height(kpm(), b, m, top) == 3);
  CHECK(anchored_height(kpm(), b, m, 0) == 2);
  const std::vector<int> all = anchored_heights(kpm(), b);
  REQUIRE(all.size() == kpm().strata.size() * b.strata.size());
  for (StratumId p = 0; p < kpm().strata.size(); ++p) {
    for (StratumId q = 0; q < b.strata.size(); ++q) {
      CHECK(all[p * b.strata.size() + q] == anchored_height(kpm(), b, p, q));
    }
  }
}

TEST_CASE("inexact pair data is refused") {
  const SpectrumSummary noncat = summarize(make_af(3, 2, false));
  CHECK_THROWS_AS(chain_enumerate(noncat, field(1)), UnsupportedError);
}

// The depth-first enumeration and the memoized longest path are two
// implementations of the same search.
TEST_CASE("exhaustive enumeration agrees with the longest path") {
  const std::vector<CatalogEntry> cat = build_catalog(Grid{2});
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> idx(0, cat.size() - 1);
  for (int trial = 0; trial < 150; ++trial) {
    const SpectrumSummary& a = cat[idx(rng)].summary;
    const SpectrumSummary& b = cat[idx(rng)].summary;
    CAPTURE(a.source);
    CAPTURE(b.source);
    int longest = 0;
    std::size_t visited = 0;
    for_each_chain(a, b, [&](const AnchoredChain& c) {
      ++visited;
      CHECK(c.anchors.front() == Anchor{0, 0});
      int sum = 0;
      for (int len : c.segment_lengths) {
        CHECK(len >= 0);
        sum += len;
      }
      CHECK(sum == c.total);
      longest = std::max(longest, c.total);
    });
    CHECK(visited > 0);
    CHECK(longest == chain_enumerate(a, b));
    CHECK(longest == best_chain(a, b).total);
  }
}

TEST_CASE("pruned enumeration visits only what descend allows") {
  std::size_t full = 0;
  std::size_t pruned = 0;
  const SpectrumSummary b = af(2, 2);
  for_each_chain(kpm(), b, [&](const AnchoredChain&) { ++full; });
  for_each_chain(
      kpm(), b,
      [&](const AnchoredChain& c) {
        ++pruned;
        CHECK(c.anchors.size() <= 2);
      },
      [](const AnchoredChain& c) { return c.anchors.size() < 2; });
  CHECK(pruned > 0);
  CHECK(pruned < full);
}
