#include "krulldim/oracle.hpp"

#include <algorithm>
#include <limits>

#include "krulldim/errors.hpp"

namespace krulldim {

namespace {

struct Edge {
  Anchor to;
  ChainMove move;
  int length;
};

bool af_localized(const SpectrumSummary& s, const Stratum& st) {
  return st.poly_height.cap == 0 && st.height + st.residue_td == s.td;
}

int generic_fiber(const Stratum& p, const Stratum& q) {
  return std::min(p.residue_td, q.residue_td);
}

class ChainGraph {
 public:
  ChainGraph(const SpectrumSummary& a, const SpectrumSummary& b) : a_(a), b_(b) {
    for (const SpectrumSummary* s : {&a, &b}) {
      if (!s->all_pairs_exact()) {
        throw UnsupportedError("chain enumeration needs exact pair strata; " + s->source +
                               " has unavailable pairs");
      }
    }
  }

  std::size_t index(Anchor x) const { return x.p * b_.strata.size() + x.q; }
  std::size_t size() const { return a_.strata.size() * b_.strata.size(); }

  int fiber(Anchor x) const { return generic_fiber(a_.at(x.p), b_.at(x.q)); }

  std::vector<Edge> advances(Anchor x) const {
    std::vector<Edge> out;
    for (const PairStratum& pair : a_.pairs) {
      if (pair.lower != x.p || pair.upper == x.p) continue;
      out.push_back({{pair.upper, x.q},
                     ChainMove::kAdvanceA,
                     pair.quotient->eval(b_.at(x.q).residue_td)});
    }
    for (const PairStratum& pair : b_.pairs) {
      if (pair.lower != x.q || pair.upper == x.q) continue;
      out.push_back({{x.p, pair.upper},
                     ChainMove::kAdvanceB,
                     pair.quotient->eval(a_.at(x.p).residue_td)});
    }
    return out;
  }

  std::vector<Edge> jumps() const {
    std::vector<Edge> out;
    for (StratumId p = 0; p < a_.strata.size(); ++p) {
      for (StratumId q = 0; q < b_.strata.size(); ++q) {
        if (p == a_.zero() && q == b_.zero()) continue;
        const Stratum& ps = a_.at(p);
        const Stratum& qs = b_.at(q);
        if (af_localized(a_, ps)) {
          out.push_back({{p, q}, ChainMove::kJumpA, qs.poly_height.eval(a_.td) + ps.height});
        }
        if (af_localized(b_, qs)) {
          out.push_back({{p, q}, ChainMove::kJumpB, ps.poly_height.eval(b_.td) + qs.height});
        }
      }
    }
    return out;
  }

  std::vector<Edge> out_edges(Anchor x, bool at_start) const {
    std::vector<Edge> out = advances(x);
    if (at_start) {
      std::vector<Edge> j = jumps();
      out.insert(out.end(), j.begin(), j.end());
    }
    return out;
  }

  // Every anchor, ordered so that each edge goes forward (height sum grows).
  std::vector<Anchor> topological() const {
    std::vector<Anchor> order;
    for (StratumId p = 0; p < a_.strata.size(); ++p) {
      for (StratumId q = 0; q < b_.strata.size(); ++q) order.push_back({p, q});
    }
    std::stable_sort(order.begin(), order.end(), [&](Anchor x, Anchor y) {
      return a_.at(x.p).height + b_.at(x.q).height < a_.at(y.p).height + b_.at(y.q).height;
    });
    return order;
  }

  Anchor start() const { return {a_.zero(), b_.zero()}; }

 private:
  const SpectrumSummary& a_;
  const SpectrumSummary& b_;
};

constexpr int kUnreached = std::numeric_limits<int>::min();

// Longest path from (0,0) to every anchor.
std::vector<int> forward_lengths(const ChainGraph& g, std::vector<Edge>* via = nullptr,
                                 std::vector<Anchor>* from = nullptr) {
  std::vector<int> dist(g.size(), kUnreached);
  if (via) via->assign(g.size(), Edge{{}, ChainMove::kFiber, 0});
  if (from) from->assign(g.size(), Anchor{});
  const Anchor s = g.start();
  dist[g.index(s)] = 0;
  for (Anchor x : g.topological()) {
    const int here = dist[g.index(x)];
    if (here == kUnreached) continue;
    for (const Edge& e : g.out_edges(x, x == s)) {
      int& there = dist[g.index(e.to)];
      if (here + e.length > there) {
        there = here + e.length;
        if (via) (*via)[g.index(e.to)] = e;
        if (from) (*from)[g.index(e.to)] = x;
      }
    }
  }
  return dist;
}

void dfs(const ChainGraph& g, AnchoredChain& chain,
         const std::function<void(const AnchoredChain&)>& visit,
         const std::function<bool(const AnchoredChain&)>& descend) {
  const Anchor here = chain.anchors.back();
  const int fiber = g.fiber(here);
  chain.moves.push_back(ChainMove::kFiber);
  chain.segment_lengths.push_back(fiber);
  chain.total += fiber;
  visit(chain);
  chain.total -= fiber;
  chain.moves.pop_back();
  chain.segment_lengths.pop_back();
  if (descend && !descend(chain)) return;

  for (const Edge& e : g.out_edges(here, chain.anchors.size() == 1)) {
    chain.anchors.push_back(e.to);
    chain.moves.push_back(e.move);
    chain.segment_lengths.push_back(e.length);
    chain.total += e.length;
    dfs(g, chain, visit, descend);
    chain.total -= e.length;
    chain.segment_lengths.pop_back();
    chain.moves.pop_back();
    chain.anchors.pop_back();
  }
}

}  // namespace

int brewer_poly_dim(const SpectrumSummary& a, int n) {
  int best = 0;
  for (const Stratum& q : a.strata) best = std::max(best, q.poly_height.eval(n) + n);
  return best;
}

int ext_field_dim(const SpectrumSummary& a, int s) {
  int best = 0;
  for (const Stratum& q : a.strata) {
    best = std::max(best, q.poly_height.eval(s) + std::min(s, q.residue_td));
  }
  return best;
}

AnchoredChain best_chain(const SpectrumSummary& a, const SpectrumSummary& b) {
  ChainGraph g(a, b);
  std::vector<Edge> via;
  std::vector<Anchor> from;
  const std::vector<int> dist = forward_lengths(g, &via, &from);

  Anchor end = g.start();
  int best = kUnreached;
  for (Anchor x : g.topological()) {
    const int d = dist[g.index(x)];
    if (d == kUnreached) continue;
    if (d + g.fiber(x) > best) {
      best = d + g.fiber(x);
      end = x;
    }
  }

  AnchoredChain chain;
  chain.total = best;
  std::vector<Anchor> rev{end};
  std::vector<Edge> rev_edges;
  for (Anchor x = end; !(x == g.start());) {
    rev_edges.push_back(via[g.index(x)]);
    x = from[g.index(x)];
    rev.push_back(x);
  }
  chain.anchors.assign(rev.rbegin(), rev.rend());
  for (auto it = rev_edges.rbegin(); it != rev_edges.rend(); ++it) {
    chain.moves.push_back(it->move);
    chain.segment_lengths.push_back(it->length);
  }
  chain.moves.push_back(ChainMove::kFiber);
  chain.segment_lengths.push_back(g.fiber(end));
  return chain;
}

int chain_enumerate(const SpectrumSummary& a, const SpectrumSummary& b) {
  return best_chain(a, b).total;
}

int anchored_height(const SpectrumSummary& a, const SpectrumSummary& b, StratumId p,
                    StratumId q) {
  if (p >= a.strata.size() || q >= b.strata.size()) {
    throw PreconditionError("anchored_height: stratum index out of range");
  }
  ChainGraph g(a, b);
  const int d = forward_lengths(g)[g.index({p, q})];
  if (d == kUnreached) {
    throw PreconditionError("anchored_height: (" + selector_of(a, p) + ", " + selector_of(b, q) +
                            ") is not reachable");
  }
  return d;
}

std::vector<int> anchored_heights(const SpectrumSummary& a, const SpectrumSummary& b) {
  ChainGraph g(a, b);
  return forward_lengths(g);
}

void for_each_chain(const SpectrumSummary& a, const SpectrumSummary& b,
                    const std::function<void(const AnchoredChain&)>& visit,
                    const std::function<bool(const AnchoredChain&)>& descend) {
  ChainGraph g(a, b);
  AnchoredChain chain;
  chain.anchors.push_back(g.start());
  dfs(g, chain, visit, descend);
}

}  // namespace krulldim
