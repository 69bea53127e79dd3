#pragma once

#include <memory>
#include <string>
#include <variant>

namespace krulldim {

struct AlgebraExpr;
using ExprPtr = std::shared_ptr<const AlgebraExpr>;

/// Extension field of k with transcendence degree `td`.
struct Field {
  int td = 0;
  bool operator==(const Field&) const = default;
};

/// Abstract AF-domain with transcendence degree `td` and Krull dimension `dim`.
struct AfDomain {
  int td = 0;
  int dim = 0;
  bool catenarian = true;
  bool operator==(const AfDomain&) const = default;
};

/// Polynomial ring in `vars` indeterminates over an AF base.
struct PolyRing {
  ExprPtr base;
  int vars = 0;
  bool operator==(const PolyRing& other) const;
};

/// K + M valuation domain with chain spectrum: transcendence degree `td`,
/// rank `dim`, residue field of transcendence degree td - dim.
struct Valuation {
  int td = 0;
  int dim = 0;
  bool operator==(const Valuation&) const = default;
};

/// D + M pullback A = phi^-1(D) for phi: T -> T/M = K.
///   m       height of the maximal ideal M of T
///   outside sup of heights of primes of T not containing M
struct Pullback {
  ExprPtr top;
  int m = 0;
  ExprPtr bottom;
  int outside = 0;
  bool operator==(const Pullback& other) const;
};

struct AlgebraExpr {
  using Node = std::variant<Field, AfDomain, PolyRing, Valuation, Pullback>;
  Node node;

  bool operator==(const AlgebraExpr& other) const { return node == other.node; }
};

AlgebraExpr make_field(int td);
AlgebraExpr make_af(int td, int dim, bool catenarian = true);
AlgebraExpr make_poly(AlgebraExpr base, int vars);
AlgebraExpr make_valuation(int td, int dim);
AlgebraExpr make_pullback(AlgebraExpr top, int m, AlgebraExpr bottom, int outside);

bool is_pullback(const AlgebraExpr& expr);

/// Canonical DSL text; parse_expr(to_string(e)) == e.
std::string to_string(const AlgebraExpr& expr);

}  // namespace krulldim
