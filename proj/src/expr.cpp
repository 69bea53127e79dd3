#include "krulldim/expr.hpp"

#include <sstream>
#include <type_traits>

namespace krulldim {

namespace {

bool same_ptr_value(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void print(std::ostream& os, const AlgebraExpr& expr) {
  std::visit(
      [&os](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Field>) {
          os << "field(" << node.td << ")";
        } else if constexpr (std::is_same_v<T, AfDomain>) {
          os << "af(" << node.td << "," << node.dim;
          if (!node.catenarian) os << ",cat=false";
          os << ")";
        } else if constexpr (std::is_same_v<T, PolyRing>) {
          os << "poly(";
          print(os, *node.base);
          os << "," << node.vars << ")";
        } else if constexpr (std::is_same_v<T, Valuation>) {
          os << "val(" << node.td << "," << node.dim << ")";
        } else {
          os << "pullback(T=";
          print(os, *node.top);
          os << ",m=" << node.m << ",D=";
          print(os, *node.bottom);
          os << ",outside=" << node.outside << ")";
        }
      },
      expr.node);
}

}  // namespace

bool PolyRing::operator==(const PolyRing& other) const {
  return vars == other.vars && same_ptr_value(base, other.base);
}

bool Pullback::operator==(const Pullback& other) const {
  return m == other.m && outside == other.outside && same_ptr_value(top, other.top) &&
         same_ptr_value(bottom, other.bottom);
}

AlgebraExpr make_field(int td) { return AlgebraExpr{Field{td}}; }

AlgebraExpr make_af(int td, int dim, bool catenarian) {
  return AlgebraExpr{AfDomain{td, dim, catenarian}};
}

AlgebraExpr make_poly(AlgebraExpr base, int vars) {
  return AlgebraExpr{PolyRing{std::make_shared<const AlgebraExpr>(std::move(base)), vars}};
}

AlgebraExpr make_valuation(int td, int dim) { return AlgebraExpr{Valuation{td, dim}}; }

AlgebraExpr make_pullback(AlgebraExpr top, int m, AlgebraExpr bottom, int outside) {
  return AlgebraExpr{Pullback{std::make_shared<const AlgebraExpr>(std::move(top)), m,
                              std::make_shared<const AlgebraExpr>(std::move(bottom)),
                              outside}};
}

bool is_pullback(const AlgebraExpr& expr) {
  return std::holds_alternative<Pullback>(expr.node);
}

std::string to_string(const AlgebraExpr& expr) {
  std::ostringstream os;
  print(os, expr);
  return os.str();
}

}  // namespace krulldim
