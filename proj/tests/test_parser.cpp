#include <doctest.h>

#include <random>

#include "krulldim/catalog.hpp"
#include "krulldim/errors.hpp"
#include "krulldim/parser.hpp"

using namespace krulldim;

TEST_CASE("atoms") {
  CHECK(parse_expr("field(2)") == make_field(2));
  CHECK(parse_expr("af(3,2)") == make_af(3, 2));
  CHECK(parse_expr("af(3,2,cat=false)") == make_af(3, 2, false));
  CHECK(parse_expr("af(3,2,cat=true)") == make_af(3, 2));
  CHECK(parse_expr("val(2,1)") == make_valuation(2, 1));
  CHECK(parse_expr("poly(field(1),2)") == make_poly(make_field(1), 2));
}

TEST_CASE("k+M and whitespace") {
  CHECK(parse_expr("pullback(T=val(2,1), m=1, D=field(0), outside=0)") == k_plus_m());
  CHECK(parse_expr("  pullback ( T = val ( 2 , 1 ) ,m=1,\tD=field(0) , outside = 0 ) ") ==
        k_plus_m());
}

TEST_CASE("outside defaults to m-1 only for a valuation top") {
  CHECK(parse_expr("pullback(T=val(2,1),m=1,D=field(0))") == k_plus_m());
  try {
    parse_expr("pullback(T=af(3,2),m=1,D=field(0))");
    FAIL("expected a constraint error");
  } catch (const ConstraintError& e) {
    CHECK(e.invariant() == "pullback.outside_required");
  }
}

TEST_CASE("constraint errors carry the node span") {
  const std::string text = "pullback(T=field(1), m=1, D=field(0), outside=0)";
  try {
    parse_expr(text);
    FAIL("expected a constraint error");
  } catch (const ConstraintError& e) {
    CHECK(e.invariant() == "pullback.m_le_dim_T");
    REQUIRE(e.span());
    CHECK(e.span()->begin == 0);
    CHECK(e.span()->end == text.size());
  }
  try {
    parse_expr("poly(af(1,2),1)");
    FAIL("expected a constraint error");
  } catch (const ConstraintError& e) {
    CHECK(e.invariant() == "af.dim_le_td");
    REQUIRE(e.span());
    CHECK(e.span()->begin == 5);
    CHECK(e.span()->end == 12);
  }
}

TEST_CASE("syntax errors report position and expected tokens") {
  try {
    parse_expr("field(2");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 7);
    CHECK(e.expected() == std::vector<std::string>{")"});
    CHECK(e.found() == "end of input");
  }
  try {
    parse_expr("ring(2)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 0);
    CHECK(e.expected().size() == 5);
  }
  CHECK_THROWS_AS(parse_expr("field(-1)"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("field(99999999999)"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("field(1) field(2)"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("af(2,1,cat=maybe)"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("fields(1)"), SyntaxError);
  CHECK_THROWS_AS(parse_expr(""), SyntaxError);
  CHECK_THROWS_AS(parse_expr("pullback(m=1,T=val(2,1),D=field(0))"), SyntaxError);
}

namespace {

AlgebraExpr random_af(std::mt19937& rng, int depth) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (pick(0, depth > 0 ? 3 : 2)) {
    case 0:
      return make_field(pick(0, 5));
    case 1: {
      const int t = pick(0, 5);
      return make_af(t, pick(0, t), pick(0, 1) == 1);
    }
    case 2: {
      const int d = pick(1, 3);
      return make_valuation(d + pick(0, 2), d);
    }
    default:
      return make_poly(random_af(rng, depth - 1), pick(0, 3));
  }
}

}  // namespace

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(7);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 500; ++trial) {
    AlgebraExpr e = random_af(rng, 2);
    if (pick(0, 1) == 1) {
      const int m = pick(1, 3);
      const int td_k = pick(0, 2);
      const int td_d = pick(0, td_k);
      e = make_pullback(make_valuation(m + td_k, m), m, make_af(td_d, pick(0, td_d)), m - 1);
    }
    CAPTURE(to_string(e));
    CHECK(parse_expr(to_string(e)) == e);
  }
  for (const CatalogEntry& entry : build_catalog(Grid{})) {
    CHECK(parse_expr(to_string(entry.expr)) == entry.expr);
  }
}
