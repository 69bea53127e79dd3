#include "krulldim/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <string>
#include <vector>

#include "krulldim/errors.hpp"
#include "krulldim/spectrum.hpp"

namespace krulldim {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraExpr parse_all() {
    AlgebraExpr expr = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"});
    return expr;
  }

 private:
  AlgebraExpr parse_expr() {
    skip_ws();
    const std::size_t begin = pos_;
    AlgebraExpr expr = [&] {
      if (accept_word("field")) return parse_field();
      if (accept_word("af")) return parse_af();
      if (accept_word("poly")) return parse_poly();
      if (accept_word("val")) return parse_val();
      if (accept_word("pullback")) return parse_pullback(begin);
      fail({"field", "af", "poly", "val", "pullback"});
    }();
    checked(expr, begin);
    return expr;
  }

  AlgebraExpr parse_field() {
    expect("(");
    const int td = nat();
    expect(")");
    return make_field(td);
  }

  AlgebraExpr parse_af() {
    expect("(");
    const int td = nat();
    expect(",");
    const int dim = nat();
    bool cat = true;
    if (accept(",")) {
      expect("cat");
      expect("=");
      if (accept_word("true")) {
        cat = true;
      } else if (accept_word("false")) {
        cat = false;
      } else {
        fail({"true", "false"});
      }
    }
    expect(")");
    return make_af(td, dim, cat);
  }

  AlgebraExpr parse_poly() {
    expect("(");
    AlgebraExpr base = parse_expr();
    expect(",");
    const int vars = nat();
    expect(")");
    return make_poly(std::move(base), vars);
  }

  AlgebraExpr parse_val() {
    expect("(");
    const int td = nat();
    expect(",");
    const int dim = nat();
    expect(")");
    return make_valuation(td, dim);
  }

  AlgebraExpr parse_pullback(std::size_t begin) {
    expect("(");
    key("T");
    AlgebraExpr top = parse_expr();
    expect(",");
    key("m");
    const int m = nat();
    expect(",");
    key("D");
    AlgebraExpr bottom = parse_expr();
    int outside = 0;
    if (accept(",")) {
      key("outside");
      outside = nat();
    } else if (std::holds_alternative<Valuation>(top.node)) {
      outside = m - 1;
    } else {
      skip_ws();
      throw ConstraintError("pullback.outside_required",
                            "outside may be omitted only when T is a valuation domain",
                            SourceSpan{begin, pos_ + 1});
    }
    expect(")");
    return make_pullback(std::move(top), m, std::move(bottom), outside);
  }

  void checked(const AlgebraExpr& expr, std::size_t begin) const {
    try {
      validate(expr);
    } catch (const ConstraintError& e) {
      throw e.with_span(SourceSpan{begin, pos_});
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  // A keyword must not run on into further letters: "fields(" is not "field".
  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail({std::string(token)});
  }

  void key(std::string_view name) {
    if (!accept_word(name)) fail({std::string(name) + "="});
    expect("=");
  }

  int nat() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ptr == first || *first == '-' || *first == '+') fail({"natural number"});
    if (ec == std::errc::result_out_of_range) {
      fail({"natural number at most " + std::to_string(std::numeric_limits<int>::max())});
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = "end of input";
    if (pos_ < text_.size()) found = "'" + std::string(1, text_[pos_]) + "'";
    throw SyntaxError(pos_, std::move(expected), std::move(found));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraExpr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace krulldim
