#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace krulldim {

/// Half-open byte range [begin, end) into parsed source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// A constructor argument violates an invariant of the algebra language.
/// `invariant()` is a stable dotted name such as "pullback.m_le_dim_T".
class ConstraintError : public std::invalid_argument {
 public:
  ConstraintError(std::string invariant, const std::string& detail,
                  std::optional<SourceSpan> span = std::nullopt);

  const std::string& invariant() const noexcept { return invariant_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }

  ConstraintError with_span(SourceSpan span) const;

 private:
  std::string invariant_;
  std::string detail_;
  std::optional<SourceSpan> span_;
};

class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              std::string found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// An operation was called outside its documented domain (bad delta,
/// wrong summary kind, d > s, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No formula in the calculus covers the request: a hypothesis gate failed
/// or required pair-stratum data is unavailable.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace krulldim
