#include "krulldim/errors.hpp"

#include <sstream>
#include <utility>

namespace krulldim {

namespace {

std::string constraint_message(const std::string& invariant, const std::string& detail,
                               const std::optional<SourceSpan>& span) {
  std::ostringstream os;
  os << "constraint violated [" << invariant << "]: " << detail;
  if (span) os << " (columns " << span->begin + 1 << "-" << span->end << ")";
  return os.str();
}

std::string syntax_message(std::size_t position, const std::vector<std::string>& expected,
                           const std::string& found) {
  std::ostringstream os;
  os << "syntax error at column " << position + 1 << ": expected ";
  if (expected.size() > 1) os << "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) os << ", ";
    os << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

ConstraintError::ConstraintError(std::string invariant, const std::string& detail,
                                 std::optional<SourceSpan> span)
    : std::invalid_argument(constraint_message(invariant, detail, span)),
      invariant_(std::move(invariant)),
      detail_(detail),
      span_(span) {}

ConstraintError ConstraintError::with_span(SourceSpan span) const {
  return ConstraintError(invariant_, detail_, span);
}

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         std::string found)
    : std::invalid_argument(syntax_message(position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace krulldim
