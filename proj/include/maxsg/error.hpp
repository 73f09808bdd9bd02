#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxsg {

// Every failure the toolkit reports to callers carries a stable code, which
// the command-line surface prints verbatim as {"error": code, ...}.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("ParseError",
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace errc {
inline constexpr const char* arity = "ArityError";
inline constexpr const char* not_invertible = "NotInvertibleInClass";
inline constexpr const char* inverse_law = "InverseLawViolated";
inline constexpr const char* invalid_parameters = "InvalidParameters";
inline constexpr const char* unsupported_filter = "UnsupportedFilter";
inline constexpr const char* hypothesis = "HypothesisViolated";
inline constexpr const char* dimension = "DimensionMismatch";
inline constexpr const char* completeness = "CompletenessFailure";
inline constexpr const char* usage = "UsageError";
}  // namespace errc

}  // namespace maxsg
