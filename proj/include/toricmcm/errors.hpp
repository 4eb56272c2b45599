#pragma once

#include <stdexcept>
#include <string>

namespace toricmcm {

/// Base class for all engine errors. `code()` is a stable machine-readable
/// identifier surfaced in CLI reports and exit-code mapping.
class EngineError : public std::runtime_error {
public:
  EngineError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct NotArtinianError : EngineError {
  explicit NotArtinianError(const std::string& w)
      : EngineError("not_artinian", w) {}
};

struct InfiniteBasisError : EngineError {
  explicit InfiniteBasisError(const std::string& w)
      : EngineError("infinite_basis", w) {}
};

struct NotIntegralError : EngineError {
  explicit NotIntegralError(const std::string& w)
      : EngineError("not_integral", w) {}
};

struct InconsistentCharacterError : EngineError {
  explicit InconsistentCharacterError(const std::string& w)
      : EngineError("inconsistent_character", w) {}
};

struct NotFullError : EngineError {
  explicit NotFullError(const std::string& w) : EngineError("not_full", w) {}
};

struct ConstraintViolatedError : EngineError {
  explicit ConstraintViolatedError(const std::string& w)
      : EngineError("constraint_violated", w) {}
};

struct WildError : EngineError {
  explicit WildError(const std::string& w) : EngineError("wild", w) {}
};

struct NoSolutionInFieldError : EngineError {
  NoSolutionInFieldError(const std::string& w, int degree_attempted)
      : EngineError("no_solution_in_field", w),
        degree_attempted(degree_attempted) {}
  int degree_attempted;
};

struct ClosureFailureError : EngineError {
  explicit ClosureFailureError(const std::string& w)
      : EngineError("closure_failure", w) {}
};

struct BoundExceededError : EngineError {
  explicit BoundExceededError(const std::string& w)
      : EngineError("bound_exceeded", w) {}
};

struct FreenessRequiredError : EngineError {
  explicit FreenessRequiredError(const std::string& w)
      : EngineError("freeness_required", w) {}
};

struct ZeroDenominatorError : EngineError {
  explicit ZeroDenominatorError(const std::string& w)
      : EngineError("zero_denominator", w) {}
};

struct InfiniteIndexError : EngineError {
  explicit InfiniteIndexError(const std::string& w)
      : EngineError("infinite_index", w) {}
};

struct NotPurelyToricError : EngineError {
  explicit NotPurelyToricError(const std::string& w)
      : EngineError("not_purely_toric", w) {}
};

struct BaseMismatchError : EngineError {
  explicit BaseMismatchError(const std::string& w)
      : EngineError("base_mismatch", w) {}
};

struct OverflowError : EngineError {
  explicit OverflowError(const std::string& w) : EngineError("overflow", w) {}
};

struct ParseError : EngineError {
  ParseError(const std::string& w, int line, int col)
      : EngineError("parse_error", w), line(line), col(col) {}
  int line;
  int col;
};

struct ValidationError : EngineError {
  explicit ValidationError(const std::string& w)
      : EngineError("validation_error", w) {}
};

}  // namespace toricmcm
