#pragma once

#include <stdexcept>
#include <string>

namespace hsa {

enum class Errc {
  NotMonomial,
  ZeroDivision,
  DivergentLimit,
  NonTerminatingRule,
  MissingRule,
  DuplicateGenerator,
  DuplicateRule,
  MixedPresentation,
  ArityMismatch,
  PresentationMismatch,
  BadIndex,
  DomainMismatch,
  CompatibilityFailed,
  SyntaxError,
  UndeclaredGenerator,
  ParityMismatch,
  ExpansionBudget,
};

const char* errc_name(Errc c);

/// All engine failures are thrown as Error; the code() survives so callers
/// (CLI, test asserts) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace hsa
