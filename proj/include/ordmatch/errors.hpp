#ifndef ORDMATCH_ERRORS_HPP
#define ORDMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordmatch {

// Malformed input documents, out-of-range arguments, broken preconditions.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An algorithm asked an information view for data beyond its budget.
// Views throw this instead of answering, so a run that finishes proves
// the algorithm stayed within its information budget.
class BudgetViolation : public std::runtime_error {
 public:
  explicit BudgetViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ordmatch

#endif
