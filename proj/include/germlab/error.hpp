#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace germlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax errors carry the 0-based byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised when a Groebner/standard-basis computation runs out of reduction steps.
/// Never silently replaced by a partial answer.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::size_t budget)
      : Error("reduction budget exhausted after " + std::to_string(budget) +
              " steps"),
        budget_(budget) {}

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

class WeightInferenceError : public Error {
 public:
  enum class Kind { Inconsistent, Underdetermined, NonPositive };

  WeightInferenceError(Kind kind, const std::string& message,
                       std::vector<std::string> free_variables = {})
      : Error(message), kind_(kind), free_variables_(std::move(free_variables)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::string>& free_variables() const {
    return free_variables_;
  }

 private:
  Kind kind_;
  std::vector<std::string> free_variables_;
};

}  // namespace germlab
