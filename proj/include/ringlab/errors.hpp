#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

// CLI exit-code category of an error.
enum class ErrorClass {
  input = 2,     // bad spec text, bad tables, violated preconditions
  budget = 3,    // order cap or search budget exceeded
  internal = 1,  // a proved theorem failed to verify: implementation bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string msg)
      : std::runtime_error(std::move(msg)), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

 private:
  ErrorClass cls_;
};

// One violated axiom with a witness tuple of element indices.
struct AxiomViolation {
  std::string axiom;
  std::vector<int> witnesses;
  std::string detail;
};

std::string describe_violations(const std::vector<AxiomViolation>& vs);

class AxiomError : public Error {
 public:
  explicit AxiomError(std::vector<AxiomViolation> vs)
      : Error(ErrorClass::input, describe_violations(vs)),
        violations_(std::move(vs)) {}
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(std::string msg)
      : Error(ErrorClass::input, std::move(msg)) {}
};

class OrderCapExceeded : public Error {
 public:
  explicit OrderCapExceeded(std::string msg)
      : Error(ErrorClass::budget, std::move(msg)) {}
};

class SearchBudgetExceeded : public Error {
 public:
  explicit SearchBudgetExceeded(std::string msg)
      : Error(ErrorClass::budget, std::move(msg)) {}
};

class NotAnIdeal : public Error {
 public:
  explicit NotAnIdeal(std::string msg)
      : Error(ErrorClass::input, std::move(msg)) {}
};

class NotARetraction : public Error {
 public:
  explicit NotARetraction(std::string msg)
      : Error(ErrorClass::input, std::move(msg)) {}
};

class EmptyRng : public Error {
 public:
  explicit EmptyRng(std::string msg)
      : Error(ErrorClass::input, std::move(msg)) {}
};

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(std::string msg)
      : Error(ErrorClass::input, std::move(msg)) {}
};

class NotCommutative : public Error {
 public:
  explicit NotCommutative(std::string msg)
      : Error(ErrorClass::input, std::move(msg)) {}
};

class InvalidDecomposition : public Error {
 public:
  InvalidDecomposition(std::string condition, std::vector<int> witness);
  const std::string& condition() const { return condition_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string condition_;
  std::vector<int> witness_;
};

// A statement the paper proves failed to hold on a concrete instance.
// Never a property of the input: always an implementation bug.
class CheckFailure : public Error {
 public:
  explicit CheckFailure(std::string msg)
      : Error(ErrorClass::internal, std::move(msg)) {}
};

}  // namespace ringlab
