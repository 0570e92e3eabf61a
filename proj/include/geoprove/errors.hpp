// Error types shared by all geoprove components.
#pragma once

#include <stdexcept>
#include <string>

namespace geoprove {

// Every failure surfaced by the library derives from Error. The `code`
// string is stable and machine-checkable; `what()` carries the details.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct ZeroPolynomialError : Error {
  explicit ZeroPolynomialError(const std::string& where)
      : Error("ZeroPolynomial", where) {}
};

struct MissingAssignmentError : Error {
  explicit MissingAssignmentError(const std::string& var)
      : Error("MissingAssignment", "no value for variable " + var),
        variable(var) {}
  std::string variable;
};

struct UniverseMismatchError : Error {
  explicit UniverseMismatchError(const std::string& detail)
      : Error("UniverseMismatch", detail) {}
};

struct ZeroDivisorInListError : Error {
  explicit ZeroDivisorInListError(std::size_t index)
      : Error("ZeroDivisorInList",
              "divisor " + std::to_string(index) + " is zero") {}
};

struct EmptyIdealError : Error {
  EmptyIdealError() : Error("EmptyIdeal", "all input polynomials are zero") {}
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& detail)
      : Error("BudgetExceeded", detail) {}
};

// Parse diagnostics carry a 1-based source position.
struct SyntaxError : Error {
  SyntaxError(int line, int column, const std::string& detail)
      : Error("SyntaxError", "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + detail),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct UnknownReferenceError : Error {
  UnknownReferenceError(const std::string& name, int line)
      : Error("UnknownReference",
              "'" + name + "' is not defined (line " + std::to_string(line) +
                  ")"),
        name(name),
        line(line) {}
  std::string name;
  int line;
};

struct UnknownVariableError : Error {
  explicit UnknownVariableError(const std::string& name)
      : Error("UnknownVariable", "'" + name + "'"), name(name) {}
  std::string name;
};

struct DuplicateNameError : Error {
  DuplicateNameError(const std::string& name, int line)
      : Error("DuplicateName",
              "'" + name + "' already defined (line " + std::to_string(line) +
                  ")") {}
};

struct MissingThesisError : Error {
  MissingThesisError() : Error("MissingThesis", "construction has no thesis") {}
};

struct UnsupportedStepError : Error {
  UnsupportedStepError(const std::string& kind, const std::string& encoding)
      : Error("UnsupportedStep", kind + " under encoding " + encoding) {}
};

struct NotAFreeVariableError : Error {
  explicit NotAFreeVariableError(const std::string& name)
      : Error("NotAFreeVariable", name) {}
};

struct NotEnoughFreePointsError : Error {
  explicit NotEnoughFreePointsError(std::size_t have)
      : Error("NotEnoughFreePoints",
              "need at least 2 free points, have " + std::to_string(have)) {}
};

struct InvalidSystemError : Error {
  explicit InvalidSystemError(const std::string& detail)
      : Error("InvalidSystem", detail) {}
};

struct UnprovedCertificateError : Error {
  UnprovedCertificateError()
      : Error("UnprovedCertificate",
              "difficulty is undefined for unproved statements") {}
};

struct UnverifiedCertificateError : Error {
  explicit UnverifiedCertificateError(const std::string& detail)
      : Error("UnverifiedCertificate", detail) {}
};

struct DegenerateSampleError : Error {
  explicit DegenerateSampleError(const std::string& detail)
      : Error("DegenerateSample", detail) {}
};

struct IrrationalStepError : Error {
  explicit IrrationalStepError(const std::string& detail)
      : Error("IrrationalStep", detail) {}
};

}  // namespace geoprove
