#ifndef LOOPALG_ERRORS_HPP
#define LOOPALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace loopalg {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An expression needs a generator outside the Borel index range
/// (x_0^- or a negative degree).
struct BorelViolation : Error {
  explicit BorelViolation(const std::string& msg) : Error("BorelViolation: " + msg) {}
};

/// Repeated parameters where distinct ones are required (a denominator
/// a_k - a_j vanishes).
struct DegenerateParameters : Error {
  explicit DegenerateParameters(const std::string& msg) : Error("DegenerateParameters: " + msg) {}
};

/// A polynomial has an irrational or complex root; carries the residual
/// factor that could not be split.
struct NonSplitting : Error {
  explicit NonSplitting(const std::string& msg, std::string residual_poly)
      : Error("NonSplitting: " + msg), residual(std::move(residual_poly)) {}
  std::string residual;
};

struct NotHighestWeight : Error {
  NotHighestWeight(const std::string& msg, int degree)
      : Error("NotHighestWeight: " + msg), k(degree) {}
  int k;
};

struct DegreeOutOfRange : Error {
  explicit DegreeOutOfRange(const std::string& msg) : Error("DegreeOutOfRange: " + msg) {}
};

struct RelationViolation : Error {
  explicit RelationViolation(const std::string& msg) : Error("RelationViolation: " + msg) {}
};

struct NotEigenvector : Error {
  explicit NotEigenvector(const std::string& msg) : Error("NotEigenvector: " + msg) {}
};

struct NewtonMismatch : Error {
  explicit NewtonMismatch(const std::string& msg) : Error("NewtonMismatch: " + msg) {}
};

struct ZeroParameter : Error {
  explicit ZeroParameter(const std::string& msg) : Error("ZeroParameter: " + msg) {}
};

/// Criterion and brute-force oracle disagree.  Firing would falsify an
/// instance of the irreducibility theorem.
struct TheoremViolation : Error {
  explicit TheoremViolation(const std::string& msg) : Error("TheoremViolation: " + msg) {}
};

struct BasisDefect : Error {
  explicit BasisDefect(const std::string& msg) : Error("BasisDefect: " + msg) {}
};

struct NotProportional : Error {
  explicit NotProportional(const std::string& msg) : Error("NotProportional: " + msg) {}
};

struct ClosureBoundExceeded : Error {
  explicit ClosureBoundExceeded(const std::string& msg) : Error("ClosureBoundExceeded: " + msg) {}
};

struct ParseError : Error {
  ParseError(int line_no, const std::string& msg)
      : Error("ParseError: line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

}  // namespace loopalg

#endif
