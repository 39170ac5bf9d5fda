#ifndef RIGIDFLOW_ERRORS_HPP
#define RIGIDFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidflow {

// Base class for every failure this library reports. The CLI maps subclasses
// onto exit codes, so new error kinds should derive from one of the groups
// below rather than from Error directly.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- input errors (bad expressions, bad scene files, bad parameters) ----

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& msg)
      : Error("syntax error at position " + std::to_string(position) + ": " + msg),
        position(position) {}
  std::size_t position;
};

class UnknownSymbol : public Error {
public:
  explicit UnknownSymbol(const std::string& name)
      : Error("unknown symbol '" + name + "'"), name(name) {}
  std::string name;
};

class UnknownModel : public Error {
public:
  explicit UnknownModel(const std::string& name)
      : Error("unknown model or flow '" + name + "'"), name(name) {}
  std::string name;
};

class ParamOutOfRange : public Error {
public:
  ParamOutOfRange(const std::string& param, const std::string& reason)
      : Error("parameter '" + param + "' out of range: " + reason), param(param) {}
  std::string param;
};

class SchemaError : public Error {
public:
  SchemaError(const std::string& field, const std::string& reason)
      : Error("scene schema error in '" + field + "': " + reason), field(field) {}
  std::string field;
};

// ---- numerical / geometric errors raised while evaluating a scene ----

class NumericalError : public Error {
public:
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Raised eagerly during evaluation: log or sqrt outside their domain,
// division by zero. Carries the offending subexpression text.
class DomainError : public NumericalError {
public:
  DomainError(const std::string& subexpr, const std::string& reason)
      : NumericalError("domain error in '" + subexpr + "': " + reason),
        subexpression(subexpr) {}
  std::string subexpression;
};

class DegenerateMetric : public NumericalError {
public:
  explicit DegenerateMetric(const std::string& msg) : NumericalError(msg) {}
};

class TimelikeViolation : public NumericalError {
public:
  explicit TimelikeViolation(const std::string& msg) : NumericalError(msg) {}
};

class FrameDegenerate : public NumericalError {
public:
  explicit FrameDegenerate(const std::string& msg) : NumericalError(msg) {}
};

// The Gram-Schmidt candidate skip pattern is not locally constant at the
// sample point. Frame derivatives there would mix two incompatible frame
// branches, so the caller must move the sample point instead.
class SkipSetUnstable : public NumericalError {
public:
  explicit SkipSetUnstable(const std::string& msg) : NumericalError(msg) {}
};

// ---- identity-suite / verdict preconditions ----

class ModeUnavailable : public Error {
public:
  explicit ModeUnavailable(const std::string& msg) : Error(msg) {}
};

class HypothesisUnmet : public Error {
public:
  explicit HypothesisUnmet(const std::string& msg) : Error(msg) {}
};

class PreconditionViolated : public Error {
public:
  explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

} // namespace rigidflow

#endif
