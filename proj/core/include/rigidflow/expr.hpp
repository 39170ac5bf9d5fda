#ifndef RIGIDFLOW_EXPR_HPP
#define RIGIDFLOW_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rigidflow/jet.hpp"

namespace rigidflow {

enum class UnaryOp { Neg, Sin, Cos, Sinh, Cosh, Tanh, Exp, Log, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

// Immutable expression tree over named coordinates and named parameters.
// Coordinates are resolved to indices at parse time; parameters stay by
// name and are bound at evaluation time.
struct Expr {
  enum class Kind { Literal, Coordinate, Parameter, Unary, Binary };

  Kind kind = Kind::Literal;
  double literal = 0.0;
  std::size_t coord = 0;  // Coordinate only
  std::string name;       // Coordinate and Parameter: the source spelling
  UnaryOp uop = UnaryOp::Neg;
  BinaryOp bop = BinaryOp::Add;
  std::shared_ptr<const Expr> a, b;
};

using ExprPtr = std::shared_ptr<const Expr>;
using Params = std::map<std::string, double>;

// Grammar (recursive descent, '^' binds right and tighter than unary '-'):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | base ("^" factor)?
//   base   := number | ident | ident "(" expr ")" | "(" expr ")"
// Raises SyntaxError with a character position, or UnknownSymbol for an
// identifier that is neither a coordinate, a parameter, nor a function.
ExprPtr parse_expression(const std::string& text,
                         const std::vector<std::string>& coordinates,
                         const std::vector<std::string>& parameters);

// Value-only evaluation. Kept as a separate recursion so the finite
// difference oracle does not share code with the jet propagation it checks.
double eval_value(const Expr& e, const std::vector<double>& point, const Params& params);

// Value, gradient and Hessian with respect to the coordinates.
Jet2 eval_jet2(const Expr& e, const std::vector<double>& point, const Params& params);

// Emits a string that reparses to an identically-evaluating tree.
std::string unparse(const Expr& e);

struct FiniteDifferenceJet {
  double value = 0.0;
  std::vector<double> grad;  // size n
  std::vector<double> hess;  // n*n row-major, symmetric
};

// Central-difference gradient and Hessian, O(step^2) accurate. Built on
// eval_value only; used by tests to cross-check eval_jet2.
FiniteDifferenceJet finite_difference_oracle(const Expr& e,
                                             const std::vector<double>& point,
                                             const Params& params, double step);

} // namespace rigidflow

#endif
