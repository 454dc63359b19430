#pragma once

// Arithmetic expressions over named parameters (t, or u and v).
//
// Grammar, loosest binding first:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?          right associative; -x^2 = -(x^2)
//   primary := number | name | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | tan | sinh | cosh | tanh | exp | log | sqrt
//
// Whitespace is ignored. Names resolve first to the declared parameters, then
// to the constant table (which always contains `pi` and `e`).

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdcurves/jet.hpp"

namespace bdcurves {

using ConstantTable = std::map<std::string, double, std::less<>>;

/// The constants every expression can see.
ConstantTable builtin_constants();

class Expr {
 public:
  struct Node;

  /// The constant 0.
  Expr();
  static Expr constant(double v);
  static Expr parameter(int index, std::string name);

  /// Parses `text`; `parameters` lists the admissible parameter names in slot
  /// order. Throws ParseError.
  static Expr parse(std::string_view text, std::span<const std::string> parameters,
                    const ConstantTable& constants = builtin_constants());

  double evaluate(std::span<const double> args) const;
  Jet evaluate(std::span<const Jet> args) const;

  /// Symbolic partial derivative with respect to parameter slot `index`.
  Expr derivative(int index) const;

  bool is_constant() const;
  bool depends_on(int index) const;
  std::string to_string() const;

  const Node& node() const { return *node_; }

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend Expr operator+(const Expr&, const Expr&);
  friend Expr operator-(const Expr&, const Expr&);
  friend Expr operator*(const Expr&, const Expr&);
  friend Expr operator/(const Expr&, const Expr&);
  friend Expr operator-(const Expr&);
  friend Expr pow(const Expr&, const Expr&);
  friend Expr apply(std::string_view func, const Expr&);
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& a, const Expr& b);
/// One of the grammar's named functions applied to `a`.
Expr apply(std::string_view func, const Expr& a);

/// Evaluates a constant expression (no parameters).
double evaluate_constant(std::string_view text, const ConstantTable& constants);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace bdcurves
