#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singulyr {

using Complex = std::complex<double>;

// Expression language for holomorphic maps of one variable `z`:
// complex literals, +, -, *, /, integer powers ^k with |k| <= 64,
// and exp/sin/cos. No logs or fractional powers, so every parsed
// function is single-valued and branch-cut free.
enum class NodeKind {
  Literal,
  Variable,
  Negate,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Exp,
  Sin,
  Cos,
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// Nodes are immutable once built and may be shared freely across
// threads and across trees.
struct ExprNode {
  NodeKind kind = NodeKind::Literal;
  Complex value{};   // Literal only
  int exponent = 0;  // Pow only
  ExprPtr lhs;       // unary operand, call argument, or binary lhs
  ExprPtr rhs;       // binary rhs
};

struct FunctionAst {
  ExprPtr root;
};

ExprPtr lit(Complex value);
ExprPtr variable();
ExprPtr negate(ExprPtr operand);
ExprPtr add(ExprPtr lhs, ExprPtr rhs);
ExprPtr sub(ExprPtr lhs, ExprPtr rhs);
ExprPtr mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr divide(ExprPtr lhs, ExprPtr rhs);
ExprPtr powi(ExprPtr base, int exponent);
ExprPtr call_exp(ExprPtr arg);
ExprPtr call_sin(ExprPtr arg);
ExprPtr call_cos(ExprPtr arg);

// Parse errors carry a 1-based byte position into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: +,-,*,/ are left associative, ^ binds tighter than unary
// minus, parentheses group. Literals are decimal numbers, optionally
// with an `i` suffix for imaginary parts; `i` alone is the imaginary
// unit. Exponents after ^ must be plain (optionally signed) integers.
//
// parse() returns a canonical tree: a leading minus on a literal is
// folded into the literal, and the pattern `a+bi` / `a-bi` (real
// literal followed by an imaginary literal) folds into one literal
// node. format() emits fully parenthesized text whose reparse is
// canonical, so parse(format(t)) == t holds for every canonical tree.
FunctionAst parse(std::string_view source);

std::string format(const FunctionAst& ast);

bool structurally_equal(const FunctionAst& a, const FunctionAst& b);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// (g(z) - v) / (z - v); for v == 0 this is g(z)/z.
FunctionAst breve_transform(const FunctionAst& g, Complex v);

// 1 / f(1/z): substitutes z -> 1/z, then takes the reciprocal.
FunctionAst invert_conjugate(const FunctionAst& f);

}  // namespace singulyr
