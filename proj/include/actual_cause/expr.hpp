#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "actual_cause/rational.hpp"

namespace actual_cause {

enum class VarKind { Exogenous, Endogenous };

struct VarRef {
  VarKind kind = VarKind::Endogenous;
  std::size_t index = 0;

  friend bool operator==(const VarRef&, const VarRef&) = default;
};

enum class ExprOp {
  Literal,
  Variable,
  Add,
  Sub,
  Mul,
  Min,
  Max,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  And,
  Or,
  Not,
  IfThenElse,
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// Immutable expression tree for structural equations. Comparisons and
/// connectives yield 1 or 0; conditions treat any nonzero value as true.
struct ExprNode {
  ExprOp op = ExprOp::Literal;
  Value literal;
  VarRef var;
  std::vector<Expr> operands;
};

namespace ex {
Expr lit(Value v);
Expr exo(std::size_t index);
Expr endo(std::size_t index);
Expr binary(ExprOp op, Expr lhs, Expr rhs);
Expr add(Expr lhs, Expr rhs);
Expr sub(Expr lhs, Expr rhs);
Expr mul(Expr lhs, Expr rhs);
Expr min(Expr lhs, Expr rhs);
Expr max(Expr lhs, Expr rhs);
Expr eq(Expr lhs, Expr rhs);
Expr ge(Expr lhs, Expr rhs);
Expr logical_and(Expr lhs, Expr rhs);
Expr logical_or(Expr lhs, Expr rhs);
Expr logical_not(Expr operand);
Expr if_then_else(Expr cond, Expr then_branch, Expr else_branch);
}  // namespace ex

/// Evaluates `e` against exogenous and endogenous value tables.
/// Throws ArithmeticError on overflow.
[[nodiscard]] Value evaluate_expr(const ExprNode& e, std::span<const Value> exo, std::span<const Value> endo);

/// Calls `fn` once per variable occurrence, in left-to-right order.
void for_each_var(const ExprNode& e, const std::function<void(VarRef)>& fn);

[[nodiscard]] bool structurally_equal(const ExprNode& a, const ExprNode& b);

[[nodiscard]] bool is_binary(ExprOp op);
[[nodiscard]] bool is_comparison(ExprOp op);

}  // namespace actual_cause
