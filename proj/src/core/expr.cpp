#include "actual_cause/expr.hpp"

#include <stdexcept>

namespace actual_cause {

namespace ex {

Expr lit(Value v) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::Literal;
  n->literal = v;
  return n;
}

Expr exo(std::size_t index) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::Variable;
  n->var = {VarKind::Exogenous, index};
  return n;
}

Expr endo(std::size_t index) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::Variable;
  n->var = {VarKind::Endogenous, index};
  return n;
}

Expr binary(ExprOp op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->operands = {std::move(lhs), std::move(rhs)};
  return n;
}

Expr add(Expr lhs, Expr rhs) { return binary(ExprOp::Add, std::move(lhs), std::move(rhs)); }
Expr sub(Expr lhs, Expr rhs) { return binary(ExprOp::Sub, std::move(lhs), std::move(rhs)); }
Expr mul(Expr lhs, Expr rhs) { return binary(ExprOp::Mul, std::move(lhs), std::move(rhs)); }
Expr min(Expr lhs, Expr rhs) { return binary(ExprOp::Min, std::move(lhs), std::move(rhs)); }
Expr max(Expr lhs, Expr rhs) { return binary(ExprOp::Max, std::move(lhs), std::move(rhs)); }
Expr eq(Expr lhs, Expr rhs) { return binary(ExprOp::Eq, std::move(lhs), std::move(rhs)); }
Expr ge(Expr lhs, Expr rhs) { return binary(ExprOp::Ge, std::move(lhs), std::move(rhs)); }
Expr logical_and(Expr lhs, Expr rhs) { return binary(ExprOp::And, std::move(lhs), std::move(rhs)); }
Expr logical_or(Expr lhs, Expr rhs) { return binary(ExprOp::Or, std::move(lhs), std::move(rhs)); }

Expr logical_not(Expr operand) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::Not;
  n->operands = {std::move(operand)};
  return n;
}

Expr if_then_else(Expr cond, Expr then_branch, Expr else_branch) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::IfThenElse;
  n->operands = {std::move(cond), std::move(then_branch), std::move(else_branch)};
  return n;
}

}  // namespace ex

namespace {

Value truth(bool b) { return b ? Value(1) : Value(0); }

}  // namespace

Value evaluate_expr(const ExprNode& e, std::span<const Value> exo, std::span<const Value> endo) {
  auto arg = [&](std::size_t i) { return evaluate_expr(*e.operands[i], exo, endo); };
  switch (e.op) {
    case ExprOp::Literal:
      return e.literal;
    case ExprOp::Variable:
      return e.var.kind == VarKind::Exogenous ? exo[e.var.index] : endo[e.var.index];
    case ExprOp::Add:
      return arg(0) + arg(1);
    case ExprOp::Sub:
      return arg(0) - arg(1);
    case ExprOp::Mul:
      return arg(0) * arg(1);
    case ExprOp::Min: {
      Value a = arg(0);
      Value b = arg(1);
      return b < a ? b : a;
    }
    case ExprOp::Max: {
      Value a = arg(0);
      Value b = arg(1);
      return a < b ? b : a;
    }
    case ExprOp::Eq:
      return truth(arg(0) == arg(1));
    case ExprOp::Ne:
      return truth(arg(0) != arg(1));
    case ExprOp::Lt:
      return truth(arg(0) < arg(1));
    case ExprOp::Le:
      return truth(arg(0) <= arg(1));
    case ExprOp::Gt:
      return truth(arg(0) > arg(1));
    case ExprOp::Ge:
      return truth(arg(0) >= arg(1));
    case ExprOp::And:
      return truth(arg(0) != 0 && arg(1) != 0);
    case ExprOp::Or:
      return truth(arg(0) != 0 || arg(1) != 0);
    case ExprOp::Not:
      return truth(arg(0) == 0);
    case ExprOp::IfThenElse:
      return arg(0) != 0 ? arg(1) : arg(2);
  }
  throw std::logic_error("unhandled expression operator");
}

void for_each_var(const ExprNode& e, const std::function<void(VarRef)>& fn) {
  if (e.op == ExprOp::Variable) {
    fn(e.var);
    return;
  }
  for (const auto& child : e.operands) for_each_var(*child, fn);
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  if (&a == &b) return true;
  if (a.op != b.op || a.operands.size() != b.operands.size()) return false;
  if (a.op == ExprOp::Literal) return a.literal == b.literal;
  if (a.op == ExprOp::Variable) return a.var == b.var;
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!structurally_equal(*a.operands[i], *b.operands[i])) return false;
  }
  return true;
}

bool is_binary(ExprOp op) {
  switch (op) {
    case ExprOp::Literal:
    case ExprOp::Variable:
    case ExprOp::Not:
    case ExprOp::IfThenElse:
      return false;
    default:
      return true;
  }
}

bool is_comparison(ExprOp op) {
  return op == ExprOp::Eq || op == ExprOp::Ne || op == ExprOp::Lt || op == ExprOp::Le || op == ExprOp::Gt ||
         op == ExprOp::Ge;
}

}  // namespace actual_cause
