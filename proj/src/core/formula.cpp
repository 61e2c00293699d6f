#include "actual_cause/formula.hpp"

#include <stdexcept>

#include "actual_cause/errors.hpp"

namespace actual_cause {

namespace fm {

Matrix atom(std::size_t var, Value value) {
  auto n = std::make_shared<MatrixNode>();
  n->op = MatrixOp::Atom;
  n->var = var;
  n->value = value;
  return n;
}

namespace {
Matrix node(MatrixOp op, std::vector<Matrix> operands) {
  auto n = std::make_shared<MatrixNode>();
  n->op = op;
  n->operands = std::move(operands);
  return n;
}
}  // namespace

Matrix conj(Matrix lhs, Matrix rhs) { return node(MatrixOp::And, {std::move(lhs), std::move(rhs)}); }
Matrix disj(Matrix lhs, Matrix rhs) { return node(MatrixOp::Or, {std::move(lhs), std::move(rhs)}); }
Matrix negate(Matrix operand) { return node(MatrixOp::Not, {std::move(operand)}); }

}  // namespace fm

bool holds(const MatrixNode& m, std::span<const Value> solution) {
  switch (m.op) {
    case MatrixOp::Atom:
      return solution[m.var] == m.value;
    case MatrixOp::And:
      return holds(*m.operands[0], solution) && holds(*m.operands[1], solution);
    case MatrixOp::Or:
      return holds(*m.operands[0], solution) || holds(*m.operands[1], solution);
    case MatrixOp::Not:
      return !holds(*m.operands[0], solution);
  }
  throw std::logic_error("unhandled matrix operator");
}

VarSet atom_vars(const MatrixNode& m) {
  if (m.op == MatrixOp::Atom) return VarSet{m.var};
  VarSet out;
  for (const auto& child : m.operands) out = out | atom_vars(*child);
  return out;
}

void check_matrix(const Signature& sig, const MatrixNode& m) {
  if (m.op != MatrixOp::Atom) {
    for (const auto& child : m.operands) check_matrix(sig, *child);
    return;
  }
  if (m.var >= sig.endo_count()) {
    throw UnknownVariableError("atom references undeclared variable #" + std::to_string(m.var));
  }
  VarRef ref{VarKind::Endogenous, m.var};
  if (!sig.in_range(ref, m.value)) {
    throw RangeError("(" + sig.name(m.var) + " = " + m.value.to_string() + ") is not defined: " +
                     m.value.to_string() + " is outside R(" + sig.name(m.var) + ") = " + sig.range_text(ref));
  }
}

void check_formula(const Signature& sig, const Formula& f) {
  for (const auto& b : f.intervention.entries()) {
    if (b.var >= sig.endo_count()) {
      throw UnknownVariableError("intervention targets undeclared variable #" + std::to_string(b.var));
    }
    VarRef ref{VarKind::Endogenous, b.var};
    if (!sig.in_range(ref, b.value)) {
      throw RangeError("[" + sig.name(b.var) + " := " + b.value.to_string() + "] is not defined: " +
                       b.value.to_string() + " is outside R(" + sig.name(b.var) + ") = " + sig.range_text(ref));
    }
  }
  if (!f.matrix) throw Error("formula has no matrix");
  check_matrix(sig, *f.matrix);
}

bool evaluate(const CausalModel& model, const Formula& f) {
  check_formula(model.signature(), f);
  if (f.intervention.empty()) return holds(*f.matrix, model.solution());
  return holds(*f.matrix, intervene(model, f.intervention).solution());
}

bool evaluate(const CausalModel& model, const Matrix& m) {
  check_matrix(model.signature(), *m);
  return holds(*m, model.solution());
}

namespace {

int precedence(MatrixOp op) {
  switch (op) {
    case MatrixOp::Or: return 1;
    case MatrixOp::And: return 2;
    case MatrixOp::Not: return 3;
    case MatrixOp::Atom: return 4;
  }
  return 0;
}

std::string print(const MatrixNode& m, const Signature& sig, int required) {
  std::string out;
  switch (m.op) {
    case MatrixOp::Atom:
      return "(" + sig.name(m.var) + " = " + m.value.to_string() + ")";
    case MatrixOp::Not:
      out = "!" + print(*m.operands[0], sig, precedence(MatrixOp::Not));
      break;
    case MatrixOp::And:
    case MatrixOp::Or: {
      int p = precedence(m.op);
      out = print(*m.operands[0], sig, p) + (m.op == MatrixOp::And ? " & " : " | ") +
            print(*m.operands[1], sig, p + 1);
      break;
    }
  }
  return precedence(m.op) < required ? "(" + out + ")" : out;
}

}  // namespace

std::string to_string(const MatrixNode& m, const Signature& sig) { return print(m, sig, 0); }

std::string to_string(const Assignment& a, const Signature& sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (i > 0) out += ", ";
    out += sig.name(a.entries()[i].var) + " := " + a.entries()[i].value.to_string();
  }
  return out + "]";
}

std::string to_string(const Formula& f, const Signature& sig) {
  std::string out = f.intervention.empty() ? "" : to_string(f.intervention, sig);
  return out + to_string(*f.matrix, sig);
}

bool structurally_equal(const MatrixNode& a, const MatrixNode& b) {
  if (a.op != b.op || a.operands.size() != b.operands.size()) return false;
  if (a.op == MatrixOp::Atom) return a.var == b.var && a.value == b.value;
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!structurally_equal(*a.operands[i], *b.operands[i])) return false;
  }
  return true;
}

}  // namespace actual_cause
