#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "actual_cause/model.hpp"

namespace actual_cause {

enum class MatrixOp { Atom, And, Or, Not };

struct MatrixNode;
/// Basic formula: boolean combination of atoms (V = v) over endogenous
/// variables.
using Matrix = std::shared_ptr<const MatrixNode>;

struct MatrixNode {
  MatrixOp op = MatrixOp::Atom;
  std::size_t var = 0;
  Value value;
  std::vector<Matrix> operands;
};

namespace fm {
Matrix atom(std::size_t var, Value value);
Matrix conj(Matrix lhs, Matrix rhs);
Matrix disj(Matrix lhs, Matrix rhs);
Matrix negate(Matrix operand);
}  // namespace fm

/// Optional intervention prefix followed by a basic formula. Nested
/// updates are not representable.
struct Formula {
  Assignment intervention;
  Matrix matrix;
};

[[nodiscard]] bool holds(const MatrixNode& m, std::span<const Value> solution);

/// Variables mentioned by atoms of `m`.
[[nodiscard]] VarSet atom_vars(const MatrixNode& m);

/// Throws RangeError / UnknownVariableError when `f` mentions a value or
/// variable that the signature does not define.
void check_formula(const Signature& sig, const Formula& f);
void check_matrix(const Signature& sig, const MatrixNode& m);

/// M |= f. Applies the intervention prefix, solves, and evaluates the
/// matrix. An out-of-range value raises RangeError rather than yielding
/// false.
[[nodiscard]] bool evaluate(const CausalModel& model, const Formula& f);
[[nodiscard]] bool evaluate(const CausalModel& model, const Matrix& m);

/// Canonical text in the formula grammar, e.g. "[J2 := 0]!(B = 0)".
[[nodiscard]] std::string to_string(const MatrixNode& m, const Signature& sig);
[[nodiscard]] std::string to_string(const Formula& f, const Signature& sig);
[[nodiscard]] std::string to_string(const Assignment& a, const Signature& sig);

[[nodiscard]] bool structurally_equal(const MatrixNode& a, const MatrixNode& b);

}  // namespace actual_cause
