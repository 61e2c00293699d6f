#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actual_cause/formula.hpp"
#include "actual_cause/model.hpp"

namespace actual_cause {

/// Half-open byte range [begin, end) into the parsed text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagnosticCode code = DiagnosticCode::Syntax;
  Span span;
  std::string message;
  std::optional<std::string> suggestion;
};

/// Exactly one of `value` and a non-empty `diagnostics` is present.
template <class T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const { return value.has_value(); }
};

/// Parses and validates a model in the .scm grammar:
///
///   model <ident>
///   exo <ident> in { <value>, ... }
///   var <ident> in { <value>, ... } := <expr>
///   context <ident> = <value>, ...
///
/// Never throws on malformed input.
[[nodiscard]] ParseResult<CausalModel> parse_model(std::string_view text);

/// Parses `[X := x, ...]` followed by a boolean matrix over atoms
/// `(V = v)` with `!`, `&`, `|` and parentheses.
[[nodiscard]] ParseResult<Formula> parse_formula(std::string_view text, const Signature& sig);

/// Canonical .scm text. Frozen variables carry a trailing `# frozen`.
[[nodiscard]] std::string serialize(const CausalModel& model);

/// Canonical text of a single equation body.
[[nodiscard]] std::string expr_to_string(const ExprNode& e, const Signature& sig);

/// "file:3:14: error[range]: ..." followed by the source line and a caret
/// marker under the span.
[[nodiscard]] std::string format_diagnostic(std::string_view source, const Diagnostic& d,
                                            std::string_view filename = "<input>");

}  // namespace actual_cause
