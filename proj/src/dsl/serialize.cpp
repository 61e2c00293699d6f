#include <algorithm>
#include <sstream>

#include "actual_cause/dsl.hpp"

namespace actual_cause {
namespace {

int precedence(const ExprNode& e) {
  switch (e.op) {
    case ExprOp::IfThenElse: return 0;
    case ExprOp::Or: return 1;
    case ExprOp::And: return 2;
    case ExprOp::Not: return 3;
    case ExprOp::Eq:
    case ExprOp::Ne:
    case ExprOp::Lt:
    case ExprOp::Le:
    case ExprOp::Gt:
    case ExprOp::Ge: return 4;
    case ExprOp::Add:
    case ExprOp::Sub: return 5;
    case ExprOp::Mul: return 6;
    case ExprOp::Literal: return e.literal < 0 ? 7 : 8;
    case ExprOp::Variable:
    case ExprOp::Min:
    case ExprOp::Max: return 8;
  }
  return 8;
}

std::string_view symbol(ExprOp op) {
  switch (op) {
    case ExprOp::Add: return " + ";
    case ExprOp::Sub: return " - ";
    case ExprOp::Mul: return " * ";
    case ExprOp::Eq: return " = ";
    case ExprOp::Ne: return " != ";
    case ExprOp::Lt: return " < ";
    case ExprOp::Le: return " <= ";
    case ExprOp::Gt: return " > ";
    case ExprOp::Ge: return " >= ";
    case ExprOp::And: return " and ";
    case ExprOp::Or: return " or ";
    default: return " ? ";
  }
}

std::string print(const ExprNode& e, const Signature& sig, int required) {
  std::string out;
  const int p = precedence(e);
  switch (e.op) {
    case ExprOp::Literal:
      out = e.literal.to_string();
      break;
    case ExprOp::Variable:
      out = sig.decl(e.var).name;
      break;
    case ExprOp::Min:
    case ExprOp::Max:
      out = std::string(e.op == ExprOp::Min ? "min(" : "max(") + print(*e.operands[0], sig, 0) + ", " +
            print(*e.operands[1], sig, 0) + ")";
      break;
    case ExprOp::Not:
      out = "not " + print(*e.operands[0], sig, p);
      break;
    case ExprOp::IfThenElse:
      out = "if " + print(*e.operands[0], sig, 0) + " then " + print(*e.operands[1], sig, 0) + " else " +
            print(*e.operands[2], sig, 0);
      break;
    default: {
      // Comparisons do not chain, so both sides bind tighter.
      const int left = is_comparison(e.op) ? p + 1 : p;
      out = print(*e.operands[0], sig, left) + std::string(symbol(e.op)) + print(*e.operands[1], sig, p + 1);
      break;
    }
  }
  return p < required ? "(" + out + ")" : out;
}

std::string range_text(const std::vector<Value>& range) {
  std::string out = "{";
  for (std::size_t i = 0; i < range.size(); ++i) {
    if (i > 0) out += ", ";
    out += range[i].to_string();
  }
  return out + "}";
}

std::pair<std::size_t, std::size_t> line_col(std::string_view source, std::size_t offset) {
  offset = std::min(offset, source.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (source[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string expr_to_string(const ExprNode& e, const Signature& sig) { return print(e, sig, 0); }

std::string serialize(const CausalModel& model) {
  const auto& sig = model.signature();
  std::ostringstream out;
  out << "model " << model.id() << "\n";
  for (const auto& d : sig.exogenous()) out << "exo " << d.name << " in " << range_text(d.range) << "\n";
  for (std::size_t v = 0; v < sig.endo_count(); ++v) {
    const auto& d = sig.endogenous()[v];
    out << "var " << d.name << " in " << range_text(d.range) << " := " << expr_to_string(*model.function(v), sig);
    if (model.frozen().contains(v)) out << " # frozen";
    out << "\n";
  }
  if (sig.exo_count() > 0) {
    out << "context ";
    for (std::size_t i = 0; i < sig.exo_count(); ++i) {
      if (i > 0) out << ", ";
      out << sig.exogenous()[i].name << " = " << model.context()[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string format_diagnostic(std::string_view source, const Diagnostic& d, std::string_view filename) {
  auto [line, col] = line_col(source, d.span.begin);
  std::ostringstream out;
  out << filename << ":" << line << ":" << col << ": " << (d.severity == Severity::Error ? "error" : "warning") << "["
      << code_name(d.code) << "]: " << d.message << "\n";
  std::size_t begin = std::min(d.span.begin, source.size());
  std::size_t line_start = source.rfind('\n', begin == 0 ? 0 : begin - 1);
  line_start = (line_start == std::string_view::npos || begin == 0) ? 0 : line_start + 1;
  if (begin > 0 && source[begin - 1] == '\n') line_start = begin;
  std::size_t line_end = source.find('\n', begin);
  if (line_end == std::string_view::npos) line_end = source.size();
  std::string_view text = source.substr(line_start, line_end - line_start);
  out << "  " << text << "\n  " << std::string(begin - line_start, ' ');
  std::size_t width = std::max<std::size_t>(1, std::min(d.span.end, line_end) - std::min(begin, line_end));
  out << "^" << std::string(width - 1, '~') << "\n";
  if (d.suggestion) out << "  help: " << *d.suggestion << "\n";
  return out.str();
}

}  // namespace actual_cause
