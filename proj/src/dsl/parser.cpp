#include <algorithm>
#include <map>
#include <string>

#include "actual_cause/dsl.hpp"
#include "actual_cause/errors.hpp"
#include "lexer.hpp"

namespace actual_cause {
namespace {

using dsl::Token;
using dsl::TokenKind;

constexpr int kMaxDepth = 200;

/// Thrown to unwind to the nearest recovery point after a syntax error has
/// been recorded.
struct SyntaxAbort {};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::optional<std::string> closest(std::string_view name, const std::vector<std::string>& candidates) {
  std::optional<std::string> best;
  std::size_t best_d = 3;
  for (const auto& c : candidates) {
    std::size_t d = edit_distance(name, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  if (best) return "did you mean '" + *best + "'?";
  return std::nullopt;
}

class TokenCursor {
public:
  TokenCursor(std::vector<Token> tokens, std::vector<Diagnostic>& diags) : tokens_(std::move(tokens)), diags_(diags) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool match(TokenKind k) {
    if (!at(k)) return false;
    advance();
    return true;
  }
  const Token& expect(TokenKind k, std::string_view context) {
    if (!at(k)) {
      fail(peek().span, "expected " + std::string(dsl::describe(k)) + " " + std::string(context) + ", found " +
                            std::string(dsl::describe(peek().kind)));
    }
    return advance();
  }
  [[noreturn]] void fail(Span span, std::string message, std::optional<std::string> hint = std::nullopt) {
    diags_.push_back({Severity::Error, DiagnosticCode::Syntax, span, std::move(message), std::move(hint)});
    throw SyntaxAbort{};
  }
  const Token& previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

  std::vector<Diagnostic>& diags() { return diags_; }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

struct ValueLit {
  Value value;
  Span span;
};

ValueLit parse_value(TokenCursor& cur) {
  std::size_t begin = cur.peek().span.begin;
  bool negative = cur.match(TokenKind::Minus);
  const Token& t = cur.expect(TokenKind::Number, "(a value)");
  Value v = t.number;
  if (negative) {
    try {
      v = -v;
    } catch (const ArithmeticError&) {
      cur.fail({begin, t.span.end}, "value out of representable range");
    }
  }
  return {v, {begin, t.span.end}};
}

// ------------------------------------------------------------------ models

struct PendingRef {
  ExprNode* node;
  std::string name;
  Span span;
};

struct VarDeclSrc {
  std::string name;
  Span name_span;
  std::vector<ValueLit> range;
  Span decl_span;
  bool endogenous = false;
  std::shared_ptr<ExprNode> body;
  Span body_span;
  bool frozen = false;
};

struct ContextEntry {
  std::string name;
  Span name_span;
  ValueLit value;
};

class ModelParser {
public:
  ModelParser(std::string_view text, dsl::LexResult lexed, std::vector<Diagnostic>& diags)
      : text_(text), cur_(std::move(lexed.tokens), diags), frozen_markers_(std::move(lexed.frozen_markers)) {}

  std::optional<CausalModel> run() {
    parse_declarations();
    if (!diags().empty()) return std::nullopt;
    resolve();
    if (!diags().empty()) return std::nullopt;
    return build();
  }

private:
  std::vector<Diagnostic>& diags() { return cur_.diags(); }

  void error(DiagnosticCode code, Span span, std::string message, std::optional<std::string> hint = std::nullopt) {
    diags().push_back({Severity::Error, code, span, std::move(message), std::move(hint)});
  }

  static bool starts_declaration(TokenKind k) {
    return k == TokenKind::KwModel || k == TokenKind::KwExo || k == TokenKind::KwVar || k == TokenKind::KwContext;
  }

  void recover() {
    cur_.advance();
    while (!cur_.at(TokenKind::Eof) && !starts_declaration(cur_.peek().kind)) cur_.advance();
  }

  void parse_declarations() {
    bool first = true;
    while (!cur_.at(TokenKind::Eof)) {
      try {
        const Token& t = cur_.peek();
        switch (t.kind) {
          case TokenKind::KwModel:
            if (!first || model_name_) {
              cur_.fail(t.span, "'model' header must appear once, at the start");
            }
            cur_.advance();
            model_name_ = std::string(cur_.expect(TokenKind::Ident, "after 'model'").text);
            break;
          case TokenKind::KwExo:
          case TokenKind::KwVar:
            parse_variable();
            break;
          case TokenKind::KwContext:
            parse_context();
            break;
          default:
            cur_.fail(t.span, "expected a declaration ('model', 'exo', 'var' or 'context'), found " +
                                  std::string(dsl::describe(t.kind)));
        }
      } catch (const SyntaxAbort&) {
        recover();
      }
      first = false;
    }
  }

  std::vector<ValueLit> parse_range() {
    cur_.expect(TokenKind::LBrace, "to open the range");
    std::vector<ValueLit> out;
    out.push_back(parse_value(cur_));
    while (cur_.match(TokenKind::Comma)) out.push_back(parse_value(cur_));
    cur_.expect(TokenKind::RBrace, "to close the range");
    return out;
  }

  void parse_variable() {
    const Token& kw = cur_.advance();
    VarDeclSrc d;
    d.endogenous = kw.kind == TokenKind::KwVar;
    const Token& name = cur_.expect(TokenKind::Ident, "(variable name)");
    d.name = std::string(name.text);
    d.name_span = name.span;
    cur_.expect(TokenKind::KwIn, "before the range");
    d.range = parse_range();
    if (d.endogenous) {
      cur_.expect(TokenKind::Assign, "before the equation");
      std::size_t begin = cur_.peek().span.begin;
      d.body = parse_expr(0);
      d.body_span = {begin, cur_.previous().span.end};
      std::size_t line_end = text_.find('\n', d.body_span.end);
      if (line_end == std::string_view::npos) line_end = text_.size();
      d.frozen = std::any_of(frozen_markers_.begin(), frozen_markers_.end(),
                             [&](std::size_t m) { return m >= d.body_span.end && m < line_end; });
    }
    d.decl_span = {kw.span.begin, cur_.previous().span.end};
    decls_.push_back(std::move(d));
  }

  void parse_context() {
    cur_.advance();
    do {
      const Token& name = cur_.expect(TokenKind::Ident, "(exogenous variable)");
      cur_.expect(TokenKind::Eq, "after the variable name");
      ValueLit v = parse_value(cur_);
      context_.push_back({std::string(name.text), name.span, v});
    } while (cur_.match(TokenKind::Comma));
    have_context_ = true;
  }

  // Expression grammar (loosest first): if, or, and, not, comparison,
  // additive, multiplicative, unary minus, primary.
  std::shared_ptr<ExprNode> make(ExprOp op, std::vector<Expr> operands) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->operands = std::move(operands);
    return n;
  }

  void enter(int depth) {
    if (depth > kMaxDepth) cur_.fail(cur_.peek().span, "expression nested too deeply");
  }

  std::shared_ptr<ExprNode> parse_expr(int depth) {
    enter(depth);
    if (cur_.match(TokenKind::KwIf)) {
      auto cond = parse_expr(depth + 1);
      cur_.expect(TokenKind::KwThen, "after the condition");
      auto then_branch = parse_expr(depth + 1);
      cur_.expect(TokenKind::KwElse, "after the 'then' branch");
      auto else_branch = parse_expr(depth + 1);
      return make(ExprOp::IfThenElse, {cond, then_branch, else_branch});
    }
    return parse_or(depth + 1);
  }

  std::shared_ptr<ExprNode> parse_or(int depth) {
    auto lhs = parse_and(depth + 1);
    while (cur_.match(TokenKind::KwOr)) lhs = make(ExprOp::Or, {lhs, parse_and(depth + 1)});
    return lhs;
  }

  std::shared_ptr<ExprNode> parse_and(int depth) {
    auto lhs = parse_not(depth + 1);
    while (cur_.match(TokenKind::KwAnd)) lhs = make(ExprOp::And, {lhs, parse_not(depth + 1)});
    return lhs;
  }

  std::shared_ptr<ExprNode> parse_not(int depth) {
    enter(depth);
    if (cur_.match(TokenKind::KwNot)) return make(ExprOp::Not, {parse_not(depth + 1)});
    return parse_comparison(depth + 1);
  }

  std::shared_ptr<ExprNode> parse_comparison(int depth) {
    auto lhs = parse_additive(depth + 1);
    ExprOp op;
    switch (cur_.peek().kind) {
      case TokenKind::Eq: op = ExprOp::Eq; break;
      case TokenKind::Ne: op = ExprOp::Ne; break;
      case TokenKind::Lt: op = ExprOp::Lt; break;
      case TokenKind::Le: op = ExprOp::Le; break;
      case TokenKind::Gt: op = ExprOp::Gt; break;
      case TokenKind::Ge: op = ExprOp::Ge; break;
      default: return lhs;
    }
    cur_.advance();
    auto rhs = parse_additive(depth + 1);
    switch (cur_.peek().kind) {
      case TokenKind::Eq:
      case TokenKind::Ne:
      case TokenKind::Lt:
      case TokenKind::Le:
      case TokenKind::Gt:
      case TokenKind::Ge:
        cur_.fail(cur_.peek().span, "comparisons do not chain", "combine comparisons with 'and'");
      default:
        break;
    }
    return make(op, {lhs, rhs});
  }

  std::shared_ptr<ExprNode> parse_additive(int depth) {
    auto lhs = parse_multiplicative(depth + 1);
    while (true) {
      if (cur_.match(TokenKind::Plus)) {
        lhs = make(ExprOp::Add, {lhs, parse_multiplicative(depth + 1)});
      } else if (cur_.match(TokenKind::Minus)) {
        lhs = make(ExprOp::Sub, {lhs, parse_multiplicative(depth + 1)});
      } else {
        return lhs;
      }
    }
  }

  std::shared_ptr<ExprNode> parse_multiplicative(int depth) {
    auto lhs = parse_unary(depth + 1);
    while (cur_.match(TokenKind::Star)) lhs = make(ExprOp::Mul, {lhs, parse_unary(depth + 1)});
    return lhs;
  }

  std::shared_ptr<ExprNode> parse_unary(int depth) {
    enter(depth);
    if (cur_.at(TokenKind::Minus)) {
      const Token& minus = cur_.advance();
      auto operand = parse_unary(depth + 1);
      if (operand->op == ExprOp::Literal) {
        try {
          operand->literal = -operand->literal;
        } catch (const ArithmeticError&) {
          cur_.fail(minus.span, "value out of representable range");
        }
        return operand;
      }
      auto zero = std::make_shared<ExprNode>();
      return make(ExprOp::Sub, {zero, operand});
    }
    return parse_primary(depth + 1);
  }

  std::shared_ptr<ExprNode> parse_primary(int depth) {
    enter(depth);
    const Token& t = cur_.peek();
    switch (t.kind) {
      case TokenKind::Number: {
        cur_.advance();
        auto n = std::make_shared<ExprNode>();
        n->literal = t.number;
        return n;
      }
      case TokenKind::Ident: {
        cur_.advance();
        auto n = std::make_shared<ExprNode>();
        n->op = ExprOp::Variable;
        pending_.push_back({n.get(), std::string(t.text), t.span});
        return n;
      }
      case TokenKind::KwMin:
      case TokenKind::KwMax: {
        cur_.advance();
        cur_.expect(TokenKind::LParen, t.kind == TokenKind::KwMin ? "after 'min'" : "after 'max'");
        auto a = parse_expr(depth + 1);
        cur_.expect(TokenKind::Comma, "between arguments");
        auto b = parse_expr(depth + 1);
        cur_.expect(TokenKind::RParen, "to close the argument list");
        return make(t.kind == TokenKind::KwMin ? ExprOp::Min : ExprOp::Max, {a, b});
      }
      case TokenKind::LParen: {
        cur_.advance();
        auto inner = parse_expr(depth + 1);
        cur_.expect(TokenKind::RParen, "to close the parenthesis");
        return inner;
      }
      case TokenKind::KwIf:
        return parse_expr(depth + 1);
      default:
        cur_.fail(t.span, "expected an expression, found " + std::string(dsl::describe(t.kind)));
    }
  }

  // ------------------------------------------------------------ resolution

  void resolve() {
    std::map<std::string, std::size_t> seen;
    std::vector<VariableDecl> exo;
    std::vector<VariableDecl> endo;
    for (std::size_t i = 0; i < decls_.size(); ++i) {
      auto& d = decls_[i];
      if (auto it = seen.find(d.name); it != seen.end()) {
        error(DiagnosticCode::Duplicate, d.name_span, "variable '" + d.name + "' is declared twice");
        continue;
      }
      seen.emplace(d.name, i);
      VariableDecl vd{d.name, {}};
      for (const auto& v : d.range) {
        if (std::find(vd.range.begin(), vd.range.end(), v.value) != vd.range.end()) {
          error(DiagnosticCode::Duplicate, v.span,
                "range of '" + d.name + "' lists " + v.value.to_string() + " more than once");
        }
        vd.range.push_back(v.value);
      }
      if (d.endogenous) {
        endo_decl_.push_back(i);
        endo.push_back(std::move(vd));
      } else {
        exo_decl_.push_back(i);
        exo.push_back(std::move(vd));
      }
    }
    signature_ = Signature(std::move(exo), std::move(endo));

    std::vector<std::string> names;
    for (const auto& d : decls_) names.push_back(d.name);
    for (auto& p : pending_) {
      auto ref = signature_.find(p.name);
      if (!ref) {
        error(DiagnosticCode::UnknownName, p.span, "unknown variable '" + p.name + "'", closest(p.name, names));
        continue;
      }
      p.node->var = *ref;
    }

    for (auto i : endo_decl_) {
      const auto& d = decls_[i];
      if (d.frozen && d.body->op != ExprOp::Literal) {
        error(DiagnosticCode::Syntax, d.body_span, "frozen variable '" + d.name + "' must have a constant equation");
      }
    }

    context_values_.assign(signature_.exo_count(), Value{});
    std::vector<bool> assigned(signature_.exo_count(), false);
    for (const auto& c : context_) {
      auto ref = signature_.find(c.name);
      if (!ref) {
        error(DiagnosticCode::UnknownName, c.name_span, "unknown exogenous variable '" + c.name + "'",
              closest(c.name, names));
        continue;
      }
      if (ref->kind != VarKind::Exogenous) {
        error(DiagnosticCode::Syntax, c.name_span,
              "context assigns exogenous variables only; '" + c.name + "' is endogenous");
        continue;
      }
      if (assigned[ref->index]) {
        error(DiagnosticCode::Duplicate, c.name_span, "context assigns '" + c.name + "' more than once");
        continue;
      }
      assigned[ref->index] = true;
      if (!signature_.in_range(*ref, c.value.value)) {
        error(DiagnosticCode::Range, c.value.span,
              "context value " + c.value.value.to_string() + " is outside R(" + c.name +
                  ") = " + signature_.range_text(*ref));
        continue;
      }
      context_values_[ref->index] = c.value.value;
    }
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      if (!assigned[i]) {
        const auto& d = decls_[exo_decl_[i]];
        error(DiagnosticCode::MissingContext, have_context_ ? d.name_span : d.decl_span,
              "context does not assign exogenous variable '" + d.name + "'",
              "add '" + d.name + " = <value>' to the context line");
      }
    }
  }

  Span span_of(const std::string& name, bool body) const {
    for (const auto& d : decls_) {
      if (d.name == name) return body && d.endogenous ? d.body_span : d.name_span;
    }
    return {0, 0};
  }

  std::optional<CausalModel> build() {
    std::vector<Expr> functions;
    VarSet frozen;
    std::vector<Binding> frozen_bindings;
    for (std::size_t k = 0; k < endo_decl_.size(); ++k) {
      const auto& d = decls_[endo_decl_[k]];
      functions.push_back(d.body);
      if (d.frozen) frozen_bindings.push_back({k, d.body->literal});
    }
    CausalModel model(model_name_.value_or("model"), signature_, std::move(functions), context_values_);
    for (const auto& issue : model.issues()) {
      std::string first = issue.variables.empty() ? std::string() : issue.variables.front();
      Span span = first.empty() ? Span{0, 0} : span_of(first, issue.code == DiagnosticCode::Totality);
      std::optional<std::string> hint;
      if (issue.code == DiagnosticCode::Totality) hint = "clamp the equation into range, e.g. max(0, ...)";
      error(issue.code, span, issue.message, hint);
    }
    if (!model.valid()) return std::nullopt;
    if (frozen_bindings.empty()) return model;
    return intervene(model, Assignment(std::move(frozen_bindings)));
  }

  std::string_view text_;
  TokenCursor cur_;
  std::vector<std::size_t> frozen_markers_;
  std::optional<std::string> model_name_;
  std::vector<VarDeclSrc> decls_;
  std::vector<ContextEntry> context_;
  bool have_context_ = false;
  std::vector<PendingRef> pending_;
  std::vector<std::size_t> exo_decl_;
  std::vector<std::size_t> endo_decl_;
  Signature signature_;
  std::vector<Value> context_values_;
};

// ---------------------------------------------------------------- formulas

class FormulaParser {
public:
  FormulaParser(dsl::LexResult lexed, const Signature& sig, std::vector<Diagnostic>& diags)
      : cur_(std::move(lexed.tokens), diags), sig_(sig) {}

  std::optional<Formula> run() {
    Formula f;
    try {
      if (cur_.at(TokenKind::LBracket)) f.intervention = parse_intervention();
      f.matrix = parse_or(0);
      if (!cur_.at(TokenKind::Eof)) {
        if (cur_.at(TokenKind::LBracket)) nested(cur_.peek().span);
        cur_.fail(cur_.peek().span, "unexpected " + std::string(dsl::describe(cur_.peek().kind)) + " after formula");
      }
    } catch (const SyntaxAbort&) {
      return std::nullopt;
    }
    if (!cur_.diags().empty()) return std::nullopt;
    return f;
  }

private:
  [[noreturn]] void nested(Span span) {
    cur_.diags().push_back({Severity::Error, DiagnosticCode::NestedIntervention, span,
                            "nested interventions are not supported",
                            "merge all assignments into the single leading [X := x, ...] block"});
    throw SyntaxAbort{};
  }

  void error(DiagnosticCode code, Span span, std::string message) {
    cur_.diags().push_back({Severity::Error, code, span, std::move(message), std::nullopt});
  }

  std::vector<std::string> endo_names() const {
    std::vector<std::string> out;
    for (const auto& d : sig_.endogenous()) out.push_back(d.name);
    return out;
  }

  std::optional<std::size_t> resolve_endo(const Token& name, std::string_view role) {
    auto ref = sig_.find(name.text);
    if (!ref) {
      cur_.diags().push_back({Severity::Error, DiagnosticCode::UnknownName, name.span,
                              "unknown variable '" + std::string(name.text) + "'",
                              closest(name.text, endo_names())});
      return std::nullopt;
    }
    if (ref->kind == VarKind::Exogenous) {
      error(DiagnosticCode::ExogenousTarget, name.span,
            std::string(role) + " must mention endogenous variables; '" + std::string(name.text) + "' is exogenous");
      return std::nullopt;
    }
    return ref->index;
  }

  Assignment parse_intervention() {
    cur_.advance();
    std::vector<Binding> bindings;
    VarSet seen;
    do {
      const Token& name = cur_.expect(TokenKind::Ident, "(intervened variable)");
      cur_.expect(TokenKind::Assign, "in the intervention");
      ValueLit v = parse_value(cur_);
      auto var = resolve_endo(name, "interventions");
      if (!var) continue;
      if (seen.contains(*var)) {
        error(DiagnosticCode::Duplicate, name.span, "'" + std::string(name.text) + "' is assigned twice");
        continue;
      }
      seen.insert(*var);
      VarRef ref{VarKind::Endogenous, *var};
      if (!sig_.in_range(ref, v.value)) {
        error(DiagnosticCode::Range, v.span,
              "[" + std::string(name.text) + " := " + v.value.to_string() + "] is not defined: " +
                  v.value.to_string() + " is outside R(" + std::string(name.text) + ") = " + sig_.range_text(ref));
        continue;
      }
      bindings.push_back({*var, v.value});
    } while (cur_.match(TokenKind::Comma));
    cur_.expect(TokenKind::RBracket, "to close the intervention");
    if (!cur_.diags().empty()) throw SyntaxAbort{};
    return Assignment(std::move(bindings));
  }

  void enter(int depth) {
    if (depth > kMaxDepth) cur_.fail(cur_.peek().span, "formula nested too deeply");
  }

  Matrix parse_or(int depth) {
    enter(depth);
    Matrix lhs = parse_and(depth + 1);
    while (cur_.match(TokenKind::Pipe)) lhs = fm::disj(lhs, parse_and(depth + 1));
    return lhs;
  }

  Matrix parse_and(int depth) {
    Matrix lhs = parse_not(depth + 1);
    while (cur_.match(TokenKind::Amp)) lhs = fm::conj(lhs, parse_not(depth + 1));
    return lhs;
  }

  Matrix parse_not(int depth) {
    enter(depth);
    if (cur_.match(TokenKind::Bang)) return fm::negate(parse_not(depth + 1));
    return parse_primary(depth + 1);
  }

  Matrix parse_primary(int depth) {
    if (cur_.at(TokenKind::LBracket)) nested(cur_.peek().span);
    cur_.expect(TokenKind::LParen, "(an atom '(V = v)' or a parenthesized formula)");
    if (cur_.at(TokenKind::Ident) && cur_.peek(1).kind == TokenKind::Eq) {
      const Token& name = cur_.advance();
      cur_.advance();
      ValueLit v = parse_value(cur_);
      cur_.expect(TokenKind::RParen, "to close the atom");
      auto var = resolve_endo(name, "atoms");
      if (!var) return fm::atom(0, Value{});
      VarRef ref{VarKind::Endogenous, *var};
      if (!sig_.in_range(ref, v.value)) {
        error(DiagnosticCode::Range, v.span,
              "(" + std::string(name.text) + " = " + v.value.to_string() + ") is not defined: " +
                  v.value.to_string() + " is outside R(" + std::string(name.text) + ") = " + sig_.range_text(ref));
      }
      return fm::atom(*var, v.value);
    }
    Matrix inner = parse_or(depth + 1);
    cur_.expect(TokenKind::RParen, "to close the parenthesis");
    return inner;
  }

  TokenCursor cur_;
  const Signature& sig_;
};

}  // namespace

ParseResult<CausalModel> parse_model(std::string_view text) {
  ParseResult<CausalModel> out;
  auto lexed = dsl::lex(text);
  if (!lexed.diagnostics.empty()) {
    out.diagnostics = std::move(lexed.diagnostics);
    return out;
  }
  try {
    ModelParser parser(text, std::move(lexed), out.diagnostics);
    out.value = parser.run();
  } catch (const Error& e) {
    out.value.reset();
    out.diagnostics.push_back({Severity::Error, DiagnosticCode::Syntax, {0, 0}, e.what(), std::nullopt});
  }
  if (out.value) out.diagnostics.clear();
  if (!out.value && out.diagnostics.empty()) {
    out.diagnostics.push_back({Severity::Error, DiagnosticCode::Syntax, {0, 0}, "model could not be parsed", {}});
  }
  return out;
}

ParseResult<Formula> parse_formula(std::string_view text, const Signature& sig) {
  ParseResult<Formula> out;
  auto lexed = dsl::lex(text);
  if (!lexed.diagnostics.empty()) {
    out.diagnostics = std::move(lexed.diagnostics);
    return out;
  }
  FormulaParser parser(std::move(lexed), sig, out.diagnostics);
  out.value = parser.run();
  if (!out.value && out.diagnostics.empty()) {
    out.diagnostics.push_back({Severity::Error, DiagnosticCode::Syntax, {0, 0}, "formula could not be parsed", {}});
  }
  return out;
}

}  // namespace actual_cause
