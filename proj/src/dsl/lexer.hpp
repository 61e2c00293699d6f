#pragma once

#include <string_view>
#include <vector>

#include "actual_cause/dsl.hpp"

namespace actual_cause::dsl {

enum class TokenKind {
  Ident,
  Number,
  KwModel,
  KwExo,
  KwVar,
  KwIn,
  KwContext,
  KwIf,
  KwThen,
  KwElse,
  KwAnd,
  KwOr,
  KwNot,
  KwMin,
  KwMax,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Assign,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Plus,
  Minus,
  Star,
  Bang,
  Amp,
  Pipe,
  Eof,
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  Span span;
  std::string_view text;
  Value number;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by Eof
  std::vector<Diagnostic> diagnostics;
  /// Byte offsets of `# frozen` comments.
  std::vector<std::size_t> frozen_markers;
};

LexResult lex(std::string_view text);

std::string_view describe(TokenKind kind);

}  // namespace actual_cause::dsl
