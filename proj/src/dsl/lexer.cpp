#include "lexer.hpp"

#include <array>
#include <utility>

namespace actual_cause::dsl {
namespace {

constexpr std::size_t kMaxLexicalErrors = 20;

constexpr std::array<std::pair<std::string_view, TokenKind>, 13> kKeywords{{
    {"model", TokenKind::KwModel},
    {"exo", TokenKind::KwExo},
    {"var", TokenKind::KwVar},
    {"in", TokenKind::KwIn},
    {"context", TokenKind::KwContext},
    {"if", TokenKind::KwIf},
    {"then", TokenKind::KwThen},
    {"else", TokenKind::KwElse},
    {"and", TokenKind::KwAnd},
    {"or", TokenKind::KwOr},
    {"not", TokenKind::KwNot},
    {"min", TokenKind::KwMin},
    {"max", TokenKind::KwMax},
}};

bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

LexResult lex(std::string_view text) {
  LexResult out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    out.tokens.push_back({kind, {begin, end}, text.substr(begin, end - begin), {}});
  };
  while (i < n && out.diagnostics.size() < kMaxLexicalErrors) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      std::size_t end = text.find('\n', i);
      if (end == std::string_view::npos) end = n;
      if (trim(text.substr(i + 1, end - i - 1)) == "frozen") out.frozen_markers.push_back(i);
      i = end;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < n && is_ident_char(text[i])) ++i;
      std::string_view word = text.substr(start, i - start);
      TokenKind kind = TokenKind::Ident;
      for (const auto& [kw, k] : kKeywords) {
        if (kw == word) kind = k;
      }
      push(kind, start, i);
      continue;
    }
    if (is_digit(c)) {
      std::size_t start = i;
      while (i < n && is_digit(text[i])) ++i;
      if (i + 1 < n && (text[i] == '.' || text[i] == '/') && is_digit(text[i + 1])) {
        ++i;
        while (i < n && is_digit(text[i])) ++i;
      }
      if (i < n && (is_ident_char(text[i]) || text[i] == '.' || text[i] == '/')) {
        while (i < n && (is_ident_char(text[i]) || text[i] == '.' || text[i] == '/')) ++i;
        out.diagnostics.push_back({Severity::Error, DiagnosticCode::Lexical, {start, i},
                                   "malformed number '" + std::string(text.substr(start, i - start)) + "'",
                                   "write values as integers, p/q, or finite decimals such as 0.5"});
        continue;
      }
      std::string_view literal = text.substr(start, i - start);
      auto value = Rational::parse(literal);
      if (!value) {
        out.diagnostics.push_back({Severity::Error, DiagnosticCode::Lexical, {start, i},
                                   "invalid number '" + std::string(literal) + "'",
                                   "denominators must be nonzero and values must fit in 64 bits"});
        continue;
      }
      push(TokenKind::Number, start, i);
      out.tokens.back().number = *value;
      continue;
    }
    auto two = [&](char next) { return i + 1 < n && text[i + 1] == next; };
    std::size_t start = i;
    TokenKind kind;
    std::size_t len = 1;
    switch (c) {
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ',': kind = TokenKind::Comma; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '&': kind = TokenKind::Amp; break;
      case '|': kind = TokenKind::Pipe; break;
      case '=': kind = TokenKind::Eq; break;
      case ':':
        if (!two('=')) {
          out.diagnostics.push_back({Severity::Error, DiagnosticCode::Lexical, {i, i + 1}, "unexpected ':'",
                                     "assignments are written ':='"});
          ++i;
          continue;
        }
        kind = TokenKind::Assign;
        len = 2;
        break;
      case '!':
        kind = two('=') ? TokenKind::Ne : TokenKind::Bang;
        len = two('=') ? 2 : 1;
        break;
      case '<':
        kind = two('=') ? TokenKind::Le : TokenKind::Lt;
        len = two('=') ? 2 : 1;
        break;
      case '>':
        kind = two('=') ? TokenKind::Ge : TokenKind::Gt;
        len = two('=') ? 2 : 1;
        break;
      default: {
        std::optional<std::string> hint;
        if (c == '/') hint = "rational literals are written without spaces, e.g. 1/2";
        std::string shown = (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f)
                                ? std::string("'") + c + "'"
                                : "byte 0x" + std::string(1, "0123456789abcdef"[(c >> 4) & 0xf]) +
                                      std::string(1, "0123456789abcdef"[c & 0xf]);
        out.diagnostics.push_back(
            {Severity::Error, DiagnosticCode::Lexical, {i, i + 1}, "unexpected character " + shown, hint});
        ++i;
        continue;
      }
    }
    i += len;
    push(kind, start, i);
  }
  out.tokens.push_back({TokenKind::Eof, {n, n}, {}, {}});
  return out;
}

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::KwModel: return "'model'";
    case TokenKind::KwExo: return "'exo'";
    case TokenKind::KwVar: return "'var'";
    case TokenKind::KwIn: return "'in'";
    case TokenKind::KwContext: return "'context'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwThen: return "'then'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwAnd: return "'and'";
    case TokenKind::KwOr: return "'or'";
    case TokenKind::KwNot: return "'not'";
    case TokenKind::KwMin: return "'min'";
    case TokenKind::KwMax: return "'max'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Assign: return "':='";
    case TokenKind::Eq: return "'='";
    case TokenKind::Ne: return "'!='";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Le: return "'<='";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Ge: return "'>='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::Eof: return "end of input";
  }
  return "token";
}

}  // namespace actual_cause::dsl
