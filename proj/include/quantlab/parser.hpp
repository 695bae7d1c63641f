#pragma once

// Expression front-end for classical observables.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint | uint '/' uint | symbol | '(' expr ')' | '-' factor
//   symbol := i | hbar | omega | sqrt2 | x | y | px | py
//
// Whitespace is ignored; multiplication must be explicit. A rational literal
// is written without spaces around '/'.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "quantlab/phase_poly.hpp"

namespace quantlab {

enum class SymbolKind { I, Hbar, Omega, Sqrt2, X, Y, PX, PY };

std::string_view symbol_name(SymbolKind s);

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

namespace ast {
struct Literal {
  Rational value;
};
struct Symbol {
  SymbolKind kind;
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // '+', '-' or '*'
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Power {
  ExprPtr base;
  unsigned exponent;
};
struct Group {
  ExprPtr inner;
};
}  // namespace ast

struct ExprNode {
  std::variant<ast::Literal, ast::Symbol, ast::Negate, ast::Binary, ast::Power, ast::Group> node;
};

struct ExprAST {
  ExprPtr root;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class UnknownSymbolError : public ParseError {
 public:
  using ParseError::ParseError;
};

ExprAST parse(std::string_view text);

PhasePoly lower(const ExprAST& ast);

/// parse followed by lower.
PhasePoly parse_poly(std::string_view text);

}  // namespace quantlab
