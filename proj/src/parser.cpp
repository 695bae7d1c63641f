#include "quantlab/parser.hpp"

#include <array>
#include <cctype>
#include <climits>

namespace quantlab {

namespace {

constexpr std::array<std::pair<std::string_view, SymbolKind>, 8> kSymbols{{
    {"i", SymbolKind::I},
    {"hbar", SymbolKind::Hbar},
    {"omega", SymbolKind::Omega},
    {"sqrt2", SymbolKind::Sqrt2},
    {"x", SymbolKind::X},
    {"y", SymbolKind::Y},
    {"px", SymbolKind::PX},
    {"py", SymbolKind::PY},
}};

std::string legal_symbols() {
  std::string out;
  for (const auto& [name, kind] : kSymbols) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    const std::size_t line = line_;
    const std::size_t col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "<end of input>", line, col};

    const char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string text = digits();
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        advance();
        text += "/" + digits();
      }
      return {Tok::Number, text, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        text += src_[pos_];
        advance();
      }
      return {Tok::Ident, text, line, col};
    }
    advance();
    switch (ch) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      default:
        throw ParseError("unexpected character", line, col, std::string(1, ch));
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      advance();
    }
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

ExprPtr make(auto node) {
  auto out = std::make_unique<ExprNode>();
  out->node = std::move(node);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

  ExprAST parse_all() {
    ExprPtr root = expr();
    if (current_.kind != Tok::End) fail("unexpected token");
    return ExprAST{std::move(root)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, current_.line, current_.column, current_.text);
  }

  Token take() {
    Token t = current_;
    current_ = lexer_.next();
    return t;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      const char op = take().kind == Tok::Plus ? '+' : '-';
      ExprPtr rhs = term();
      lhs = make(ast::Binary{op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (current_.kind == Tok::Star) {
      take();
      ExprPtr rhs = factor();
      lhs = make(ast::Binary{'*', std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (current_.kind != Tok::Caret) return b;
    take();
    if (current_.kind != Tok::Number || current_.text.find('/') != std::string::npos) {
      fail("exponent must be a nonnegative integer literal");
    }
    const mpz_class e(current_.text);
    if (!e.fits_uint_p()) fail("exponent too large");
    take();
    return make(ast::Power{std::move(b), static_cast<unsigned>(e.get_ui())});
  }

  ExprPtr base() {
    switch (current_.kind) {
      case Tok::Number: {
        const Token t = take();
        Rational value;
        const auto slash = t.text.find('/');
        if (slash == std::string::npos) {
          value = Rational(mpz_class(t.text));
        } else {
          const mpz_class den(t.text.substr(slash + 1));
          if (den == 0) throw ParseError("zero denominator", t.line, t.column, t.text);
          value = Rational(mpz_class(t.text.substr(0, slash)), den);
          value.canonicalize();
        }
        return make(ast::Literal{value});
      }
      case Tok::Ident: {
        for (const auto& [name, kind] : kSymbols) {
          if (current_.text == name) {
            take();
            return make(ast::Symbol{kind});
          }
        }
        throw UnknownSymbolError("unknown symbol (legal symbols: " + legal_symbols() + ")",
                                 current_.line, current_.column, current_.text);
      }
      case Tok::LParen: {
        take();
        ExprPtr inner = expr();
        if (current_.kind != Tok::RParen) fail("expected ')'");
        take();
        return make(ast::Group{std::move(inner)});
      }
      case Tok::Minus:
        // Negation covers the whole power: -x^2 is -(x^2).
        take();
        return make(ast::Negate{factor()});
      default:
        fail("expected a number, symbol, '(' or '-'");
    }
  }

  Lexer lexer_;
  Token current_;
};

PhasePoly lower_node(const ExprNode& node) {
  return std::visit(
      [](const auto& n) -> PhasePoly {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Literal>) {
          return PhasePoly(Coefficient(n.value));
        } else if constexpr (std::is_same_v<T, ast::Symbol>) {
          switch (n.kind) {
            case SymbolKind::I: return PhasePoly(Coefficient::i());
            case SymbolKind::Hbar: return PhasePoly(Coefficient::hbar());
            case SymbolKind::Omega: return PhasePoly(Coefficient::omega());
            case SymbolKind::Sqrt2: return PhasePoly(Coefficient::sqrt2());
            case SymbolKind::X: return vars::x();
            case SymbolKind::Y: return vars::y();
            case SymbolKind::PX: return vars::px();
            case SymbolKind::PY: return vars::py();
          }
          return {};
        } else if constexpr (std::is_same_v<T, ast::Negate>) {
          return -lower_node(*n.operand);
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          PhasePoly l = lower_node(*n.lhs);
          PhasePoly r = lower_node(*n.rhs);
          if (n.op == '+') return l + r;
          if (n.op == '-') return l - r;
          return l * r;
        } else if constexpr (std::is_same_v<T, ast::Power>) {
          return pow(lower_node(*n.base), n.exponent);
        } else {
          return lower_node(*n.inner);
        }
      },
      node.node);
}

}  // namespace

std::string_view symbol_name(SymbolKind s) {
  for (const auto& [name, kind] : kSymbols) {
    if (kind == s) return name;
  }
  return "?";
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::string token)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": '" + token + "'"),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

ExprAST parse(std::string_view text) { return Parser(text).parse_all(); }

PhasePoly lower(const ExprAST& ast) { return lower_node(*ast.root); }

PhasePoly parse_poly(std::string_view text) { return lower(parse(text)); }

}  // namespace quantlab
