#include "expr/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>

namespace blab {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Semi, End };

struct Token {
  Tok kind = Tok::End;
  double number = 0.0;
  bool imaginary = false;  // number carried an 'i' suffix
  std::string ident;
  int column = 0;  // 1-based position in the input
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_ = Token{};
    current_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Tok::Plus; ++pos_; return;
      case '-': current_.kind = Tok::Minus; ++pos_; return;
      case '*': current_.kind = Tok::Star; ++pos_; return;
      case '/': current_.kind = Tok::Slash; ++pos_; return;
      case '^': current_.kind = Tok::Caret; ++pos_; return;
      case '(': current_.kind = Tok::LParen; ++pos_; return;
      case ')': current_.kind = Tok::RParen; ++pos_; return;
      case ';': current_.kind = Tok::Semi; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.data() + pos_;
      char* end = nullptr;
      current_.number = std::strtod(begin, &end);
      if (end == begin)
        fail(ErrorCode::Parse,
             "syntax error at column " + std::to_string(current_.column));
      pos_ += static_cast<std::size_t>(end - begin);
      // "0.5i" is one imaginary literal as long as the 'i' does not start an
      // identifier ("0.5im" lexes as 0.5 * im... which is rejected later).
      if (pos_ < text_.size() && text_[pos_] == 'i' &&
          (pos_ + 1 >= text_.size() ||
           !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
        current_.imaginary = true;
        ++pos_;
      }
      current_.kind = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_.kind = Tok::Ident;
      current_.ident = std::string(text_.substr(start, pos_ - start));
      return;
    }
    fail(ErrorCode::Parse, "syntax error at column " + std::to_string(current_.column));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  FunctionSpec parse() {
    // A lone constructor form produces its dedicated kind directly.
    if (lex_.peek().kind == Tok::Ident &&
        (lex_.peek().ident == "blaschke" || lex_.peek().ident == "poly")) {
      Token name = lex_.take();
      FunctionSpec ctor = constructor_spec(name.ident);
      if (lex_.peek().kind == Tok::End) return ctor;
      // Part of a larger expression: continue with an embedded node.
      int node = ast_.add_embedded(std::make_shared<FunctionSpec>(std::move(ctor)));
      int root = continue_expr(node);
      expect(Tok::End, "end of input");
      ast_.set_root(root);
      return FunctionSpec::expression(std::move(ast_));
    }
    int root = expr();
    expect(Tok::End, "end of input");
    ast_.set_root(root);
    // Plain monomial sums canonicalize to the Polynomial kind; factored forms
    // keep their tree so multiple zeros stay exact, and real constants stay
    // expressions so they keep value (not log-modulus) sampling semantics.
    if (ast_.is_monomial_sum())
      if (auto coeffs = ast_.as_polynomial(); coeffs && coeffs->size() > 1)
        return FunctionSpec::polynomial(std::move(*coeffs));
    return FunctionSpec::expression(std::move(ast_));
  }

  Complex parse_literal() {
    int root = expr();
    expect(Tok::End, "end of input");
    ast_.set_root(root);
    return const_eval(root);
  }

 private:
  [[noreturn]] void error_at(const Token& t, const std::string& what) {
    fail(ErrorCode::Parse, what + " at column " + std::to_string(t.column));
  }

  void expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind)
      error_at(lex_.peek(), "syntax error (expected " + what + ")");
    if (kind != Tok::End) lex_.take();
  }

  Complex constant_arg() {
    int node = expr();
    return const_eval(node);
  }

  FunctionSpec constructor_spec(const std::string& name) {
    expect(Tok::LParen, "(");
    std::vector<Complex> args;
    if (lex_.peek().kind != Tok::RParen) {
      args.push_back(constant_arg());
      while (lex_.peek().kind == Tok::Semi) {
        lex_.take();
        args.push_back(constant_arg());
      }
    }
    expect(Tok::RParen, ")");
    if (name == "blaschke") {
      std::vector<ZeroAtom> zeros;
      zeros.reserve(args.size());
      for (Complex a : args) zeros.push_back(ZeroAtom{a, 1});
      return FunctionSpec::blaschke(std::move(zeros));
    }
    return FunctionSpec::polynomial(std::move(args));
  }

  // Finishes expr/term/power chains that started with an already-built node.
  int continue_expr(int first) {
    int lhs = continue_term(first);
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      Tok op = lex_.take().kind;
      int rhs = term();
      lhs = ast_.add(AstNode{op == Tok::Plus ? NodeOp::Add : NodeOp::Sub,
                             Complex{}, 0, lhs, rhs});
    }
    return lhs;
  }

  int continue_term(int first) {
    int lhs = continue_power(first);
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      Tok op = lex_.take().kind;
      int rhs = unary();
      lhs = ast_.add(AstNode{op == Tok::Star ? NodeOp::Mul : NodeOp::Div,
                             Complex{}, 0, lhs, rhs});
    }
    return lhs;
  }

  int continue_power(int base) {
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      if (lex_.peek().kind != Tok::Number || lex_.peek().imaginary)
        error_at(lex_.peek(), "integer exponent expected");
      Token e = lex_.take();
      double rounded = std::round(e.number);
      if (rounded != e.number || rounded < 0 || rounded > 4096)
        error_at(e, "exponent must be a nonnegative integer");
      base = ast_.add(AstNode{NodeOp::Pow, Complex{}, static_cast<int>(rounded),
                              base, -1});
    }
    return base;
  }

  Complex const_eval(int node) {
    if (depends_on_z(node))
      error_at(lex_.peek(), "constant expected (argument must not contain z)");
    return ast_.eval_subtree(node);
  }

  bool depends_on_z(int idx) {
    const AstNode& n = ast_.at(idx);
    if (n.op == NodeOp::Var) return true;
    if (n.lhs >= 0 && depends_on_z(n.lhs)) return true;
    if (n.rhs >= 0 && depends_on_z(n.rhs)) return true;
    return false;
  }

  int expr() {
    int lhs = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      Tok op = lex_.take().kind;
      int rhs = term();
      lhs = ast_.add(AstNode{op == Tok::Plus ? NodeOp::Add : NodeOp::Sub,
                             Complex{}, 0, lhs, rhs});
    }
    return lhs;
  }

  int term() {
    int lhs = unary();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      Tok op = lex_.take().kind;
      int rhs = unary();
      lhs = ast_.add(AstNode{op == Tok::Star ? NodeOp::Mul : NodeOp::Div,
                             Complex{}, 0, lhs, rhs});
    }
    return lhs;
  }

  int unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      int operand = unary();
      return ast_.add(AstNode{NodeOp::Neg, Complex{}, 0, operand, -1});
    }
    return power();
  }

  int power() {
    int base = primary();
    if (lex_.peek().kind == Tok::Caret) {
      Token caret = lex_.take();
      if (lex_.peek().kind != Tok::Number || lex_.peek().imaginary)
        error_at(lex_.peek(), "integer exponent expected");
      Token e = lex_.take();
      double rounded = std::round(e.number);
      if (rounded != e.number || rounded < 0 || rounded > 4096)
        error_at(e, "exponent must be a nonnegative integer");
      base = ast_.add(AstNode{NodeOp::Pow, Complex{}, static_cast<int>(rounded),
                              base, -1});
    }
    return base;
  }

  int primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        Token num = lex_.take();
        Complex v = num.imaginary ? Complex{0.0, num.number} : Complex{num.number, 0.0};
        return ast_.add(AstNode{NodeOp::Constant, v, 0, -1, -1});
      }
      case Tok::LParen: {
        lex_.take();
        int inner = expr();
        expect(Tok::RParen, ")");
        return inner;
      }
      case Tok::Ident: {
        Token id = lex_.take();
        if (id.ident == "z")
          return ast_.add(AstNode{NodeOp::Var, Complex{}, 0, -1, -1});
        if (id.ident == "i")
          return ast_.add(AstNode{NodeOp::Constant, Complex{0.0, 1.0}, 0, -1, -1});
        if (id.ident == "blaschke" || id.ident == "poly") {
          FunctionSpec ctor = constructor_spec(id.ident);
          return ast_.add_embedded(std::make_shared<FunctionSpec>(std::move(ctor)));
        }
        NodeOp op;
        if (id.ident == "exp") op = NodeOp::Exp;
        else if (id.ident == "logabs") op = NodeOp::LogAbs;
        else if (id.ident == "abs") op = NodeOp::Abs;
        else if (id.ident == "conj") op = NodeOp::Conj;
        else if (id.ident == "re") op = NodeOp::Re;
        else if (id.ident == "im") op = NodeOp::Im;
        else
          error_at(id, "unknown identifier '" + id.ident + "'");
        expect(Tok::LParen, "(");
        int arg = expr();
        if (lex_.peek().kind == Tok::Semi)
          error_at(lex_.peek(), "arity mismatch (one argument expected)");
        expect(Tok::RParen, ")");
        return ast_.add(AstNode{op, Complex{}, 0, arg, -1});
      }
      default:
        error_at(t, "syntax error");
    }
  }

  Lexer lex_;
  Ast ast_;
};

}  // namespace

FunctionSpec parse_function(std::string_view text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty function text");
  Parser parser(text);
  return parser.parse().with_source_text(std::string(text));
}

Complex parse_complex(std::string_view text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty complex literal");
  Parser parser(text);
  return parser.parse_literal();
}

}  // namespace blab
