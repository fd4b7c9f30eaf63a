#include "expr/ast.hpp"

#include <cmath>

#include "expr/function_spec.hpp"

namespace blab {

int Ast::add_embedded(std::shared_ptr<const FunctionSpec> spec) {
  embedded_.push_back(std::move(spec));
  AstNode node;
  node.op = NodeOp::Embedded;
  node.embedded = static_cast<int>(embedded_.size()) - 1;
  return add(node);
}

const FunctionSpec& Ast::embedded_at(int idx) const {
  return *embedded_[static_cast<std::size_t>(idx)];
}

int Ast::add(AstNode node) {
  nodes_.push_back(node);
  root_ = static_cast<int>(nodes_.size()) - 1;
  return root_;
}

Complex Ast::eval(Complex z) const {
  if (root_ < 0) fail(ErrorCode::Eval, "empty expression");
  return eval_node(root_, z);
}

Complex Ast::eval_node(int idx, Complex z) const {
  const AstNode& n = at(idx);
  switch (n.op) {
    case NodeOp::Constant: return n.value;
    case NodeOp::Var: return z;
    case NodeOp::Embedded: return embedded_at(n.embedded).eval(z);
    case NodeOp::Add: return eval_node(n.lhs, z) + eval_node(n.rhs, z);
    case NodeOp::Sub: return eval_node(n.lhs, z) - eval_node(n.rhs, z);
    case NodeOp::Mul: return eval_node(n.lhs, z) * eval_node(n.rhs, z);
    case NodeOp::Div: return eval_node(n.lhs, z) / eval_node(n.rhs, z);
    case NodeOp::Pow: {
      // Integer power by repeated squaring; exponent >= 0 enforced at parse.
      Complex base = eval_node(n.lhs, z);
      Complex acc{1.0, 0.0};
      int e = n.exponent;
      while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
      }
      return acc;
    }
    case NodeOp::Neg: return -eval_node(n.lhs, z);
    case NodeOp::Exp: return std::exp(eval_node(n.lhs, z));
    case NodeOp::LogAbs: {
      Complex w = eval_node(n.lhs, z);
      double a = std::abs(w);
      return Complex{a == 0.0 ? kNegInf : std::log(a), 0.0};
    }
    case NodeOp::Abs: return Complex{std::abs(eval_node(n.lhs, z)), 0.0};
    case NodeOp::Conj: return std::conj(eval_node(n.lhs, z));
    case NodeOp::Re: return Complex{eval_node(n.lhs, z).real(), 0.0};
    case NodeOp::Im: return Complex{eval_node(n.lhs, z).imag(), 0.0};
  }
  fail(ErrorCode::Eval, "corrupt expression node");
}

bool Ast::real_valued() const {
  if (root_ < 0) return false;
  return real_node(root_);
}

bool Ast::real_node(int idx) const {
  const AstNode& n = at(idx);
  switch (n.op) {
    case NodeOp::Constant: return n.value.imag() == 0.0;
    case NodeOp::Var: return false;
    case NodeOp::Embedded: return false;
    case NodeOp::Add:
    case NodeOp::Sub:
    case NodeOp::Mul:
    case NodeOp::Div:
      return real_node(n.lhs) && real_node(n.rhs);
    case NodeOp::Pow:
    case NodeOp::Neg:
    case NodeOp::Exp:
    case NodeOp::Conj:
      return real_node(n.lhs);
    case NodeOp::LogAbs:
    case NodeOp::Abs:
    case NodeOp::Re:
    case NodeOp::Im:
      return true;
  }
  return false;
}

std::string Ast::print() const {
  if (root_ < 0) return "";
  return print_node(root_, true);
}

std::string Ast::print_node(int idx, bool top) const {
  const AstNode& n = at(idx);
  auto wrap = [top](const std::string& s) { return top ? s : "(" + s + ")"; };
  switch (n.op) {
    case NodeOp::Constant: {
      char buf[160];
      const double re = n.value.real(), im = n.value.imag();
      if (im == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", re);
        return re < 0 && !top ? "(" + std::string(buf) + ")" : buf;
      }
      if (re == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17gi", im);
        return im < 0 && !top ? "(" + std::string(buf) + ")" : buf;
      }
      std::snprintf(buf, sizeof(buf), "(%.17g%s%.17gi)", re, im < 0 ? "" : "+", im);
      return buf;
    }
    case NodeOp::Var: return "z";
    case NodeOp::Embedded: return embedded_at(n.embedded).print();
    case NodeOp::Add: return wrap(print_node(n.lhs, false) + "+" + print_node(n.rhs, false));
    case NodeOp::Sub: return wrap(print_node(n.lhs, false) + "-" + print_node(n.rhs, false));
    case NodeOp::Mul: return wrap(print_node(n.lhs, false) + "*" + print_node(n.rhs, false));
    case NodeOp::Div: return wrap(print_node(n.lhs, false) + "/" + print_node(n.rhs, false));
    case NodeOp::Pow:
      return wrap(print_node(n.lhs, false) + "^" + std::to_string(n.exponent));
    case NodeOp::Neg: return wrap("-" + print_node(n.lhs, false));
    case NodeOp::Exp: return "exp(" + print_node(n.lhs, true) + ")";
    case NodeOp::LogAbs: return "logabs(" + print_node(n.lhs, true) + ")";
    case NodeOp::Abs: return "abs(" + print_node(n.lhs, true) + ")";
    case NodeOp::Conj: return "conj(" + print_node(n.lhs, true) + ")";
    case NodeOp::Re: return "re(" + print_node(n.lhs, true) + ")";
    case NodeOp::Im: return "im(" + print_node(n.lhs, true) + ")";
  }
  return "";
}

namespace {

using Coeffs = std::vector<Complex>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == Complex{0.0, 0.0}) c.pop_back();
}

std::optional<Coeffs> poly_mul(const Coeffs& a, const Coeffs& b, int max_degree) {
  if (a.empty() || b.empty()) return Coeffs{};
  if (static_cast<int>(a.size() + b.size()) - 2 > max_degree) return std::nullopt;
  Coeffs out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::optional<Coeffs> poly_of_node(const Ast& ast, int idx, int max_degree);

std::optional<Coeffs> poly_of_node(const Ast& ast, int idx, int max_degree) {
  const AstNode& n = ast.at(idx);
  switch (n.op) {
    case NodeOp::Constant:
      if (n.value == Complex{0.0, 0.0}) return Coeffs{};
      return Coeffs{n.value};
    case NodeOp::Var: return Coeffs{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    case NodeOp::Add:
    case NodeOp::Sub: {
      auto a = poly_of_node(ast, n.lhs, max_degree);
      auto b = poly_of_node(ast, n.rhs, max_degree);
      if (!a || !b) return std::nullopt;
      Coeffs out = *a;
      if (out.size() < b->size()) out.resize(b->size(), Complex{0.0, 0.0});
      for (std::size_t i = 0; i < b->size(); ++i) {
        if (n.op == NodeOp::Add)
          out[i] += (*b)[i];
        else
          out[i] -= (*b)[i];
      }
      trim(out);
      return out;
    }
    case NodeOp::Mul: {
      auto a = poly_of_node(ast, n.lhs, max_degree);
      auto b = poly_of_node(ast, n.rhs, max_degree);
      if (!a || !b) return std::nullopt;
      return poly_mul(*a, *b, max_degree);
    }
    case NodeOp::Div: {
      auto a = poly_of_node(ast, n.lhs, max_degree);
      if (!a) return std::nullopt;
      const AstNode& d = ast.at(n.rhs);
      if (d.op != NodeOp::Constant || d.value == Complex{0.0, 0.0}) return std::nullopt;
      for (auto& c : *a) c /= d.value;
      return a;
    }
    case NodeOp::Pow: {
      auto a = poly_of_node(ast, n.lhs, max_degree);
      if (!a) return std::nullopt;
      Coeffs acc{Complex{1.0, 0.0}};
      for (int k = 0; k < n.exponent; ++k) {
        auto next = poly_mul(acc, *a, max_degree);
        if (!next) return std::nullopt;
        acc = *next;
      }
      return acc;
    }
    case NodeOp::Neg: {
      auto a = poly_of_node(ast, n.lhs, max_degree);
      if (!a) return std::nullopt;
      for (auto& c : *a) c = -c;
      return a;
    }
    default:
      return std::nullopt;
  }
}

Ast Ast::extract(int idx) const {
  Ast out;
  // Recursive copy; children first so indices stay valid.
  std::function<int(int)> copy = [&](int at) -> int {
    AstNode n = nodes_[static_cast<std::size_t>(at)];
    if (n.op == NodeOp::Embedded) return out.add_embedded(embedded_[n.embedded]);
    if (n.lhs >= 0) n.lhs = copy(n.lhs);
    if (n.rhs >= 0) n.rhs = copy(n.rhs);
    return out.add(n);
  };
  int root = copy(idx);
  out.set_root(root);
  return out;
}

std::optional<Coeffs> Ast::as_polynomial(int max_degree) const {
  if (root_ < 0) return std::nullopt;
  auto c = poly_of_node(*this, root_, max_degree);
  if (c) trim(*c);
  return c;
}

namespace {

bool monomial(const Ast& ast, int idx) {
  const AstNode& n = ast.at(idx);
  switch (n.op) {
    case NodeOp::Constant:
    case NodeOp::Var:
      return true;
    case NodeOp::Pow:
      return ast.at(n.lhs).op == NodeOp::Var;
    case NodeOp::Neg:
      return monomial(ast, n.lhs);
    case NodeOp::Mul:
      return monomial(ast, n.lhs) && monomial(ast, n.rhs) &&
             (ast.at(n.lhs).op == NodeOp::Constant ||
              ast.at(n.rhs).op == NodeOp::Constant);
    case NodeOp::Div:
      return monomial(ast, n.lhs) && ast.at(n.rhs).op == NodeOp::Constant;
    default:
      return false;
  }
}

bool monomial_sum(const Ast& ast, int idx) {
  const AstNode& n = ast.at(idx);
  if (n.op == NodeOp::Add || n.op == NodeOp::Sub)
    return monomial_sum(ast, n.lhs) && monomial_sum(ast, n.rhs);
  if (n.op == NodeOp::Neg) return monomial_sum(ast, n.lhs);
  return monomial(ast, idx);
}

}  // namespace

bool Ast::is_monomial_sum() const {
  if (root_ < 0) return false;
  return monomial_sum(*this, root_);
}

}  // namespace blab
