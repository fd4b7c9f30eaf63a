#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace blab {

class FunctionSpec;

enum class NodeOp : std::uint8_t {
  Constant,
  Var,       // the variable z
  Embedded,  // a nested function spec (blaschke/poly constructor form)
  Add,
  Sub,
  Mul,
  Div,
  Pow,   // integer exponent >= 0 in `exponent`
  Neg,
  Exp,
  LogAbs,
  Abs,
  Conj,
  Re,
  Im,
};

struct AstNode {
  NodeOp op = NodeOp::Constant;
  Complex value{0.0, 0.0};  // Constant only
  int exponent = 0;         // Pow only
  int lhs = -1;
  int rhs = -1;
  int embedded = -1;        // Embedded only
};

// Flat expression tree; node indices point into `nodes`, root is the last
// valid entry set by the builder.
class Ast {
 public:
  int add(AstNode node);
  int add_embedded(std::shared_ptr<const FunctionSpec> spec);
  const FunctionSpec& embedded_at(int idx) const;
  const AstNode& at(int idx) const { return nodes_[static_cast<std::size_t>(idx)]; }
  int root() const { return root_; }
  void set_root(int idx) { root_ = idx; }
  bool empty() const { return nodes_.empty(); }

  Complex eval(Complex z) const;
  Complex eval_subtree(int idx, Complex z = Complex{0.0, 0.0}) const {
    return eval_node(idx, z);
  }
  // True when every value the tree produces has zero imaginary part.
  bool real_valued() const;
  std::string print() const;

  // Expands the tree into polynomial coefficients in z (ascending order) when
  // it is built only from +, -, *, ^, negation, constants and z. Degree is
  // capped to keep pathological inputs cheap.
  std::optional<std::vector<Complex>> as_polynomial(int max_degree = 64) const;

  // True for plain sums of monomials (c, z, z^k, c*z^k and quotients by
  // constants). Factored forms such as (z-a)^2 are excluded: expanding them
  // would destroy multiple-zero structure in floating point.
  bool is_monomial_sum() const;

  // Deep copy of the subtree rooted at idx as a stand-alone tree.
  Ast extract(int idx) const;

 private:
  Complex eval_node(int idx, Complex z) const;
  bool real_node(int idx) const;
  std::string print_node(int idx, bool top) const;

  std::vector<AstNode> nodes_;
  std::vector<std::shared_ptr<const FunctionSpec>> embedded_;
  int root_ = -1;
};

}  // namespace blab
