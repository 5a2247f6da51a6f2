#pragma once

/// @file logic.hpp
/// Boolean update/output equations and their compilation to structure
/// matrices.
///
/// Source format, one statement per line, '#' starts a comment:
///
///     states 3 inputs 3 outputs 3
///     x1' = !u1 & (x2 | x3)
///     y1  = x1 | !x2 | x3
///
/// Operators by decreasing precedence: ! (NOT), & (AND), ^ (XOR), | (OR),
/// -> (IMPLIES, right-associative), <-> (IFF). ¬ ∧ ∨ are accepted as
/// aliases of ! & |. Atoms are xK, uK, 0, 1 and parenthesised expressions.
///
/// Logical values are encoded TRUE -> δ_2^1 and FALSE -> δ_2^2.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcnid/stp.hpp"

namespace bcnid {

class Bcn;

enum class VarKind { State, Input };

/// A state variable xK or input variable uK (index 1-based).
struct Variable {
  VarKind kind;
  std::size_t index;

  friend bool operator==(const Variable&, const Variable&) = default;
};

std::string to_string(const Variable& v);

/// Immutable Boolean expression tree.
class BoolExpr {
 public:
  enum class Op { Const, Var, Not, And, Or, Xor, Implies, Iff };

  static BoolExpr constant(bool value);
  static BoolExpr variable(Variable v);
  static BoolExpr negate(BoolExpr operand);
  static BoolExpr binary(Op op, BoolExpr lhs, BoolExpr rhs);

  Op op() const;
  bool value() const;             // Const only
  const Variable& var() const;    // Var only
  const BoolExpr& lhs() const;    // Not (operand) and binary nodes
  const BoolExpr& rhs() const;    // binary nodes

  /// Evaluates with `lookup(v)` giving the truth value of each variable.
  template <typename Lookup>
  bool evaluate(Lookup&& lookup) const;

  /// Every variable referenced, in first-occurrence order, without repeats.
  std::vector<Variable> variables() const;

 private:
  struct Node;
  explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BoolExpr::Node {
  Op op;
  bool value = false;
  Variable var{VarKind::State, 0};
  std::vector<BoolExpr> children;
};

template <typename Lookup>
bool BoolExpr::evaluate(Lookup&& lookup) const {
  switch (node_->op) {
    case Op::Const: return node_->value;
    case Op::Var: return lookup(node_->var);
    case Op::Not: return !lhs().evaluate(lookup);
    case Op::And: return lhs().evaluate(lookup) && rhs().evaluate(lookup);
    case Op::Or: return lhs().evaluate(lookup) || rhs().evaluate(lookup);
    case Op::Xor: return lhs().evaluate(lookup) != rhs().evaluate(lookup);
    case Op::Implies: return !lhs().evaluate(lookup) || rhs().evaluate(lookup);
    case Op::Iff: return lhs().evaluate(lookup) == rhs().evaluate(lookup);
  }
  return false;
}

/// Parsed form of a network source: n update equations over (u, x) and l
/// output equations over x.
struct NetworkSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t l = 0;
  std::vector<BoolExpr> updates;  // updates[i] defines x_{i+1}(t+1)
  std::vector<BoolExpr> outputs;  // outputs[j] defines y_{j+1}(t)
};

/// Parses a network source. Throws ParseError on malformed input, undeclared
/// variables, duplicate or missing equations.
NetworkSpec parse_network(std::string_view text);

/// Parses a single expression (no declaration line).
BoolExpr parse_expression(std::string_view text, std::size_t n, std::size_t m);

/// Structure matrix M_f in L_{2 x 2^k} with f(v_1..v_k) = M_f ⋉ v_1 ⋉ ... ⋉ v_k,
/// where var_order lists v_1..v_k. Column c (1-based) corresponds to the
/// assignment whose bit i (MSB first) is 0 for TRUE and 1 for FALSE.
LogicalMatrix structure_matrix(const BoolExpr& e, std::span<const Variable> var_order);

/// The argument order u_1..u_m, x_1..x_n used for update equations.
std::vector<Variable> update_order(std::size_t n, std::size_t m);
/// The argument order x_1..x_n used for output equations.
std::vector<Variable> output_order(std::size_t n);

/// F = M_{f_1} * ... * M_{f_n} and H = M_{h_1} * ... * M_{h_l} (Khatri-Rao).
Bcn assemble(const NetworkSpec& spec);

}  // namespace bcnid
