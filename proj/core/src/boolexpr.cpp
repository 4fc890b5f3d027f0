#include "lfikit/boolexpr.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfikit {

BoolExpr BoolExpr::constant(bool b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = b;
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::var(int index) {
  if (index < 0) throw std::invalid_argument("BoolExpr::var: negative index");
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->var = index;
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::bnot(BoolExpr e) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->left = std::move(e.node_);
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::band(BoolExpr l, BoolExpr r) {
  auto n = std::make_shared<Node>();
  n->op = Op::And;
  n->left = std::move(l.node_);
  n->right = std::move(r.node_);
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::bor(BoolExpr l, BoolExpr r) {
  auto n = std::make_shared<Node>();
  n->op = Op::Or;
  n->left = std::move(l.node_);
  n->right = std::move(r.node_);
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::bimp(BoolExpr l, BoolExpr r) {
  return bor(bnot(std::move(l)), std::move(r));
}

bool BoolExpr::eval(std::span<const std::uint8_t> bits) const {
  const Node* n = node_.get();
  switch (n->op) {
    case Op::Const: return n->value;
    case Op::Var:
      if (static_cast<std::size_t>(n->var) >= bits.size())
        throw std::out_of_range("BoolExpr::eval: variable index out of range");
      return bits[static_cast<std::size_t>(n->var)] != 0;
    case Op::Not: return !BoolExpr(n->left).eval(bits);
    case Op::And: return BoolExpr(n->left).eval(bits) && BoolExpr(n->right).eval(bits);
    case Op::Or: return BoolExpr(n->left).eval(bits) || BoolExpr(n->right).eval(bits);
  }
  throw std::logic_error("BoolExpr::eval: bad op");
}

int BoolExpr::max_var() const {
  const Node* n = node_.get();
  switch (n->op) {
    case Op::Const: return -1;
    case Op::Var: return n->var;
    case Op::Not: return BoolExpr(n->left).max_var();
    default:
      return std::max(BoolExpr(n->left).max_var(), BoolExpr(n->right).max_var());
  }
}

namespace {

int expr_prec(BoolExpr::Op op) {
  switch (op) {
    case BoolExpr::Op::Or: return 1;
    case BoolExpr::Op::And: return 2;
    default: return 3;
  }
}

}  // namespace

std::string BoolExpr::str(const std::function<std::string(int)>& var_name) const {
  const Node* n = node_.get();
  auto sub = [&](const std::shared_ptr<const Node>& c) {
    BoolExpr e(c);
    std::string s = e.str(var_name);
    if (expr_prec(e.op()) < expr_prec(n->op)) return "(" + s + ")";
    return s;
  };
  switch (n->op) {
    case Op::Const: return n->value ? "1" : "0";
    case Op::Var: return var_name ? var_name(n->var) : "x" + std::to_string(n->var);
    case Op::Not: {
      BoolExpr e(n->left);
      std::string s = e.str(var_name);
      if (e.op() == Op::And || e.op() == Op::Or) return "~(" + s + ")";
      return "~" + s;
    }
    case Op::And: return sub(n->left) + " & " + sub(n->right);
    case Op::Or: return sub(n->left) + " | " + sub(n->right);
  }
  throw std::logic_error("BoolExpr::str: bad op");
}

}  // namespace lfikit
