#pragma once

// Boolean expression trees over indexed bit variables, with and/or/not and
// constants. Used both for coordinate rules of snapshot structures and as the
// output language of sum-of-products synthesis.

#include <functional>
#include <memory>
#include <span>
#include <string>

namespace lfikit {

class BoolExpr {
 public:
  enum class Op { Const, Var, Not, And, Or };

  static BoolExpr constant(bool b);
  static BoolExpr var(int index);
  static BoolExpr bnot(BoolExpr e);
  static BoolExpr band(BoolExpr l, BoolExpr r);
  static BoolExpr bor(BoolExpr l, BoolExpr r);
  // b -> c as ~b | c
  static BoolExpr bimp(BoolExpr l, BoolExpr r);

  Op op() const { return node_->op; }
  bool eval(std::span<const std::uint8_t> bits) const;
  int max_var() const;  // -1 if variable-free

  // Variable names default to x0, x1, ...
  std::string str(const std::function<std::string(int)>& var_name = {}) const;

 private:
  struct Node {
    Op op;
    bool value = false;
    int var = -1;
    std::shared_ptr<const Node> left, right;
  };
  explicit BoolExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace lfikit
