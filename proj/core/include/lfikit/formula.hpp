#pragma once

// Propositional formulas over the signature {~, o, &, |, ->}.
// Formulas are immutable values with structural equality; subtrees may be
// shared freely across threads.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lfikit {

class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Neg, Circ, And, Or, Imp };

  // Atom names are nonempty identifiers and never the reserved word "o".
  static Formula atom(std::string name);
  static Formula neg(Formula f);
  static Formula circ(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  const std::string& atom_name() const;

  Formula child() const;  // unary nodes
  Formula lhs() const;    // binary nodes
  Formula rhs() const;

  int depth() const { return node_->depth; }
  // Number of connective nodes (atoms count zero).
  int size() const { return node_->size; }

  std::size_t hash() const { return node_->hash; }
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Total order compatible with structural equality; used for deterministic
  // map keys and output ordering.
  static int compare(const Formula& a, const Formula& b);
  bool operator<(const Formula& other) const { return compare(*this, other) < 0; }

 private:
  struct Node {
    Kind kind;
    int depth = 0;
    int size = 0;
    std::size_t hash = 0;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make_unary(Kind k, Formula f);
  static Formula make_binary(Kind k, Formula l, Formula r);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline bool is_unary(Formula::Kind k) {
  return k == Formula::Kind::Neg || k == Formula::Kind::Circ;
}
inline bool is_binary(Formula::Kind k) {
  return k == Formula::Kind::And || k == Formula::Kind::Or || k == Formula::Kind::Imp;
}

// ASCII rendering with minimal parentheses; parse(render(f)) == f.
std::string render(const Formula& f);
// Display rendering using the usual symbols for negation, the consistency
// operator and the binary connectives. Not parseable.
std::string render_pretty(const Formula& f);

// Smallest superset of fs closed under immediate subformulas, ordered so that
// every formula appears after all of its subformulas. Deterministic in the
// order of fs.
std::vector<Formula> subformula_closure(std::span<const Formula> fs);
std::vector<Formula> subformula_closure(std::initializer_list<Formula> fs);

// o^n f
Formula circ_tower(Formula f, int n);

// Schemas are formulas whose atoms act as metavariables.
using Schema = Formula;
using Substitution = std::map<std::string, Formula>;

struct MissingBindingError : std::runtime_error {
  explicit MissingBindingError(const std::string& metavar)
      : std::runtime_error("no binding for metavariable '" + metavar + "'"),
        metavar(metavar) {}
  std::string metavar;
};

// Uniform replacement of every metavariable occurrence; throws
// MissingBindingError if the substitution is not total on the schema.
Formula instantiate(const Schema& schema, const Substitution& subst);

// Sorted unique atom names.
std::vector<std::string> atoms_of(const Formula& f);
std::vector<std::string> atoms_of(std::span<const Formula> fs);

// Defined connectives, expanded to plain formulas.
Formula strong_neg(const Formula& a);              // ~a & o a
Formula iff(const Formula& a, const Formula& b);   // (a -> b) & (b -> a)
Formula equiv3(const Formula& a, const Formula& b);
Formula bullet(const Formula& a);                  // ~ o a
Formula circ_star(const Formula& a);
Formula circ_hash(const Formula& a);
Formula top_formula(const Formula& a);             // o o o a
Formula bot_formula(const Formula& a);

enum class DerivedKind { StrongNeg, Iff, Equiv3, Bullet, CircStar, CircHash, Top, Bot };

// Dispatch form of the builders above; throws std::invalid_argument on an
// arity mismatch.
Formula build_derived(DerivedKind kind, std::span<const Formula> args);

// All formulas over the given atoms with depth <= max_depth and at most
// max_size connectives, in a fixed deterministic order (by size, then by
// construction order). The exhaustive test families are drawn from here.
std::vector<Formula> enumerate_formulas(std::span<const std::string> atoms,
                                        int max_depth, int max_size);

}  // namespace lfikit
