#include "lfikit/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace lfikit {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  v += 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h ^ v;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  if (name == "o") throw std::invalid_argument("'o' is reserved and cannot name an atom");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->hash = mix(std::hash<std::string>{}(n->name), 0x61);
  return Formula(std::move(n));
}

Formula Formula::make_unary(Kind k, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->depth = f.depth() + 1;
  n->size = f.size() + 1;
  n->hash = mix(f.hash(), static_cast<std::size_t>(k) * 0x100000001b3ull);
  n->left = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::make_binary(Kind k, Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->depth = std::max(l.depth(), r.depth()) + 1;
  n->size = l.size() + r.size() + 1;
  n->hash = mix(mix(l.hash(), r.hash() * 0x9E3779B1ull),
                static_cast<std::size_t>(k) * 0x100000001b3ull);
  n->left = std::move(l.node_);
  n->right = std::move(r.node_);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) { return make_unary(Kind::Neg, std::move(f)); }
Formula Formula::circ(Formula f) { return make_unary(Kind::Circ, std::move(f)); }
Formula Formula::conj(Formula l, Formula r) { return make_binary(Kind::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return make_binary(Kind::Or, std::move(l), std::move(r)); }
Formula Formula::imp(Formula l, Formula r) { return make_binary(Kind::Imp, std::move(l), std::move(r)); }

const std::string& Formula::atom_name() const {
  if (!is_atom()) throw std::logic_error("atom_name() on a compound formula");
  return node_->name;
}

Formula Formula::child() const {
  if (!is_unary(kind())) throw std::logic_error("child() on a non-unary formula");
  return Formula(node_->left);
}

Formula Formula::lhs() const {
  if (!is_binary(kind())) throw std::logic_error("lhs() on a non-binary formula");
  return Formula(node_->left);
}

Formula Formula::rhs() const {
  if (!is_binary(kind())) throw std::logic_error("rhs() on a non-binary formula");
  return Formula(node_->right);
}

bool Formula::operator==(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Atom:
      return a->name == b->name;
    case Kind::Neg:
    case Kind::Circ:
      return Formula(a->left) == Formula(b->left);
    default:
      return Formula(a->left) == Formula(b->left) && Formula(a->right) == Formula(b->right);
  }
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_.get() == b.node_.get()) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Atom:
      return a.atom_name().compare(b.atom_name());
    case Kind::Neg:
    case Kind::Circ:
      return compare(a.child(), b.child());
    default: {
      int c = compare(a.lhs(), b.lhs());
      return c != 0 ? c : compare(a.rhs(), b.rhs());
    }
  }
}

namespace {

// Precedence levels used by render(): Imp < Or < And < unary < Atom.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Imp: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Neg:
    case Formula::Kind::Circ: return 4;
    case Formula::Kind::Atom: return 5;
  }
  return 5;
}

struct Symbols {
  const char* neg;
  const char* circ;
  const char* conj;
  const char* disj;
  const char* imp;
};

void render_rec(const Formula& f, std::string& out, const Symbols& sym) {
  auto paren = [&](const Formula& g, bool need) {
    if (need) out += '(';
    render_rec(g, out, sym);
    if (need) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      break;
    case Formula::Kind::Neg:
      out += sym.neg;
      paren(f.child(), precedence(f.child().kind()) < 4);
      break;
    case Formula::Kind::Circ:
      out += sym.circ;
      out += ' ';
      paren(f.child(), precedence(f.child().kind()) < 4);
      break;
    case Formula::Kind::And:
      paren(f.lhs(), precedence(f.lhs().kind()) < 3);
      out += sym.conj;
      paren(f.rhs(), precedence(f.rhs().kind()) <= 3);
      break;
    case Formula::Kind::Or:
      paren(f.lhs(), precedence(f.lhs().kind()) < 2);
      out += sym.disj;
      paren(f.rhs(), precedence(f.rhs().kind()) <= 2);
      break;
    case Formula::Kind::Imp:
      // right-associative
      paren(f.lhs(), precedence(f.lhs().kind()) <= 1);
      out += sym.imp;
      render_rec(f.rhs(), out, sym);
      break;
  }
}

}  // namespace

std::string render(const Formula& f) {
  static const Symbols ascii{"~", "o", " & ", " | ", " -> "};
  std::string out;
  render_rec(f, out, ascii);
  return out;
}

std::string render_pretty(const Formula& f) {
  static const Symbols pretty{"¬", "∘", " ∧ ", " ∨ ", " → "};
  std::string out;
  render_rec(f, out, pretty);
  return out;
}

static void closure_visit(const Formula& f,
                          std::unordered_set<Formula, FormulaHash>& seen,
                          std::vector<Formula>& out) {
  if (seen.contains(f)) return;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      break;
    case Formula::Kind::Neg:
    case Formula::Kind::Circ:
      closure_visit(f.child(), seen, out);
      break;
    default:
      closure_visit(f.lhs(), seen, out);
      closure_visit(f.rhs(), seen, out);
      break;
  }
  if (seen.insert(f).second) out.push_back(f);
}

std::vector<Formula> subformula_closure(std::span<const Formula> fs) {
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<Formula> out;
  for (const Formula& f : fs) closure_visit(f, seen, out);
  return out;
}

std::vector<Formula> subformula_closure(std::initializer_list<Formula> fs) {
  return subformula_closure(std::span<const Formula>(fs.begin(), fs.size()));
}

Formula circ_tower(Formula f, int n) {
  if (n < 0) throw std::invalid_argument("circ_tower: negative height");
  for (int i = 0; i < n; ++i) f = Formula::circ(std::move(f));
  return f;
}

Formula instantiate(const Schema& schema, const Substitution& subst) {
  switch (schema.kind()) {
    case Formula::Kind::Atom: {
      auto it = subst.find(schema.atom_name());
      if (it == subst.end()) throw MissingBindingError(schema.atom_name());
      return it->second;
    }
    case Formula::Kind::Neg:
      return Formula::neg(instantiate(schema.child(), subst));
    case Formula::Kind::Circ:
      return Formula::circ(instantiate(schema.child(), subst));
    case Formula::Kind::And:
      return Formula::conj(instantiate(schema.lhs(), subst), instantiate(schema.rhs(), subst));
    case Formula::Kind::Or:
      return Formula::disj(instantiate(schema.lhs(), subst), instantiate(schema.rhs(), subst));
    case Formula::Kind::Imp:
      return Formula::imp(instantiate(schema.lhs(), subst), instantiate(schema.rhs(), subst));
  }
  throw std::logic_error("instantiate: bad kind");
}

static void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      break;
    case Formula::Kind::Neg:
    case Formula::Kind::Circ:
      collect_atoms(f.child(), out);
      break;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      break;
  }
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> atoms_of(std::span<const Formula> fs) {
  std::set<std::string> s;
  for (const Formula& f : fs) collect_atoms(f, s);
  return {s.begin(), s.end()};
}

Formula strong_neg(const Formula& a) {
  return Formula::conj(Formula::neg(a), Formula::circ(a));
}

Formula iff(const Formula& a, const Formula& b) {
  return Formula::conj(Formula::imp(a, b), Formula::imp(b, a));
}

Formula equiv3(const Formula& a, const Formula& b) {
  Formula first = iff(a, b);
  Formula second = iff(Formula::neg(a), Formula::neg(b));
  Formula third = iff(Formula::neg(Formula::circ(a)), Formula::neg(Formula::circ(b)));
  return Formula::conj(Formula::conj(first, second), third);
}

Formula bullet(const Formula& a) { return Formula::neg(Formula::circ(a)); }

Formula circ_star(const Formula& a) {
  Formula oa = Formula::circ(a);
  Formula ooa = Formula::circ(oa);
  Formula pos = Formula::conj(Formula::conj(a, oa), ooa);
  Formula neg = Formula::conj(Formula::conj(Formula::neg(a), oa), ooa);
  return Formula::disj(pos, neg);
}

Formula circ_hash(const Formula& a) {
  return Formula::disj(circ_star(a),
                       Formula::conj(bullet(a), Formula::circ(Formula::circ(a))));
}

Formula top_formula(const Formula& a) { return circ_tower(a, 3); }

Formula bot_formula(const Formula& a) { return Formula::neg(top_formula(a)); }

Formula build_derived(DerivedKind kind, std::span<const Formula> args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument("build_derived: expected " + std::to_string(n) +
                                  " argument(s), got " + std::to_string(args.size()));
  };
  switch (kind) {
    case DerivedKind::StrongNeg: need(1); return strong_neg(args[0]);
    case DerivedKind::Iff: need(2); return iff(args[0], args[1]);
    case DerivedKind::Equiv3: need(2); return equiv3(args[0], args[1]);
    case DerivedKind::Bullet: need(1); return bullet(args[0]);
    case DerivedKind::CircStar: need(1); return circ_star(args[0]);
    case DerivedKind::CircHash: need(1); return circ_hash(args[0]);
    case DerivedKind::Top: need(1); return top_formula(args[0]);
    case DerivedKind::Bot: need(1); return bot_formula(args[0]);
  }
  throw std::logic_error("build_derived: bad kind");
}

std::vector<Formula> enumerate_formulas(std::span<const std::string> atoms,
                                        int max_depth, int max_size) {
  if (max_depth < 0 || max_size < 0) return {};
  std::vector<std::vector<Formula>> by_size(static_cast<std::size_t>(max_size) + 1);
  for (const std::string& a : atoms) by_size[0].push_back(Formula::atom(a));
  for (int s = 1; s <= max_size; ++s) {
    auto& bucket = by_size[s];
    for (const Formula& f : by_size[s - 1]) {
      if (f.depth() + 1 <= max_depth) {
        bucket.push_back(Formula::neg(f));
        bucket.push_back(Formula::circ(f));
      }
    }
    for (int i = 0; i <= s - 1; ++i) {
      int j = s - 1 - i;
      for (const Formula& l : by_size[i])
        for (const Formula& r : by_size[j]) {
          if (std::max(l.depth(), r.depth()) + 1 > max_depth) continue;
          bucket.push_back(Formula::conj(l, r));
          bucket.push_back(Formula::disj(l, r));
          bucket.push_back(Formula::imp(l, r));
        }
    }
  }
  std::vector<Formula> out;
  for (auto& bucket : by_size)
    for (Formula& f : bucket) out.push_back(std::move(f));
  return out;
}

}  // namespace lfikit
