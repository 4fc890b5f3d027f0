#include "lfikit/consequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfikit {

ClosureSet ClosureSet::build(std::span<const Formula> roots) {
  ClosureSet s;
  s.items_ = subformula_closure(roots);
  s.kinds_.reserve(s.items_.size());
  s.left_.assign(s.items_.size(), -1);
  s.right_.assign(s.items_.size(), -1);
  for (std::size_t i = 0; i < s.items_.size(); ++i) s.index_[s.items_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < s.items_.size(); ++i) {
    const Formula& f = s.items_[i];
    s.kinds_.push_back(f.kind());
    if (is_unary(f.kind())) {
      s.left_[i] = s.index_.at(f.child());
    } else if (is_binary(f.kind())) {
      s.left_[i] = s.index_.at(f.lhs());
      s.right_[i] = s.index_.at(f.rhs());
    }
  }
  return s;
}

ClosureSet ClosureSet::build(std::initializer_list<Formula> roots) {
  return build(std::span<const Formula>(roots.begin(), roots.size()));
}

int ClosureSet::find(const Formula& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

int Assignment::value_of(const Formula& f) const {
  int i = closure ? closure->find(f) : -1;
  if (i < 0) throw std::out_of_range("assignment does not cover " + render(f));
  return values[static_cast<std::size_t>(i)];
}

std::string ConstraintInstance::str() const {
  if (family == Restriction::Family::CC)
    return "CC: value(" + render(antecedent) + ") classical => value(" +
           render(consequent) + ") forced";
  return "IP: value(" + render(antecedent) + ") = value(" + render(consequent) + ")";
}

std::vector<ConstraintInstance> restriction_closure(const Nmatrix& m,
                                                    std::span<const Restriction> rs,
                                                    const ClosureSet& S) {
  std::vector<ConstraintInstance> out;
  const int iT = m.domain.index_of("T");
  const int iF = m.domain.index_of("F");
  for (const Restriction& r : rs) {
    if (r.family == Restriction::Family::CC) {
      if (iT < 0 || iF < 0)
        throw std::invalid_argument("CC restriction needs T and F in the domain");
      ValueSet classical = vs_single(iT) | vs_single(iF);
      // One instance per g in S with both o^n g and o^{n+1} g inside S. Since
      // S is subformula-closed it is enough that the taller tower is present.
      // g itself ranges over every member of S, which lets towers propagate
      // (the instance at g = o d continues the one at g = d).
      for (const Formula& g : S.items()) {
        Formula lo = circ_tower(g, r.param);
        if (S.find(lo) < 0) continue;
        Formula hi = Formula::circ(lo);
        if (S.find(hi) < 0) continue;
        out.push_back({Restriction::Family::CC, lo, hi, classical,
                       static_cast<std::uint8_t>(iT)});
      }
    } else {
      for (const Formula& g : S.items()) {
        Formula a = circ_tower(g, r.param);
        if (S.find(a) < 0) continue;
        Formula b = circ_tower(Formula::neg(g), r.param);
        if (S.find(b) < 0) continue;
        out.push_back({Restriction::Family::IP, a, b, 0, 0});
      }
    }
  }
  return out;
}

bool restriction_holds(const ConstraintInstance& c, const Assignment& a) {
  int va = a.value_of(c.antecedent);
  int vb = a.value_of(c.consequent);
  if (c.family == Restriction::Family::CC)
    return !vs_contains(c.classical, va) || vb == c.forced;
  return va == vb;
}

namespace {

struct CompiledConstraint {
  Restriction::Family family;
  int a, b;  // closure indices
  ValueSet classical;
  std::uint8_t forced;
};

// Constraints grouped by the larger of their two indices, so each can be
// checked the moment its later formula receives a value.
std::vector<std::vector<CompiledConstraint>> compile_constraints(
    std::span<const ConstraintInstance> cs, const ClosureSet& S) {
  std::vector<std::vector<CompiledConstraint>> by_watch(S.size());
  for (const ConstraintInstance& c : cs) {
    int a = S.find(c.antecedent);
    int b = S.find(c.consequent);
    if (a < 0 || b < 0)
      throw std::out_of_range("constraint mentions a formula outside the closure set");
    by_watch[static_cast<std::size_t>(std::max(a, b))].push_back(
        {c.family, a, b, c.classical, c.forced});
  }
  return by_watch;
}

}  // namespace

bool for_each_legal_assignment(
    const Nmatrix& m, const ClosureSet& S,
    std::span<const ConstraintInstance> constraints,
    std::span<const ValueSet> allowed,
    const std::function<bool(std::span<const std::uint8_t>)>& visit) {
  const std::size_t n = S.size();
  if (n == 0) {
    return visit({});
  }
  auto by_watch = compile_constraints(constraints, S);
  const ValueSet full = vs_all(m.n());

  std::vector<std::uint8_t> vals(n, 0);
  std::vector<ValueSet> cand(n, 0);

  auto candidates = [&](std::size_t i) -> ValueSet {
    ValueSet c = S.kind(i) == Formula::Kind::Atom
                     ? full
                     : m.cell(S.kind(i), vals[static_cast<std::size_t>(S.left(i))],
                              S.right(i) >= 0 ? vals[static_cast<std::size_t>(S.right(i))] : -1);
    if (!allowed.empty()) c &= allowed[i];
    return c;
  };

  auto constraints_ok = [&](std::size_t i) {
    for (const CompiledConstraint& c : by_watch[i]) {
      int va = vals[static_cast<std::size_t>(c.a)];
      int vb = vals[static_cast<std::size_t>(c.b)];
      bool ok = c.family == Restriction::Family::CC
                    ? (!vs_contains(c.classical, va) || vb == c.forced)
                    : va == vb;
      if (!ok) return false;
    }
    return true;
  };

  std::size_t i = 0;
  cand[0] = candidates(0);
  while (true) {
    if (cand[i] == 0) {
      // backtrack
      if (i == 0) return true;
      --i;
      continue;
    }
    int v = vs_first(cand[i]);
    cand[i] &= cand[i] - 1;  // pop lowest bit
    vals[i] = static_cast<std::uint8_t>(v);
    if (!constraints_ok(i)) continue;
    if (i + 1 == n) {
      if (!visit(vals)) return false;
      continue;
    }
    ++i;
    cand[i] = candidates(i);
  }
}

std::size_t count_legal_assignments(const Semantics& sem, const ClosureSet& S) {
  auto constraints = restriction_closure(*sem.matrix, sem.restrictions, S);
  std::size_t count = 0;
  for_each_legal_assignment(*sem.matrix, S, constraints, {},
                            [&](std::span<const std::uint8_t>) {
                              ++count;
                              return true;
                            });
  return count;
}

Verdict check_consequence(const Semantics& sem, std::span<const Formula> premises,
                          const Formula& goal, const ConsequenceOptions& opts) {
  // Reflexivity shortcut.
  for (const Formula& p : premises)
    if (p == goal) return {};

  std::vector<Formula> roots(premises.begin(), premises.end());
  roots.push_back(goal);
  for (const Formula& f : opts.extra_closure) roots.push_back(f);
  auto closure = std::make_shared<ClosureSet>(ClosureSet::build(roots));

  const Nmatrix& m = *sem.matrix;
  auto constraints = restriction_closure(m, sem.restrictions, *closure);

  // A countermodel designates every premise and not the goal; enforcing that
  // as an allowed-mask prunes the search as soon as those indices are set.
  std::vector<ValueSet> allowed(closure->size(), vs_all(m.n()));
  for (const Formula& p : premises)
    allowed[static_cast<std::size_t>(closure->find(p))] &= m.designated;
  allowed[static_cast<std::size_t>(closure->find(goal))] &= ~m.designated & vs_all(m.n());

  Verdict verdict;
  int goal_index = closure->find(goal);
  for_each_legal_assignment(
      m, *closure, constraints, allowed, [&](std::span<const std::uint8_t> vals) {
        verdict.status = Verdict::Status::Refuted;
        verdict.countermodel = Assignment{closure, {vals.begin(), vals.end()}};
        verdict.conclusion_value = vals[static_cast<std::size_t>(goal_index)];
        return false;  // first countermodel in enumeration order
      });
  return verdict;
}

Verdict check_consequence(const Semantics& sem, std::initializer_list<Formula> premises,
                          const Formula& goal) {
  return check_consequence(sem, std::span<const Formula>(premises.begin(), premises.size()),
                           goal);
}

bool verify_countermodel(const Semantics& sem, std::span<const Formula> premises,
                         const Formula& goal, const Assignment& a) {
  if (!a.closure) return false;
  const Nmatrix& m = *sem.matrix;
  const ClosureSet& S = *a.closure;
  if (a.values.size() != S.size()) return false;
  // legality: every compound inside its cell
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (a.values[i] >= m.n()) return false;
    if (S.kind(i) == Formula::Kind::Atom) continue;
    ValueSet cell = m.cell(S.kind(i), a.values[static_cast<std::size_t>(S.left(i))],
                           S.right(i) >= 0 ? a.values[static_cast<std::size_t>(S.right(i))] : -1);
    if (!vs_contains(cell, a.values[i])) return false;
  }
  // restrictions
  for (const ConstraintInstance& c : restriction_closure(m, sem.restrictions, S))
    if (!restriction_holds(c, a)) return false;
  // designation pattern
  for (const Formula& p : premises) {
    int i = S.find(p);
    if (i < 0 || !m.is_designated(a.values[static_cast<std::size_t>(i)])) return false;
  }
  int g = S.find(goal);
  return g >= 0 && !m.is_designated(a.values[static_cast<std::size_t>(g)]);
}

int eval_matrix(const Nmatrix& m, const std::map<std::string, int>& atom_values,
                const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = atom_values.find(f.atom_name());
      if (it == atom_values.end())
        throw std::invalid_argument("eval_matrix: unmapped atom " + f.atom_name());
      return it->second;
    }
    default: {
      ValueSet cell;
      if (is_unary(f.kind())) {
        cell = m.cell(f.kind(), eval_matrix(m, atom_values, f.child()));
      } else {
        int a = eval_matrix(m, atom_values, f.lhs());
        int b = eval_matrix(m, atom_values, f.rhs());
        cell = m.cell(f.kind(), a, b);
      }
      if (vs_count(cell) != 1)
        throw std::invalid_argument("eval_matrix: non-deterministic cell under " + render(f));
      return vs_first(cell);
    }
  }
}

nlohmann::ordered_json verdict_to_json(const Verdict& v, const Nmatrix& m, bool pretty) {
  nlohmann::ordered_json j;
  if (v.valid()) {
    j["status"] = "valid";
    return j;
  }
  j["status"] = "refuted";
  nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
  const Assignment& a = *v.countermodel;
  for (std::size_t i = 0; i < a.closure->size(); ++i) {
    const Formula& f = a.closure->at(i);
    assignment[pretty ? render_pretty(f) : render(f)] = m.value_name(a.values[i]);
  }
  j["assignment"] = assignment;
  return j;
}

}  // namespace lfikit
