#include "lfikit/hilbert.hpp"

#include <algorithm>
#include <deque>

#include "lfikit/parser.hpp"
#include "lfikit/structures.hpp"

namespace lfikit {

ProofCheckResult check_proof(const Proof& p) {
  ProofCheckResult r;
  const LogicSpec& logic = get_logic(p.logic);
  auto fail = [&](int step, std::string msg) {
    r.ok = false;
    r.step = step;
    r.message = std::move(msg);
    return r;
  };
  if (p.steps.empty()) return fail(-1, "proof has no steps");

  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& s = p.steps[i];
    const int stepno = static_cast<int>(i) + 1;
    switch (s.kind) {
      case ProofStep::Kind::Premise: {
        if (s.premise < 1 || s.premise > static_cast<int>(p.premises.size()))
          return fail(stepno, "premise index " + std::to_string(s.premise) + " out of range");
        r.derived.push_back(p.premises[static_cast<std::size_t>(s.premise - 1)]);
        break;
      }
      case ProofStep::Kind::Axiom: {
        const AxiomSchema* ax = logic.find_axiom(s.schema);
        if (!ax)
          return fail(stepno, "schema '" + s.schema + "' is not an axiom of " + p.logic.str());
        try {
          r.derived.push_back(instantiate(ax->schema, s.subst));
        } catch (const MissingBindingError& e) {
          return fail(stepno, e.what());
        }
        break;
      }
      case ProofStep::Kind::MP: {
        auto resolve = [&](int ref, const Formula*& out) {
          if (ref < 1 || ref > static_cast<int>(i)) return false;
          out = &r.derived[static_cast<std::size_t>(ref - 1)];
          return true;
        };
        const Formula* major = nullptr;
        const Formula* minor = nullptr;
        if (!resolve(s.major, major))
          return fail(stepno, "major reference " + std::to_string(s.major) +
                                  " does not name an earlier step");
        if (!resolve(s.minor, minor))
          return fail(stepno, "minor reference " + std::to_string(s.minor) +
                                  " does not name an earlier step");
        if (major->kind() != Formula::Kind::Imp)
          return fail(stepno, "major premise " + render(*major) + " is not an implication");
        if (major->lhs() != *minor)
          return fail(stepno, "antecedent of " + render(*major) + " does not match " +
                                  render(*minor));
        r.derived.push_back(major->rhs());
        break;
      }
    }
  }
  r.ok = true;
  r.step = -1;
  r.conclusion = r.derived.back();
  return r;
}

Proof proof_from_json(const nlohmann::json& j) {
  Proof p;
  auto id = LogicId::parse(j.at("logic").get<std::string>());
  if (!id) throw std::invalid_argument("unknown logic id in proof file");
  p.logic = *id;
  if (j.contains("premises"))
    for (const auto& s : j.at("premises")) p.premises.push_back(parse(s.get<std::string>()));
  for (const auto& js : j.at("steps")) {
    ProofStep step;
    std::string kind = js.at("kind").get<std::string>();
    if (kind == "premise") {
      step.kind = ProofStep::Kind::Premise;
      step.premise = js.at("index").get<int>();
    } else if (kind == "axiom") {
      step.kind = ProofStep::Kind::Axiom;
      step.schema = js.at("schema").get<std::string>();
      if (js.contains("subst"))
        for (const auto& [key, val] : js.at("subst").items())
          step.subst.emplace(key, parse(val.get<std::string>()));
    } else if (kind == "mp") {
      step.kind = ProofStep::Kind::MP;
      step.major = js.at("major").get<int>();
      step.minor = js.at("minor").get<int>();
    } else {
      throw std::invalid_argument("unknown step kind '" + kind + "'");
    }
    p.steps.push_back(std::move(step));
  }
  return p;
}

nlohmann::ordered_json proof_to_json(const Proof& p) {
  nlohmann::ordered_json j;
  j["logic"] = p.logic.str();
  auto premises = nlohmann::ordered_json::array();
  for (const Formula& f : p.premises) premises.push_back(render(f));
  j["premises"] = premises;
  auto steps = nlohmann::ordered_json::array();
  for (const ProofStep& s : p.steps) {
    nlohmann::ordered_json js;
    switch (s.kind) {
      case ProofStep::Kind::Premise:
        js["kind"] = "premise";
        js["index"] = s.premise;
        break;
      case ProofStep::Kind::Axiom: {
        js["kind"] = "axiom";
        js["schema"] = s.schema;
        auto subst = nlohmann::ordered_json::object();
        for (const auto& [key, val] : s.subst) subst[key] = render(val);
        js["subst"] = subst;
        break;
      }
      case ProofStep::Kind::MP:
        js["kind"] = "mp";
        js["major"] = s.major;
        js["minor"] = s.minor;
        break;
    }
    steps.push_back(std::move(js));
  }
  j["steps"] = steps;
  return j;
}

int BiValuation::bit(const Formula& f) const {
  int i = domain ? domain->find(f) : -1;
  if (i < 0) throw std::out_of_range("bivaluation does not cover " + render(f));
  return bits[static_cast<std::size_t>(i)];
}

namespace {

// One clause instance, watched at the largest mentioned closure index.
struct BivalClause {
  enum class Kind { And, Or, Imp, Neg, ConCiw, Cc1, Dn } kind;
  int f = -1, a = -1, b = -1;  // closure indices; meaning depends on kind

  const char* name() const {
    switch (kind) {
      case Kind::And: return "vAnd";
      case Kind::Or: return "vOr";
      case Kind::Imp: return "vImp";
      case Kind::Neg: return "vNeg";
      case Kind::ConCiw: return "vConCiw";
      case Kind::Cc1: return "vCc1";
      case Kind::Dn: return "vdn";
    }
    return "?";
  }

  bool holds(std::span<const std::uint8_t> v) const {
    switch (kind) {
      case Kind::And: return v[f] == (v[a] && v[b]);
      case Kind::Or: return v[f] == (v[a] || v[b]);
      case Kind::Imp: return v[f] == (!v[a] || v[b]);
      case Kind::Neg: return v[f] == 1 || v[a] == 1;
      case Kind::ConCiw: return v[f] == (!v[a] || !v[b]);
      case Kind::Cc1: return v[f] != v[a];
      case Kind::Dn: return v[f] == v[a];
    }
    return false;
  }
};

bool is_l10_or_l11(const LogicId& logic, bool& with_dn) {
  if (logic.name != LogicId::Name::Param || logic.n != 1) return false;
  if (logic.k == 0) { with_dn = false; return true; }
  if (logic.k == 1) { with_dn = true; return true; }
  return false;
}

std::vector<BivalClause> bival_clauses(const LogicId& logic, const ClosureSet& S) {
  bool with_dn = false;
  if (!is_l10_or_l11(logic, with_dn))
    throw std::invalid_argument("bivaluation clauses are defined for L:1,0 and L:1,1 only");
  std::vector<BivalClause> out;
  using K = BivalClause::Kind;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const int fi = static_cast<int>(i);
    switch (S.kind(i)) {
      case Formula::Kind::And:
        out.push_back({K::And, fi, S.left(i), S.right(i)});
        break;
      case Formula::Kind::Or:
        out.push_back({K::Or, fi, S.left(i), S.right(i)});
        break;
      case Formula::Kind::Imp:
        out.push_back({K::Imp, fi, S.left(i), S.right(i)});
        break;
      case Formula::Kind::Circ: {
        // v(o a) = 1 iff v(a) = 0 or v(~a) = 0; applicable when ~a is present.
        int na = S.find(Formula::neg(S.at(static_cast<std::size_t>(S.left(i)))));
        if (na >= 0) out.push_back({K::ConCiw, fi, S.left(i), na});
        break;
      }
      case Formula::Kind::Neg: {
        out.push_back({K::Neg, fi, S.left(i)});
        const Formula inner = S.at(static_cast<std::size_t>(S.left(i)));
        // v(~o o a) and v(o o a) are complementary.
        if (inner.kind() == Formula::Kind::Circ &&
            inner.child().kind() == Formula::Kind::Circ)
          out.push_back({K::Cc1, fi, S.left(i)});
        if (with_dn && inner.kind() == Formula::Kind::Neg)
          out.push_back({K::Dn, fi, S.left(static_cast<std::size_t>(S.left(i)))});
        break;
      }
      case Formula::Kind::Atom:
        break;
    }
  }
  return out;
}

}  // namespace

BivalCheckResult check_bivaluation(const LogicId& logic, const BiValuation& v) {
  const ClosureSet& S = *v.domain;
  if (v.bits.size() != S.size())
    throw std::invalid_argument("bivaluation does not cover its domain");
  for (const BivalClause& c : bival_clauses(logic, S)) {
    if (!c.holds(v.bits)) {
      BivalCheckResult r;
      r.ok = false;
      r.clause = c.name();
      r.where = S.at(static_cast<std::size_t>(c.f));
      return r;
    }
  }
  return {};
}

bool for_each_bivaluation(const LogicId& logic,
                          const std::shared_ptr<const ClosureSet>& domain,
                          const std::function<bool(const BiValuation&)>& visit) {
  const ClosureSet& S = *domain;
  auto clauses = bival_clauses(logic, S);
  // Watch each clause at its largest index so it is checked as soon as it is
  // fully assigned; forced values then fall out as one-branch prunes.
  std::vector<std::vector<const BivalClause*>> by_watch(S.size());
  for (const BivalClause& c : clauses) {
    int w = std::max(c.f, std::max(c.a, c.b));
    by_watch[static_cast<std::size_t>(w)].push_back(&c);
  }

  BiValuation v;
  v.domain = domain;
  v.bits.assign(S.size(), 0);
  if (S.size() == 0) return visit(v);

  std::vector<int> next(S.size(), 0);
  std::size_t i = 0;
  while (true) {
    if (next[i] > 1) {
      next[i] = 0;
      if (i == 0) return true;
      --i;
      continue;
    }
    v.bits[i] = static_cast<std::uint8_t>(next[i]++);
    bool ok = true;
    for (const BivalClause* c : by_watch[i])
      if (!c->holds(v.bits)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (i + 1 == S.size()) {
      if (!visit(v)) return false;
      continue;
    }
    ++i;
  }
}

std::shared_ptr<const ClosureSet> snapshot_closure(const ClosureSet& S) {
  std::vector<Formula> roots(S.items().begin(), S.items().end());
  for (const Formula& f : S.items()) {
    roots.push_back(Formula::neg(f));
    roots.push_back(Formula::neg(Formula::circ(f)));
  }
  return std::make_shared<ClosureSet>(ClosureSet::build(roots));
}

Assignment snapshot_embedding(const BiValuation& v,
                              const std::shared_ptr<const ClosureSet>& S) {
  const Nmatrix& m = *swap5_nmatrix(0);
  Assignment a;
  a.closure = S;
  a.values.reserve(S->size());
  for (const Formula& f : S->items()) {
    Snapshot snap{static_cast<std::uint8_t>(v.bit(f)),
                  static_cast<std::uint8_t>(v.bit(Formula::neg(f))),
                  static_cast<std::uint8_t>(v.bit(Formula::neg(Formula::circ(f))))};
    int value = m.domain.index_of_snapshot(snap);
    if (value < 0)
      throw std::invalid_argument("triple " + snapshot_str(snap) + " at " + render(f) +
                                  " is not a snapshot; the bivaluation is not legal");
    a.values.push_back(static_cast<std::uint8_t>(value));
  }
  return a;
}

BiValuation bivaluation_from_assignment(const Assignment& a,
                                        const std::shared_ptr<const ClosureSet>& target) {
  const Nmatrix& m = *swap5_nmatrix(0);
  const ClosureSet& S = *a.closure;
  auto snap_of = [&](const Formula& f) -> const Snapshot& {
    return m.domain.snapshots[static_cast<std::size_t>(a.value_of(f))];
  };
  BiValuation v;
  v.domain = target;
  v.bits.reserve(target->size());
  for (const Formula& f : target->items()) {
    if (S.find(f) >= 0) {
      v.bits.push_back(snap_of(f)[0]);
      continue;
    }
    if (f.kind() == Formula::Kind::Neg && S.find(f.child()) >= 0) {
      v.bits.push_back(snap_of(f.child())[1]);
      continue;
    }
    if (f.kind() == Formula::Kind::Circ && S.find(f.child()) >= 0) {
      const Snapshot& s = snap_of(f.child());
      v.bits.push_back(static_cast<std::uint8_t>(!(s[0] && s[1])));
      continue;
    }
    if (f.kind() == Formula::Kind::Neg && f.child().kind() == Formula::Kind::Circ &&
        S.find(f.child().child()) >= 0) {
      v.bits.push_back(snap_of(f.child().child())[2]);
      continue;
    }
    throw std::out_of_range("no way to read " + render(f) + " off the assignment");
  }
  return v;
}

std::optional<Proof> search_proof(const LogicId& logic, std::span<const Formula> premises,
                                  const Formula& goal, int max_steps) {
  const LogicSpec& spec = get_logic(logic);
  std::vector<Formula> roots(premises.begin(), premises.end());
  roots.push_back(goal);
  std::vector<Formula> pool = subformula_closure(roots);

  struct Origin {
    ProofStep step;
    int major_formula = -1, minor_formula = -1;  // indices into `known`
  };
  std::vector<Formula> known;
  std::vector<Origin> origins;
  std::unordered_map<Formula, int, FormulaHash> seen;
  auto learn = [&](const Formula& f, Origin o) {
    if (seen.contains(f)) return false;
    seen[f] = static_cast<int>(known.size());
    known.push_back(f);
    origins.push_back(std::move(o));
    return true;
  };

  for (std::size_t i = 0; i < premises.size(); ++i) {
    ProofStep s;
    s.kind = ProofStep::Kind::Premise;
    s.premise = static_cast<int>(i) + 1;
    learn(premises[i], {s, -1, -1});
  }
  for (const AxiomSchema& ax : spec.axioms) {
    std::vector<std::string> vars = atoms_of(ax.schema);
    std::vector<std::size_t> pick(vars.size(), 0);
    while (true) {
      Substitution subst;
      for (std::size_t i = 0; i < vars.size(); ++i) subst.insert_or_assign(vars[i], pool[pick[i]]);
      ProofStep s;
      s.kind = ProofStep::Kind::Axiom;
      s.schema = ax.id;
      s.subst = subst;
      learn(instantiate(ax.schema, subst), {s, -1, -1});
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < pool.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }

  // Forward modus ponens to a fixed point (bounded rounds).
  bool changed = true;
  for (int round = 0; round < max_steps && changed; ++round) {
    changed = false;
    const std::size_t snapshot = known.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      if (known[i].kind() != Formula::Kind::Imp) continue;
      auto minor_it = seen.find(known[i].lhs());
      if (minor_it == seen.end() ||
          static_cast<std::size_t>(minor_it->second) >= snapshot)
        continue;
      ProofStep s;
      s.kind = ProofStep::Kind::MP;
      if (learn(known[i].rhs(), {s, static_cast<int>(i), minor_it->second}))
        changed = true;
    }
    if (seen.contains(goal)) break;
  }
  auto goal_it = seen.find(goal);
  if (goal_it == seen.end()) return std::nullopt;

  // Extract the used sub-derivation and renumber.
  std::vector<int> order;
  std::vector<int> mark(known.size(), -1);
  std::function<void(int)> visit = [&](int i) {
    if (mark[static_cast<std::size_t>(i)] >= 0) return;
    const Origin& o = origins[static_cast<std::size_t>(i)];
    if (o.step.kind == ProofStep::Kind::MP) {
      visit(o.major_formula);
      visit(o.minor_formula);
    }
    mark[static_cast<std::size_t>(i)] = static_cast<int>(order.size());
    order.push_back(i);
  };
  visit(goal_it->second);
  if (static_cast<int>(order.size()) > max_steps) return std::nullopt;

  Proof proof;
  proof.logic = logic;
  proof.premises.assign(premises.begin(), premises.end());
  for (int i : order) {
    ProofStep s = origins[static_cast<std::size_t>(i)].step;
    if (s.kind == ProofStep::Kind::MP) {
      s.major = mark[static_cast<std::size_t>(origins[static_cast<std::size_t>(i)].major_formula)] + 1;
      s.minor = mark[static_cast<std::size_t>(origins[static_cast<std::size_t>(i)].minor_formula)] + 1;
    }
    proof.steps.push_back(std::move(s));
  }
  return proof;
}

}  // namespace lfikit
