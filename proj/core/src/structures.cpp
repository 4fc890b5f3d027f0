#include "lfikit/structures.hpp"

#include <stdexcept>

namespace lfikit {

namespace {

std::string default_label(const Snapshot& s) {
  std::string out;
  for (std::uint8_t b : s) out += b ? '1' : '0';
  return out;
}

}  // namespace

Domain generate_snapshot_domain(const SnapshotSpec& spec) {
  if (spec.width < 1 || spec.width > 16)
    throw std::invalid_argument("snapshot width out of range");
  Domain d;
  const int total = 1 << spec.width;
  for (int code = 0; code < total; ++code) {
    Snapshot s(static_cast<std::size_t>(spec.width));
    for (int i = 0; i < spec.width; ++i)
      s[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((code >> (spec.width - 1 - i)) & 1);
    if (spec.admits && !spec.admits(s)) continue;
    d.names.push_back(spec.label ? spec.label(s) : default_label(s));
    d.snapshots.push_back(std::move(s));
  }
  if (d.names.size() < 2)
    throw std::invalid_argument("snapshot predicate admits fewer than two values");
  if (!spec.order.empty()) {
    Domain ordered;
    for (const std::string& name : spec.order) {
      int i = d.index_of(name);
      if (i < 0) throw std::invalid_argument("ordering names unknown value '" + name + "'");
      ordered.names.push_back(d.names[static_cast<std::size_t>(i)]);
      ordered.snapshots.push_back(d.snapshots[static_cast<std::size_t>(i)]);
    }
    if (ordered.names.size() != d.names.size())
      throw std::invalid_argument("ordering does not cover the generated domain");
    d = std::move(ordered);
  }
  d.validate();
  return d;
}

namespace {

ValueSet matching_values(const Domain& d,
                         const std::vector<std::optional<BoolExpr>>& coords,
                         std::span<const std::uint8_t> inputs) {
  ValueSet cell = 0;
  for (std::size_t v = 0; v < d.size(); ++v) {
    const Snapshot& s = d.snapshots[v];
    bool match = true;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (!coords[c]) continue;
      if ((s[c] != 0) != coords[c]->eval(inputs)) {
        match = false;
        break;
      }
    }
    if (match) cell |= vs_single(static_cast<int>(v));
  }
  return cell;
}

}  // namespace

Nmatrix build_swap_nmatrix(std::string name, const Domain& domain,
                           const CoordinateRule& rules,
                           const std::function<bool(const Snapshot&)>& designated) {
  if (!domain.snapshot_backed())
    throw std::invalid_argument("build_swap_nmatrix: domain has no snapshots");
  const std::size_t n = domain.size();
  const std::size_t w = static_cast<std::size_t>(domain.width());

  auto check_rule = [&](const std::vector<std::optional<BoolExpr>>& coords, const char* conn) {
    if (coords.size() != w)
      throw std::invalid_argument(name + ": rule width mismatch for " + conn);
    bool any = false;
    for (const auto& c : coords) any = any || c.has_value();
    if (!any) throw std::invalid_argument(name + ": no constrained coordinate for " + conn);
  };
  check_rule(rules.neg, "neg");
  check_rule(rules.circ, "circ");
  check_rule(rules.conj, "and");
  check_rule(rules.disj, "or");
  check_rule(rules.imp, "imp");

  Nmatrix m;
  m.name = std::move(name);
  m.domain = domain;
  for (std::size_t v = 0; v < n; ++v)
    if (designated(domain.snapshots[v])) m.designated |= vs_single(static_cast<int>(v));

  auto unary_table = [&](const std::vector<std::optional<BoolExpr>>& coords, const char* conn) {
    std::vector<ValueSet> t(n);
    for (std::size_t a = 0; a < n; ++a) {
      t[a] = matching_values(domain, coords, domain.snapshots[a]);
      if (t[a] == 0)
        throw std::invalid_argument(m.name + ": empty cell for " + std::string(conn) + " at " +
                                    domain.names[a]);
    }
    return t;
  };
  auto binary_table = [&](const std::vector<std::optional<BoolExpr>>& coords, const char* conn) {
    std::vector<ValueSet> t(n * n);
    std::vector<std::uint8_t> inputs(2 * w);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::copy(domain.snapshots[a].begin(), domain.snapshots[a].end(), inputs.begin());
        std::copy(domain.snapshots[b].begin(), domain.snapshots[b].end(),
                  inputs.begin() + static_cast<std::ptrdiff_t>(w));
        t[a * n + b] = matching_values(domain, coords, inputs);
        if (t[a * n + b] == 0)
          throw std::invalid_argument(m.name + ": empty cell for " + std::string(conn) + " at (" +
                                      domain.names[a] + ", " + domain.names[b] + ")");
      }
    return t;
  };

  m.neg = unary_table(rules.neg, "neg");
  m.circ = unary_table(rules.circ, "circ");
  m.conj = binary_table(rules.conj, "and");
  m.disj = binary_table(rules.disj, "or");
  m.imp = binary_table(rules.imp, "imp");
  m.validate();
  return m;
}

namespace {

// Shared designation rule: the first coordinate holds.
bool first_bit(const Snapshot& s) { return s[0] != 0; }

Domain pair_domain() {
  SnapshotSpec spec;
  spec.width = 2;
  spec.admits = [](const Snapshot& s) { return s[0] || s[1]; };
  spec.label = [](const Snapshot& s) -> std::string {
    if (s[0] && !s[1]) return "T";
    if (s[0] && s[1]) return "t";
    return "F";
  };
  spec.order = {"T", "t", "F"};
  return generate_snapshot_domain(spec);
}

Domain triple_domain() {
  SnapshotSpec spec;
  spec.width = 3;
  spec.admits = [](const Snapshot& s) {
    bool tnd = s[0] || s[1];
    bool circ_tnd = s[2] || !(s[0] && s[1]);
    return tnd && circ_tnd;
  };
  spec.label = [](const Snapshot& s) -> std::string {
    if (s[0] && !s[1]) return s[2] ? "t" : "T";
    if (s[0] && s[1]) return "b";
    return s[2] ? "f" : "F";
  };
  spec.order = {"T", "t", "b", "f", "F"};
  return generate_snapshot_domain(spec);
}

// z1 = x1 # y1 for the binary connectives of a swap structure of width w.
void binary_first_coordinate(CoordinateRule& r, std::size_t w) {
  auto a1 = BoolExpr::var(0);
  auto b1 = BoolExpr::var(static_cast<int>(w));
  r.conj.assign(w, std::nullopt);
  r.disj.assign(w, std::nullopt);
  r.imp.assign(w, std::nullopt);
  r.conj[0] = BoolExpr::band(a1, b1);
  r.disj[0] = BoolExpr::bor(a1, b1);
  r.imp[0] = BoolExpr::bimp(a1, b1);
}

CoordinateRule swap_rules_width2(bool det_circ, bool det_neg) {
  CoordinateRule r;
  binary_first_coordinate(r, 2);
  auto a1 = BoolExpr::var(0);
  auto a2 = BoolExpr::var(1);
  r.neg.assign(2, std::nullopt);
  r.neg[0] = a2;
  if (det_neg) r.neg[1] = a1;
  r.circ.assign(2, std::nullopt);
  r.circ[0] = BoolExpr::bnot(BoolExpr::band(a1, a2));
  if (det_circ) r.circ[1] = BoolExpr::band(a1, a2);
  return r;
}

}  // namespace

CoordinateRule swap_rules_width3(int neg_determinism) {
  if (neg_determinism < 0 || neg_determinism > 2)
    throw std::invalid_argument("swap_rules_width3: level must be 0, 1 or 2");
  CoordinateRule r;
  binary_first_coordinate(r, 3);
  auto a1 = BoolExpr::var(0);
  auto a2 = BoolExpr::var(1);
  auto a3 = BoolExpr::var(2);
  r.neg.assign(3, std::nullopt);
  r.neg[0] = a2;
  if (neg_determinism >= 1) r.neg[1] = a1;
  if (neg_determinism >= 2) r.neg[2] = a3;
  // circ is always deterministic on triples
  auto not_contradictory = BoolExpr::bnot(BoolExpr::band(a1, a2));
  r.circ.assign(3, std::nullopt);
  r.circ[0] = not_contradictory;
  r.circ[1] = a3;
  r.circ[2] = BoolExpr::band(a3, not_contradictory);
  return r;
}

CoordinateRule twist_rules_lfi3() {
  CoordinateRule r;
  auto a1 = BoolExpr::var(0);
  auto a2 = BoolExpr::var(1);
  auto a3 = BoolExpr::var(2);
  auto b1 = BoolExpr::var(3);
  auto b2 = BoolExpr::var(4);
  auto b3 = BoolExpr::var(5);
  auto n = [](BoolExpr e) { return BoolExpr::bnot(std::move(e)); };
  auto l_and = [](BoolExpr a, BoolExpr b) { return BoolExpr::band(std::move(a), std::move(b)); };
  auto l_or = [](BoolExpr a, BoolExpr b) { return BoolExpr::bor(std::move(a), std::move(b)); };

  r.conj = {l_and(a1, b1), l_or(a2, b2),
            l_or(l_or(l_and(n(a2), b3), l_and(a3, n(b2))), l_and(a3, b3))};
  r.disj = {l_or(a1, b1), l_and(a2, b2),
            l_or(l_or(l_and(n(a1), b3), l_and(a3, n(b1))), l_and(a3, b3))};
  r.imp = {BoolExpr::bimp(a1, b1), l_and(b2, l_or(n(a2), a3)),
           l_or(l_or(l_and(n(a2), b3), l_and(l_and(n(a2), a3), n(b1))),
                l_or(l_and(a3, b3), l_and(l_and(n(a1), a3), n(b1))))};
  r.neg = {a2, a1, a3};
  auto not_contradictory = n(l_and(a1, a2));
  r.circ = {not_contradictory, a3, l_and(a3, n(l_and(a1, a2)))};
  return r;
}

Nmatrix build_lfi3_twist() {
  return build_swap_nmatrix("M_2", triple_domain(), twist_rules_lfi3(), first_bit);
}

Nmatrix submatrix(const Nmatrix& m, std::string name, std::span<const std::string> names) {
  if (!m.deterministic())
    throw std::invalid_argument("submatrix: base matrix must be deterministic");
  std::vector<int> pick;
  Domain d;
  for (const std::string& nm : names) {
    int i = m.domain.index_of(nm);
    if (i < 0) throw std::invalid_argument("submatrix: unknown value '" + nm + "'");
    pick.push_back(i);
    d.names.push_back(m.domain.names[static_cast<std::size_t>(i)]);
    if (m.domain.snapshot_backed())
      d.snapshots.push_back(m.domain.snapshots[static_cast<std::size_t>(i)]);
  }
  auto local = [&](int big) -> int {
    for (std::size_t i = 0; i < pick.size(); ++i)
      if (pick[i] == big) return static_cast<int>(i);
    return -1;
  };

  Nmatrix out;
  out.name = std::move(name);
  out.domain = std::move(d);
  const std::size_t n = pick.size();
  auto map1 = [&](const std::vector<ValueSet>& table, const char* conn) {
    std::vector<ValueSet> t(n);
    for (std::size_t a = 0; a < n; ++a) {
      int r = local(vs_first(table[static_cast<std::size_t>(pick[a])]));
      if (r < 0)
        throw std::invalid_argument("submatrix: " + std::string(conn) + " leaves the subset at " +
                                    out.domain.names[a]);
      t[a] = vs_single(r);
    }
    return t;
  };
  auto map2 = [&](const std::vector<ValueSet>& table, const char* conn) {
    std::vector<ValueSet> t(n * n);
    const std::size_t big_n = m.n();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        int r = local(vs_first(table[static_cast<std::size_t>(pick[a]) * big_n +
                                     static_cast<std::size_t>(pick[b])]));
        if (r < 0)
          throw std::invalid_argument("submatrix: " + std::string(conn) +
                                      " leaves the subset at (" + out.domain.names[a] + ", " +
                                      out.domain.names[b] + ")");
        t[a * n + b] = vs_single(r);
      }
    return t;
  };
  out.neg = map1(m.neg, "neg");
  out.circ = map1(m.circ, "circ");
  out.conj = map2(m.conj, "and");
  out.disj = map2(m.disj, "or");
  out.imp = map2(m.imp, "imp");
  for (std::size_t a = 0; a < n; ++a)
    if (m.is_designated(pick[a])) out.designated |= vs_single(static_cast<int>(a));
  out.validate();
  return out;
}

std::shared_ptr<const Nmatrix> m0_nmatrix() {
  static const auto m = std::make_shared<const Nmatrix>(
      build_swap_nmatrix("M_0", pair_domain(), swap_rules_width2(false, false), first_bit));
  return m;
}

std::shared_ptr<const Nmatrix> m1_nmatrix() {
  static const auto m = std::make_shared<const Nmatrix>(
      build_swap_nmatrix("M_1", pair_domain(), swap_rules_width2(false, true), first_bit));
  return m;
}

std::shared_ptr<const Nmatrix> mbcci_nmatrix() {
  static const auto m = std::make_shared<const Nmatrix>(
      build_swap_nmatrix("N_0^0", pair_domain(), swap_rules_width2(true, false), first_bit));
  return m;
}

std::shared_ptr<const Nmatrix> cie_nmatrix() {
  static const auto m = std::make_shared<const Nmatrix>(
      build_swap_nmatrix("N_0^1", pair_domain(), swap_rules_width2(true, true), first_bit));
  return m;
}

std::shared_ptr<const Nmatrix> swap5_nmatrix(int k) {
  static const auto m0 = std::make_shared<const Nmatrix>(
      build_swap_nmatrix("M_1^0", triple_domain(), swap_rules_width3(0), first_bit));
  static const auto m1 = std::make_shared<const Nmatrix>(
      build_swap_nmatrix("M_1^1", triple_domain(), swap_rules_width3(1), first_bit));
  static const auto m2 = std::make_shared<const Nmatrix>(
      build_swap_nmatrix("M_1^2", triple_domain(), swap_rules_width3(2), first_bit));
  switch (k) {
    case 0: return m0;
    case 1: return m1;
    case 2: return m2;
    default: throw std::invalid_argument("swap5_nmatrix: k must be 0, 1 or 2");
  }
}

std::shared_ptr<const Nmatrix> lfi3_matrix() {
  static const auto m = std::make_shared<const Nmatrix>(build_lfi3_twist());
  return m;
}

std::shared_ptr<const Nmatrix> lfi1_matrix() {
  static const auto m = std::make_shared<const Nmatrix>([] {
    const std::vector<std::string> names{"T", "b", "F"};
    return submatrix(*lfi3_matrix(), "M_LFI1", names);
  }());
  return m;
}

std::shared_ptr<const Nmatrix> cpl_matrix() {
  static const auto m = std::make_shared<const Nmatrix>([] {
    const std::vector<std::string> names{"T", "F"};
    return submatrix(*lfi3_matrix(), "M_CPL", names);
  }());
  return m;
}

LatticeReport check_lattice_agreement(const Nmatrix& m, std::span<const std::string> chain) {
  LatticeReport report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  std::vector<int> rank(m.n(), -1);
  for (std::size_t r = 0; r < chain.size(); ++r) {
    int v = m.domain.index_of(chain[r]);
    if (v < 0) {
      fail("chain value '" + chain[r] + "' not in the domain");
      return report;
    }
    rank[static_cast<std::size_t>(v)] = static_cast<int>(r);
  }
  if (chain.size() != m.n()) {
    fail("chain does not cover the domain");
    return report;
  }

  auto det = [&](Formula::Kind k, int a, int b, int& out) {
    ValueSet c = m.cell(k, a, b);
    if (vs_count(c) != 1) {
      fail("non-deterministic cell; lattice comparison needs a matrix");
      return false;
    }
    out = vs_first(c);
    return true;
  };

  const std::size_t n = m.n();
  // conjunction = infimum, disjunction = supremum
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int vand, vor;
      if (!det(Formula::Kind::And, static_cast<int>(a), static_cast<int>(b), vand) ||
          !det(Formula::Kind::Or, static_cast<int>(a), static_cast<int>(b), vor))
        return report;
      int lo = rank[a] <= rank[b] ? static_cast<int>(a) : static_cast<int>(b);
      int hi = rank[a] <= rank[b] ? static_cast<int>(b) : static_cast<int>(a);
      if (vand != lo)
        fail("and(" + m.value_name(static_cast<int>(a)) + ", " + m.value_name(static_cast<int>(b)) +
             ") = " + m.value_name(vand) + " differs from infimum " + m.value_name(lo));
      if (vor != hi)
        fail("or(" + m.value_name(static_cast<int>(a)) + ", " + m.value_name(static_cast<int>(b)) +
             ") = " + m.value_name(vor) + " differs from supremum " + m.value_name(hi));
    }

  // negation: involution, antitone on the chain
  std::vector<int> negv(n);
  for (std::size_t a = 0; a < n; ++a)
    if (!det(Formula::Kind::Neg, static_cast<int>(a), -1, negv[a])) return report;
  for (std::size_t a = 0; a < n; ++a) {
    if (negv[static_cast<std::size_t>(negv[a])] != static_cast<int>(a))
      fail("negation is not an involution at " + m.value_name(static_cast<int>(a)));
    for (std::size_t b = 0; b < n; ++b)
      if (rank[a] <= rank[b] &&
          rank[static_cast<std::size_t>(negv[b])] > rank[static_cast<std::size_t>(negv[a])])
        fail("negation is not antitone on (" + m.value_name(static_cast<int>(a)) + ", " +
             m.value_name(static_cast<int>(b)) + ")");
  }

  // implication = strong negation of the antecedent joined with the consequent
  for (std::size_t a = 0; a < n; ++a) {
    int ca;
    if (!det(Formula::Kind::Circ, static_cast<int>(a), -1, ca)) return report;
    int sna;
    if (!det(Formula::Kind::And, negv[a], ca, sna)) return report;
    for (std::size_t b = 0; b < n; ++b) {
      int vimp, expected;
      if (!det(Formula::Kind::Imp, static_cast<int>(a), static_cast<int>(b), vimp) ||
          !det(Formula::Kind::Or, sna, static_cast<int>(b), expected))
        return report;
      if (vimp != expected)
        fail("imp(" + m.value_name(static_cast<int>(a)) + ", " + m.value_name(static_cast<int>(b)) +
             ") = " + m.value_name(vimp) + " differs from ~a | b = " + m.value_name(expected));
    }
  }

  // De Morgan, cell by cell
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int vand, vor, l1, r1, l2, r2;
      if (!det(Formula::Kind::And, static_cast<int>(a), static_cast<int>(b), vand) ||
          !det(Formula::Kind::Or, static_cast<int>(a), static_cast<int>(b), vor) ||
          !det(Formula::Kind::Or, negv[a], negv[b], r1) ||
          !det(Formula::Kind::And, negv[a], negv[b], r2))
        return report;
      l1 = negv[static_cast<std::size_t>(vand)];
      l2 = negv[static_cast<std::size_t>(vor)];
      if (l1 != r1)
        fail("De Morgan (and) fails at (" + m.value_name(static_cast<int>(a)) + ", " +
             m.value_name(static_cast<int>(b)) + ")");
      if (l2 != r2)
        fail("De Morgan (or) fails at (" + m.value_name(static_cast<int>(a)) + ", " +
             m.value_name(static_cast<int>(b)) + ")");
    }

  return report;
}

LatticeReport check_lattice_agreement(const Nmatrix& m) {
  const std::vector<std::string> chain{"F", "f", "b", "t", "T"};
  return check_lattice_agreement(m, chain);
}

}  // namespace lfikit
