#include "lfikit/nmatrix.hpp"

#include <stdexcept>

namespace lfikit {

ValueSet Nmatrix::cell(Formula::Kind k, int a, int b) const {
  const std::size_t m = n();
  switch (k) {
    case Formula::Kind::Neg: return neg[static_cast<std::size_t>(a)];
    case Formula::Kind::Circ: return circ[static_cast<std::size_t>(a)];
    case Formula::Kind::And: return conj[static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)];
    case Formula::Kind::Or: return disj[static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)];
    case Formula::Kind::Imp: return imp[static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)];
    case Formula::Kind::Atom: break;
  }
  throw std::logic_error("cell(): atoms have no multioperation");
}

bool Nmatrix::deterministic() const {
  auto single = [](const std::vector<ValueSet>& t) {
    for (ValueSet s : t)
      if (vs_count(s) != 1) return false;
    return true;
  };
  return single(neg) && single(circ) && single(conj) && single(disj) && single(imp);
}

void Nmatrix::validate() const {
  domain.validate();
  const std::size_t m = n();
  if (designated == 0) throw std::invalid_argument(name + ": empty designated set");
  if (designated == vs_all(m)) throw std::invalid_argument(name + ": designated set not proper");
  auto check = [&](const std::vector<ValueSet>& t, std::size_t want, const char* conn) {
    if (t.size() != want)
      throw std::invalid_argument(name + ": bad table size for " + conn);
    for (ValueSet s : t) {
      if (s == 0) throw std::invalid_argument(name + ": empty cell in " + std::string(conn));
      if (s >= (ValueSet{1} << m))
        throw std::invalid_argument(name + ": cell out of range in " + std::string(conn));
    }
  };
  check(neg, m, "neg");
  check(circ, m, "circ");
  check(conj, m * m, "and");
  check(disj, m * m, "or");
  check(imp, m * m, "imp");
}

std::string Nmatrix::set_str(ValueSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < n(); ++v) {
    if (!vs_contains(s, static_cast<int>(v))) continue;
    if (!first) out += ", ";
    out += domain.names[v];
    first = false;
  }
  out += '}';
  return out;
}

Restriction Restriction::cc(int n) {
  if (n < 0) throw std::invalid_argument("CC restriction: negative parameter");
  return {Family::CC, n};
}

Restriction Restriction::ip(int j) {
  if (j < 1) throw std::invalid_argument("IP restriction: parameter must be >= 1");
  return {Family::IP, j};
}

std::string Restriction::str() const {
  return (family == Family::CC ? "CC(" : "IP(") + std::to_string(param) + ")";
}

Semantics Semantics::plain_matrix(std::string name, std::shared_ptr<const Nmatrix> m) {
  if (!m->deterministic())
    throw std::invalid_argument(name + ": matrix semantics requires singleton cells");
  return {SemKind::Matrix, std::move(name), std::move(m), {}};
}

Semantics Semantics::nmatrix(std::string name, std::shared_ptr<const Nmatrix> m) {
  return {SemKind::Nmatrix, std::move(name), std::move(m), {}};
}

Semantics Semantics::rnmatrix(std::string name, std::shared_ptr<const Nmatrix> m,
                              std::vector<Restriction> rs) {
  return {SemKind::RNmatrix, std::move(name), std::move(m), std::move(rs)};
}

}  // namespace lfikit
