#pragma once

// Non-deterministic matrices: a domain, a designated subset, and one
// multioperation per connective mapping value tuples to nonempty value sets.
// An ordinary matrix is the special case where every cell is a singleton.
// Restrictions cut the legal valuation set down (CC and IP families); a
// matrix/Nmatrix plus restrictions is packaged as a Semantics.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lfikit/domain.hpp"
#include "lfikit/formula.hpp"

namespace lfikit {

// Bitmask over domain indices; bit i = value i.
using ValueSet = std::uint32_t;

inline bool vs_contains(ValueSet s, int v) { return (s >> v) & 1u; }
inline int vs_count(ValueSet s) { return __builtin_popcount(s); }
inline int vs_first(ValueSet s) { return __builtin_ctz(s); }
inline ValueSet vs_single(int v) { return ValueSet{1} << v; }
inline ValueSet vs_all(std::size_t n) { return (ValueSet{1} << n) - 1; }

struct Nmatrix {
  std::string name;
  Domain domain;
  ValueSet designated = 0;

  std::vector<ValueSet> neg, circ;         // |domain| cells
  std::vector<ValueSet> conj, disj, imp;   // |domain|^2 cells, row-major [a*n+b]

  std::size_t n() const { return domain.size(); }
  bool is_designated(int v) const { return vs_contains(designated, v); }

  ValueSet cell(Formula::Kind k, int a, int b = -1) const;
  bool deterministic() const;  // every cell a singleton

  // Nonempty cells, nonempty proper designated set, table sizes.
  void validate() const;

  std::string value_name(int v) const { return domain.names[static_cast<std::size_t>(v)]; }
  std::string set_str(ValueSet s) const;  // "{T, t}"
};

// Families of valuation restrictions.
//   CC(n): whenever o^n g and o^{n+1} g both receive values, value(o^n g) in
//          {T, F} forces value(o^{n+1} g) = T.
//   IP(j): value(o^j g) = value(o^j ~g).
struct Restriction {
  enum class Family { CC, IP };
  Family family;
  int param;

  static Restriction cc(int n);  // n >= 0
  static Restriction ip(int j);  // j >= 1
  std::string str() const;       // "CC(1)", "IP(2)"
};

enum class SemKind { Matrix, Nmatrix, RNmatrix };

struct Semantics {
  SemKind kind;
  std::string name;
  std::shared_ptr<const Nmatrix> matrix;
  std::vector<Restriction> restrictions;  // nonempty only for RNmatrix

  static Semantics plain_matrix(std::string name, std::shared_ptr<const Nmatrix> m);
  static Semantics nmatrix(std::string name, std::shared_ptr<const Nmatrix> m);
  static Semantics rnmatrix(std::string name, std::shared_ptr<const Nmatrix> m,
                            std::vector<Restriction> rs);
};

}  // namespace lfikit
