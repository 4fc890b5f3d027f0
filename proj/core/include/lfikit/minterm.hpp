#pragma once

// Sum-of-products synthesis from truth tables, with don't-care rows. The raw
// form is one product term per 1-row; minimize_sop merges prime implicants
// (Quine-McCluskey with don't-cares, greedy cover). Either output is accepted
// only after exhaustive re-evaluation against the table.

#include <iosfwd>
#include <vector>

#include "lfikit/boolexpr.hpp"

namespace lfikit {

struct TruthTable {
  int width = 0;
  // 2^width entries indexed by the input read as a big-endian bit string;
  // 0, 1, or -1 for don't-care.
  std::vector<std::int8_t> out;

  static TruthTable make(int width, std::int8_t fill = -1);
  std::int8_t at(unsigned input) const { return out[input]; }
  void set(unsigned input, std::int8_t v) { out[input] = v; }
  std::size_t rows() const { return out.size(); }
};

// File format: one row per line, "bits -> bit" (e.g. "101 -> 1"); blank lines
// and "#" comments ignored; unlisted rows are don't-cares. All listed rows
// must share one width. Throws std::invalid_argument on malformed input.
TruthTable load_truth_table(std::istream& in);
TruthTable parse_truth_table(const std::string& text);

// Unsimplified sum of products over the 1-rows; constant 0 for none.
BoolExpr synthesize_minterms(const TruthTable& t);

// Prime-implicant cover of the 1-rows, using don't-cares for merging.
BoolExpr minimize_sop(const TruthTable& t);

// Exhaustive agreement on every specified row.
bool agrees(const BoolExpr& e, const TruthTable& t);

}  // namespace lfikit
