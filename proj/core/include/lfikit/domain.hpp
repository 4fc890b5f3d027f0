#pragma once

// Finite value domains. A value is an index into its domain's name list; the
// listing order is the canonical enumeration order everywhere (legal
// assignment streams, countermodel choice, table printing). Domains may carry
// bit-tuple snapshots backing each value.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lfikit {

using Snapshot = std::vector<std::uint8_t>;

std::string snapshot_str(const Snapshot& s);  // e.g. "(1,0,1)"

struct Domain {
  std::vector<std::string> names;
  // Empty, or one snapshot per value, all of equal width and pairwise distinct.
  std::vector<Snapshot> snapshots;

  std::size_t size() const { return names.size(); }
  bool snapshot_backed() const { return !snapshots.empty(); }
  int width() const { return snapshot_backed() ? static_cast<int>(snapshots[0].size()) : 0; }

  int index_of(std::string_view name) const;        // -1 if absent
  int index_of_snapshot(const Snapshot& s) const;   // -1 if absent

  void validate() const;  // throws std::invalid_argument on a broken invariant
};

}  // namespace lfikit
