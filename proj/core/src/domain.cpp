#include "lfikit/domain.hpp"

#include <set>
#include <stdexcept>

namespace lfikit {

std::string snapshot_str(const Snapshot& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i] ? '1' : '0';
  }
  out += ')';
  return out;
}

int Domain::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int Domain::index_of_snapshot(const Snapshot& s) const {
  for (std::size_t i = 0; i < snapshots.size(); ++i)
    if (snapshots[i] == s) return static_cast<int>(i);
  return -1;
}

void Domain::validate() const {
  if (names.empty()) throw std::invalid_argument("domain: empty");
  if (names.size() > 32) throw std::invalid_argument("domain: more than 32 values");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw std::invalid_argument("domain: duplicate names");
  if (!snapshots.empty()) {
    if (snapshots.size() != names.size())
      throw std::invalid_argument("domain: snapshot count mismatch");
    std::set<Snapshot> uniq(snapshots.begin(), snapshots.end());
    if (uniq.size() != snapshots.size())
      throw std::invalid_argument("domain: duplicate snapshots");
    for (const Snapshot& s : snapshots)
      if (s.size() != snapshots[0].size())
        throw std::invalid_argument("domain: uneven snapshot widths");
  }
}

}  // namespace lfikit
