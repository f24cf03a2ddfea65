#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace equistream {

using Index = long long;  // 1-based generation index

/// A decidable subset of N presented as a finite explicit part plus,
/// optionally, full residue classes mod `period` beyond `offset`.
/// Membership is O(log n); the set is infinite iff `residues` is non-empty.
struct PeriodicIndexSet {
  std::vector<Index> explicit_members;  // sorted, each <= offset unless period == 0
  Index offset = 0;
  Index period = 1;
  std::set<Index> residues;  // values in [0, period)

  bool contains(Index t) const;
  bool infinite() const { return !residues.empty(); }
  bool empty() const { return explicit_members.empty() && residues.empty(); }

  /// All members in [1, limit], ascending.
  std::vector<Index> members_up_to(Index limit) const;

  static PeriodicIndexSet from_explicit(std::vector<Index> members);
};

}  // namespace equistream
