#include "equistream/index_set.hpp"

#include <algorithm>

namespace equistream {

bool PeriodicIndexSet::contains(Index t) const {
  if (t < 1) return false;
  if (std::binary_search(explicit_members.begin(), explicit_members.end(), t)) return true;
  return t > offset && !residues.empty() && residues.count(t % period) > 0;
}

std::vector<Index> PeriodicIndexSet::members_up_to(Index limit) const {
  std::vector<Index> out;
  for (Index t : explicit_members) {
    if (t > limit) break;
    out.push_back(t);
  }
  if (!residues.empty()) {
    for (Index t = offset + 1; t <= limit; ++t)
      if (residues.count(t % period) &&
          !std::binary_search(explicit_members.begin(), explicit_members.end(), t))
        out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PeriodicIndexSet PeriodicIndexSet::from_explicit(std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PeriodicIndexSet s;
  s.explicit_members = std::move(members);
  s.offset = s.explicit_members.empty() ? 0 : s.explicit_members.back();
  return s;
}

}  // namespace equistream
