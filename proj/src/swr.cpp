#include "equistream/swr.hpp"

#include <algorithm>
#include <map>

#include "equistream/errors.hpp"

namespace equistream {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::StrictlyLess: return "strictly-less";
    case Relation::Equivalent: return "equivalent";
    case Relation::StrictlyGreater: return "strictly-greater";
    case Relation::Incomparable: return "incomparable";
    case Relation::Undetermined: return "undetermined";
  }
  return "?";
}

std::vector<Rational> sorted_prefix(const Stream& x, Index n) {
  std::vector<Rational> p = x.prefix(n);
  std::sort(p.begin(), p.end());
  return p;
}

namespace {

// s_n for n = 1..depth via value-count deltas: the sorted prefixes first
// differ at the smallest value whose cumulative counts differ, and the
// stream with the larger cumulative count there is lexicographically
// smaller.
std::vector<int> sign_sequence(const Stream& x, const Stream& y, Index depth) {
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(depth));
  std::map<Rational, long long> delta;  // count_x(v) - count_y(v) on prefix n
  for (Index n = 1; n <= depth; ++n) {
    delta[x.coordinate(n)]++;
    delta[y.coordinate(n)]--;
    long long cum = 0;
    int sign = 0;
    for (const auto& [v, d] : delta) {
      cum += d;
      if (cum != 0) {
        sign = cum > 0 ? -1 : +1;
        break;
      }
    }
    s.push_back(sign);
  }
  return s;
}

int sign_at(const std::vector<int>& s, Index n) {
  return s[static_cast<std::size_t>(n - 1)];
}

Relation relation_of_tail(bool has_neg, bool has_pos) {
  if (!has_neg && !has_pos) return Relation::Equivalent;
  if (has_neg && !has_pos) return Relation::StrictlyLess;
  if (!has_neg) return Relation::StrictlyGreater;
  return Relation::Incomparable;
}

void fill_tail_shape(ComparisonVerdict& v) {
  Index depth = v.depth;
  int last = sign_at(v.signs, depth);
  Index n0 = depth;
  while (n0 > 1 && sign_at(v.signs, n0 - 1) == last) --n0;
  v.stabilization_index = n0;
  if (n0 > 1) {
    // Tail is constant only from n0 on; look for a short period instead.
    Index len = depth;
    for (Index p = 1; 2 * p <= len; ++p) {
      bool periodic = true;
      for (Index n = depth - 2 * p + 1; n + p <= depth && periodic; ++n)
        if (sign_at(v.signs, n) != sign_at(v.signs, n + p)) periodic = false;
      if (periodic && p > 1) {
        v.oscillation_period = p;
        break;
      }
      if (periodic) break;  // p == 1 means constant tail, already summarized
    }
  }
}

}  // namespace

ComparisonVerdict filter_compare(const Stream& x, const Stream& y, Index depth,
                                 Index window) {
  if (window < 1 || window >= depth)
    throw BadParameter("filter_compare needs 1 <= window < depth");
  if (x.is_periodic() != y.is_periodic())
    throw DepthMismatch("filter_compare needs two periodic or two truncated streams");

  ComparisonVerdict v;
  v.depth = depth;
  v.window = window;

  if (x.is_periodic()) {
    auto [a, b] = align(x, y);
    Index per = a.period_length();
    v.signs = sign_sequence(a, b, depth);
    fill_tail_shape(v);
    if (depth >= std::max(a.pre_length(), window) + 2 * per) {
      bool match = true;
      bool has_neg = false, has_pos = false;
      for (Index n = depth - per + 1; n <= depth; ++n) {
        if (sign_at(v.signs, n) != sign_at(v.signs, n - per)) match = false;
        if (sign_at(v.signs, n) < 0) has_neg = true;
        if (sign_at(v.signs, n) > 0) has_pos = true;
      }
      v.relation = match ? relation_of_tail(has_neg, has_pos) : Relation::Undetermined;
      return v;
    }
    // Depth too shallow for the block detector: fall through to the window rule.
  } else {
    if (x.depth() != y.depth())
      throw DepthMismatch("filter_compare over truncations of unequal depth");
    if (depth > x.depth())
      throw OutOfDepth("filter_compare depth exceeds the truncation");
    v.signs = sign_sequence(x, y, depth);
    fill_tail_shape(v);
  }

  bool has_neg = false, has_pos = false;
  for (Index n = window; n <= depth; ++n) {
    if (sign_at(v.signs, n) < 0) has_neg = true;
    if (sign_at(v.signs, n) > 0) has_pos = true;
  }
  if (!(has_neg && has_pos)) {
    v.relation = relation_of_tail(has_neg, has_pos);
    return v;
  }
  // Mixed signs on the window: incomparable only when the oscillation is a
  // detected stable pattern; otherwise refuse to rule.
  v.relation =
      v.oscillation_period > 0 ? Relation::Incomparable : Relation::Undetermined;
  return v;
}

}  // namespace equistream
