#pragma once

#include <string>
#include <vector>

#include "equistream/stream.hpp"

namespace equistream {

enum class Relation { StrictlyLess, Equivalent, StrictlyGreater, Incomparable, Undetermined };

std::string to_string(Relation r);

/// Verdict of the co-finite-filter leximin comparison. signs[n-1] holds
/// s_n = lex-compare(sorted x[n], sorted y[n]) in {-1, 0, +1}.
struct ComparisonVerdict {
  Relation relation = Relation::Undetermined;
  Index depth = 0;
  Index window = 0;
  /// Smallest n0 with s_n constant on [n0, depth]; 0 when the tail oscillates.
  Index stabilization_index = 0;
  /// Detected sign period on the tail; 0 when the tail is constant.
  Index oscillation_period = 0;
  std::vector<int> signs;
};

/// Non-decreasing reordering of the first n coordinates.
std::vector<Rational> sorted_prefix(const Stream& x, Index n);

/// x <=_F y iff {n : sorted x[n] <=_lex sorted y[n]} is co-finite. The sign
/// sequence is computed to depth T; eventually periodic inputs are ruled by
/// two matching super-period sign blocks at the tail (empirical detector),
/// truncated inputs by the window [T0, T].
ComparisonVerdict filter_compare(const Stream& x, const Stream& y, Index depth = 400,
                                 Index window = 100);

}  // namespace equistream
