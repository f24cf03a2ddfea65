#pragma once

#include <array>
#include <vector>

#include "equistream/domain.hpp"
#include "equistream/index_set.hpp"
#include "equistream/stream.hpp"

namespace equistream {

/// Exactly five utilities a < b < c < d < e.
struct FiveValueDomain {
  std::array<Rational, 5> values;

  explicit FiveValueDomain(std::array<Rational, 5> v);
  static FiveValueDomain from_list(const std::vector<Rational>& v);

  const Rational& a() const { return values[0]; }
  const Rational& b() const { return values[1]; }
  bool contains(const Rational& v) const;
};

/// Exactly seven utilities a < b < c < d < e < f < g.
struct SevenValueDomain {
  std::array<Rational, 7> values;

  explicit SevenValueDomain(std::array<Rational, 7> v);
  static SevenValueDomain from_list(const std::vector<Rational>& v);

  const Rational& a() const { return values[0]; }
  const Rational& b() const { return values[1]; }
  const Rational& f() const { return values[5]; }
  const Rational& g() const { return values[6]; }
  bool contains(const Rational& v) const;
};

/// Exact sum of base^{-n} over n in S: the finite part directly, each
/// periodic residue class as a geometric series.
Rational periodic_base_sum(const PeriodicIndexSet& s, long long base);

/// -sum_{N(x)} 2^{-n} - sum_{M(x)} 3^{-n} when N(x) = {n : x_n = a} or
/// M(x) = {n : x_n = b} is non-empty; otherwise sum_n x_n 2^{-n}.
Rational w_prop1(const Stream& x, const FiveValueDomain& y);

/// Same shape over seven values with N counting a/g coordinates and M
/// counting b/f coordinates; 0 otherwise.
Rational w_prop2(const Stream& x, const SevenValueDomain& y);

/// min_n x_n; defined for eventually periodic streams only (the
/// representation has finitely many distinct values, so the min exists).
Rational w_min(const Stream& x);

/// rho * min_n |x_n - inf Y| + (1 - rho) * min_n |sup Y - x_n|.
Rational w_rho_inf(const Stream& x, const Rational& rho, const UtilityDomain& y);

}  // namespace equistream
