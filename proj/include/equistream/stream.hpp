#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equistream/index_set.hpp"
#include "equistream/rational.hpp"

namespace equistream {

enum class StreamKind { EventuallyPeriodic, Truncated };

/// A finitely-presented infinite utility stream. Two kinds:
///   - EventuallyPeriodic: preperiod followed by a repeating period
///     (coordinate defined for every t >= 1);
///   - Truncated: exactly `depth` coordinates; anything beyond fails with
///     OutOfDepth, never extrapolates.
/// Coordinates are 1-based, matching generation numbering.
class Stream {
 public:
  static Stream eventually_periodic(std::vector<Rational> preperiod,
                                    std::vector<Rational> period);
  static Stream truncated(std::vector<Rational> values, std::string provenance = "");

  StreamKind kind() const { return kind_; }
  bool is_periodic() const { return kind_ == StreamKind::EventuallyPeriodic; }

  const Rational& coordinate(Index t) const;

  Index pre_length() const { return static_cast<Index>(pre_.size()); }
  Index period_length() const { return static_cast<Index>(per_.size()); }
  Index depth() const;  // Truncated only

  const std::vector<Rational>& preperiod() const { return pre_; }
  const std::vector<Rational>& period() const { return per_; }
  const std::vector<Rational>& values() const { return values_; }
  const std::string& provenance() const { return provenance_; }

  /// First n coordinates (throws OutOfDepth past a truncation).
  std::vector<Rational> prefix(Index n) const;

  /// Distinct coordinate values, sorted ascending.
  std::vector<Rational> distinct_values() const;

  /// Indices t with x_t == v, as a decidable index set (periodic streams
  /// yield residue classes, truncated streams an explicit list).
  PeriodicIndexSet indices_with_value(const Rational& v) const;

  friend bool operator==(const Stream& a, const Stream& b) = default;

  /// Empty truncated placeholder; any coordinate access throws OutOfDepth.
  Stream() : kind_(StreamKind::Truncated) {}

 private:
  StreamKind kind_ = StreamKind::EventuallyPeriodic;
  std::vector<Rational> pre_, per_;  // EventuallyPeriodic
  std::vector<Rational> values_;     // Truncated
  std::string provenance_;
};

/// Rewrites two eventually periodic streams to a common preperiod length and
/// a common (lcm) period length without changing any coordinate.
std::pair<Stream, Stream> align(const Stream& x, const Stream& y);

/// D = { t : x_t != y_t }. Requires aligned-compatible periodic streams or
/// equal-depth truncated streams.
PeriodicIndexSet difference_set(const Stream& x, const Stream& y);

/// True iff y is obtained from x by a finite permutation of coordinates
/// (transitive closure of the single-transposition anonymity axiom).
bool is_finite_permutation(const Stream& x, const Stream& y);

/// True iff x_t >= y_t for every defined coordinate.
bool dominates(const Stream& x, const Stream& y);

/// A strictly monotone map given as a finite value table.
class MonotoneTable {
 public:
  explicit MonotoneTable(std::vector<std::pair<Rational, Rational>> entries);
  static MonotoneTable identity_on(const std::vector<Rational>& values);

  const Rational& apply(const Rational& v) const;
  bool increasing() const { return increasing_; }
  const std::vector<std::pair<Rational, Rational>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<Rational, Rational>> entries_;  // sorted by key
  bool increasing_ = true;
};

/// Coordinate-wise image f(x); preserves the stream's shape.
Stream map_stream(const MonotoneTable& f, const Stream& x);

/// Explicit truncation of the first n coordinates.
Stream materialize(const Stream& x, Index n);

}  // namespace equistream
