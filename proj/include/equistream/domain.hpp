#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equistream/rational.hpp"

namespace equistream {

/// Rational extended with -inf/+inf markers; used for chain limits and
/// domain bounds.
struct ExtendedRational {
  enum class Kind { NegInfinity, Finite, PosInfinity };
  Kind kind = Kind::Finite;
  Rational value;

  static ExtendedRational neg_infinity() { return {Kind::NegInfinity, Rational()}; }
  static ExtendedRational pos_infinity() { return {Kind::PosInfinity, Rational()}; }
  static ExtendedRational finite(Rational v) { return {Kind::Finite, std::move(v)}; }

  bool is_finite() const { return kind == Kind::Finite; }
  std::string str() const;

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
};

enum class ChainDirection { Increasing, Decreasing };

/// Closed form for a chain's n-th term, n = 1, 2, 3, ...:
/// either affine  a + b*n  (b != 0), or harmonic  a + c/(n+k)  (c != 0,
/// k >= 0). Covers every domain family the analysis needs.
struct ChainForm {
  enum class Kind { Affine, Harmonic };
  Kind kind = Kind::Harmonic;
  Rational a;  // constant term
  Rational b;  // affine slope
  Rational c;  // harmonic numerator
  long long k = 0;

  Rational term(long long n) const;
  ChainDirection direction() const;
  ExtendedRational limit() const;

  /// Solves term(n) == v for integer n >= 1.
  bool contains(const Rational& v) const;

  /// Image under the strictly monotone affine map t -> u*t + w (u != 0).
  ChainForm transformed(const Rational& u, const Rational& w) const;

  /// Parses forms like "1/(n+2)", "n/(n+1)", "1/2-1/(n+1)", "-n", "n".
  static ChainForm parse(const std::string& text);
  std::string str() const;
};

/// One strictly monotone chain of rationals with known limit. The first
/// few terms are materialized at construction and checked against the
/// declared direction.
struct MonotoneChain {
  ChainDirection direction;
  ChainForm form;
  std::vector<Rational> head;  // first materialized terms
  ExtendedRational limit;

  static MonotoneChain from_form(ChainForm form, long long head_terms = 50);

  /// Least element if attained (first term of an increasing chain).
  std::optional<Rational> min() const;
  std::optional<Rational> max() const;
  ExtendedRational infimum() const;
  ExtendedRational supremum() const;
};

/// A utility domain Y: a finite set plus finitely many monotone chains.
/// Arbitrary subsets of R (intervals, non-closed-form sequences) are
/// deliberately not representable.
struct UtilityDomain {
  std::vector<Rational> finite_part;  // sorted, distinct
  std::vector<MonotoneChain> chains;

  static UtilityDomain make(std::vector<Rational> finite_part,
                            std::vector<MonotoneChain> chains);
  static UtilityDomain finite(std::vector<Rational> values);

  bool contains(const Rational& v) const;
  ExtendedRational infimum() const;
  ExtendedRational supremum() const;
  std::optional<Rational> min() const;
  std::optional<Rational> max() const;

  UtilityDomain transformed(const Rational& u, const Rational& w) const;
};

enum class OrderClass { WellOrdered, OmegaStar, SigmaSubset, OmegaStarNoSigma };

struct WellOrderReport {
  bool well_ordered = true;
  /// A decreasing chain witnessing an omega-star subset, when one exists.
  std::optional<MonotoneChain> omega_star_witness;
};

struct SigmaReport {
  bool has_sigma_subset = false;
  /// (decreasing chain, increasing chain) whose tails assemble a copy of Z.
  std::optional<std::pair<MonotoneChain, MonotoneChain>> witness;
};

struct ClassificationReport {
  OrderClass order_class = OrderClass::WellOrdered;
  bool has_omega_star = false;
  bool has_sigma = false;
  std::optional<Rational> min;
  std::optional<Rational> max;
};

/// Result-1 test: well-ordered iff no infinite strictly decreasing
/// sequence. For a finite union of chains and a finite set this reduces to
/// "no decreasing chain": an infinite strictly decreasing sequence would
/// have an infinite subsequence inside one part, and increasing chains and
/// finite sets admit none.
WellOrderReport is_well_ordered(const UtilityDomain& y);

/// Result-2 test for a subset of order type sigma (a copy of Z): a
/// decreasing chain tail stacked above an increasing chain tail works iff
/// the decreasing infimum lies strictly below the increasing supremum.
SigmaReport contains_sigma_subset(const UtilityDomain& y);

ClassificationReport classify(const UtilityDomain& y);

std::string to_string(OrderClass c);

}  // namespace equistream
