#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equistream/stream.hpp"

namespace equistream {

enum class PairingKind { Finite, Periodic };

using IndexPair = std::pair<Index, Index>;

/// A pairing function: a partial involution on N with dom = ran and no
/// fixed points. Finite pairings list their pairs; periodic pairings add a
/// family of base pairs replicated by a fixed period beyond an offset
/// (alpha(n + p) = alpha(n) + p). A pairing attached to a truncated stream
/// may declare `deferred` indices: coordinates it pairs with partners
/// beyond the represented depth.
class PairingFunction {
 public:
  static PairingFunction finite(std::vector<IndexPair> pairs,
                                std::vector<Index> deferred = {});
  static PairingFunction periodic(std::vector<IndexPair> explicit_pairs, Index offset,
                                  Index period, std::vector<IndexPair> rep_pairs);

  PairingKind kind() const {
    return periodic_ ? PairingKind::Periodic : PairingKind::Finite;
  }
  const std::vector<IndexPair>& explicit_pairs() const { return pairs_; }
  const std::vector<IndexPair>& rep_pairs() const { return rep_pairs_; }
  const std::vector<Index>& deferred() const { return deferred_; }
  Index offset() const { return offset_; }
  Index period() const { return period_; }

  bool in_domain(Index t) const;
  bool is_deferred(Index t) const;
  /// alpha(t); nullopt when t is outside dom (deferred indices included:
  /// their partner is not represented).
  std::optional<Index> partner(Index t) const;
  bool domain_infinite() const { return !rep_pairs_.empty(); }
  /// Largest index named explicitly by the representation.
  Index reach() const;

 private:
  PairingFunction() = default;
  void check_invariants() const;

  std::vector<IndexPair> pairs_;  // each (i, j), i < j
  std::vector<Index> deferred_;
  bool periodic_ = false;
  Index offset_ = 0;
  Index period_ = 1;
  std::vector<IndexPair> rep_pairs_;  // first endpoint inside (offset, offset+period]
};

enum class Axiom { AN, M, PD, SE, GE, GPD, IE, WE };

Axiom axiom_from_string(const std::string& name);
std::string to_string(Axiom a);

enum class Direction {
  None,
  FirstPreferred,         // x strictly preferred to y
  SecondPreferred,        // y strictly preferred to x
  Indifferent,            // x ~ y (anonymity)
  FirstWeaklyPreferred,   // x weakly preferred (monotonicity)
  SecondWeaklyPreferred,  // y weakly preferred (monotonicity)
};

std::string to_string(Direction d);

enum class WitnessStatus { VerifiedPeriodic, VerifiedToDepth, NoWitnessToDepth, Invalid };

std::string to_string(WitnessStatus s);

struct WitnessReport {
  Axiom axiom = Axiom::GE;
  Direction direction = Direction::None;
  std::optional<PairingFunction> pairing;
  WitnessStatus status = WitnessStatus::Invalid;
  Index depth = 0;  // meaningful for *ToDepth statuses
  std::string reason;
  long long checked_pairs = 0;
  long long deferred_pairs = 0;

  bool verified() const {
    return status == WitnessStatus::VerifiedPeriodic ||
           status == WitnessStatus::VerifiedToDepth;
  }
};

/// Checks a given pairing against the premise of GE/GPD/IE/WE on (x, y).
/// Periodic streams are verified exhaustively (one stabilized super-period
/// stands for the whole tail); truncated streams are verified within their
/// depth, with pairs reaching past the depth reported as deferred.
WitnessReport validate(const PairingFunction& alpha, const Stream& x, const Stream& y,
                       Axiom axiom);

/// Searches for a witness pairing by maximum bipartite matching between
/// raised and lowered coordinates. For aligned periodic inputs a
/// within-window periodic pairing is attempted first; otherwise the search
/// runs on the depth-T prefix. Sound (every returned witness passes
/// validate) and complete within the window/depth.
WitnessReport find_witness(const Stream& x, const Stream& y, Axiom axiom, Index depth);

struct BruteWitness {
  std::vector<IndexPair> pairs;
  Direction direction = Direction::None;
};

/// Exhaustive oracle over all partial involutions on {1..n}, n <= 10.
/// Test oracle for find_witness; deliberately independent of the matching
/// code path.
std::optional<BruteWitness> brute_force_witness(const std::vector<Rational>& xs,
                                                const std::vector<Rational>& ys,
                                                Axiom axiom);

}  // namespace equistream
