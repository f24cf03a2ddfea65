#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "equistream/pairing.hpp"
#include "equistream/stream.hpp"
#include "equistream/swr.hpp"

namespace equistream {

/// Checks whether the premise of `axiom` holds between x and y.
/// PD/SE inspect the two-coordinate pattern directly, AN uses finite
/// permutations, M uses dominance; GE/GPD/IE/WE run witness search to
/// depth T.
WitnessReport premise_holds(Axiom axiom, const Stream& x, const Stream& y, Index depth);

struct GeneratorConfig {
  std::vector<Rational> values;  // utility values to draw from, >= 4 distinct
  Index depth = 200;             // evaluation depth passed to witness search
  Index max_period = 12;
  Index max_preperiod = 4;
};

/// A premise-valid-by-construction instance: the axiom's premise holds
/// between x and y with the stated direction; for the generalized axioms
/// the certifying pairing is attached.
struct PremiseInstance {
  Stream x;
  Stream y;
  std::optional<PairingFunction> alpha;
  Direction direction = Direction::None;
};

PremiseInstance generate_premise(Axiom axiom, const GeneratorConfig& config,
                                 std::mt19937_64& rng);

struct Violation {
  long long trial = 0;
  Stream x;
  Stream y;
  Direction direction = Direction::None;
  std::string observed;  // SWF values or SWR verdict, re-checkable
};

struct AuditReport {
  Axiom axiom = Axiom::GE;
  long long trials = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

using SwfHandle = std::function<Rational(const Stream&)>;
using SwrHandle = std::function<ComparisonVerdict(const Stream&, const Stream&)>;

/// Generates `trials` premise instances and asserts the axiom's conclusion
/// on W: strict inequality for the equity axioms, equality for AN, weak
/// inequality for M.
AuditReport audit_swf(const SwfHandle& w, Axiom axiom, const GeneratorConfig& config,
                      long long trials, std::uint64_t seed);

/// Same protocol with comparator verdicts: strictly-greater for the
/// preferred side, equivalent for AN, not strictly-less for M.
AuditReport audit_swr(const SwrHandle& r, Axiom axiom, const GeneratorConfig& config,
                      long long trials, std::uint64_t seed);

}  // namespace equistream
