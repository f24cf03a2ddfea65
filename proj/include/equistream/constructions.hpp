#pragma once

#include <array>
#include <string>
#include <vector>

#include "equistream/pairing.hpp"
#include "equistream/stream.hpp"

namespace equistream {

/// k-th rational of the fixed enumeration of Q∩(0,1): denominators
/// d = 2, 3, ..., numerators ascending and coprime to d.
/// q_1 = 1/2, q_2 = 1/3, q_3 = 2/3, q_4 = 1/4, q_5 = 3/4, ...
Rational enumerate_rational(Index k);
std::vector<Rational> enumerate_rationals(Index count);

/// The index partitions driving the impossibility constructions:
/// lower/upper split enumeration indices by q_n < r; the big_* sets are
/// their factorial images {2(n!)+1, 2(n!)+2} as stream positions, and
/// middle is the complement of all factorial blocks (independent of r).
/// All sets are materialized within [1, depth].
struct IndexPartition {
  std::vector<Index> lower, upper;
  std::vector<Index> big_lower, big_upper, middle;
};

IndexPartition partition(const Rational& r, Index depth);

struct Thm1Family {
  Stream x;
  Stream y;
  std::vector<Index> chosen;  // block indices n_k with q strictly decreasing to r
};

/// Truncated streams of the four-value construction: block n carries (b,c)
/// when q_n < r and (a,d) otherwise; y additionally rewrites the chosen
/// blocks to (b,c).
Thm1Family thm1_family(const Rational& r, Index depth, const std::array<Rational, 4>& v);

struct Thm1Swap {
  Stream y_prime;
  Index swapped = 0;              // K: how many chosen blocks were exchanged
  std::vector<Index> sources;     // chosen blocks with q >= s
  std::vector<Index> targets;     // earliest eligible (b,c)-receiving blocks
};

Thm1Swap thm1_swap(const Rational& r, const Rational& s, Index depth,
                   const std::array<Rational, 4>& v);

struct ThmFamily {
  Stream x;
  Stream y;
};

/// Six-value construction: middle blocks carry (c,f) in x and (d,e) in y;
/// big_upper positions carry a, big_lower positions carry b in both.
ThmFamily thm2_family(const Rational& r, Index depth, const std::array<Rational, 6>& v);

/// Eight-value construction: middle blocks carry (c,f)/(d,e); big_upper
/// carries (a,h) and big_lower (b,g) on odd/even positions in both.
ThmFamily thm3_family(const Rational& r, Index depth, const std::array<Rational, 8>& v);

struct VerificationStep {
  std::string claim;
  bool ok = false;
  std::string detail;
};

/// The three-link chain behind the four-value impossibility:
/// x(r) strictly below y(r), y(r) equivalent to the swapped y', and y'
/// strictly below x(s); every link checked by validate / permutation test.
std::vector<VerificationStep> verify_thm1_chain(const Rational& r, const Rational& s,
                                                Index depth,
                                                const std::array<Rational, 4>& v);

/// Six-value chain: x(r) < y(r); then y(r) < z by an infinite pairing with
/// deferred partners and z <= x(s) coordinate-wise.
std::vector<VerificationStep> verify_thm2_chain(const Rational& r, const Rational& s,
                                                Index depth,
                                                const std::array<Rational, 6>& v);

/// Eight-value chain: x(r) < y(r); then y(r) < x(s) directly through the
/// merged odd/even pairing.
std::vector<VerificationStep> verify_thm3_chain(const Rational& r, const Rational& s,
                                                Index depth,
                                                const std::array<Rational, 8>& v);

struct ExampleSet {
  std::vector<std::pair<std::string, Stream>> streams;
  std::vector<std::pair<std::string, PairingFunction>> pairings;
};

/// Named fixture streams with their attached pairings:
/// ex1 (integers, conflicting witnesses), ex2 (negative integers plus
/// dominance), intro (transfer chains), section3 (five-value periodic pair).
ExampleSet example_streams(const std::string& name, Index depth);

std::vector<VerificationStep> verify_example(const std::string& name, Index depth);

}  // namespace equistream
