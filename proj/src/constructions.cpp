#include "equistream/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "equistream/axioms.hpp"
#include "equistream/errors.hpp"

namespace equistream {

std::vector<Rational> enumerate_rationals(Index count) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max<Index>(count, 0)));
  for (long long den = 2; static_cast<Index>(out.size()) < count; ++den)
    for (long long num = 1; num < den && static_cast<Index>(out.size()) < count; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(Rational(num) / Rational(den));
  return out;
}

Rational enumerate_rational(Index k) {
  if (k < 1) throw BadParameter("rational enumeration is 1-based");
  return enumerate_rationals(k).back();
}

namespace {

void check_unit_interval(const Rational& r) {
  if (!(Rational(0) < r && r < Rational(1)))
    throw BadParameter("parameter " + r.str() + " must lie in (0,1)");
}

// Factorial block positions {2(n!)+1, 2(n!)+2} for n = 1, 2, ... while
// they fit under `depth`; n! grows fast so the list is short.
std::vector<std::pair<Index, Index>> factorial_blocks(Index depth) {
  std::vector<std::pair<Index, Index>> blocks;
  Index fact = 1;
  for (Index n = 1;; ++n) {
    fact *= n;
    if (2 * fact + 1 > depth) break;
    blocks.emplace_back(n, 2 * fact + 1);
  }
  return blocks;
}

}  // namespace

IndexPartition partition(const Rational& r, Index depth) {
  check_unit_interval(r);
  if (depth < 1) throw BadParameter("partition needs depth >= 1");
  IndexPartition p;
  std::vector<Rational> qs = enumerate_rationals(depth);
  for (Index n = 1; n <= depth; ++n)
    (qs[static_cast<std::size_t>(n - 1)] < r ? p.lower : p.upper).push_back(n);

  std::set<Index> in_blocks;
  for (auto [n, pos] : factorial_blocks(depth)) {
    bool low = enumerate_rational(n) < r;
    for (Index t : {pos, pos + 1})
      if (t <= depth) {
        (low ? p.big_lower : p.big_upper).push_back(t);
        in_blocks.insert(t);
      }
  }
  for (Index t = 1; t <= depth; ++t)
    if (!in_blocks.count(t)) p.middle.push_back(t);
  return p;
}

namespace {

std::vector<Index> chosen_blocks(const std::vector<Rational>& qs, const Rational& r) {
  std::vector<Index> chosen;
  Rational last(1);
  for (Index n = 1; n <= static_cast<Index>(qs.size()); ++n) {
    const Rational& q = qs[static_cast<std::size_t>(n - 1)];
    if (r < q && q < last) {
      chosen.push_back(n);
      last = q;
    }
  }
  return chosen;
}

}  // namespace

Thm1Family thm1_family(const Rational& r, Index depth, const std::array<Rational, 4>& v) {
  check_unit_interval(r);
  if (depth < 2 || depth % 2 != 0)
    throw DepthTooSmall("four-value construction needs an even depth >= 2");
  const Rational &a = v[0], &b = v[1], &c = v[2], &d = v[3];
  if (!(a < b && b < c && c < d))
    throw BadParameter("construction values must be strictly increasing");
  Index blocks = depth / 2;
  std::vector<Rational> qs = enumerate_rationals(blocks);
  std::vector<Rational> xv;
  xv.reserve(static_cast<std::size_t>(depth));
  for (Index n = 1; n <= blocks; ++n) {
    bool low = qs[static_cast<std::size_t>(n - 1)] < r;
    xv.push_back(low ? b : a);
    xv.push_back(low ? c : d);
  }
  Thm1Family fam;
  fam.chosen = chosen_blocks(qs, r);
  if (fam.chosen.empty())
    throw DepthTooSmall("no enumeration index with value in (r,1) within depth");
  std::vector<Rational> yv = xv;
  for (Index n : fam.chosen) {
    yv[static_cast<std::size_t>(2 * n - 2)] = b;
    yv[static_cast<std::size_t>(2 * n - 1)] = c;
  }
  fam.x = Stream::truncated(std::move(xv), "thm1:x(" + r.str() + ")");
  fam.y = Stream::truncated(std::move(yv), "thm1:y(" + r.str() + ")");
  return fam;
}

Thm1Swap thm1_swap(const Rational& r, const Rational& s, Index depth,
                   const std::array<Rational, 4>& v) {
  if (!(r < s)) throw BadParameter("swap step needs r < s");
  check_unit_interval(s);
  Thm1Family fam = thm1_family(r, depth, v);
  Index blocks = depth / 2;
  std::vector<Rational> qs = enumerate_rationals(blocks);
  auto q_of = [&qs](Index n) -> const Rational& {
    return qs[static_cast<std::size_t>(n - 1)];
  };

  Thm1Swap out;
  for (Index n : fam.chosen)
    if (!(q_of(n) < s)) out.sources.push_back(n);
  out.swapped = static_cast<Index>(out.sources.size());

  if (out.swapped > 0) {
    std::set<Index> chosen_set(fam.chosen.begin(), fam.chosen.end());
    Index after = out.sources.back();
    for (Index n = after + 1; n <= blocks; ++n) {
      if (static_cast<Index>(out.targets.size()) == out.swapped) break;
      if (chosen_set.count(n)) continue;
      if (!(q_of(n) < s)) continue;  // needs q in [r, s)
      if (q_of(n) < r) continue;
      out.targets.push_back(n);
    }
    if (static_cast<Index>(out.targets.size()) < out.swapped)
      throw DepthTooSmall("not enough swap targets within depth");
  }

  const Rational &a = v[0], &b = v[1], &c = v[2], &d = v[3];
  std::vector<Rational> yv = fam.y.values();
  auto set_block = [&yv](Index n, const Rational& odd, const Rational& even) {
    yv[static_cast<std::size_t>(2 * n - 2)] = odd;
    yv[static_cast<std::size_t>(2 * n - 1)] = even;
  };
  for (Index n : out.sources) set_block(n, a, d);
  for (Index n : out.targets) set_block(n, b, c);
  out.y_prime = Stream::truncated(std::move(yv), "thm1:y'(" + r.str() + "," + s.str() + ")");
  return out;
}

namespace {

template <std::size_t N>
void check_increasing(const std::array<Rational, N>& v) {
  for (std::size_t i = 1; i < N; ++i)
    if (!(v[i - 1] < v[i]))
      throw BadParameter("construction values must be strictly increasing");
}

}  // namespace

ThmFamily thm2_family(const Rational& r, Index depth, const std::array<Rational, 6>& v) {
  check_increasing(v);
  if (depth < 8) throw DepthTooSmall("six-value construction needs depth >= 8");
  IndexPartition p = partition(r, depth);
  std::vector<Rational> xv(static_cast<std::size_t>(depth));
  for (Index t : p.middle)
    xv[static_cast<std::size_t>(t - 1)] = t % 2 == 1 ? v[2] : v[5];  // c / f
  for (Index t : p.big_upper) xv[static_cast<std::size_t>(t - 1)] = v[0];  // a
  for (Index t : p.big_lower) xv[static_cast<std::size_t>(t - 1)] = v[1];  // b
  std::vector<Rational> yv = xv;
  for (Index t : p.middle)
    yv[static_cast<std::size_t>(t - 1)] = t % 2 == 1 ? v[3] : v[4];  // d / e
  ThmFamily fam;
  fam.x = Stream::truncated(std::move(xv), "thm2:x(" + r.str() + ")");
  fam.y = Stream::truncated(std::move(yv), "thm2:y(" + r.str() + ")");
  return fam;
}

ThmFamily thm3_family(const Rational& r, Index depth, const std::array<Rational, 8>& v) {
  check_increasing(v);
  if (depth < 8) throw DepthTooSmall("eight-value construction needs depth >= 8");
  IndexPartition p = partition(r, depth);
  std::vector<Rational> xv(static_cast<std::size_t>(depth));
  for (Index t : p.middle)
    xv[static_cast<std::size_t>(t - 1)] = t % 2 == 1 ? v[2] : v[5];  // c / f
  for (Index t : p.big_upper)
    xv[static_cast<std::size_t>(t - 1)] = t % 2 == 1 ? v[0] : v[7];  // a / h
  for (Index t : p.big_lower)
    xv[static_cast<std::size_t>(t - 1)] = t % 2 == 1 ? v[1] : v[6];  // b / g
  std::vector<Rational> yv = xv;
  for (Index t : p.middle)
    yv[static_cast<std::size_t>(t - 1)] = t % 2 == 1 ? v[3] : v[4];  // d / e
  ThmFamily fam;
  fam.x = Stream::truncated(std::move(xv), "thm3:x(" + r.str() + ")");
  fam.y = Stream::truncated(std::move(yv), "thm3:y(" + r.str() + ")");
  return fam;
}

namespace {

VerificationStep step(std::string claim, bool ok, std::string detail = {}) {
  return VerificationStep{std::move(claim), ok, std::move(detail)};
}

// Difference sets of the block constructions consist of adjacent
// (odd, even) position pairs; pair them up.
std::vector<IndexPair> block_pairs(const PeriodicIndexSet& d, bool& ok) {
  std::vector<IndexPair> pairs;
  ok = !d.infinite();
  const auto& m = d.explicit_members;
  for (std::size_t i = 0; ok && i < m.size(); i += 2) {
    if (i + 1 >= m.size() || m[i] % 2 != 1 || m[i + 1] != m[i] + 1) {
      ok = false;
      break;
    }
    pairs.emplace_back(m[i], m[i + 1]);
  }
  return pairs;
}

VerificationStep validated_step(std::string claim, const PairingFunction& alpha,
                                const Stream& first, const Stream& second, Axiom axiom,
                                Direction expected) {
  WitnessReport rep = validate(alpha, first, second, axiom);
  bool ok = rep.verified() && rep.direction == expected;
  std::string detail = to_string(rep.status) + " " + to_string(rep.direction) +
                       " checked=" + std::to_string(rep.checked_pairs) +
                       " deferred=" + std::to_string(rep.deferred_pairs);
  if (!rep.reason.empty()) detail += " (" + rep.reason + ")";
  return step(std::move(claim), ok, std::move(detail));
}

VerificationStep blockwise_step(std::string claim, const Stream& first,
                                const Stream& second, Direction expected) {
  bool shape_ok = false;
  std::vector<IndexPair> pairs = block_pairs(difference_set(first, second), shape_ok);
  if (!shape_ok || pairs.empty())
    return step(std::move(claim), false, "difference set is not a union of blocks");
  return validated_step(std::move(claim), PairingFunction::finite(pairs), first, second,
                        Axiom::IE, expected);
}

}  // namespace

std::vector<VerificationStep> verify_thm1_chain(const Rational& r, const Rational& s,
                                                Index depth,
                                                const std::array<Rational, 4>& v) {
  if (!(r < s)) throw BadParameter("chain needs r < s");
  std::vector<VerificationStep> steps;
  Thm1Family fr = thm1_family(r, depth, v);
  Thm1Family fs = thm1_family(s, depth, v);
  Thm1Swap sw = thm1_swap(r, s, depth, v);
  steps.push_back(blockwise_step("x(r) strictly below y(r)", fr.x, fr.y,
                                 Direction::SecondPreferred));
  steps.push_back(step("y(r) equivalent to y' by finite permutation",
                       is_finite_permutation(fr.y, sw.y_prime),
                       "swapped blocks: " + std::to_string(sw.swapped)));
  steps.push_back(blockwise_step("y' strictly below x(s)", sw.y_prime, fs.x,
                                 Direction::SecondPreferred));
  return steps;
}

namespace {

// Rank-match the dense index list against the sparse one; partners beyond
// the materialized depth leave their mates deferred.
void rank_match(const std::vector<Index>& dense, const std::vector<Index>& sparse,
                std::vector<IndexPair>& pairs, std::vector<Index>& deferred) {
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (k < sparse.size())
      pairs.emplace_back(dense[k], sparse[k]);
    else
      deferred.push_back(dense[k]);
  }
}

}  // namespace

std::vector<VerificationStep> verify_thm2_chain(const Rational& r, const Rational& s,
                                                Index depth,
                                                const std::array<Rational, 6>& v) {
  if (!(r < s)) throw BadParameter("chain needs r < s");
  std::vector<VerificationStep> steps;
  ThmFamily fr = thm2_family(r, depth, v);
  ThmFamily fs = thm2_family(s, depth, v);
  steps.push_back(blockwise_step("x(r) strictly below y(r)", fr.x, fr.y,
                                 Direction::SecondPreferred));

  // Cross pairing: middle odd positions against factorial blocks that moved
  // from the upper side at r to the lower side at s.
  IndexPartition pr = partition(r, depth);
  IndexPartition ps = partition(s, depth);
  std::vector<Index> middle_odd;
  for (Index t : pr.middle)
    if (t % 2 == 1) middle_odd.push_back(t);
  std::set<Index> upper_r(pr.big_upper.begin(), pr.big_upper.end());
  std::vector<Index> partners;
  for (Index t : ps.big_lower)
    if (upper_r.count(t)) partners.push_back(t);

  std::vector<IndexPair> pairs;
  std::vector<Index> deferred;
  rank_match(middle_odd, partners, pairs, deferred);
  if (pairs.empty()) {
    steps.push_back(step("y(r) strictly below intermediate z", false,
                         "no complete cross pair within depth"));
    return steps;
  }

  // z rewrites y(r) to x(s)'s values on the cross-paired coordinates.
  std::vector<Rational> zv = fr.y.values();
  for (Index t : middle_odd) zv[static_cast<std::size_t>(t - 1)] = v[2];  // d -> c
  for (std::size_t k = 0; k < pairs.size(); ++k)
    zv[static_cast<std::size_t>(pairs[k].second - 1)] = v[1];  // a -> b
  Stream z = Stream::truncated(std::move(zv), "thm2:z(" + r.str() + "," + s.str() + ")");

  steps.push_back(validated_step("y(r) strictly below intermediate z",
                                 PairingFunction::finite(pairs, deferred), fr.y, z,
                                 Axiom::IE, Direction::SecondPreferred));
  steps.push_back(step("x(s) dominates intermediate z", dominates(fs.x, z)));
  return steps;
}

std::vector<VerificationStep> verify_thm3_chain(const Rational& r, const Rational& s,
                                                Index depth,
                                                const std::array<Rational, 8>& v) {
  if (!(r < s)) throw BadParameter("chain needs r < s");
  std::vector<VerificationStep> steps;
  ThmFamily fr = thm3_family(r, depth, v);
  ThmFamily fs = thm3_family(s, depth, v);
  steps.push_back(blockwise_step("x(r) strictly below y(r)", fr.x, fr.y,
                                 Direction::SecondPreferred));

  IndexPartition pr = partition(r, depth);
  IndexPartition ps = partition(s, depth);
  std::set<Index> upper_r(pr.big_upper.begin(), pr.big_upper.end());
  std::vector<Index> middle_odd, middle_even, partners_odd, partners_even;
  for (Index t : pr.middle) (t % 2 == 1 ? middle_odd : middle_even).push_back(t);
  for (Index t : ps.big_lower)
    if (upper_r.count(t)) (t % 2 == 1 ? partners_odd : partners_even).push_back(t);

  std::vector<IndexPair> pairs;
  std::vector<Index> deferred;
  rank_match(middle_odd, partners_odd, pairs, deferred);
  rank_match(middle_even, partners_even, pairs, deferred);
  if (static_cast<Index>(pairs.size()) < 2) {
    steps.push_back(step("y(r) strictly below x(s)", false,
                         "need complete pairs on both parities within depth"));
    return steps;
  }
  steps.push_back(validated_step("y(r) strictly below x(s)",
                                 PairingFunction::finite(pairs, deferred), fr.y, fs.x,
                                 Axiom::IE, Direction::SecondPreferred));
  return steps;
}

namespace {

Stream ex1_stream(Index depth, bool first) {
  std::vector<Rational> vals;
  for (Index t = 1; t <= depth; ++t) {
    Index k = (t - 1) / 4;
    Index slot = (t - 1) % 4;
    long long base = 4 * k;
    long long value = 0;
    if (first)  // 4k+1, 4k+4, -4k-1, -4k-4
      value = slot == 0 ? base + 1 : slot == 1 ? base + 4 : slot == 2 ? -base - 1 : -base - 4;
    else  // 4k+2, 4k+3, -4k-2, -4k-3
      value = slot == 0 ? base + 2 : slot == 1 ? base + 3 : slot == 2 ? -base - 2 : -base - 3;
    vals.emplace_back(value);
  }
  return Stream::truncated(std::move(vals), first ? "ex1:x" : "ex1:y");
}

Stream ex2_stream(Index depth, int which) {  // 0 = x, 1 = y, 2 = y'
  std::vector<Rational> vals;
  for (Index t = 1; t <= depth; ++t) {
    Index k = (t - 1) / 2;
    bool odd = t % 2 == 1;
    long long value = which == 0 ? (odd ? -4 * k - 2 : -4 * k - 5)
                                 : (odd ? -4 * k - 3 : -4 * k - 4);
    if (which == 2 && t == 1) value = -1;
    vals.emplace_back(value);
  }
  return Stream::truncated(std::move(vals),
                           which == 0 ? "ex2:x" : which == 1 ? "ex2:y" : "ex2:y'");
}

PairingFunction adjacent_pairing() {  // n <-> n+1 for odd n
  return PairingFunction::periodic({}, 0, 2, {{1, 2}});
}

PairingFunction offset_three_pairing() {  // 1 <-> 3, n <-> n+3 for even n
  return PairingFunction::periodic({{1, 3}}, 0, 2, {{2, 5}});
}

}  // namespace

ExampleSet example_streams(const std::string& name, Index depth) {
  if (depth < 8) throw BadParameter("example fixtures need depth >= 8");
  ExampleSet set;
  if (name == "ex1") {
    set.streams.emplace_back("x", ex1_stream(depth, true));
    set.streams.emplace_back("y", ex1_stream(depth, false));
    set.pairings.emplace_back("alpha", adjacent_pairing());
    set.pairings.emplace_back("beta", offset_three_pairing());
    return set;
  }
  if (name == "ex2") {
    set.streams.emplace_back("x", ex2_stream(depth, 0));
    set.streams.emplace_back("y", ex2_stream(depth, 1));
    set.streams.emplace_back("y'", ex2_stream(depth, 2));
    set.pairings.emplace_back("alpha", adjacent_pairing());
    set.pairings.emplace_back("beta", offset_three_pairing());
    return set;
  }
  if (name == "intro") {
    Rational one(1), zero(0);
    std::vector<Rational> per = {one, zero, one};
    std::vector<Rational> head = {Rational::parse("3/4"), Rational::parse("1/4"), one,
                                  Rational::parse("3/5"), Rational::parse("1/10"), one};
    set.streams.emplace_back("x", Stream::eventually_periodic({}, per));
    set.streams.emplace_back("z", Stream::eventually_periodic(head, per));
    set.streams.emplace_back(
        "z'", Stream::eventually_periodic(
                  {head[0], head[1], head[2]},
                  {Rational::parse("3/5"), Rational::parse("1/10"), one}));
    set.pairings.emplace_back("alpha", PairingFunction::periodic({}, 6, 3, {{7, 8}}));
    return set;
  }
  if (name == "section3") {
    // a..e = 0..4
    set.streams.emplace_back(
        "x", Stream::eventually_periodic({}, {Rational(1), Rational(2), Rational(4)}));
    set.streams.emplace_back(
        "y", Stream::eventually_periodic({}, {Rational(0), Rational(3), Rational(4)}));
    set.pairings.emplace_back("alpha", PairingFunction::periodic({}, 0, 3, {{1, 2}}));
    return set;
  }
  throw UnknownName("no example named '" + name + "'");
}

std::vector<VerificationStep> verify_example(const std::string& name, Index depth) {
  ExampleSet set = example_streams(name, depth);
  auto stream = [&set](const std::string& n) -> const Stream& {
    for (const auto& [key, s] : set.streams)
      if (key == n) return s;
    throw UnknownName("missing stream " + n);
  };
  auto pairing = [&set](const std::string& n) -> const PairingFunction& {
    for (const auto& [key, p] : set.pairings)
      if (key == n) return p;
    throw UnknownName("missing pairing " + n);
  };

  std::vector<VerificationStep> steps;
  if (name == "ex1") {
    steps.push_back(validated_step("alpha certifies x strictly below y", pairing("alpha"),
                                   stream("x"), stream("y"), Axiom::WE,
                                   Direction::SecondPreferred));
    steps.push_back(validated_step("beta certifies y strictly below x", pairing("beta"),
                                   stream("x"), stream("y"), Axiom::WE,
                                   Direction::FirstPreferred));
    steps.push_back(step("relation inconsistent on this domain", true,
                         "both directions verified"));
    return steps;
  }
  if (name == "ex2") {
    steps.push_back(step("y' dominates y", dominates(stream("y'"), stream("y"))));
    steps.push_back(validated_step("alpha certifies x strictly below y", pairing("alpha"),
                                   stream("x"), stream("y"), Axiom::WE,
                                   Direction::SecondPreferred));
    steps.push_back(validated_step("beta certifies y' strictly below x", pairing("beta"),
                                   stream("x"), stream("y'"), Axiom::WE,
                                   Direction::FirstPreferred));
    return steps;
  }
  if (name == "intro") {
    WitnessReport se = premise_holds(Axiom::SE, stream("z'"), stream("z"), depth);
    steps.push_back(step("two-coordinate premise fails between z' and z", !se.verified(),
                         se.reason));
    steps.push_back(validated_step("alpha certifies z strictly below z'",
                                   pairing("alpha"), stream("z'"), stream("z"), Axiom::GE,
                                   Direction::FirstPreferred));
    steps.push_back(validated_step("the same pairing is an infinite-domain witness",
                                   pairing("alpha"), stream("z'"), stream("z"), Axiom::IE,
                                   Direction::FirstPreferred));
    return steps;
  }
  if (name == "section3") {
    steps.push_back(validated_step("alpha certifies y strictly below x",
                                   pairing("alpha"), stream("x"), stream("y"), Axiom::GE,
                                   Direction::FirstPreferred));
    steps.push_back(validated_step("the same pairing works for the infinite variant",
                                   pairing("alpha"), stream("x"), stream("y"), Axiom::IE,
                                   Direction::FirstPreferred));
    WitnessReport we = validate(pairing("alpha"), stream("x"), stream("y"), Axiom::WE);
    steps.push_back(step("full-coverage variant rejected (coordinate 3 equal)",
                         we.status == WitnessStatus::Invalid, we.reason));
    WitnessReport found = find_witness(stream("x"), stream("y"), Axiom::GE, depth);
    steps.push_back(step("witness search recovers a periodic pairing",
                         found.status == WitnessStatus::VerifiedPeriodic &&
                             found.direction == Direction::FirstPreferred));
    return steps;
  }
  throw UnknownName("no example named '" + name + "'");
}

}  // namespace equistream
