#include "equistream/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "equistream/errors.hpp"

namespace equistream {

namespace {

std::string pair_str(Index i, Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

PairingFunction PairingFunction::finite(std::vector<IndexPair> pairs,
                                        std::vector<Index> deferred) {
  PairingFunction a;
  for (auto& [i, j] : pairs)
    if (i > j) std::swap(i, j);
  std::sort(pairs.begin(), pairs.end());
  a.pairs_ = std::move(pairs);
  std::sort(deferred.begin(), deferred.end());
  a.deferred_ = std::move(deferred);
  a.check_invariants();
  return a;
}

PairingFunction PairingFunction::periodic(std::vector<IndexPair> explicit_pairs,
                                          Index offset, Index period,
                                          std::vector<IndexPair> rep_pairs) {
  if (offset < 0 || period < 1) throw BadParameter("bad pairing offset/period");
  PairingFunction a;
  for (auto& [i, j] : explicit_pairs)
    if (i > j) std::swap(i, j);
  std::sort(explicit_pairs.begin(), explicit_pairs.end());
  a.pairs_ = std::move(explicit_pairs);
  a.periodic_ = true;
  a.offset_ = offset;
  a.period_ = period;
  for (auto& [i, j] : rep_pairs)
    if (i > j) std::swap(i, j);
  std::sort(rep_pairs.begin(), rep_pairs.end());
  a.rep_pairs_ = std::move(rep_pairs);
  a.check_invariants();
  return a;
}

void PairingFunction::check_invariants() const {
  std::set<Index> seen;
  auto claim = [&seen](Index t) {
    if (t < 1) throw BadParameter("pairing index below 1");
    if (!seen.insert(t).second)
      throw BadParameter("index " + std::to_string(t) + " paired twice");
  };
  for (auto [i, j] : pairs_) {
    if (i == j) throw BadParameter("pairing has fixed point " + std::to_string(i));
    claim(i);
    claim(j);
  }
  for (Index d : deferred_) claim(d);
  if (periodic_) {
    if (!deferred_.empty())
      throw BadParameter("periodic pairing cannot carry deferred indices");
    std::set<Index> classes;
    for (auto [i, j] : rep_pairs_) {
      if (i == j) throw BadParameter("pairing has fixed point " + std::to_string(i));
      if (i <= offset_ || i > offset_ + period_)
        throw BadParameter("base pair " + pair_str(i, j) + " starts outside the window");
      if (j <= offset_) throw BadParameter("base pair reaches below the offset");
      if (i % period_ == j % period_)
        throw BadParameter("base pair " + pair_str(i, j) + " collides with its own translates");
      if (!classes.insert(i % period_).second || !classes.insert(j % period_).second)
        throw BadParameter("base pairs overlap modulo the period");
    }
    for (Index t : seen) {
      if (t <= offset_) continue;
      for (auto [i, j] : rep_pairs_)
        if ((t % period_ == i % period_ && t >= i) || (t % period_ == j % period_ && t >= j))
          throw BadParameter("explicit index " + std::to_string(t) +
                             " collides with a periodic translate");
    }
  }
}

bool PairingFunction::in_domain(Index t) const {
  if (partner(t)) return true;
  return is_deferred(t);
}

bool PairingFunction::is_deferred(Index t) const {
  return std::binary_search(deferred_.begin(), deferred_.end(), t);
}

std::optional<Index> PairingFunction::partner(Index t) const {
  for (auto [i, j] : pairs_) {
    if (i == t) return j;
    if (j == t) return i;
  }
  if (periodic_ && t > offset_) {
    for (auto [i, j] : rep_pairs_) {
      if (t % period_ == i % period_ && t >= i) return j + (t - i);
      if (t % period_ == j % period_ && t >= j) return i + (t - j);
    }
  }
  return std::nullopt;
}

Index PairingFunction::reach() const {
  Index r = 0;
  for (auto [i, j] : pairs_) r = std::max(r, j);
  for (Index d : deferred_) r = std::max(r, d);
  if (periodic_) {
    r = std::max(r, offset_ + period_);
    for (auto [i, j] : rep_pairs_) r = std::max(r, j);
  }
  return r;
}

Axiom axiom_from_string(const std::string& name) {
  if (name == "AN") return Axiom::AN;
  if (name == "M") return Axiom::M;
  if (name == "PD") return Axiom::PD;
  if (name == "SE") return Axiom::SE;
  if (name == "GE") return Axiom::GE;
  if (name == "GPD") return Axiom::GPD;
  if (name == "IE") return Axiom::IE;
  if (name == "WE") return Axiom::WE;
  throw BadParameter("unknown axiom '" + name + "'");
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::AN: return "AN";
    case Axiom::M: return "M";
    case Axiom::PD: return "PD";
    case Axiom::SE: return "SE";
    case Axiom::GE: return "GE";
    case Axiom::GPD: return "GPD";
    case Axiom::IE: return "IE";
    case Axiom::WE: return "WE";
  }
  return "?";
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::None: return "none";
    case Direction::FirstPreferred: return "first-preferred";
    case Direction::SecondPreferred: return "second-preferred";
    case Direction::Indifferent: return "indifferent";
    case Direction::FirstWeaklyPreferred: return "first-weakly-preferred";
    case Direction::SecondWeaklyPreferred: return "second-weakly-preferred";
  }
  return "?";
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::VerifiedPeriodic: return "verified-periodic";
    case WitnessStatus::VerifiedToDepth: return "verified-to-depth";
    case WitnessStatus::NoWitnessToDepth: return "no-witness-to-depth";
    case WitnessStatus::Invalid: return "invalid";
  }
  return "?";
}

namespace {

bool is_equity_axiom(Axiom a) {
  return a == Axiom::GE || a == Axiom::GPD || a == Axiom::IE || a == Axiom::WE;
}

// +1: x strictly nested inside y on this pair (so y ≺ x),
// -1: y nested inside x, 0: premise violated.
int pair_orientation(Axiom axiom, const Rational& xi, const Rational& xj,
                     const Rational& yi, const Rational& yj) {
  if (axiom == Axiom::GPD) {
    auto transfer = [](const Rational& ai, const Rational& aj, const Rational& bi,
                       const Rational& bj) {
      // a obtained from b by one exact transfer between the two coordinates
      Rational eps = ai - bi;
      return eps > Rational(0) && eps == bj - aj && ai < aj;
    };
    if (transfer(xi, xj, yi, yj) || transfer(xj, xi, yj, yi)) return 1;
    if (transfer(yi, yj, xi, xj) || transfer(yj, yi, xj, xi)) return -1;
    return 0;
  }
  auto nested = [](const Rational& ai, const Rational& aj, const Rational& bi,
                   const Rational& bj) {
    return (bi < ai && ai < aj && aj < bj) || (bj < aj && aj < ai && ai < bi);
  };
  if (nested(xi, xj, yi, yj)) return 1;
  if (nested(yi, yj, xi, xj)) return -1;
  return 0;
}

WitnessReport invalid(Axiom axiom, std::string reason) {
  WitnessReport r;
  r.axiom = axiom;
  r.status = WitnessStatus::Invalid;
  r.reason = std::move(reason);
  return r;
}

WitnessReport validate_periodic(const PairingFunction& alpha, const Stream& x,
                                const Stream& y, Axiom axiom) {
  auto [a, b] = align(x, y);
  Index pre = a.pre_length(), per = a.period_length();
  Index pairing_period = alpha.kind() == PairingKind::Periodic ? alpha.period() : 1;
  Index super = std::lcm(pairing_period, per);
  Index stable = std::max(pre, alpha.reach());
  Index bound = stable + 2 * super;

  WitnessReport rep;
  rep.axiom = axiom;
  int orient = 0;
  for (Index t = 1; t <= bound; ++t) {
    auto u = alpha.partner(t);
    if (u) {
      if (*u < t) continue;  // pair already checked at its lower endpoint
      int o = pair_orientation(axiom, a.coordinate(t), a.coordinate(*u), b.coordinate(t),
                               b.coordinate(*u));
      if (o == 0)
        return invalid(axiom, "pair " + pair_str(t, *u) + " violates the premise chain");
      if (orient != 0 && orient != o)
        return invalid(axiom, "pair " + pair_str(t, *u) + " disagrees on direction");
      orient = o;
      rep.checked_pairs++;
    } else {
      if (axiom == Axiom::WE)
        return invalid(axiom, "coordinate " + std::to_string(t) + " not covered");
      if (a.coordinate(t) != b.coordinate(t))
        return invalid(axiom, "uncovered coordinate " + std::to_string(t) + " differs");
    }
  }
  if (rep.checked_pairs == 0) return invalid(axiom, "empty pairing certifies nothing");
  if (axiom == Axiom::IE && !alpha.domain_infinite())
    return invalid(axiom, "IE requires an infinite domain");
  rep.direction = orient > 0 ? Direction::FirstPreferred : Direction::SecondPreferred;
  rep.pairing = alpha;
  rep.status = WitnessStatus::VerifiedPeriodic;
  return rep;
}

WitnessReport validate_truncated(const PairingFunction& alpha, const Stream& x,
                                 const Stream& y, Axiom axiom) {
  if (x.depth() != y.depth())
    throw DepthMismatch("validate over truncations of unequal depth");
  Index depth = x.depth();
  WitnessReport rep;
  rep.axiom = axiom;
  rep.depth = depth;
  int orient = 0;
  for (Index t = 1; t <= depth; ++t) {
    if (alpha.is_deferred(t)) {
      rep.deferred_pairs++;
      continue;
    }
    auto u = alpha.partner(t);
    if (u) {
      if (*u > depth) {
        rep.deferred_pairs++;  // partner lives beyond the truncation
        continue;
      }
      if (*u < t) continue;
      int o = pair_orientation(axiom, x.coordinate(t), x.coordinate(*u), y.coordinate(t),
                               y.coordinate(*u));
      if (o == 0)
        return invalid(axiom, "pair " + pair_str(t, *u) + " violates the premise chain");
      if (orient != 0 && orient != o)
        return invalid(axiom, "pair " + pair_str(t, *u) + " disagrees on direction");
      orient = o;
      rep.checked_pairs++;
    } else {
      if (axiom == Axiom::WE)
        return invalid(axiom, "coordinate " + std::to_string(t) + " not covered");
      if (x.coordinate(t) != y.coordinate(t))
        return invalid(axiom, "uncovered coordinate " + std::to_string(t) + " differs");
    }
  }
  if (rep.checked_pairs == 0) return invalid(axiom, "no pair verifiable within depth");
  rep.direction = orient > 0 ? Direction::FirstPreferred : Direction::SecondPreferred;
  rep.pairing = alpha;
  rep.status = WitnessStatus::VerifiedToDepth;
  return rep;
}

}  // namespace

WitnessReport validate(const PairingFunction& alpha, const Stream& x, const Stream& y,
                       Axiom axiom) {
  if (!is_equity_axiom(axiom))
    throw BadParameter("validate expects one of GE/GPD/IE/WE");
  if (x.is_periodic() && y.is_periodic()) return validate_periodic(alpha, x, y, axiom);
  if (!x.is_periodic() && !y.is_periodic()) return validate_truncated(alpha, x, y, axiom);
  throw DepthMismatch("validate needs two periodic or two truncated streams");
}

namespace {

struct MatchResult {
  bool ok = false;
  std::vector<IndexPair> pairs;
};

// Maximum bipartite matching via augmenting paths (Kuhn), lowest-index-first
// so the returned witness is deterministic. `indices` must all differ between
// a and b. Orientation: a nested inside b when x_nested, else swapped.
MatchResult match_indices(const Stream& a, const Stream& b, const std::vector<Index>& indices,
                          Axiom axiom, bool x_nested) {
  const Stream& inner = x_nested ? a : b;
  const Stream& outer = x_nested ? b : a;
  std::vector<Index> raised, lowered;
  for (Index t : indices) {
    if (inner.coordinate(t) > outer.coordinate(t))
      raised.push_back(t);
    else
      lowered.push_back(t);
  }
  MatchResult res;
  if (raised.size() != lowered.size()) return res;
  if (raised.empty()) return res;

  auto edge = [&](Index i, Index j) {
    if (axiom == Axiom::GPD)
      return inner.coordinate(i) - outer.coordinate(i) ==
                 outer.coordinate(j) - inner.coordinate(j) &&
             inner.coordinate(i) < inner.coordinate(j);
    return inner.coordinate(i) < inner.coordinate(j);
  };

  const int n = static_cast<int>(raised.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (edge(raised[static_cast<std::size_t>(i)], lowered[static_cast<std::size_t>(j)]))
        adj[static_cast<std::size_t>(i)].push_back(j);

  std::vector<int> match_right(static_cast<std::size_t>(n), -1);
  std::vector<char> visited;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j : adj[static_cast<std::size_t>(i)]) {
      if (visited[static_cast<std::size_t>(j)]) continue;
      visited[static_cast<std::size_t>(j)] = 1;
      if (match_right[static_cast<std::size_t>(j)] == -1 ||
          self(self, match_right[static_cast<std::size_t>(j)])) {
        match_right[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int i = 0; i < n; ++i) {
    visited.assign(static_cast<std::size_t>(n), 0);
    if (augment(augment, i)) ++matched;
  }
  if (matched != n) return res;
  res.ok = true;
  for (int j = 0; j < n; ++j) {
    Index r = raised[static_cast<std::size_t>(match_right[static_cast<std::size_t>(j)])];
    Index l = lowered[static_cast<std::size_t>(j)];
    res.pairs.emplace_back(std::min(r, l), std::max(r, l));
  }
  std::sort(res.pairs.begin(), res.pairs.end());
  return res;
}

WitnessReport no_witness(Axiom axiom, Index depth, std::string reason) {
  WitnessReport r;
  r.axiom = axiom;
  r.status = WitnessStatus::NoWitnessToDepth;
  r.depth = depth;
  r.reason = std::move(reason);
  return r;
}

WitnessReport find_witness_truncated(const Stream& x, const Stream& y, Axiom axiom,
                                     Index depth) {
  if (x.depth() != y.depth())
    throw DepthMismatch("find_witness over truncations of unequal depth");
  depth = std::min(depth, x.depth());
  if (depth < 1) throw OutOfDepth("witness search needs depth >= 1");
  Stream a = materialize(x, depth), b = materialize(y, depth);

  std::vector<Index> diff;
  for (Index t = 1; t <= depth; ++t)
    if (a.coordinate(t) != b.coordinate(t)) diff.push_back(t);
  if (axiom == Axiom::WE && static_cast<Index>(diff.size()) != depth)
    return no_witness(axiom, depth, "some coordinate is equal; WE needs dom(alpha) = N");
  if (diff.empty()) return no_witness(axiom, depth, "streams agree within depth");

  for (bool x_nested : {true, false}) {
    MatchResult m = match_indices(a, b, diff, axiom, x_nested);
    if (!m.ok) continue;
    WitnessReport rep = validate(PairingFunction::finite(m.pairs), a, b, axiom);
    if (rep.verified()) return rep;
  }
  return no_witness(axiom, depth, "no saturating matching within depth");
}

}  // namespace

WitnessReport find_witness(const Stream& x, const Stream& y, Axiom axiom, Index depth) {
  if (!is_equity_axiom(axiom))
    throw BadParameter("find_witness expects one of GE/GPD/IE/WE");
  if (depth < 1) throw BadParameter("find_witness needs depth >= 1");

  if (!x.is_periodic() || !y.is_periodic()) {
    if (x.is_periodic() != y.is_periodic())
      throw DepthMismatch("find_witness needs two periodic or two truncated streams");
    return find_witness_truncated(x, y, axiom, depth);
  }

  auto [a, b] = align(x, y);
  Index pre = a.pre_length(), per = a.period_length();
  std::vector<Index> diff_pre, diff_window;
  for (Index t = 1; t <= pre; ++t)
    if (a.coordinate(t) != b.coordinate(t)) diff_pre.push_back(t);
  for (Index t = pre + 1; t <= pre + per; ++t)
    if (a.coordinate(t) != b.coordinate(t)) diff_window.push_back(t);

  if (diff_pre.empty() && diff_window.empty())
    return no_witness(axiom, depth, "streams are equal");
  if (axiom == Axiom::IE && diff_window.empty())
    return no_witness(axiom, depth, "difference set is finite; IE needs infinitely many pairs");
  if (axiom == Axiom::WE && (static_cast<Index>(diff_pre.size()) != pre ||
                             static_cast<Index>(diff_window.size()) != per))
    return no_witness(axiom, depth, "some coordinate is equal; WE needs dom(alpha) = N");

  for (bool x_nested : {true, false}) {
    MatchResult mw;
    if (!diff_window.empty()) {
      mw = match_indices(a, b, diff_window, axiom, x_nested);
      if (!mw.ok) continue;
    }
    MatchResult mp;
    mp.ok = true;
    if (!diff_pre.empty()) {
      mp = match_indices(a, b, diff_pre, axiom, x_nested);
      if (!mp.ok) continue;
    }
    PairingFunction alpha = PairingFunction::periodic(mp.pairs, pre, per, mw.pairs);
    WitnessReport rep = validate(alpha, a, b, axiom);
    if (rep.verified()) return rep;
  }

  // No within-window periodic witness; fall back to a depth-bounded search.
  Stream xt = materialize(a, depth), yt = materialize(b, depth);
  WitnessReport rep = find_witness_truncated(xt, yt, axiom, depth);
  if (!rep.verified() && rep.status == WitnessStatus::NoWitnessToDepth)
    rep.reason += " (periodic within-window search also failed)";
  return rep;
}

std::optional<BruteWitness> brute_force_witness(const std::vector<Rational>& xs,
                                                const std::vector<Rational>& ys,
                                                Axiom axiom) {
  if (xs.size() != ys.size()) throw BadParameter("oracle needs equal-length lists");
  if (xs.size() > 10) throw SizeLimit("oracle limited to n <= 10");
  if (!is_equity_axiom(axiom)) throw BadParameter("oracle expects one of GE/GPD/IE/WE");
  const Index n = static_cast<Index>(xs.size());

  std::vector<Index> diff;
  for (Index t = 1; t <= n; ++t)
    if (xs[static_cast<std::size_t>(t - 1)] != ys[static_cast<std::size_t>(t - 1)])
      diff.push_back(t);
  if (axiom == Axiom::WE && static_cast<Index>(diff.size()) != n) return std::nullopt;
  if (diff.empty()) return std::nullopt;
  if (diff.size() % 2 != 0) return std::nullopt;

  auto at = [](const std::vector<Rational>& v, Index t) -> const Rational& {
    return v[static_cast<std::size_t>(t - 1)];
  };

  std::vector<IndexPair> acc;
  auto search = [&](auto&& self, std::vector<Index> rest, int want) -> bool {
    if (rest.empty()) return true;
    Index first = rest.front();
    for (std::size_t k = 1; k < rest.size(); ++k) {
      Index other = rest[k];
      if (pair_orientation(axiom, at(xs, first), at(xs, other), at(ys, first),
                           at(ys, other)) != want)
        continue;
      std::vector<Index> next;
      for (std::size_t m = 1; m < rest.size(); ++m)
        if (m != k) next.push_back(rest[m]);
      acc.emplace_back(first, other);
      if (self(self, std::move(next), want)) return true;
      acc.pop_back();
    }
    return false;
  };

  for (int want : {1, -1}) {
    acc.clear();
    if (search(search, diff, want)) {
      BruteWitness w;
      w.pairs = acc;
      w.direction = want > 0 ? Direction::FirstPreferred : Direction::SecondPreferred;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace equistream
