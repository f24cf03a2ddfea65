#include "equistream/axioms.hpp"

#include <algorithm>

#include "equistream/errors.hpp"

namespace equistream {

namespace {

WitnessReport simple_report(Axiom axiom, Direction dir, WitnessStatus status, Index depth,
                            std::string reason = {}) {
  WitnessReport r;
  r.axiom = axiom;
  r.direction = dir;
  r.status = status;
  r.depth = depth;
  r.reason = std::move(reason);
  return r;
}

WitnessReport two_coordinate_premise(Axiom axiom, const Stream& x, const Stream& y,
                                     Index depth) {
  PeriodicIndexSet d = difference_set(x, y);
  if (d.infinite() || d.explicit_members.size() != 2)
    return simple_report(axiom, Direction::None, WitnessStatus::NoWitnessToDepth, depth,
                         "premise needs exactly two differing coordinates");
  // The two-coordinate chain is the single-pair case of GE (for SE) or of
  // GPD (for PD): delegate and relabel.
  PairingFunction alpha =
      PairingFunction::finite({{d.explicit_members[0], d.explicit_members[1]}});
  bool trunc = !x.is_periodic();
  WitnessReport rep = validate(alpha, trunc ? x : materialize(x, std::max<Index>(depth, d.explicit_members[1])),
                               trunc ? y : materialize(y, std::max<Index>(depth, d.explicit_members[1])),
                               axiom == Axiom::PD ? Axiom::GPD : Axiom::GE);
  rep.axiom = axiom;
  if (!rep.verified()) {
    rep.status = WitnessStatus::NoWitnessToDepth;
    rep.depth = depth;
  }
  return rep;
}

}  // namespace

WitnessReport premise_holds(Axiom axiom, const Stream& x, const Stream& y, Index depth) {
  switch (axiom) {
    case Axiom::AN: {
      bool periodic = x.is_periodic() && y.is_periodic();
      if (is_finite_permutation(x, y))
        return simple_report(axiom, Direction::Indifferent,
                             periodic ? WitnessStatus::VerifiedPeriodic
                                      : WitnessStatus::VerifiedToDepth,
                             periodic ? 0 : x.depth());
      return simple_report(axiom, Direction::None, WitnessStatus::NoWitnessToDepth, depth,
                           "not a finite permutation");
    }
    case Axiom::M: {
      bool periodic = x.is_periodic() && y.is_periodic();
      WitnessStatus ok =
          periodic ? WitnessStatus::VerifiedPeriodic : WitnessStatus::VerifiedToDepth;
      if (dominates(x, y))
        return simple_report(axiom, Direction::FirstWeaklyPreferred, ok,
                             periodic ? 0 : x.depth());
      if (dominates(y, x))
        return simple_report(axiom, Direction::SecondWeaklyPreferred, ok,
                             periodic ? 0 : x.depth());
      return simple_report(axiom, Direction::None, WitnessStatus::NoWitnessToDepth, depth,
                           "neither stream dominates");
    }
    case Axiom::PD:
    case Axiom::SE:
      return two_coordinate_premise(axiom, x, y, depth);
    default:
      return find_witness(x, y, axiom, depth);
  }
}

namespace {

using Quad = std::array<Rational, 4>;  // outer_lo < inner_lo <= inner_hi < outer_hi

std::vector<Quad> nested_quads(const std::vector<Rational>& v) {
  std::vector<Quad> out;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      for (std::size_t c = b + 1; c < v.size(); ++c)
        for (std::size_t d = c + 1; d < v.size(); ++d)
          out.push_back({v[a], v[b], v[c], v[d]});
  return out;
}

std::vector<Quad> transfer_quads(const std::vector<Rational>& v) {
  std::vector<Quad> out;
  for (const Quad& q : nested_quads(v))
    if (q[1] - q[0] == q[3] - q[2]) out.push_back(q);
  return out;
}

Index pick(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

const Rational& pick_value(const std::vector<Rational>& v, std::mt19937_64& rng) {
  return v[static_cast<std::size_t>(pick(rng, 0, static_cast<Index>(v.size()) - 1))];
}

std::vector<Rational> normalized_values(const GeneratorConfig& config) {
  std::vector<Rational> v = config.values;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) throw GeneratorError("generator needs a non-empty value set");
  return v;
}

PremiseInstance paired_instance(Axiom axiom, const std::vector<Rational>& values,
                                const GeneratorConfig& config, std::mt19937_64& rng) {
  const std::vector<Quad> quads =
      axiom == Axiom::GPD ? transfer_quads(values) : nested_quads(values);
  if (quads.empty())
    throw GeneratorError("value set admits no valid four-point pattern for " +
                         to_string(axiom));

  Index pre = 2 * pick(rng, 0, config.max_preperiod / 2);
  Index per = 2 * pick(rng, 1, std::max<Index>(1, config.max_period / 2));
  bool x_nested = pick(rng, 0, 1) == 1;

  auto shuffled = [&rng](Index lo, Index hi) {
    std::vector<Index> pos;
    for (Index t = lo; t <= hi; ++t) pos.push_back(t);
    std::shuffle(pos.begin(), pos.end(), rng);
    return pos;
  };
  std::vector<Index> pre_pos = shuffled(1, pre);
  std::vector<Index> win_pos = shuffled(pre + 1, pre + per);

  Index pre_pairs_n, win_pairs_n;
  if (axiom == Axiom::WE) {
    pre_pairs_n = pre / 2;
    win_pairs_n = per / 2;
  } else {
    pre_pairs_n = pick(rng, 0, pre / 2);
    Index win_min = axiom == Axiom::IE || pre_pairs_n == 0 ? 1 : 0;
    win_pairs_n = pick(rng, win_min, per / 2);
  }

  std::vector<Rational> xv(static_cast<std::size_t>(pre + per));
  std::vector<Rational> yv(static_cast<std::size_t>(pre + per));
  std::vector<char> used(static_cast<std::size_t>(pre + per), 0);
  auto place_pair = [&](Index i, Index j) {
    if (i > j) std::swap(i, j);
    const Quad& q =
        quads[static_cast<std::size_t>(pick(rng, 0, static_cast<Index>(quads.size()) - 1))];
    auto& inner = x_nested ? xv : yv;
    auto& outer = x_nested ? yv : xv;
    inner[static_cast<std::size_t>(i - 1)] = q[1];
    inner[static_cast<std::size_t>(j - 1)] = q[2];
    outer[static_cast<std::size_t>(i - 1)] = q[0];
    outer[static_cast<std::size_t>(j - 1)] = q[3];
    used[static_cast<std::size_t>(i - 1)] = used[static_cast<std::size_t>(j - 1)] = 1;
  };

  std::vector<IndexPair> explicit_pairs, rep_pairs;
  for (Index k = 0; k < pre_pairs_n; ++k) {
    Index i = pre_pos[static_cast<std::size_t>(2 * k)];
    Index j = pre_pos[static_cast<std::size_t>(2 * k + 1)];
    explicit_pairs.emplace_back(std::min(i, j), std::max(i, j));
    place_pair(i, j);
  }
  for (Index k = 0; k < win_pairs_n; ++k) {
    Index i = win_pos[static_cast<std::size_t>(2 * k)];
    Index j = win_pos[static_cast<std::size_t>(2 * k + 1)];
    rep_pairs.emplace_back(std::min(i, j), std::max(i, j));
    place_pair(i, j);
  }
  for (Index t = 1; t <= pre + per; ++t)
    if (!used[static_cast<std::size_t>(t - 1)]) {
      const Rational& v = pick_value(values, rng);
      xv[static_cast<std::size_t>(t - 1)] = v;
      yv[static_cast<std::size_t>(t - 1)] = v;
    }

  PremiseInstance inst;
  auto split = [pre](const std::vector<Rational>& v) {
    return Stream::eventually_periodic(
        std::vector<Rational>(v.begin(), v.begin() + pre),
        std::vector<Rational>(v.begin() + pre, v.end()));
  };
  inst.x = split(xv);
  inst.y = split(yv);
  inst.alpha = rep_pairs.empty()
                   ? PairingFunction::finite(explicit_pairs)
                   : PairingFunction::periodic(explicit_pairs, pre, per, rep_pairs);
  inst.direction = x_nested ? Direction::FirstPreferred : Direction::SecondPreferred;
  return inst;
}

PremiseInstance two_coordinate_instance(Axiom axiom, const std::vector<Rational>& values,
                                        const GeneratorConfig& config,
                                        std::mt19937_64& rng) {
  const std::vector<Quad> quads =
      axiom == Axiom::PD ? transfer_quads(values) : nested_quads(values);
  if (quads.empty())
    throw GeneratorError("value set admits no valid four-point pattern for " +
                         to_string(axiom));
  Index pre = std::max<Index>(2, config.max_preperiod);
  Index per = pick(rng, 1, config.max_period);
  std::vector<Rational> base;
  for (Index t = 0; t < pre + per; ++t) base.push_back(pick_value(values, rng));
  std::vector<Rational> xv = base, yv = base;
  Index i = pick(rng, 1, pre);
  Index j = pick(rng, 1, pre - 1);
  if (j >= i) ++j;
  if (i > j) std::swap(i, j);
  const Quad& q =
      quads[static_cast<std::size_t>(pick(rng, 0, static_cast<Index>(quads.size()) - 1))];
  bool x_nested = pick(rng, 0, 1) == 1;
  auto& inner = x_nested ? xv : yv;
  auto& outer = x_nested ? yv : xv;
  inner[static_cast<std::size_t>(i - 1)] = q[1];
  inner[static_cast<std::size_t>(j - 1)] = q[2];
  outer[static_cast<std::size_t>(i - 1)] = q[0];
  outer[static_cast<std::size_t>(j - 1)] = q[3];

  PremiseInstance inst;
  auto split = [pre](const std::vector<Rational>& v) {
    return Stream::eventually_periodic(
        std::vector<Rational>(v.begin(), v.begin() + pre),
        std::vector<Rational>(v.begin() + pre, v.end()));
  };
  inst.x = split(xv);
  inst.y = split(yv);
  inst.alpha = PairingFunction::finite({{i, j}});
  inst.direction = x_nested ? Direction::FirstPreferred : Direction::SecondPreferred;
  return inst;
}

PremiseInstance an_instance(const std::vector<Rational>& values,
                            const GeneratorConfig& config, std::mt19937_64& rng) {
  Index pre = std::max<Index>(2, config.max_preperiod);
  Index per = pick(rng, 1, config.max_period);
  std::vector<Rational> head, period;
  for (Index t = 0; t < pre; ++t) head.push_back(pick_value(values, rng));
  for (Index t = 0; t < per; ++t) period.push_back(pick_value(values, rng));
  std::vector<Rational> permuted = head;
  Index swaps = pick(rng, 1, 3);
  for (Index s = 0; s < swaps; ++s) {
    Index i = pick(rng, 0, pre - 1);
    Index j = pick(rng, 0, pre - 1);
    std::swap(permuted[static_cast<std::size_t>(i)], permuted[static_cast<std::size_t>(j)]);
  }
  PremiseInstance inst;
  inst.x = Stream::eventually_periodic(head, period);
  inst.y = Stream::eventually_periodic(permuted, period);
  inst.direction = Direction::Indifferent;
  return inst;
}

PremiseInstance m_instance(const std::vector<Rational>& values,
                           const GeneratorConfig& config, std::mt19937_64& rng) {
  Index pre = pick(rng, 0, config.max_preperiod);
  Index per = pick(rng, 1, config.max_period);
  auto raise = [&](const Rational& v) {
    // raise with probability 1/3 to a uniformly chosen value >= v
    if (pick(rng, 0, 2) != 0) return v;
    std::vector<Rational> above;
    for (const auto& u : values)
      if (!(u < v)) above.push_back(u);
    return above[static_cast<std::size_t>(
        pick(rng, 0, static_cast<Index>(above.size()) - 1))];
  };
  std::vector<Rational> yp, ypr, xp, xpr;
  for (Index t = 0; t < pre; ++t) {
    yp.push_back(pick_value(values, rng));
    xp.push_back(raise(yp.back()));
  }
  for (Index t = 0; t < per; ++t) {
    ypr.push_back(pick_value(values, rng));
    xpr.push_back(raise(ypr.back()));
  }
  PremiseInstance inst;
  inst.x = Stream::eventually_periodic(xp, xpr);
  inst.y = Stream::eventually_periodic(yp, ypr);
  inst.direction = Direction::FirstWeaklyPreferred;
  return inst;
}

}  // namespace

PremiseInstance generate_premise(Axiom axiom, const GeneratorConfig& config,
                                 std::mt19937_64& rng) {
  std::vector<Rational> values = normalized_values(config);
  switch (axiom) {
    case Axiom::AN:
      return an_instance(values, config, rng);
    case Axiom::M:
      return m_instance(values, config, rng);
    case Axiom::PD:
    case Axiom::SE:
      return two_coordinate_instance(axiom, values, config, rng);
    default:
      return paired_instance(axiom, values, config, rng);
  }
}

namespace {

template <typename Check>
AuditReport run_audit(Axiom axiom, const GeneratorConfig& config, long long trials,
                      std::uint64_t seed, Check&& check) {
  AuditReport report;
  report.axiom = axiom;
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (long long k = 0; k < trials; ++k) {
    PremiseInstance inst = generate_premise(axiom, config, rng);
    std::string observed;
    if (!check(inst, observed)) {
      Violation v;
      v.trial = k;
      v.x = inst.x;
      v.y = inst.y;
      v.direction = inst.direction;
      v.observed = std::move(observed);
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace

AuditReport audit_swf(const SwfHandle& w, Axiom axiom, const GeneratorConfig& config,
                      long long trials, std::uint64_t seed) {
  return run_audit(axiom, config, trials, seed,
                   [&w](const PremiseInstance& inst, std::string& observed) {
                     Rational wx = w(inst.x), wy = w(inst.y);
                     observed = "W(x)=" + wx.str() + " W(y)=" + wy.str();
                     switch (inst.direction) {
                       case Direction::FirstPreferred: return wx > wy;
                       case Direction::SecondPreferred: return wy > wx;
                       case Direction::Indifferent: return wx == wy;
                       case Direction::FirstWeaklyPreferred: return !(wx < wy);
                       case Direction::SecondWeaklyPreferred: return !(wy < wx);
                       case Direction::None: return false;
                     }
                     return false;
                   });
}

AuditReport audit_swr(const SwrHandle& r, Axiom axiom, const GeneratorConfig& config,
                      long long trials, std::uint64_t seed) {
  return run_audit(axiom, config, trials, seed,
                   [&r](const PremiseInstance& inst, std::string& observed) {
                     ComparisonVerdict v = r(inst.x, inst.y);
                     observed = "verdict=" + to_string(v.relation);
                     switch (inst.direction) {
                       case Direction::FirstPreferred:
                         return v.relation == Relation::StrictlyGreater;
                       case Direction::SecondPreferred:
                         return v.relation == Relation::StrictlyLess;
                       case Direction::Indifferent:
                         return v.relation == Relation::Equivalent;
                       case Direction::FirstWeaklyPreferred:
                         return v.relation != Relation::StrictlyLess;
                       case Direction::SecondWeaklyPreferred:
                         return v.relation != Relation::StrictlyGreater;
                       case Direction::None: return false;
                     }
                     return false;
                   });
}

}  // namespace equistream
