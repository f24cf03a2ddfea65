#include "equistream/stream.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "equistream/errors.hpp"

namespace equistream {

Stream Stream::eventually_periodic(std::vector<Rational> preperiod,
                                   std::vector<Rational> period) {
  if (period.empty()) throw BadParameter("eventually periodic stream needs a non-empty period");
  Stream s;
  s.kind_ = StreamKind::EventuallyPeriodic;
  s.pre_ = std::move(preperiod);
  s.per_ = std::move(period);
  return s;
}

Stream Stream::truncated(std::vector<Rational> values, std::string provenance) {
  if (values.empty()) throw BadParameter("truncated stream needs at least one coordinate");
  Stream s;
  s.kind_ = StreamKind::Truncated;
  s.values_ = std::move(values);
  s.provenance_ = std::move(provenance);
  return s;
}

Index Stream::depth() const {
  if (kind_ != StreamKind::Truncated) throw BadParameter("depth() on a periodic stream");
  return static_cast<Index>(values_.size());
}

const Rational& Stream::coordinate(Index t) const {
  if (t < 1) throw BadParameter("coordinates are 1-based");
  if (kind_ == StreamKind::Truncated) {
    if (t > static_cast<Index>(values_.size()))
      throw OutOfDepth("coordinate " + std::to_string(t) + " of a depth-" +
                       std::to_string(values_.size()) + " truncation");
    return values_[static_cast<std::size_t>(t - 1)];
  }
  if (t <= pre_length()) return pre_[static_cast<std::size_t>(t - 1)];
  Index k = (t - pre_length() - 1) % period_length();
  return per_[static_cast<std::size_t>(k)];
}

std::vector<Rational> Stream::prefix(Index n) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Index t = 1; t <= n; ++t) out.push_back(coordinate(t));
  return out;
}

std::vector<Rational> Stream::distinct_values() const {
  std::vector<Rational> vals;
  auto add = [&vals](const std::vector<Rational>& src) {
    vals.insert(vals.end(), src.begin(), src.end());
  };
  if (kind_ == StreamKind::Truncated) {
    add(values_);
  } else {
    add(pre_);
    add(per_);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

PeriodicIndexSet Stream::indices_with_value(const Rational& v) const {
  PeriodicIndexSet s;
  if (kind_ == StreamKind::Truncated) {
    for (Index t = 1; t <= depth(); ++t)
      if (coordinate(t) == v) s.explicit_members.push_back(t);
    s.offset = depth();
    return s;
  }
  s.offset = pre_length();
  s.period = period_length();
  for (Index t = 1; t <= pre_length(); ++t)
    if (coordinate(t) == v) s.explicit_members.push_back(t);
  for (Index j = 1; j <= period_length(); ++j) {
    Index t = pre_length() + j;
    if (coordinate(t) == v) s.residues.insert(t % s.period);
  }
  return s;
}

std::pair<Stream, Stream> align(const Stream& x, const Stream& y) {
  if (!x.is_periodic() || !y.is_periodic())
    throw NotPeriodic("align requires two eventually periodic streams");
  Index pre = std::max(x.pre_length(), y.pre_length());
  Index per = std::lcm(x.period_length(), y.period_length());
  auto reshape = [pre, per](const Stream& s) {
    std::vector<Rational> p, q;
    for (Index t = 1; t <= pre; ++t) p.push_back(s.coordinate(t));
    for (Index t = pre + 1; t <= pre + per; ++t) q.push_back(s.coordinate(t));
    return Stream::eventually_periodic(std::move(p), std::move(q));
  };
  return {reshape(x), reshape(y)};
}

PeriodicIndexSet difference_set(const Stream& x, const Stream& y) {
  if (x.is_periodic() && y.is_periodic()) {
    auto [a, b] = align(x, y);
    PeriodicIndexSet d;
    d.offset = a.pre_length();
    d.period = a.period_length();
    for (Index t = 1; t <= d.offset; ++t)
      if (a.coordinate(t) != b.coordinate(t)) d.explicit_members.push_back(t);
    for (Index j = 1; j <= d.period; ++j) {
      Index t = d.offset + j;
      if (a.coordinate(t) != b.coordinate(t)) d.residues.insert(t % d.period);
    }
    return d;
  }
  if (!x.is_periodic() && !y.is_periodic()) {
    if (x.depth() != y.depth())
      throw DepthMismatch("difference_set over truncations of depth " +
                          std::to_string(x.depth()) + " and " + std::to_string(y.depth()));
    PeriodicIndexSet d;
    d.offset = x.depth();
    for (Index t = 1; t <= x.depth(); ++t)
      if (x.coordinate(t) != y.coordinate(t)) d.explicit_members.push_back(t);
    return d;
  }
  throw DepthMismatch("difference_set needs two periodic or two truncated streams");
}

bool is_finite_permutation(const Stream& x, const Stream& y) {
  PeriodicIndexSet d = difference_set(x, y);
  if (d.infinite()) return false;
  std::map<Rational, long long, std::less<>> balance;
  for (Index t : d.explicit_members) {
    balance[x.coordinate(t)]++;
    balance[y.coordinate(t)]--;
  }
  return std::all_of(balance.begin(), balance.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

bool dominates(const Stream& x, const Stream& y) {
  if (x.is_periodic() && y.is_periodic()) {
    auto [a, b] = align(x, y);
    Index span = a.pre_length() + a.period_length();
    for (Index t = 1; t <= span; ++t)
      if (a.coordinate(t) < b.coordinate(t)) return false;
    return true;
  }
  if (!x.is_periodic() && !y.is_periodic()) {
    if (x.depth() != y.depth())
      throw DepthMismatch("dominates over truncations of unequal depth");
    for (Index t = 1; t <= x.depth(); ++t)
      if (x.coordinate(t) < y.coordinate(t)) return false;
    return true;
  }
  throw DepthMismatch("dominates needs two periodic or two truncated streams");
}

MonotoneTable::MonotoneTable(std::vector<std::pair<Rational, Rational>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw NotMonotone("empty map table");
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].first == entries_[i].first)
      throw NotMonotone("duplicate key " + entries_[i].first.str());
  if (entries_.size() >= 2) {
    increasing_ = entries_[0].second < entries_[1].second;
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      bool up = entries_[i - 1].second < entries_[i].second;
      bool down = entries_[i - 1].second > entries_[i].second;
      if (!(increasing_ ? up : down))
        throw NotMonotone("table is not strictly monotone at key " + entries_[i].first.str());
    }
  }
}

MonotoneTable MonotoneTable::identity_on(const std::vector<Rational>& values) {
  std::vector<std::pair<Rational, Rational>> entries;
  for (const auto& v : values) entries.emplace_back(v, v);
  return MonotoneTable(std::move(entries));
}

const Rational& MonotoneTable::apply(const Rational& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const auto& e, const Rational& key) { return e.first < key; });
  if (it == entries_.end() || it->first != v)
    throw MissingValue("no table entry for value " + v.str());
  return it->second;
}

Stream map_stream(const MonotoneTable& f, const Stream& x) {
  auto image = [&f](const std::vector<Rational>& src) {
    std::vector<Rational> out;
    out.reserve(src.size());
    for (const auto& v : src) out.push_back(f.apply(v));
    return out;
  };
  if (x.is_periodic())
    return Stream::eventually_periodic(image(x.preperiod()), image(x.period()));
  return Stream::truncated(image(x.values()), x.provenance());
}

Stream materialize(const Stream& x, Index n) {
  return Stream::truncated(x.prefix(n), x.provenance());
}

}  // namespace equistream
