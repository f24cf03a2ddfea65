#include "equistream/swf.hpp"

#include <algorithm>

#include "equistream/errors.hpp"

namespace equistream {

namespace {

template <std::size_t N>
void check_sorted(const std::array<Rational, N>& v) {
  for (std::size_t i = 1; i < N; ++i)
    if (!(v[i - 1] < v[i]))
      throw BadParameter("domain values must be strictly increasing");
}

template <std::size_t N>
std::array<Rational, N> to_array(const std::vector<Rational>& v) {
  if (v.size() != N)
    throw BadParameter("domain needs exactly " + std::to_string(N) + " values");
  std::array<Rational, N> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

void check_in(const Stream& x, const auto& dom) {
  for (const auto& v : x.distinct_values())
    if (!dom.contains(v)) throw DomainViolation("stream value " + v.str() + " outside Y");
}

bool nonempty(const PeriodicIndexSet& s) {
  return !s.explicit_members.empty() || !s.residues.empty();
}

}  // namespace

FiveValueDomain::FiveValueDomain(std::array<Rational, 5> v) : values(std::move(v)) {
  check_sorted(values);
}

FiveValueDomain FiveValueDomain::from_list(const std::vector<Rational>& v) {
  return FiveValueDomain(to_array<5>(v));
}

bool FiveValueDomain::contains(const Rational& v) const {
  return std::find(values.begin(), values.end(), v) != values.end();
}

SevenValueDomain::SevenValueDomain(std::array<Rational, 7> v) : values(std::move(v)) {
  check_sorted(values);
}

SevenValueDomain SevenValueDomain::from_list(const std::vector<Rational>& v) {
  return SevenValueDomain(to_array<7>(v));
}

bool SevenValueDomain::contains(const Rational& v) const {
  return std::find(values.begin(), values.end(), v) != values.end();
}

Rational periodic_base_sum(const PeriodicIndexSet& s, long long base) {
  if (base < 2) throw BadParameter("periodic_base_sum needs base >= 2");
  Rational total(0);
  for (Index t : s.explicit_members) total += rational_pow(base, -t);
  if (!s.residues.empty()) {
    // First member of each residue class, then base^{-t0} * b^p/(b^p - 1)
    // for the whole class.
    Rational tail_factor =
        rational_pow(base, s.period) / (rational_pow(base, s.period) - Rational(1));
    for (Index r : s.residues) {
      Index t0 = s.offset + 1;
      while (t0 % s.period != r) ++t0;
      total += rational_pow(base, -t0) * tail_factor;
    }
  }
  return total;
}

Rational w_prop1(const Stream& x, const FiveValueDomain& y) {
  if (!x.is_periodic()) throw NotPeriodic("w_prop1 needs an eventually periodic stream");
  check_in(x, y);
  PeriodicIndexSet n = x.indices_with_value(y.a());
  PeriodicIndexSet m = x.indices_with_value(y.b());
  if (nonempty(n) || nonempty(m))
    return -periodic_base_sum(n, 2) - periodic_base_sum(m, 3);
  Rational total(0);
  for (const auto& v : x.distinct_values())
    total += v * periodic_base_sum(x.indices_with_value(v), 2);
  return total;
}

Rational w_prop2(const Stream& x, const SevenValueDomain& y) {
  if (!x.is_periodic()) throw NotPeriodic("w_prop2 needs an eventually periodic stream");
  check_in(x, y);
  PeriodicIndexSet na = x.indices_with_value(y.a());
  PeriodicIndexSet ng = x.indices_with_value(y.g());
  PeriodicIndexSet mb = x.indices_with_value(y.b());
  PeriodicIndexSet mf = x.indices_with_value(y.f());
  if (!nonempty(na) && !nonempty(ng) && !nonempty(mb) && !nonempty(mf)) return Rational(0);
  return -periodic_base_sum(na, 2) - periodic_base_sum(ng, 2) - periodic_base_sum(mb, 3) -
         periodic_base_sum(mf, 3);
}

Rational w_min(const Stream& x) {
  if (!x.is_periodic())
    throw NotPeriodic("w_min of a truncation is not the stream minimum");
  auto vals = x.distinct_values();
  return vals.front();
}

Rational w_rho_inf(const Stream& x, const Rational& rho, const UtilityDomain& y) {
  if (!(Rational(0) < rho && rho < Rational(1))) throw BadRho("rho must lie in (0,1)");
  ExtendedRational lo = y.infimum(), hi = y.supremum();
  if (!lo.is_finite() || !hi.is_finite())
    throw UnboundedDomain("w_rho_inf needs finite inf Y and sup Y");
  if (!x.is_periodic()) throw NotPeriodic("w_rho_inf needs an eventually periodic stream");
  for (const auto& v : x.distinct_values())
    if (!y.contains(v)) throw DomainViolation("stream value " + v.str() + " outside Y");
  auto vals = x.distinct_values();  // sorted ascending
  Rational dist_lo = vals.front() - lo.value;   // min |x_n - inf Y|
  Rational dist_hi = hi.value - vals.back();    // min |sup Y - x_n|
  return rho * dist_lo + (Rational(1) - rho) * dist_hi;
}

}  // namespace equistream
