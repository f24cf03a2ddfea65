#include "equistream/domain.hpp"

#include <algorithm>
#include <cctype>

#include "equistream/errors.hpp"

namespace equistream {

std::string ExtendedRational::str() const {
  switch (kind) {
    case Kind::NegInfinity: return "-inf";
    case Kind::PosInfinity: return "+inf";
    case Kind::Finite: return value.str();
  }
  return "?";
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind == ExtendedRational::Kind::NegInfinity)
    return b.kind != ExtendedRational::Kind::NegInfinity;
  if (a.kind == ExtendedRational::Kind::PosInfinity) return false;
  if (b.kind == ExtendedRational::Kind::PosInfinity) return true;
  if (b.kind == ExtendedRational::Kind::NegInfinity) return false;
  return a.value < b.value;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind != b.kind) return false;
  return a.kind != ExtendedRational::Kind::Finite || a.value == b.value;
}

Rational ChainForm::term(long long n) const {
  if (n < 1) throw BadParameter("chain terms are indexed from 1");
  if (kind == Kind::Affine) return a + b * Rational(n);
  return a + c / Rational(n + k);
}

ChainDirection ChainForm::direction() const {
  if (kind == Kind::Affine)
    return b > Rational(0) ? ChainDirection::Increasing : ChainDirection::Decreasing;
  return c > Rational(0) ? ChainDirection::Decreasing : ChainDirection::Increasing;
}

ExtendedRational ChainForm::limit() const {
  if (kind == Kind::Affine)
    return b > Rational(0) ? ExtendedRational::pos_infinity()
                           : ExtendedRational::neg_infinity();
  return ExtendedRational::finite(a);
}

bool ChainForm::contains(const Rational& v) const {
  Rational n(0);
  if (kind == Kind::Affine) {
    n = (v - a) / b;
  } else {
    if (v == a) return false;
    n = c / (v - a) - Rational(k);
  }
  return n.denominator() == 1 && n.numerator() >= 1;
}

ChainForm ChainForm::transformed(const Rational& u, const Rational& w) const {
  if (u == Rational(0)) throw BadParameter("degenerate affine transform");
  ChainForm out = *this;
  out.a = u * a + w;
  out.b = u * b;
  out.c = u * c;
  return out;
}

namespace {

struct FormScanner {
  std::string s;
  std::size_t pos = 0;

  explicit FormScanner(const std::string& text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError("chain form: expected '" + std::string(1, c) + "' in '" + s + "'");
  }
  long long scan_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("chain form: expected a number in '" + s + "'");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[pos++] - '0');
    return v;
  }
};

}  // namespace

// Grammar: sum of signed atoms, each one of
//   q            constant
//   q n | n      affine term
//   q/(n+k) | n/(n+k)   harmonic term (n/(n+k) rewrites to 1 - k/(n+k))
ChainForm ChainForm::parse(const std::string& text) {
  FormScanner in(text);
  Rational a(0), b(0), c(0);
  long long kk = -1;
  auto add_harmonic = [&](const Rational& coef, long long shift) {
    if (kk >= 0 && kk != shift)
      throw ParseError("chain form: mixed harmonic shifts in '" + text + "'");
    kk = shift;
    c += coef;
  };

  bool first = true;
  while (!in.done()) {
    Rational sign(1);
    if (in.accept('-')) sign = Rational(-1);
    else if (in.accept('+')) sign = Rational(1);
    else if (!first) throw ParseError("chain form: expected '+' or '-' in '" + text + "'");
    first = false;

    if (in.accept('n')) {
      if (in.accept('/')) {  // n/(n+k)
        in.expect('(');
        in.expect('n');
        in.expect('+');
        long long shift = in.scan_uint();
        in.expect(')');
        a += sign;
        add_harmonic(sign * Rational(-shift), shift);
      } else {
        b += sign;
      }
      continue;
    }
    Rational num(in.scan_uint());
    if (in.accept('/')) {
      if (in.accept('(')) {  // q/(n+k)
        in.expect('n');
        in.expect('+');
        long long shift = in.scan_uint();
        in.expect(')');
        add_harmonic(sign * num, shift);
        continue;
      }
      num = num / Rational(in.scan_uint());
    }
    if (in.accept('n')) {
      b += sign * num;
    } else if (in.accept('/')) {  // q/(n+k) with fractional q
      in.expect('(');
      in.expect('n');
      in.expect('+');
      long long shift = in.scan_uint();
      in.expect(')');
      add_harmonic(sign * num, shift);
    } else {
      a += sign * num;
    }
  }

  ChainForm f;
  f.a = a;
  if (b != Rational(0) && c != Rational(0))
    throw ParseError("chain form: mixing affine and harmonic terms in '" + text + "'");
  if (b != Rational(0)) {
    f.kind = Kind::Affine;
    f.b = b;
  } else if (c != Rational(0)) {
    f.kind = Kind::Harmonic;
    f.c = c;
    f.k = kk;
  } else {
    throw ParseError("chain form: constant '" + text + "' is not a chain");
  }
  return f;
}

std::string ChainForm::str() const {
  std::string out;
  if (a != Rational(0)) out += a.str();
  if (kind == Kind::Affine) {
    if (!out.empty() && b > Rational(0)) out += "+";
    if (b == Rational(-1)) out += "-n";
    else if (b == Rational(1)) out += "n";
    else out += b.str() + "n";
  } else {
    if (!out.empty() && c > Rational(0)) out += "+";
    out += c.str() + "/(n+" + std::to_string(k) + ")";
  }
  return out;
}

MonotoneChain MonotoneChain::from_form(ChainForm form, long long head_terms) {
  MonotoneChain ch;
  ch.direction = form.direction();
  ch.limit = form.limit();
  for (long long n = 1; n <= head_terms; ++n) ch.head.push_back(form.term(n));
  for (std::size_t i = 1; i < ch.head.size(); ++i) {
    bool ok = ch.direction == ChainDirection::Increasing ? ch.head[i - 1] < ch.head[i]
                                                         : ch.head[i - 1] > ch.head[i];
    if (!ok) throw BadParameter("chain form is not strictly monotone: " + form.str());
  }
  ch.form = std::move(form);
  return ch;
}

std::optional<Rational> MonotoneChain::min() const {
  if (direction == ChainDirection::Increasing) return form.term(1);
  return std::nullopt;  // decreasing chain never attains its infimum
}

std::optional<Rational> MonotoneChain::max() const {
  if (direction == ChainDirection::Decreasing) return form.term(1);
  return std::nullopt;
}

ExtendedRational MonotoneChain::infimum() const {
  return direction == ChainDirection::Increasing ? ExtendedRational::finite(form.term(1))
                                                 : limit;
}

ExtendedRational MonotoneChain::supremum() const {
  return direction == ChainDirection::Decreasing ? ExtendedRational::finite(form.term(1))
                                                 : limit;
}

UtilityDomain UtilityDomain::make(std::vector<Rational> finite_part,
                                  std::vector<MonotoneChain> chains) {
  std::sort(finite_part.begin(), finite_part.end());
  finite_part.erase(std::unique(finite_part.begin(), finite_part.end()), finite_part.end());
  for (const auto& v : finite_part)
    for (const auto& ch : chains)
      if (ch.form.contains(v))
        throw BadParameter("finite part value " + v.str() + " collides with chain " +
                           ch.form.str());
  UtilityDomain y;
  y.finite_part = std::move(finite_part);
  y.chains = std::move(chains);
  if (y.finite_part.empty() && y.chains.empty()) throw BadParameter("empty utility domain");
  return y;
}

UtilityDomain UtilityDomain::finite(std::vector<Rational> values) {
  return make(std::move(values), {});
}

bool UtilityDomain::contains(const Rational& v) const {
  if (std::binary_search(finite_part.begin(), finite_part.end(), v)) return true;
  return std::any_of(chains.begin(), chains.end(),
                     [&v](const MonotoneChain& ch) { return ch.form.contains(v); });
}

ExtendedRational UtilityDomain::infimum() const {
  std::optional<ExtendedRational> inf;
  auto feed = [&inf](const ExtendedRational& e) {
    if (!inf || e < *inf) inf = e;
  };
  if (!finite_part.empty()) feed(ExtendedRational::finite(finite_part.front()));
  for (const auto& ch : chains) feed(ch.infimum());
  return *inf;
}

ExtendedRational UtilityDomain::supremum() const {
  std::optional<ExtendedRational> sup;
  auto feed = [&sup](const ExtendedRational& e) {
    if (!sup || *sup < e) sup = e;
  };
  if (!finite_part.empty()) feed(ExtendedRational::finite(finite_part.back()));
  for (const auto& ch : chains) feed(ch.supremum());
  return *sup;
}

std::optional<Rational> UtilityDomain::min() const {
  // Candidate least elements are attained minima of the parts; the candidate
  // wins only if it sits at or below every decreasing chain's infimum.
  std::optional<Rational> cand;
  auto feed = [&cand](const Rational& v) {
    if (!cand || v < *cand) cand = v;
  };
  if (!finite_part.empty()) feed(finite_part.front());
  for (const auto& ch : chains)
    if (auto m = ch.min()) feed(*m);
  if (!cand) return std::nullopt;
  for (const auto& ch : chains)
    if (ch.direction == ChainDirection::Decreasing &&
        ch.infimum() < ExtendedRational::finite(*cand))
      return std::nullopt;
  return cand;
}

std::optional<Rational> UtilityDomain::max() const {
  std::optional<Rational> cand;
  auto feed = [&cand](const Rational& v) {
    if (!cand || v > *cand) cand = v;
  };
  if (!finite_part.empty()) feed(finite_part.back());
  for (const auto& ch : chains)
    if (auto m = ch.max()) feed(*m);
  if (!cand) return std::nullopt;
  for (const auto& ch : chains)
    if (ch.direction == ChainDirection::Increasing &&
        ExtendedRational::finite(*cand) < ch.supremum())
      return std::nullopt;
  return cand;
}

UtilityDomain UtilityDomain::transformed(const Rational& u, const Rational& w) const {
  std::vector<Rational> fin;
  for (const auto& v : finite_part) fin.push_back(u * v + w);
  std::vector<MonotoneChain> chs;
  for (const auto& ch : chains)
    chs.push_back(MonotoneChain::from_form(ch.form.transformed(u, w),
                                           static_cast<long long>(ch.head.size())));
  return make(std::move(fin), std::move(chs));
}

WellOrderReport is_well_ordered(const UtilityDomain& y) {
  WellOrderReport r;
  for (const auto& ch : y.chains) {
    if (ch.direction == ChainDirection::Decreasing) {
      r.well_ordered = false;
      r.omega_star_witness = ch;
      return r;
    }
  }
  return r;
}

SigmaReport contains_sigma_subset(const UtilityDomain& y) {
  SigmaReport r;
  for (const auto& dec : y.chains) {
    if (dec.direction != ChainDirection::Decreasing) continue;
    for (const auto& inc : y.chains) {
      if (inc.direction != ChainDirection::Increasing) continue;
      if (dec.infimum() < inc.supremum()) {
        r.has_sigma_subset = true;
        r.witness = std::make_pair(dec, inc);
        return r;
      }
    }
  }
  return r;
}

ClassificationReport classify(const UtilityDomain& y) {
  ClassificationReport rep;
  WellOrderReport wo = is_well_ordered(y);
  SigmaReport sig = contains_sigma_subset(y);
  rep.has_omega_star = !wo.well_ordered;
  rep.has_sigma = sig.has_sigma_subset;
  if (wo.well_ordered)
    rep.order_class = OrderClass::WellOrdered;
  else if (sig.has_sigma_subset)
    rep.order_class = OrderClass::SigmaSubset;
  else
    rep.order_class = OrderClass::OmegaStarNoSigma;
  rep.min = y.min();
  rep.max = y.max();
  return rep;
}

std::string to_string(OrderClass c) {
  switch (c) {
    case OrderClass::WellOrdered: return "WellOrdered";
    case OrderClass::OmegaStar: return "OmegaStar";
    case OrderClass::SigmaSubset: return "SigmaSubset";
    case OrderClass::OmegaStarNoSigma: return "OmegaStarNoSigma";
  }
  return "?";
}

}  // namespace equistream
