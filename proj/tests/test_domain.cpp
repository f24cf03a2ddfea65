#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equistream/domain.hpp"
#include "equistream/errors.hpp"

using namespace equistream;

namespace {

UtilityDomain from_forms(std::vector<Rational> finite,
                         const std::vector<std::string>& forms) {
  std::vector<MonotoneChain> chains;
  for (const auto& f : forms) chains.push_back(MonotoneChain::from_form(ChainForm::parse(f)));
  return UtilityDomain::make(std::move(finite), std::move(chains));
}

}  // namespace

TEST_CASE("chain forms parse, evaluate and take limits") {
  ChainForm h = ChainForm::parse("1/(n+2)");
  CHECK(h.term(1) == Rational(1, 3));
  CHECK(h.term(4) == Rational(1, 6));
  CHECK(h.direction() == ChainDirection::Decreasing);
  CHECK(h.limit() == ExtendedRational::finite(Rational(0)));

  ChainForm g = ChainForm::parse("n/(n+1)");
  CHECK(g.term(1) == Rational(1, 2));
  CHECK(g.term(3) == Rational(3, 4));
  CHECK(g.direction() == ChainDirection::Increasing);
  CHECK(g.limit() == ExtendedRational::finite(Rational(1)));

  ChainForm lo = ChainForm::parse("1/2-1/(n+1)");
  CHECK(lo.term(1) == Rational(0));
  CHECK(lo.direction() == ChainDirection::Increasing);
  CHECK(lo.limit() == ExtendedRational::finite(Rational(1, 2)));

  ChainForm neg = ChainForm::parse("-n");
  CHECK(neg.term(5) == Rational(-5));
  CHECK(neg.direction() == ChainDirection::Decreasing);
  CHECK(neg.limit() == ExtendedRational::neg_infinity());

  CHECK_THROWS_AS(ChainForm::parse("sin(n)"), ParseError);
}

TEST_CASE("chain membership solves for n exactly") {
  ChainForm h = ChainForm::parse("1/(n+2)");
  CHECK(h.contains(Rational(1, 3)));
  CHECK(h.contains(Rational(1, 100)));
  CHECK(!h.contains(Rational(1, 2)));   // would need n = 0
  CHECK(!h.contains(Rational(2, 5)));
  ChainForm g = ChainForm::parse("n/(n+1)");
  CHECK(g.contains(Rational(99, 100)));
  CHECK(!g.contains(Rational(1)));
}

TEST_CASE("finite domains are well-ordered") {
  UtilityDomain y = UtilityDomain::finite({Rational(3), Rational(1), Rational(2)});
  CHECK(y.finite_part == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  ClassificationReport rep = classify(y);
  CHECK(rep.order_class == OrderClass::WellOrdered);
  CHECK(!rep.has_omega_star);
  CHECK(!rep.has_sigma);
  CHECK(rep.min == Rational(1));
  CHECK(rep.max == Rational(3));
}

TEST_CASE("descending-plus-ascending harmonic pair contains a copy of Z") {
  // Y = {1/(n+2)} union {n/(n+1)}: the decreasing chain sits inside (0, 1/2],
  // the increasing one climbs from 1/2 to 1, so stacked tails form sigma.
  UtilityDomain y = from_forms({}, {"1/(n+2)", "n/(n+1)"});
  ClassificationReport rep = classify(y);
  CHECK(rep.order_class == OrderClass::SigmaSubset);
  CHECK(rep.has_omega_star);
  CHECK(rep.has_sigma);
  CHECK(!rep.min.has_value());
  CHECK(!rep.max.has_value());
}

TEST_CASE("alternating integers contain a copy of Z") {
  // Y' = {-1, 1, -2, 2, ...} presented as the chains n and -n.
  UtilityDomain y = from_forms({}, {"n", "-n"});
  ClassificationReport rep = classify(y);
  CHECK(rep.order_class == OrderClass::SigmaSubset);
}

TEST_CASE("pinched harmonic pair has omega-star but no sigma") {
  // Y = {1/2 - 1/(n+1)} union {1/2 + 1/(n+1)}: the decreasing chain never
  // drops below 1/2, the increasing one never reaches it.
  UtilityDomain y = from_forms({}, {"1/2-1/(n+1)", "1/2+1/(n+1)"});
  ClassificationReport rep = classify(y);
  CHECK(rep.order_class == OrderClass::OmegaStarNoSigma);
  CHECK(rep.has_omega_star);
  CHECK(!rep.has_sigma);
  CHECK(rep.min == Rational(0));  // first term of the increasing chain
  CHECK(rep.max == Rational(1));  // first term of the decreasing chain
}

TEST_CASE("negative integers are not well-ordered") {
  UtilityDomain y = from_forms({}, {"-n"});
  ClassificationReport rep = classify(y);
  CHECK(rep.has_omega_star);
  CHECK(!rep.has_sigma);
  CHECK(rep.order_class == OrderClass::OmegaStarNoSigma);
  WellOrderReport wo = is_well_ordered(y);
  REQUIRE(wo.omega_star_witness.has_value());
  CHECK(wo.omega_star_witness->direction == ChainDirection::Decreasing);
}

TEST_CASE("increasing chains alone stay well-ordered") {
  UtilityDomain y = from_forms({Rational(5)}, {"n/(n+1)", "1/2-1/(n+1)"});
  CHECK(classify(y).order_class == OrderClass::WellOrdered);
}

TEST_CASE("classification is invariant under monotone affine maps") {
  std::vector<UtilityDomain> fixtures{
      UtilityDomain::finite({Rational(0), Rational(1), Rational(2)}),
      from_forms({}, {"1/(n+2)", "n/(n+1)"}),
      from_forms({}, {"1/2-1/(n+1)", "1/2+1/(n+1)"}),
      from_forms({}, {"-n"}),
  };
  std::vector<std::pair<Rational, Rational>> maps{
      {Rational(2), Rational(3)},         // increasing
      {Rational(1, 7), Rational(-1)},     // increasing, shrinking
      {Rational(-1), Rational(0)},        // decreasing
      {Rational(-3, 2), Rational(1, 4)},  // decreasing
  };
  for (const auto& y : fixtures) {
    ClassificationReport base = classify(y);
    for (const auto& [u, w] : maps) {
      UtilityDomain img = y.transformed(u, w);
      ClassificationReport got = classify(img);
      bool decreasing_map = u < Rational(0);
      // A decreasing map swaps omega-star and omega; sigma survives either way.
      CHECK(got.has_sigma == base.has_sigma);
      if (!decreasing_map) {
        CHECK(got.order_class == base.order_class);
        CHECK(got.has_omega_star == base.has_omega_star);
      }
      // Increasing maps compose back to the identity viewpoint.
      if (!decreasing_map) {
        ClassificationReport round =
            classify(img.transformed(Rational(1) / u, -w / u));
        CHECK(round.order_class == base.order_class);
      }
    }
  }
}

TEST_CASE("domain membership covers finite part and chains") {
  UtilityDomain y = from_forms({Rational(9)}, {"1/(n+2)"});
  CHECK(y.contains(Rational(9)));
  CHECK(y.contains(Rational(1, 3)));
  CHECK(y.contains(Rational(1, 50)));
  CHECK(!y.contains(Rational(1, 2)));
  CHECK(y.infimum() == ExtendedRational::finite(Rational(0)));
  CHECK(y.supremum() == ExtendedRational::finite(Rational(9)));
}

TEST_CASE("transformed chains keep closed form") {
  ChainForm h = ChainForm::parse("1/(n+2)");
  ChainForm t = h.transformed(Rational(2), Rational(1));
  for (long long n = 1; n <= 10; ++n)
    CHECK(t.term(n) == Rational(2) * h.term(n) + Rational(1));
}
