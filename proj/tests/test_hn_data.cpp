#include <doctest.h>

#include "hkd/hn_data.hpp"

using namespace hkd;

TEST_CASE("piece validation") {
  CHECK_NOTHROW(HNData({{Rational(2), 1}, {Rational(1, 2), 3}}));
  CHECK_THROWS_AS(HNData({}), ValidationError);
  CHECK_THROWS_AS(HNData({{Rational(1), 0}}), ValidationError);
  CHECK_THROWS_AS(HNData({{Rational(1), 1}, {Rational(1), 1}}), ValidationError);
  CHECK_THROWS_AS(HNData({{Rational(1), 1}, {Rational(2), 1}}), ValidationError);
}

TEST_CASE("strong data requires integral piece degrees at the witness level") {
  CHECK_NOTHROW(StrongHNData({{Rational(-5, 2), 2}}, 3, 0));
  CHECK_THROWS_AS(StrongHNData({{Rational(-5, 2), 1}}, 3, 0), ValidationError);
  // at level 1 the slope may carry one factor of p in the denominator
  CHECK_NOTHROW(StrongHNData({{Rational(-4, 3), 1}, {Rational(-8, 3), 1}}, 3, 1));
  CHECK_THROWS_AS(StrongHNData({{Rational(-4, 3), 1}}, 3, 0), ValidationError);
  CHECK_THROWS_AS(StrongHNData({{Rational(-1, 2), 1}}, 3, 1), ValidationError);
  CHECK_THROWS_AS(StrongHNData({{Rational(1), 1}}, 4, 0), ValidationError);
  CHECK_THROWS_AS(StrongHNData({{Rational(1), 1}}, 3, -1), ValidationError);
}

TEST_CASE("generator degrees sort and group") {
  GeneratorDegrees degs({5, 2, 2});
  CHECK(degs.mu() == 3);
  CHECK(degs.degrees() == std::vector<long>{2, 2, 5});
  REQUIRE(degs.distinct().size() == 2);
  CHECK(degs.distinct()[0] == std::pair<long, long>{2, 2});
  CHECK(degs.distinct()[1] == std::pair<long, long>{5, 1});
  CHECK_THROWS_AS(GeneratorDegrees({3}), ValidationError);
  CHECK_THROWS_AS(GeneratorDegrees({0, 1}), ValidationError);
}

TEST_CASE("bundle stats") {
  const BundleStats s = bundle_stats(HNData({{Rational(-12), 1}, {Rational(-16), 1}}));
  CHECK(s.rank == 2);
  CHECK(s.degree == Rational(-28));
  CHECK(s.mu_max == Rational(-12));
  CHECK(s.mu_min == Rational(-16));
}

TEST_CASE("generator bundle slope data") {
  const CurveData curve(3, 4);
  const GeneratorDegrees degs({2, 2, 5});
  const HNData m0 = hn_of_generator_degrees(degs, curve);
  REQUIRE(m0.pieces().size() == 2);
  CHECK(m0.pieces()[0] == HNPiece{Rational(-4), 2});
  CHECK(m0.pieces()[1] == HNPiece{Rational(-16), 1});

  const StrongHNData strong = strong_hn_of_generator_degrees(degs, curve, 3);
  CHECK(strong.frobenius_level() == 0);
  CHECK(strong.characteristic() == 3);
  CHECK(std::vector<HNPiece>(strong.pieces().begin(), strong.pieces().end()) ==
        std::vector<HNPiece>(m0.pieces().begin(), m0.pieces().end()));
}

TEST_CASE("frobenius pullback scales slopes") {
  const StrongHNData data({{Rational(-4, 3), 1}, {Rational(-8, 3), 1}}, 3, 1);
  const StrongHNData up = frobenius_pullback(data, 1);
  CHECK(up.frobenius_level() == 2);
  CHECK(up.pieces()[0].slope == Rational(-4));
  CHECK(up.pieces()[1].slope == Rational(-8));
  CHECK_THROWS_AS(frobenius_pullback(data, -1), ValidationError);
}

TEST_CASE("syzygy validation forces rank and degree") {
  const CurveData curve(3, 4);
  const GeneratorDegrees degs({2, 2, 5});
  // forced: rank 2, degree (1-2+1-2+1-5)*4 - 4 = -28
  CHECK_NOTHROW(validate_syzygy_hn(StrongHNData({{Rational(-12), 1}, {Rational(-16), 1}}, 3, 0),
                                   degs, curve));
  CHECK_NOTHROW(validate_syzygy_hn(HNData({{Rational(-14), 2}}), degs, curve));
  CHECK_THROWS_AS(validate_syzygy_hn(HNData({{Rational(-14), 3}}), degs, curve),
                  ValidationError);
  CHECK_THROWS_AS(validate_syzygy_hn(HNData({{Rational(-16), 2}}), degs, curve),
                  ValidationError);

  const SyzygyInput strong_in = validate_syzygy_hn(
      StrongHNData({{Rational(-12), 1}, {Rational(-16), 1}}, 3, 0), degs, curve);
  CHECK(strong_in.is_strong());
  CHECK_NOTHROW(strong_in.strong_v0());
  CHECK_THROWS_AS(strong_in.plain_v0(), ValidationError);

  const SyzygyInput plain_in = validate_syzygy_hn(HNData({{Rational(-14), 2}}), degs, curve);
  CHECK_FALSE(plain_in.is_strong());
  CHECK_NOTHROW(plain_in.plain_v0());
  CHECK_THROWS_AS(plain_in.strong_v0(), ValidationError);
}

TEST_CASE("curve data validation") {
  CHECK_THROWS_AS(CurveData(-1, 4), ValidationError);
  CHECK_THROWS_AS(CurveData(3, 0), ValidationError);
  CHECK_NOTHROW(CurveData(0, 1));
}
