#include "heightzeta/error.hpp"
#include "heightzeta/points.hpp"
#include "heightzeta_oracles/oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

namespace heightzeta::points {
namespace {

using testing::Gen;

GroupElement el(Rational x, Rational z, Rational y) { return {std::move(x), std::move(z), std::move(y)}; }
HeightBound bound(Rational b) { return HeightBound(std::move(b)); }

TEST(Group, Examples) {
  const auto g = el(Rational(1, 2), Rational(-3, 7), Rational(5));
  EXPECT_EQ(multiply(identity(), g), g);
  EXPECT_EQ(multiply(el(1, 0, 0), el(0, 0, 1)), el(1, 1, 1));
  EXPECT_EQ(multiply(el(0, 0, 1), el(1, 0, 0)), el(1, 0, 1));
  EXPECT_EQ(multiply(g, inverse(g)), identity());
}

TEST(GroupProperty, Axioms) {
  Gen gen;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = el(gen.rational(), gen.rational(), gen.rational());
    const auto b = el(gen.rational(), gen.rational(), gen.rational());
    const auto c = el(gen.rational(), gen.rational(), gen.rational());
    ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    ASSERT_EQ(multiply(a, identity()), a);
    ASSERT_EQ(multiply(identity(), a), a);
    ASSERT_EQ(multiply(a, inverse(a)), identity());
    ASSERT_EQ(multiply(inverse(a), a), identity());
  }
}

TEST(Quadruple, Examples) {
  EXPECT_EQ(to_quadruple(identity()), (PrimitiveQuadruple{1, 0, 0, 0}));
  EXPECT_EQ(to_quadruple(el(Rational(1, 2), 0, 0)), (PrimitiveQuadruple{2, 1, 0, 0}));
  EXPECT_EQ(to_quadruple(el(Rational(1, 2), Rational(1, 3), 1)), (PrimitiveQuadruple{6, 3, 2, 6}));
}

TEST(Height, Examples) {
  EXPECT_DOUBLE_EQ(height(identity()), 1.0);
  EXPECT_NEAR(height(el(1, 0, 0)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(height(el(Rational(1, 2), 0, 0)), std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(std::abs(height_pow(Complex(2.0, 0.0), el(1, 0, 0))), 2.0, 1e-14);
  EXPECT_NEAR(std::abs(height_pow(Complex(4.0, 3.0), el(1, 1, 1))), 16.0, 1e-13);
}

TEST(Height, FiniteExamples) {
  EXPECT_EQ(height_finite(el(Rational(1, 2), Rational(1, 3), 1)), 6);
  const auto k = el(1, 0, 0);
  const auto g = el(0, Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(height_finite(g), 2);
  EXPECT_EQ(height_finite(multiply(k, g)), 2);
  EXPECT_EQ(height_finite(el(7, -3, 12)), 1);
}

TEST(HeightProperty, FiniteHeightBiInvariance) {
  Gen gen;
  for (int trial = 0; trial < 5000; ++trial) {
    const auto g = el(gen.rational(30, 40), gen.rational(30, 40), gen.rational(30, 40));
    const auto k = el(gen.integer(-9, 9), gen.integer(-9, 9), gen.integer(-9, 9));
    const auto kp = el(gen.integer(-9, 9), gen.integer(-9, 9), gen.integer(-9, 9));
    ASSERT_EQ(height_finite(multiply(multiply(k, g), kp)), height_finite(g));
  }
}

TEST(HeightBound, Validation) {
  EXPECT_THROW(bound(Rational(1, 2)), Error);
  try {
    bound(Rational(1'000'001));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
  try {
    count_fast(bound(40'001));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
  EXPECT_EQ(HeightBound::parse("1.5").norm_limit(), 2u);
  EXPECT_EQ(HeightBound::parse("7/2").norm_limit(), 12u);
}

TEST(Count, NaiveExamples) {
  EXPECT_EQ(count_naive(bound(1)), 1u);
  EXPECT_EQ(count_naive(bound(2)), 27u);
  EXPECT_EQ(count_naive(bound(10)), count_fast(bound(10)));
}

TEST(Count, FastExamples) {
  EXPECT_EQ(count_fast(bound(2)), 27u);
  EXPECT_EQ(count_fast(bound(1)), 1u);
  const auto n50 = count_fast(bound(50));
  EXPECT_GE(n50, 13'540'000u);
  EXPECT_LE(n50, 14'960'000u);
}

TEST(CountProperty, FastEqualsNaiveOnHalfIntegers) {
  for (int twice = 2; twice <= 40; ++twice) {
    const auto b = bound(Rational(twice, 2));
    EXPECT_EQ(count_fast(b), count_naive(b)) << twice / 2.0;
  }
}

TEST(CountProperty, FastMatchesIndependentOracle) {
  for (std::int64_t b = 1; b <= 15; ++b) {
    EXPECT_EQ(count_fast(bound(b)), heightzeta_oracles::primitive_count(static_cast<std::uint64_t>(b * b)));
  }
}

TEST(CountProperty, Monotone) {
  std::uint64_t previous = 0;
  for (int tenth = 10; tenth <= 400; tenth += 7) {
    const auto n = count_fast(bound(Rational(tenth, 10)));
    EXPECT_GE(n, previous);
    previous = n;
  }
}

TEST(CountProperty, Asymptotic) {
  const double c = 2.2797285;
  const double r50 = static_cast<double>(count_fast(bound(50))) / std::pow(50.0, 4);
  const double r200 = static_cast<double>(count_fast(bound(200))) / std::pow(200.0, 4);
  EXPECT_GE(r50, 0.95 * c);
  EXPECT_LE(r50, 1.05 * c);
  EXPECT_GE(r200, 0.97 * c);
  EXPECT_LE(r200, 1.03 * c);
}

TEST(CountProperty, ThreadCountDoesNotChangeResult) {
  const auto b = bound(Rational(1234, 10));
  const auto one = count_fast(b, 1);
  EXPECT_EQ(count_fast(b, 2), one);
  EXPECT_EQ(count_fast(b, 5), one);
}

TEST(Predict, Examples) {
  // 90 / (4 pi^2) = 2.27972663...; the quoted 2.2797285 agrees to 1e-6 relative
  EXPECT_NEAR(predict_count(100.0), 2.2797285e8, 1e-6 * 2.2797285e8);
  EXPECT_NEAR(predict_count(1.0), 2.2797285, 1e-6 * 2.2797285);
  EXPECT_DOUBLE_EQ(predict_count(1.0), 90.0 / (4.0 * kPi * kPi));
  EXPECT_DOUBLE_EQ(predict_count(14.0) * 16.0, predict_count(28.0));
}

TEST(Enumerate, Examples) {
  const auto one = enumerate(bound(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].g, identity());
  EXPECT_EQ(enumerate(bound(2)).size(), 27u);
  const auto near_root2 = enumerate(HeightBound::parse("1.4143"));
  EXPECT_EQ(near_root2.size(), 7u);
}

TEST(Enumerate, HeightsAndOrder) {
  const auto b = HeightBound::parse("6.5");
  const auto pts = enumerate(b);
  EXPECT_EQ(pts.size(), count_fast(b));
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto q = to_quadruple(pts[i].g);
    EXPECT_EQ(q.norm_sq(), pts[i].norm_sq);
    EXPECT_LE(pts[i].norm_sq, b.norm_limit());
    ++histogram[pts[i].norm_sq];
    if (i > 0) {
      const auto p = to_quadruple(pts[i - 1].g);
      EXPECT_TRUE(std::tie(p.d, p.a1, p.a2, p.a3) < std::tie(q.d, q.a1, q.a2, q.a3));
    }
  }
  const auto counts = primitive_norm_counts(b, 3);
  for (std::uint64_t n = 0; n < counts.size(); ++n) {
    EXPECT_EQ(counts[n], histogram.contains(n) ? histogram[n] : 0u) << n;
  }
}

}  // namespace
}  // namespace heightzeta::points
