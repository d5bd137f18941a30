#include "heightzeta/arch.hpp"
#include "heightzeta/error.hpp"
#include "heightzeta_oracles/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <tuple>

namespace heightzeta::arch {
namespace {

constexpr double kPiSq = kPi * kPi;

QuadratureConfig tight() {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-12;
  return cfg;
}

// Closed form through the modified Bessel function, used here only as a
// second reference next to the 3D quadrature oracle.
double bessel_reference(double s, double rho) {
  const double nu = (3.0 - s) / 2.0;
  return 2.0 * std::pow(kPi, s / 2.0) / std::tgamma(s / 2.0) * std::pow(rho, (s - 3.0) / 2.0) *
         std::cyl_bessel_k(std::abs(nu), 2.0 * kPi * rho);
}

TEST(Radial, Examples) {
  EXPECT_NEAR(radial_height_integral(4.0).value.real(), kPiSq, 1e-6);
  EXPECT_NEAR(radial_height_integral(6.0).value.real(), kPiSq / 4.0, 1e-6);
  double previous = radial_height_integral(3.5).value.real();
  for (double s = 4.0; s <= 40.0; s += 0.5) {
    const double v = radial_height_integral(s).value.real();
    EXPECT_LT(v, previous) << s;
    EXPECT_GT(v, 0.0);
    previous = v;
  }
}

TEST(Radial, ClosedFormAgreement) {
  for (double s : {4.0, 4.5, 5.0, 6.0}) {
    const auto r = radial_height_integral(s);
    const double closed = std::pow(kPi, 1.5) * std::tgamma((s - 3.0) / 2.0) / std::tgamma(s / 2.0);
    EXPECT_LE(std::abs(r.value.real() - closed), 1e-6 * closed) << s;
    EXPECT_LE(std::abs(r.value - radial_closed_form(s)), 1e-6 * closed);
  }
  const Complex s(5.0, 2.0);
  EXPECT_LE(std::abs(radial_height_integral(s).value - radial_closed_form(s)), 1e-6 * std::abs(radial_closed_form(s)));
}

TEST(Radial, Errors) {
  EXPECT_THROW(radial_height_integral(3.0), Error);
  QuadratureConfig bad;
  bad.abs_tol = 0.0;
  EXPECT_THROW(validate(bad), Error);
}

TEST(Fourier, ZeroFrequencyIsRadial) {
  EXPECT_NEAR(fourier_height_integral(4.0, 0, 0).value.real(), kPiSq, 1e-6);
}

TEST(Fourier, MatchesThreeDimensionalOracle) {
  const double oracle = heightzeta_oracles::fourier_3d(6.0, 1.0);
  EXPECT_NEAR(fourier_height_integral(6.0, 1, 0).value.real(), oracle, 1e-6);
  EXPECT_NEAR(fourier_height_integral(6.0, 1, 0, tight()).value.real(), oracle, 1e-9);
  // the oracle truncates |v1| at `extent`; its tail is O(extent^{2-s})
  for (auto [s, rho, extent] : {std::tuple{4.5, 1.0, 4000.0}, std::tuple{5.0, std::sqrt(2.0), 400.0},
                                std::tuple{7.25, 2.0, 400.0}}) {
    EXPECT_NEAR(fourier_height_integral_at(s, rho, tight()).value.real(),
                heightzeta_oracles::fourier_3d(s, rho, extent), 1e-8)
        << s << " " << rho;
  }
}

TEST(Fourier, MatchesBesselReference) {
  for (double s : {4.5, 5.5, 6.0, 8.0}) {
    for (double rho : {0.5, 1.0, 2.0, 3.0}) {
      const double ref = bessel_reference(s, rho);
      EXPECT_NEAR(fourier_height_integral_at(s, rho, tight()).value.real(), ref, 1e-12 + 1e-9 * std::abs(ref))
          << s << " " << rho;
    }
  }
}

TEST(Fourier, RotationAndConjugateSymmetry) {
  const auto cfg = tight();
  const double a = fourier_height_integral(6.0, 1, 0, cfg).value.real();
  EXPECT_EQ(fourier_height_integral(6.0, 0, 1, cfg).value.real(), a);
  EXPECT_EQ(fourier_height_integral(6.0, -1, 0, cfg).value.real(), a);
  const Complex s(6.0, 1.5);
  EXPECT_EQ(fourier_height_integral(s, 2, -3, cfg).value, fourier_height_integral(s, -2, 3, cfg).value);
}

TEST(Fourier, RealForRealS) {
  for (double s : {4.5, 6.0}) {
    EXPECT_LE(std::abs(fourier_height_integral(s, 2, 1).value.imag()), QuadratureConfig{}.abs_tol);
  }
}

TEST(Fourier, RapidDecay) {
  const auto cfg = tight();
  double previous = std::abs(fourier_height_integral_at(6.0, 1.0, cfg).value);
  const double first = previous;
  for (double rho : {2.0, 4.0, 8.0}) {
    const double v = std::abs(fourier_height_integral_at(6.0, rho, cfg).value);
    EXPECT_LT(v, previous) << rho;
    previous = v;
  }
  EXPECT_LE(std::abs(fourier_height_integral_at(6.0, 4.0).value), 1e-2 * first);
}

TEST(Fourier, Errors) { EXPECT_THROW(fourier_height_integral(3.0, 1, 0), Error); }

TEST(Gamma, Examples) {
  EXPECT_NEAR(gamma_function(0.5).real(), std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(gamma_function(2.0).real(), 1.0, 1e-14);
  EXPECT_NEAR(gamma_function(5.0).real(), 24.0, 24e-14);
  EXPECT_THROW(gamma_function(0.0), Error);
  EXPECT_THROW(gamma_function(-3.0), Error);
}

TEST(Gamma, AgreesWithStdOnTheRealLine) {
  for (double s = 0.5; s <= 50.0; s += 0.37) {
    const double ref = std::tgamma(s);
    EXPECT_NEAR(gamma_function(s).real(), ref, 1e-12 * ref) << s;
  }
  EXPECT_NEAR(gamma_function(-0.5).real(), std::tgamma(-0.5), 1e-12 * std::abs(std::tgamma(-0.5)));
}

TEST(Gamma, ComplexModulusIdentity) {
  // |Gamma(1/2 + i t)|^2 = pi / cosh(pi t)
  for (double t : {0.3, 1.0, 2.5, 7.0}) {
    const double g = std::abs(gamma_function(Complex(0.5, t)));
    EXPECT_NEAR(g * g, kPi / std::cosh(kPi * t), 1e-12 * kPi / std::cosh(kPi * t)) << t;
  }
}

}  // namespace
}  // namespace heightzeta::arch
