#include "heightzeta/error.hpp"
#include "heightzeta/local.hpp"
#include "heightzeta_oracles/oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace heightzeta::local {
namespace {

using testing::Gen;

constexpr std::int64_t kPrimes[] = {2, 3, 5, 7, 11};
const Complex kPoints[] = {Complex(4.5), Complex(5.0), Complex(6.0), Complex(5.0, 0.7)};

Complex closed(std::int64_t p, Complex s) {
  const double lp = std::log(static_cast<double>(p));
  return (1.0 - std::exp(-s * lp)) / (1.0 - std::exp((3.0 - s) * lp));
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

double good(std::int64_t p, double s) { return 1.0 - std::pow(static_cast<double>(p), -s); }

template <class Fn>
void expect_kind(ErrorKind kind, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(EulerFactor, StrataExamples) {
  const auto p3 = geometry::p3_descriptor();
  EXPECT_NEAR(euler_factor_strata(p3, 5.0, 2).real(), 31.0 / 24.0, 1e-15);
  EXPECT_NEAR(euler_factor_strata(p3, 200.0, 5).real(), 1.0, 1e-15);
  EXPECT_LT(rel(euler_factor_strata(p3, 4.5, 3), closed(3, 4.5)), 1e-12);
  expect_kind(ErrorKind::DomainError, [&] { euler_factor_strata(p3, 3.0, 2); });
  expect_kind(ErrorKind::PrimeError, [&] { euler_factor_strata(p3, 5.0, 9); });
  SVector wrong{{"E", Complex(5.0)}};
  expect_kind(ErrorKind::UnknownComponent, [&] { euler_factor_strata(p3, wrong, 2); });
}

TEST(EulerFactor, ClosedFormExamples) {
  EXPECT_NEAR(local_height_integral_p3(2, 5.0).real(), 31.0 / 24.0, 1e-15);
  EXPECT_NEAR(local_height_integral_p3(7, 300.0).real(), 1.0, 1e-15);
  EXPECT_NEAR(local_height_integral_p3(2, 4.0).real(), 15.0 / 8.0, 1e-15);
  expect_kind(ErrorKind::DomainError, [] { local_height_integral_p3(2, 3.0); });
}

TEST(EulerFactor, ShellOracleExamples) {
  EXPECT_NEAR(shell_oracle_untwisted(2, 5.0, 3).real(), 31.0 / 24.0, 1e-14);
  EXPECT_NEAR(shell_oracle_untwisted(3, 6.0, 1).real(), local_height_integral_p3(3, 6.0).real(), 1e-14);
  EXPECT_NEAR(shell_oracle_untwisted(5, 4.5, 0).real(), local_height_integral_p3(5, 4.5).real(), 1e-14);
}

TEST(LocalProperty, OracleEquivalence) {
  const auto p3 = geometry::p3_descriptor();
  for (auto p : kPrimes) {
    for (auto s : kPoints) {
      const Complex c = closed(p, s);
      EXPECT_LT(rel(local_height_integral_p3(p, s), c), 1e-12);
      EXPECT_LT(rel(euler_factor_strata(p3, s, p), c), 1e-12);
      for (int K = 1; K <= 6; ++K) EXPECT_LT(rel(shell_oracle_untwisted(p, s, K), c), 1e-12) << p << " " << K;
    }
  }
}

TEST(LocalProperty, StrataCountSum) {
  const auto p3 = geometry::p3_descriptor();
  for (auto p : kPrimes) {
    std::int64_t total = 0;
    for (const auto& stratum : p3.strata) total += geometry::evaluate_poly(stratum.count_poly, p);
    EXPECT_EQ(total, p * p * p + p * p + p + 1);
  }
}

TEST(TwistedEta, Examples) {
  const auto v = twisted_local_factor_eta(3, {1, 0}, 5.0);
  EXPECT_NEAR(v.value.real(), 242.0 / 243.0, 1e-15);
  EXPECT_NEAR(twisted_local_factor_eta(5, {2, 3}, 6.0).value.real(), good(5, 6.0), 1e-15);
  const auto base = twisted_local_factor_eta(2, {2, 0}, 5.0);
  const auto more = twisted_local_factor_eta(2, {2, 0}, 5.0, base.shells + 1);
  EXPECT_NEAR(base.value.real(), more.value.real(), 1e-14 * std::abs(base.value));
}

TEST(TwistedEta, MatchesBruteForceOracle) {
  for (auto [p, a1, a2] : {std::tuple{2, 2, 0}, std::tuple{2, 4, 6}, std::tuple{3, 9, 1}, std::tuple{5, 0, 25},
                           std::tuple{2, 1, 8}, std::tuple{3, 18, 27}}) {
    for (auto s : kPoints) {
      const auto v = twisted_local_factor_eta(p, {a1, a2}, s).value;
      const auto o = heightzeta_oracles::twisted_eta_bruteforce(p, a1, a2, s);
      EXPECT_LT(std::abs(v - o), 1e-13) << p << " " << a1 << " " << a2 << " " << s;
    }
  }
}

TEST(TwistedEta, Errors) {
  expect_kind(ErrorKind::TrivialCharacter, [] { twisted_local_factor_eta(2, {0, 0}, 5.0); });
  expect_kind(ErrorKind::DomainError, [] { twisted_local_factor_eta(2, {1, 0}, 3.0); });
  expect_kind(ErrorKind::DomainError, [] { twisted_local_factor_eta(2, {4, 0}, 5.0, 1); });
  expect_kind(ErrorKind::PrimeError, [] { twisted_local_factor_eta(1, {4, 0}, 5.0); });
}

TEST(TwistedPsi, Examples) {
  EXPECT_NEAR(twisted_local_factor_psi(3, make_psi_character(Rational(1), 1), 5.0).value.real(), 242.0 / 243.0, 1e-15);
  EXPECT_NEAR(twisted_local_factor_psi(7, make_psi_character(Rational(2), 1), 4.0).value.real(), good(7, 4.0), 1e-15);
  const auto chi = make_psi_character(Rational(2), 1);
  const auto base = twisted_local_factor_psi(2, chi, 5.0);
  const auto doubled = twisted_local_factor_psi(2, chi, 5.0, 2 * base.shells);
  EXPECT_NEAR(base.value.real(), doubled.value.real(), 1e-14 * std::abs(base.value));
}

TEST(TwistedPsi, MatchesBruteForceOracle) {
  for (auto [p, num, den] : {std::tuple{2, 2, 1}, std::tuple{2, 1, 2}, std::tuple{3, 9, 2}, std::tuple{3, 5, 3},
                             std::tuple{5, 50, 1}, std::tuple{7, 1, 1}}) {
    const auto chi = make_psi_character(Rational(num, den), den);
    for (auto s : {Complex(2.5), Complex(4.0), Complex(5.0, -1.3)}) {
      const auto v = twisted_local_factor_psi(p, chi, s).value;
      const auto o = heightzeta_oracles::twisted_psi_bruteforce(p, num, den, s);
      EXPECT_LT(std::abs(v - o), 1e-13) << p << " " << num << "/" << den << " " << s;
    }
  }
}

TEST(TwistedPsi, Errors) {
  expect_kind(ErrorKind::TrivialCharacter, [] { make_psi_character(Rational(0), 1); });
  expect_kind(ErrorKind::DomainError, [] { make_psi_character(Rational(1, 3), 2); });
  expect_kind(ErrorKind::DomainError, [] { twisted_local_factor_psi(3, make_psi_character(Rational(1), 1), 2.0); });
}

TEST(LocalProperty, GoodPrimeCollapse) {
  Gen gen;
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t p = primes[gen.integer(0, 8)];
    std::int64_t a1 = gen.integer(-60, 60);
    std::int64_t a2 = gen.integer(-60, 60);
    if ((a1 != 0 && a1 % p == 0) || (a2 != 0 && a2 % p == 0) || (a1 == 0 && a2 == 0)) continue;
    const Complex s(gen.real(3.2, 9.0), trial % 2 == 0 ? 0.0 : gen.real(-3.0, 3.0));
    const Complex expected = 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    EXPECT_LT(std::abs(twisted_local_factor_eta(p, {a1, a2}, s).value - expected), 1e-13);

    // psi: p must not divide a nK, nor the level itself
    const std::int64_t nk = gen.integer(1, 6);
    if (nk % p == 0) continue;
    const std::int64_t num = gen.integer(1, 80) * (trial % 3 == 0 ? -1 : 1);
    if (num % p == 0) continue;
    const auto chi = make_psi_character(Rational(num, nk), nk);
    if (*valuation(chi.a, p) != 0) continue;
    EXPECT_LT(std::abs(twisted_local_factor_psi(p, chi, s).value - expected), 1e-13);
  }
}

TEST(LocalProperty, TriangleBound) {
  Gen gen;
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t p = kPrimes[gen.integer(0, 4)];
    const EtaCharacter eta{gen.integer(-200, 200), gen.integer(-200, 200)};
    if (eta.trivial()) continue;
    const double sigma = gen.real(3.05, 10.0);
    const auto v = twisted_local_factor_eta(p, eta, sigma);
    EXPECT_LE(std::abs(v.value), shell_oracle_untwisted(p, sigma, v.shells).real() * (1.0 + 1e-14));
  }
}

TEST(LocalProperty, ShellStability) {
  Gen gen;
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t p = kPrimes[gen.integer(0, 4)];
    const EtaCharacter eta{gen.integer(-500, 500), gen.integer(-500, 500)};
    if (eta.trivial()) continue;
    const Complex s(gen.real(3.1, 8.0), gen.real(-2.0, 2.0));
    const auto v = twisted_local_factor_eta(p, eta, s);
    const auto w = twisted_local_factor_eta(p, eta, s, v.shells + 1);
    EXPECT_LE(std::abs(v.value - w.value), 1e-14 * std::max(1.0, std::abs(v.value)));

    const auto chi = make_psi_character(Rational(gen.integer(1, 500), 4), 4);
    const auto x = twisted_local_factor_psi(p, chi, s);
    const auto y = twisted_local_factor_psi(p, chi, s, x.shells + 1);
    EXPECT_LE(std::abs(x.value - y.value), 1e-14 * std::max(1.0, std::abs(x.value)));
  }
}

TEST(ZetaHelpers, ZetaP) {
  EXPECT_NEAR(zeta_p(2, 2.0).real(), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(zeta_p(3, 1.0).real(), 1.5, 1e-15);
  EXPECT_NEAR(zeta_p(2, Complex(4.0, 0.0)).real(), 16.0 / 15.0, 1e-15);
  expect_kind(ErrorKind::DomainError, [] { zeta_p(2, 0.0); });
}

TEST(ZetaHelpers, RiemannZetaEvenIntegers) {
  const double pi = 3.14159265358979323846;
  EXPECT_NEAR(riemann_zeta(4.0).real(), std::pow(pi, 4) / 90.0, 1e-12 * 1.0823);
  EXPECT_NEAR(riemann_zeta(2.0).real(), pi * pi / 6.0, 1e-12 * 1.645);
  EXPECT_NEAR(riemann_zeta(6.0).real(), std::pow(pi, 6) / 945.0, 1e-12 * 1.0173);
  expect_kind(ErrorKind::PoleError, [] { riemann_zeta(1.0); });
}

TEST(ZetaHelpers, RiemannZetaNearThePole) {
  // Stieltjes expansion 1/e + gamma_0 - gamma_1 e + gamma_2 e^2 / 2 at e = 1e-3
  const double e = 1e-3;
  const double expected = 1.0 / e + 0.5772156649015329 + 0.0728158454836767 * e - 0.0096903631928723 * e * e / 2.0;
  EXPECT_NEAR(riemann_zeta(1.0 + e).real(), expected, 1e-12 * expected);
}

TEST(ZetaHelpers, RiemannZetaComplexAgainstDirectSum) {
  for (Complex s : {Complex(5.0, 0.7), Complex(4.0, -3.0), Complex(3.5, 10.0)}) {
    const int N = 20000;
    Complex sum = 0.0;
    for (int n = N; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double lN = std::log(static_cast<double>(N));
    // Euler-Maclaurin remainder of the truncated series to O(N^{-s-3})
    sum += std::exp((1.0 - s) * lN) / (s - 1.0) - 0.5 * std::exp(-s * lN) + s / 12.0 * std::exp((-s - 1.0) * lN);
    EXPECT_LT(std::abs(riemann_zeta(s) - sum) / std::abs(sum), 1e-12) << s;
  }
}

TEST(ZetaHelpers, PartialZeta) {
  const double pi = 3.14159265358979323846;
  const double z4 = std::pow(pi, 4) / 90.0;
  EXPECT_NEAR(partial_zeta({}, 4.0).real(), z4, 1e-12);
  EXPECT_NEAR(partial_zeta({2}, 2.0).real(), pi * pi / 6.0 * 0.75, 1e-12);
  EXPECT_NEAR(partial_zeta({2, 3}, 4.0).real(), z4 * 15.0 / 16.0 * 80.0 / 81.0, 1e-12);
}

TEST(Characters, BadPrimes) {
  EXPECT_EQ((EtaCharacter{12, -45}.bad_primes()), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_TRUE((EtaCharacter{1, 0}.bad_primes()).empty());
  EXPECT_EQ(make_psi_character(Rational(3, 2), 4).bad_primes(), (std::vector<std::int64_t>{2, 3}));
}

}  // namespace
}  // namespace heightzeta::local
