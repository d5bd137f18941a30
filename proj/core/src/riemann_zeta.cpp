#include "heightzeta/error.hpp"
#include "heightzeta/local.hpp"

#include <array>
#include <cmath>

namespace heightzeta::local {

namespace {

constexpr int kDirectTerms = 50;

// B_{2k} / (2k)! for k = 1..6
constexpr std::array<double, 6> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
};

Complex power_neg(double n, EvalPoint s) {
  if (s.imag() == 0.0) return {std::pow(n, -s.real()), 0.0};
  return std::exp(-s * std::log(n));
}

}  // namespace

Complex riemann_zeta(EvalPoint s) {
  if (s == Complex(1.0, 0.0)) fail(ErrorKind::PoleError, "zeta has a pole at s = 1");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) fail(ErrorKind::DomainError, "non-finite argument");

  constexpr double N = kDirectTerms;
  Complex sum(0.0, 0.0);
  for (int n = kDirectTerms - 1; n >= 1; --n) sum += power_neg(n, s);

  const Complex n_pow = power_neg(N, s);  // N^{-s}
  sum += n_pow * N / (s - 1.0);
  sum += 0.5 * n_pow;

  // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  Complex rising = s;
  Complex n_term = n_pow / N;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    sum += kBernoulliOverFactorial[k] * rising * n_term;
    rising *= (s + static_cast<double>(2 * k + 1)) * (s + static_cast<double>(2 * k + 2));
    n_term /= N * N;
  }
  return sum;
}

}  // namespace heightzeta::local
