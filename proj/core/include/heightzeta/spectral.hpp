#pragma once

// The oscillator model of the infinite-dimensional representations of the
// Heisenberg group: Hermite eigenfunctions of
//   Delta_psi phi = phi'' - (2 pi a x)^2 phi,
// their eigenvalues, multiplicities of K-fixed vectors, and the convergent
// majorant of the non-abelian spectral sum.

#include "heightzeta/numeric.hpp"
#include "heightzeta/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace heightzeta::spectral {

/// psi(z) = exp(2 pi i a z) at level nK.
struct OscillatorCharacter {
  Rational a;
  std::int64_t nK = 1;
};

struct SpectralIndex {
  OscillatorCharacter character;
  int n = 0;
};

/// Exact polynomial in (beta, x) with integer coefficients; beta stands for
/// pi |a| and is substituted numerically only at evaluation.
class BetaXPolynomial {
 public:
  using Monomial = std::pair<int, int>;  // (beta power, x power)

  BetaXPolynomial() = default;
  static BetaXPolynomial constant(const BigInt& c);

  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(int beta_pow, int x_pow) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  BetaXPolynomial derivative_x() const;
  BetaXPolynomial times_beta_x(const BigInt& c) const;  // c * beta * x * P
  BetaXPolynomial operator+(const BetaXPolynomial& other) const;
  BetaXPolynomial operator-(const BetaXPolynomial& other) const;
  BetaXPolynomial reflected() const;  // P(beta, -x)
  friend bool operator==(const BetaXPolynomial&, const BetaXPolynomial&) = default;

  double evaluate(double beta, double x) const;

  void add_term(int beta_pow, int x_pow, const BigInt& c);

 private:
  std::map<Monomial, BigInt> terms_;
};

/// h_n, defined by d^n/dx^n e^{-2 beta x^2} = (-1)^n h_n(x) e^{-2 beta x^2}
/// and built from h_{n+1} = 4 beta x h_n - h_n'. Cached; thread-safe.
const BetaXPolynomial& hermite_polynomial(int n);

/// h_n^psi(x) for psi = psi_a.
double hermite_h(int n, const Rational& a, double x);

/// lambda_n = -2 pi (2n + 1) |a|.
double eigenvalue(const SpectralIndex& idx);
/// lambda_n - 4 pi^2 a^2, the eigenvalue of the full Laplacian on the psi-isotypic part.
double full_laplacian_eigenvalue(const SpectralIndex& idx);

/// phi_n(x) = c_n exp(-pi |a| x^2) h_n(x) with c_n > 0 chosen by quadrature so
/// the L^2 norm is 1. Evaluates to 0 for |x| > 8 / sqrt|a|, where
/// |phi_n| is below 1e-40 for n <= 40.
class EigenFunction {
 public:
  explicit EigenFunction(const SpectralIndex& idx);

  int n() const noexcept { return n_; }
  double beta() const noexcept { return beta_; }
  double normalization() const noexcept { return c_; }
  double clamp_radius() const noexcept { return clamp_; }
  double eigenvalue() const noexcept { return lambda_; }

  double operator()(double x) const;
  /// phi''(x), analytic.
  double second_derivative(double x) const;

 private:
  int n_;
  double beta_;
  double lambda_;
  double clamp_;
  double c_;
  const BetaXPolynomial* h_;
  BetaXPolynomial dh_;
  BetaXPolynomial d2h_;
};

/// phi_n^psi(x) through a guarded per-(n, a) cache.
double eigenfunction(const SpectralIndex& idx, double x);

/// max_x |phi'' - (2 pi a x)^2 phi - lambda phi| / max_x |lambda phi| over the grid.
double oscillator_residual(const SpectralIndex& idx, std::span<const double> x_grid);
/// Same with the default grid of 2001 points on [-5/sqrt|a|, 5/sqrt|a|].
double oscillator_residual(const SpectralIndex& idx);

/// nK^2 |a| when a nK is a nonzero integer, else 0.
BigInt multiplicity_global(const Rational& a, std::int64_t nK);

/// Local dimension of K_p-fixed vectors: |nK^2 a|_p^{-1} at primes dividing
/// nK * a or nK, 1 elsewhere. Throws HypothesisViolated unless p^np * nK is a
/// p-adic integer.
BigInt multiplicity_local(std::int64_t p, const Rational& a, std::int64_t np, std::int64_t nK);

struct MajorantResult {
  double finite_sum = 0.0;
  double tail_bound = 0.0;
  double total() const { return finite_sum + tail_bound; }
};

/// sum over a in (1/nK)Z, 0 < |a| <= a_max, of multiplicity_global(a, nK) *
/// sum_{n <= n_max} |full_laplacian_eigenvalue(n, a)|^{-(m - mprime)}, plus
/// integral-comparison bounds for the omitted n and a. Requires m - mprime >= 2.
MajorantResult z2_majorant(int m, int mprime, std::int64_t a_max, std::int64_t n_max, std::int64_t nK = 1);

}  // namespace heightzeta::spectral
