#pragma once

// Reference computations written from first principles with the standard
// library only. They share no code with heightzeta::core.

#include <complex>
#include <cstdint>
#include <vector>

namespace heightzeta_oracles {

using Complex = std::complex<double>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// int_{R^3} (1+|v|^2)^{-s/2} cos(2 pi rho v_1) dv in Cartesian form: the
/// (v_2, v_3) plane integrated exactly, v_1 on Gauss-Legendre panels out to
/// `extent` (keep rho * extent an integer). Real s > 3.
double fourier_3d(double s, double rho, double extent = 400.0);

/// Integral over Q_p^3 of max(1,|x|,|y|,|z|)^{-s} conj(psi(a1 x + a2 y)),
/// summing every valuation profile explicitly (z shells out to `z_shells`)
/// with the per-shell character integrals.
Complex twisted_eta_bruteforce(std::int64_t p, std::int64_t a1, std::int64_t a2, Complex s, int z_shells = 120);

/// Integral over Q_p^2 of max(1,|y|,|z|)^{-s} conj(psi(a z)) where a = num/den.
Complex twisted_psi_bruteforce(std::int64_t p, std::int64_t num, std::int64_t den, Complex s, int y_shells = 120);

/// Coefficient of beta^{n-m} x^{n-2m} in h_n, from the explicit formula
/// n! (-1)^m 2^{2n-3m} / (m! (n-2m)!). Exact for n <= 20.
long double hermite_coefficient(int n, int m);

/// #primitive (d, a1, a2, a3) with d >= 1 and d^2 + |a|^2 <= L, by a plain
/// quadruple loop with gcd.
std::uint64_t primitive_count(std::uint64_t L);

}  // namespace heightzeta_oracles
