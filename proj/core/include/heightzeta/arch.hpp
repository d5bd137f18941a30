#pragma once

// Archimedean height integrals for the standard metric (1 + x^2 + y^2 + z^2)^{s/2}
// on the real points of the Heisenberg group.

#include "heightzeta/numeric.hpp"

#include <cstdint>

namespace heightzeta::arch {

struct QuadratureConfig {
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  int max_subdivisions = 200000;
  // Radius beyond which the radial integrand is integrated analytically.
  double cutoff_radius = 16.0;
};

void validate(const QuadratureConfig& cfg);

struct IntegralResult {
  Complex value;
  double est_error = 0.0;
  int subdivisions = 0;
};

/// Integral of (1 + |v|^2)^{-s/2} over R^3, as 4 pi * int_0^inf r^2 (1+r^2)^{-s/2} dr.
/// Adaptive quadrature on [0, R] plus the tail beyond R from its convergent
/// binomial expansion. Re(s) > 3.
IntegralResult radial_height_integral(EvalPoint s, const QuadratureConfig& cfg = {});

/// pi^{3/2} Gamma((s-3)/2) / Gamma(s/2); used only as a cross-check.
Complex radial_closed_form(EvalPoint s);

/// Fourier transform of (1 + |v|^2)^{-s/2} on R^3 at frequency (a1, a2, 0):
/// int (1+x^2+y^2+z^2)^{-s/2} e^{-2 pi i (a1 x + a2 y)} dx dy dz.
/// For rho = |(a1,a2)| > 0 this is (2/rho) int_0^inf r sin(2 pi rho r) (1+r^2)^{-s/2} dr,
/// integrated between consecutive zeros of the sine and summed with
/// iterated-averaging acceleration. Re(s) > 3.
IntegralResult fourier_height_integral(EvalPoint s, std::int64_t a1, std::int64_t a2,
                                       const QuadratureConfig& cfg = {});
IntegralResult fourier_height_integral_at(EvalPoint s, double rho, const QuadratureConfig& cfg = {});

/// Gamma function (Lanczos, g = 7); relative error ~1e-15 on Re(s) in [0.5, 50].
/// Throws PoleError at non-positive integers.
Complex gamma_function(EvalPoint s);

}  // namespace heightzeta::arch
