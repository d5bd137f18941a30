#pragma once

// Assembly of the height zeta function Z(s) = sum_{g in G(Q)} H(g)^{-s} of the
// Heisenberg group in P^3 at the identity:
//   Z0  trivial-character part: zeta(s-3)/zeta(s) * archimedean integral,
//   Z1  abelian characters eta_(a1,a2), truncated at max(|a1|,|a2|) <= a_max,
//   Z2  infinite-dimensional part, only bounded by the majorant series;
// plus the direct point sum and the residue at s = 4.

#include "heightzeta/arch.hpp"
#include "heightzeta/numeric.hpp"
#include "heightzeta/points.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace heightzeta::zeta {

/// pi^2 / zeta(4) = 90 / pi^2, the residue of Z(s) at s = 4.
inline constexpr double kResidue = 90.0 / (kPi * kPi);

/// Re(s) > 4.
Complex z0(EvalPoint s, const arch::QuadratureConfig& cfg = {});

struct Z1Result {
  Complex value;
  double truncation_bound = 0.0;
  std::vector<double> shell_magnitudes;  // index r: sum of |term| with max(|a1|,|a2|) = r
  int terms = 0;
};

/// Tolerances used for the Fourier integrals inside z1.
arch::QuadratureConfig z1_quadrature();

/// One character term: [1/zeta^{S}(s)] * prod_{p in S} (local twisted factor) * F(s; a1, a2).
Complex z1_term(EvalPoint s, std::int64_t a1, std::int64_t a2, const arch::QuadratureConfig& cfg = z1_quadrature());

/// Re(s) > 4, a_max >= 1. The truncation bound is 16x the geometric
/// extrapolation of the last shell plus the accumulated quadrature error.
Z1Result z1(EvalPoint s, int a_max, int threads = 1);

struct DirectSum {
  Complex value;
  double tail_bound = 0.0;
  std::uint64_t points = 0;
};

/// sum over rational points with H(g) <= B of H(g)^{-s}. Requires
/// Re(s) >= 4 + margin. The tail bound is
/// 2.5 * (90/pi^2) * B^{4-sigma} * sigma / (sigma - 4).
DirectSum z_direct(EvalPoint s, const points::HeightBound& bound, int threads = 1, double margin = 1.0);

struct ResidueFit {
  double residue = 0.0;    // 4 C
  double std_error = 0.0;  // standard error of 4 C
  double constant = 0.0;   // C in N(B) ~ C B^4
  std::vector<double> bounds;
  std::vector<std::uint64_t> counts;
};

/// Least-squares fit of counts = C * bounds^4 through the origin.
ResidueFit fit_residue(std::span<const double> bounds, std::span<const std::uint64_t> counts);

/// Counts N(B) for each bound and fits; needs >= 3 strictly increasing bounds.
ResidueFit residue_estimate(std::span<const points::HeightBound> bounds, int threads = 1);

struct MajorantDefaults {
  int m = 4;
  int mprime = 2;
  std::int64_t a_max = 100;
  std::int64_t n_max = 100;
  std::int64_t nK = 1;
};

struct ZetaReport {
  EvalPoint s;
  std::string bound;
  int a_max = 0;
  Complex z0;
  Complex z1;
  double z1_truncation_bound = 0.0;
  Complex z_direct;
  double z_direct_tail_bound = 0.0;
  std::uint64_t points = 0;
  Complex residual;
  double majorant_note = 0.0;
  MajorantDefaults majorant_parameters;
};

/// residual = z_direct + tail_bound / 2 - z0 - z1. Requires Re(s) >= 5.
ZetaReport report(EvalPoint s, const points::HeightBound& bound, int a_max, int threads = 1);

nlohmann::json to_json(const ZetaReport& r);

}  // namespace heightzeta::zeta
