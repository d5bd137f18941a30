#pragma once

// Non-archimedean local height integrals.
//
// Every integral here is a rational function of x = p^{-s} with integer
// coefficients. When s is a non-negative integer the functions evaluate that
// rational function exactly and round once; otherwise x = exp(-s log p).

#include "heightzeta/geometry.hpp"
#include "heightzeta/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace heightzeta::local {

/// The vector parameter s = (s_alpha), keyed by component name.
using SVector = std::map<std::string, EvalPoint>;

SVector uniform_svector(const geometry::GeometryDescriptor& geom, EvalPoint s);

/// eta_{(a1,a2)}: g(x,z,y) -> psi_1(a1 x + a2 y).
struct EtaCharacter {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  bool trivial() const noexcept { return a1 == 0 && a2 == 0; }
  /// Primes dividing a nonzero coefficient.
  std::vector<std::int64_t> bad_primes() const;
};

/// psi_a: z -> psi_1(a z), with a in (1/nK) Z.
struct PsiCharacter {
  Rational a;
  std::int64_t nK = 1;

  /// Primes dividing the integer nK * a.
  std::vector<std::int64_t> bad_primes() const;
};

/// Checks a != 0, nK >= 1 and nK * a integral.
PsiCharacter make_psi_character(const Rational& a, std::int64_t nK);

struct ShellSum {
  Complex value;
  int shells = 0;  // K: valuation shells 1..K summed per coordinate
  bool exact = false;  // evaluated in exact rational arithmetic
};

/// p^{-dim} * sum_A #D^0_A(F_p) * prod_{alpha in A} (p-1)/(p^{s_alpha - kappa_alpha + 1} - 1).
/// Requires Re(s_alpha) > kappa_alpha - 1 for every component.
Complex euler_factor_strata(const geometry::GeometryDescriptor& geom, const SVector& s, std::int64_t p);
Complex euler_factor_strata(const geometry::GeometryDescriptor& geom, EvalPoint s, std::int64_t p);

/// Closed form of the P^3 local height integral, (1 - p^{-s}) / (1 - p^{3-s}); Re(s) > 3.
Complex local_height_integral_p3(std::int64_t p, EvalPoint s);

/// Valuation-shell evaluation of the same integral: shells 1..K summed
/// explicitly, the rest as a closed geometric tail.
Complex shell_oracle_untwisted(std::int64_t p, EvalPoint s, int K);

/// Integral over G(Q_p) of max(1,|x|,|y|,|z|)^{-s} conj(psi_1(a1 x + a2 y)).
/// Finite sum over valuation profiles; `shells` overrides K (must be >= the
/// minimal max(v_p(a_i)) + 1). Re(s) > 3.
ShellSum twisted_local_factor_eta(std::int64_t p, const EtaCharacter& eta, EvalPoint s,
                                  std::optional<int> shells = std::nullopt);

/// Integral over U(Q_p) = {(0,z,y)} of max(1,|y|,|z|)^{-s} conj(psi_a(z)). Re(s) > 2.
ShellSum twisted_local_factor_psi(std::int64_t p, const PsiCharacter& psi, EvalPoint s,
                                  std::optional<int> shells = std::nullopt);

/// (1 - p^{-s})^{-1}.
Complex zeta_p(std::int64_t p, EvalPoint s);

/// Riemann zeta by Euler-Maclaurin summation (50 direct terms, Bernoulli
/// corrections through B_12). Relative error below 1e-12 for Re(s) >= 1.001
/// and moderate |Im(s)|. Throws PoleError at s = 1.
Complex riemann_zeta(EvalPoint s);

/// zeta(s) * prod_{p in S} (1 - p^{-s}); Re(s) > 1.
Complex partial_zeta(const std::set<std::int64_t>& primes, EvalPoint s);

}  // namespace heightzeta::local
