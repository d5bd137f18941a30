#include "heightzeta/arch.hpp"

#include "heightzeta/error.hpp"
#include "heightzeta/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace heightzeta::arch {

namespace {

constexpr int kAveragingDepth = 12;

void require_convergent(EvalPoint s) {
  if (!(s.real() > 3.0)) fail(ErrorKind::DomainError, "archimedean height integral needs Re(s) > 3");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) fail(ErrorKind::DomainError, "non-finite s");
}

// (1 + r^2)^{-s/2}
Complex height_power(double r, EvalPoint s) {
  const double lg = std::log1p(r * r);
  if (s.imag() == 0.0) return {std::exp(-0.5 * s.real() * lg), 0.0};
  return std::exp(-0.5 * s * lg);
}

// int_R^inf r^2 (1 + r^2)^{-s/2} dr = sum_k binom(-s/2, k) R^{3-s-2k} / (s - 3 + 2k)
IntegralResult radial_tail(EvalPoint s, double R) {
  const Complex half = -0.5 * s;
  const double inv_r2 = 1.0 / (R * R);
  Complex binom(1.0, 0.0);
  Complex r_pow = std::exp((3.0 - s) * std::log(R));
  Complex total(0.0, 0.0);
  double bound = 0.0;
  for (int k = 0; k < 400; ++k) {
    const Complex term = binom * r_pow / (s - 3.0 + 2.0 * k);
    total += term;
    const double ratio = std::abs(half - static_cast<double>(k)) / (k + 1.0) * inv_r2;
    if (std::abs(term) <= 1e-17 * std::abs(total) && ratio < 0.5) {
      bound = std::abs(term) * ratio / (1.0 - ratio);
      return {total, bound, k + 1};
    }
    binom *= (half - static_cast<double>(k)) / (k + 1.0);
    r_pow *= inv_r2;
  }
  fail(ErrorKind::ToleranceNotMet, "radial tail series did not converge");
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0)) fail(ErrorKind::DomainError, "tolerances must be positive");
  if (cfg.max_subdivisions < 1) fail(ErrorKind::DomainError, "max_subdivisions must be positive");
  if (!(cfg.cutoff_radius >= 1.0)) fail(ErrorKind::DomainError, "cutoff_radius must be at least 1");
}

IntegralResult radial_height_integral(EvalPoint s, const QuadratureConfig& cfg) {
  require_convergent(s);
  validate(cfg);
  // The binomial tail converges geometrically once R^2 exceeds |s|/2 + 1 comfortably.
  const double R = std::max(cfg.cutoff_radius, 2.0 * std::sqrt(std::abs(s) + 2.0));

  auto integrand = [s](double r) { return r * r * height_power(r, s); };

  std::vector<double> breaks = {0.0, 1.0};
  while (breaks.back() < R) breaks.push_back(std::min(2.0 * breaks.back(), R));

  IntegralResult out{{0.0, 0.0}, 0.0, 0};
  const double panel_tol = cfg.abs_tol / (4.0 * kPi * static_cast<double>(breaks.size()));
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const auto est = quadrature::integrate(integrand, breaks[i], breaks[i + 1], panel_tol, cfg.rel_tol,
                                           cfg.max_subdivisions);
    if (!est.converged) fail(ErrorKind::ToleranceNotMet, "radial quadrature did not converge");
    out.value += est.value;
    out.est_error += est.error;
    out.subdivisions += est.subdivisions;
  }
  const auto tail = radial_tail(s, R);
  out.value = 4.0 * kPi * (out.value + tail.value);
  out.est_error = 4.0 * kPi * (out.est_error + tail.est_error);
  if (out.est_error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value))) {
    fail(ErrorKind::ToleranceNotMet, "radial integral error estimate exceeds tolerance");
  }
  return out;
}

Complex radial_closed_form(EvalPoint s) {
  require_convergent(s);
  return std::pow(kPi, 1.5) * gamma_function(0.5 * (s - 3.0)) / gamma_function(0.5 * s);
}

IntegralResult fourier_height_integral(EvalPoint s, std::int64_t a1, std::int64_t a2, const QuadratureConfig& cfg) {
  return fourier_height_integral_at(s, std::hypot(static_cast<double>(a1), static_cast<double>(a2)), cfg);
}

IntegralResult fourier_height_integral_at(EvalPoint s, double rho, const QuadratureConfig& cfg) {
  require_convergent(s);
  validate(cfg);
  if (!(rho >= 0.0) || !std::isfinite(rho)) fail(ErrorKind::DomainError, "frequency must be finite and non-negative");
  if (rho == 0.0) return radial_height_integral(s, cfg);

  const double omega = 2.0 * kPi * rho;
  auto integrand = [s, omega](double r) { return r * std::sin(omega * r) * height_power(r, s); };

  // sin(2 pi rho r) vanishes at r = k / (2 rho)
  const double h = 0.5 / rho;
  const double scale = 2.0 / rho;
  const double target = cfg.abs_tol / scale;
  const int first_check = std::max(kAveragingDepth + 2, static_cast<int>(std::ceil(2.0 / h)));

  std::vector<Complex> partial;
  Complex running(0.0, 0.0);
  double quad_error = 0.0;
  int subdivisions = 0;
  Complex previous_estimate(0.0, 0.0);
  double previous_delta = 0.0;
  bool have_previous = false;
  std::array<Complex, kAveragingDepth + 1> work{};

  for (int k = 0; subdivisions < cfg.max_subdivisions; ++k) {
    const auto panel = quadrature::integrate(integrand, k * h, (k + 1) * h, 1e-3 * target, 1e-14, 64);
    running += panel.value;
    quad_error += panel.error;
    subdivisions += panel.subdivisions;
    partial.push_back(running);
    if (k + 1 < first_check) continue;

    // Iterated neighbour averaging of the last depth+1 partial sums of the
    // (asymptotically alternating) panel series.
    std::copy(partial.end() - (kAveragingDepth + 1), partial.end(), work.begin());
    for (int level = kAveragingDepth; level > 0; --level) {
      for (int j = 0; j < level; ++j) work[static_cast<std::size_t>(j)] = 0.5 * (work[j] + work[j + 1]);
    }
    const Complex estimate = work[0];
    if (have_previous) {
      const double delta = std::abs(estimate - previous_estimate);
      const double tol = std::max(target, cfg.rel_tol * std::abs(estimate));
      if (delta <= tol && previous_delta <= tol) {
        const double err = scale * (2.0 * std::max(delta, previous_delta) + quad_error);
        return {scale * estimate, err, subdivisions};
      }
      previous_delta = delta;
    }
    previous_estimate = estimate;
    have_previous = true;
  }
  fail(ErrorKind::ToleranceNotMet, "oscillatory quadrature exhausted max_subdivisions");
}

Complex gamma_function(EvalPoint s) {
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> coeffs = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

  if (s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real()) {
    fail(ErrorKind::PoleError, "Gamma has a pole at non-positive integers");
  }
  if (s.real() < 0.5) {
    // reflection
    return kPi / (std::sin(kPi * s) * gamma_function(1.0 - s));
  }
  const Complex z = s - 1.0;
  Complex x = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) x += coeffs[i] / (z + static_cast<double>(i));
  const Complex t = z + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace heightzeta::arch
