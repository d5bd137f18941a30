#include "heightzeta/zeta.hpp"

#include "heightzeta/error.hpp"
#include "heightzeta/local.hpp"
#include "heightzeta/spectral.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <map>
#include <set>

namespace heightzeta::zeta {

namespace {

void require_half_plane(EvalPoint s, double edge) {
  if (!(s.real() > edge)) fail(ErrorKind::DomainError, "need Re(s) > " + std::to_string(edge));
}

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// 1/zeta^S(s) * prod_{p in S} local twisted factor, with zeta(s) supplied.
Complex finite_part(EvalPoint s, const local::EtaCharacter& eta, Complex zeta_s) {
  Complex value = 1.0 / zeta_s;
  for (auto p : eta.bad_primes()) value *= local::zeta_p(p, s) * local::twisted_local_factor_eta(p, eta, s).value;
  return value;
}

}  // namespace

Complex z0(EvalPoint s, const arch::QuadratureConfig& cfg) {
  require_half_plane(s, 4.0);
  return local::riemann_zeta(s - 3.0) / local::riemann_zeta(s) * arch::radial_height_integral(s, cfg).value;
}

arch::QuadratureConfig z1_quadrature() {
  arch::QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-12;
  return cfg;
}

Complex z1_term(EvalPoint s, std::int64_t a1, std::int64_t a2, const arch::QuadratureConfig& cfg) {
  require_half_plane(s, 4.0);
  const local::EtaCharacter eta{a1, a2};
  if (eta.trivial()) fail(ErrorKind::TrivialCharacter, "z1 excludes the trivial character");
  return finite_part(s, eta, local::riemann_zeta(s)) * arch::fourier_height_integral(s, a1, a2, cfg).value;
}

Z1Result z1(EvalPoint s, int a_max, int threads) {
  require_half_plane(s, 4.0);
  if (a_max < 1) fail(ErrorKind::DomainError, "a_max must be at least 1");
  const auto cfg = z1_quadrature();

  // The Fourier integral depends on a1^2 + a2^2 only.
  std::vector<std::int64_t> radii_sq;
  {
    std::set<std::int64_t> distinct;
    for (std::int64_t a1 = 0; a1 <= a_max; ++a1) {
      for (std::int64_t a2 = 0; a2 <= a1; ++a2) {
        if (a1 + a2 > 0) distinct.insert(a1 * a1 + a2 * a2);
      }
    }
    radii_sq.assign(distinct.begin(), distinct.end());
  }
  std::vector<arch::IntegralResult> fourier(radii_sq.size());
  run_partitioned(threads, [&](int stream, int streams) {
    for (std::size_t i = static_cast<std::size_t>(stream); i < radii_sq.size(); i += static_cast<std::size_t>(streams)) {
      fourier[i] = arch::fourier_height_integral_at(s, std::sqrt(static_cast<double>(radii_sq[i])), cfg);
    }
  });
  std::map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < radii_sq.size(); ++i) index[radii_sq[i]] = i;

  const Complex zeta_s = local::riemann_zeta(s);
  Z1Result out;
  out.value = Complex(0.0, 0.0);
  out.shell_magnitudes.assign(static_cast<std::size_t>(a_max) + 1, 0.0);
  double quadrature_error = 0.0;
  for (std::int64_t a1 = -a_max; a1 <= a_max; ++a1) {
    for (std::int64_t a2 = -a_max; a2 <= a_max; ++a2) {
      if (a1 == 0 && a2 == 0) continue;
      const auto& f = fourier[index.at(a1 * a1 + a2 * a2)];
      const Complex local_part = finite_part(s, {a1, a2}, zeta_s);
      const Complex term = local_part * f.value;
      out.value += term;
      out.shell_magnitudes[static_cast<std::size_t>(std::max(std::abs(a1), std::abs(a2)))] += std::abs(term);
      quadrature_error += std::abs(local_part) * f.est_error;
      ++out.terms;
    }
  }

  const double last = out.shell_magnitudes.back();
  double ratio = 0.5;
  if (a_max >= 2 && out.shell_magnitudes[static_cast<std::size_t>(a_max) - 1] > 0.0) {
    ratio = std::min(0.5, last / out.shell_magnitudes[static_cast<std::size_t>(a_max) - 1]);
  }
  out.truncation_bound = 16.0 * last * ratio / (1.0 - ratio) + quadrature_error;
  return out;
}

DirectSum z_direct(EvalPoint s, const points::HeightBound& bound, int threads, double margin) {
  if (!(margin > 0.0)) fail(ErrorKind::DomainError, "margin must be positive");
  if (!(s.real() >= 4.0 + margin)) {
    fail(ErrorKind::DomainError, "direct sum needs Re(s) >= " + std::to_string(4.0 + margin));
  }
  const auto counts = points::primitive_norm_counts(bound, threads);
  DirectSum out;
  out.value = Complex(0.0, 0.0);
  const Complex half = 0.5 * s;
  for (std::size_t n = 1; n < counts.size(); ++n) {
    if (counts[n] == 0) continue;
    const double log_n = std::log(static_cast<double>(n));
    const Complex term = s.imag() == 0.0 ? Complex(std::exp(-half.real() * log_n), 0.0) : std::exp(-half * log_n);
    out.value += static_cast<double>(counts[n]) * term;
    out.points += counts[n];
  }
  const double sigma = s.real();
  out.tail_bound = 2.5 * kResidue * std::pow(bound.to_double(), 4.0 - sigma) * sigma / (sigma - 4.0);
  return out;
}

ResidueFit fit_residue(std::span<const double> bounds, std::span<const std::uint64_t> counts) {
  if (bounds.size() != counts.size()) fail(ErrorKind::InsufficientData, "bounds and counts differ in length");
  if (bounds.size() < 3) fail(ErrorKind::InsufficientData, "need at least three bounds");
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    if (!(bounds[i] > bounds[i - 1])) fail(ErrorKind::InsufficientData, "bounds must be strictly increasing");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const double b4 = std::pow(bounds[i], 4);
    num += static_cast<double>(counts[i]) * b4;
    den += b4 * b4;
  }
  ResidueFit fit;
  fit.constant = num / den;
  double rss = 0.0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const double r = static_cast<double>(counts[i]) - fit.constant * std::pow(bounds[i], 4);
    rss += r * r;
  }
  fit.residue = 4.0 * fit.constant;
  fit.std_error = 4.0 * std::sqrt(rss / static_cast<double>(bounds.size() - 1) / den);
  fit.bounds.assign(bounds.begin(), bounds.end());
  fit.counts.assign(counts.begin(), counts.end());
  return fit;
}

ResidueFit residue_estimate(std::span<const points::HeightBound> bounds, int threads) {
  if (bounds.size() < 3) fail(ErrorKind::InsufficientData, "need at least three bounds");
  std::vector<double> b;
  std::vector<std::uint64_t> n;
  for (const auto& bound : bounds) {
    b.push_back(bound.to_double());
    n.push_back(points::count_fast(bound, threads));
  }
  return fit_residue(b, n);
}

ZetaReport report(EvalPoint s, const points::HeightBound& bound, int a_max, int threads) {
  if (!(s.real() >= 5.0)) fail(ErrorKind::DomainError, "report needs Re(s) >= 5");
  ZetaReport r;
  r.s = s;
  r.bound = bound.str();
  r.a_max = a_max;
  r.z0 = z0(s);
  const auto first = z1(s, a_max, threads);
  r.z1 = first.value;
  r.z1_truncation_bound = first.truncation_bound;
  const auto direct = z_direct(s, bound, threads);
  r.z_direct = direct.value;
  r.z_direct_tail_bound = direct.tail_bound;
  r.points = direct.points;
  r.residual = r.z_direct + 0.5 * r.z_direct_tail_bound - r.z0 - r.z1;
  const auto& mp = r.majorant_parameters;
  r.majorant_note = spectral::z2_majorant(mp.m, mp.mprime, mp.a_max, mp.n_max, mp.nK).total();
  return r;
}

nlohmann::json to_json(const ZetaReport& r) {
  const auto& mp = r.majorant_parameters;
  return {
      {"s", complex_json(r.s)},
      {"bound", r.bound},
      {"a_max", r.a_max},
      {"z0", complex_json(r.z0)},
      {"z1", {{"value", complex_json(r.z1)}, {"truncation_bound", r.z1_truncation_bound}}},
      {"z_direct", {{"value", complex_json(r.z_direct)}, {"tail_bound", r.z_direct_tail_bound}, {"points", r.points}}},
      {"residual", complex_json(r.residual)},
      {"residual_over_z0", std::abs(r.residual) / std::abs(r.z0)},
      {"majorant_note",
       {{"value", r.majorant_note},
        {"m", mp.m},
        {"mprime", mp.mprime},
        {"a_max", mp.a_max},
        {"n_max", mp.n_max},
        {"nK", mp.nK}}},
      {"exploratory", true},
      {"note",
       "residual estimates the non-abelian part Z2, which is not evaluated; "
       "the 5% consistency target is an engineering tolerance"},
  };
}

}  // namespace heightzeta::zeta
