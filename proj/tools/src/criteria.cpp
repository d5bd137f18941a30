#include "heightzeta_cli/criteria.hpp"

#include "heightzeta/arch.hpp"
#include "heightzeta/error.hpp"
#include "heightzeta/geometry.hpp"
#include "heightzeta/local.hpp"
#include "heightzeta/points.hpp"
#include "heightzeta/spectral.hpp"
#include "heightzeta/zeta.hpp"
#include "heightzeta_oracles/oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace heightzeta::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

constexpr double kCountConstant = 2.2797285;
constexpr double kResidueValue = 9.1189103;

void check(CriterionReport& r, std::string label, bool pass, std::string measured) {
  r.checks.push_back({std::move(label), pass, std::move(measured)});
}

void within(CriterionReport& r, std::string label, double measured, double expected, double tol, bool relative) {
  const double dev = relative ? std::abs(measured - expected) / std::abs(expected) : std::abs(measured - expected);
  check(r, std::move(label), dev <= tol, num(measured) + " (dev " + num(dev) + " vs " + num(tol) + ")");
}

points::HeightBound bound_of(std::int64_t b) { return points::HeightBound(Rational(b)); }

void invariants_criterion(CriterionReport& r, const RunConfig& cfg) {
  const auto path = cfg.data_dir / "p3.json";
  const auto geom = std::filesystem::exists(path) ? geometry::load_descriptor(path) : geometry::p3_descriptor();
  const auto h = geometry::invariants(geom, geometry::bundle_from_list(geom, {Rational(1)}));
  check(r, "hyperplane (a,b,c)=(4,1,1)", h.a == 4 && h.b == 1 && h.c == 1,
        "(" + to_string(h.a) + "," + std::to_string(h.b) + "," + to_string(h.c) + ")");
  const auto k = geometry::invariants(geom, geometry::anticanonical(geom));
  check(r, "anticanonical (a,b,c)=(1,1,1/4)", k.a == 1 && k.b == 1 && k.c == Rational(1, 4),
        "(" + to_string(k.a) + "," + std::to_string(k.b) + "," + to_string(k.c) + ")");
}

void local_criterion(CriterionReport& r, const RunConfig&) {
  const auto geom = geometry::p3_descriptor();
  double worst = 0.0;
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    for (Complex s : {Complex(4.5), Complex(5.0), Complex(6.0), Complex(5.0, 0.7)}) {
      const double lp = std::log(static_cast<double>(p));
      const Complex closed = (1.0 - std::exp(-s * lp)) / (1.0 - std::exp((3.0 - s) * lp));
      for (const Complex v : {local::euler_factor_strata(geom, s, p), local::shell_oracle_untwisted(p, s, 3),
                              local::local_height_integral_p3(p, s)}) {
        worst = std::max(worst, std::abs(v - closed) / std::abs(closed));
      }
    }
  }
  check(r, "strata = shells = closed form", worst <= 1e-12, "max rel dev " + num(worst));
}

void twisted_criterion(CriterionReport& r, const RunConfig&) {
  double worst = 0.0;
  for (std::int64_t p : {3, 5, 7}) {
    const double expected = 1.0 - std::pow(static_cast<double>(p), -5.0);
    worst = std::max(worst, std::abs(local::twisted_local_factor_eta(p, {1, 0}, 5.0).value - expected));
    worst = std::max(worst, std::abs(local::twisted_local_factor_psi(p, local::make_psi_character(Rational(1), 1), 5.0).value -
                                     expected));
  }
  check(r, "good primes give 1-p^-5", worst <= 1e-12, "max dev " + num(worst));

  const auto eta = local::twisted_local_factor_eta(2, {2, 0}, 5.0);
  const auto eta2 = local::twisted_local_factor_eta(2, {2, 0}, 5.0, 2 * eta.shells);
  const auto psi_char = local::make_psi_character(Rational(2), 1);
  const auto psi = local::twisted_local_factor_psi(2, psi_char, 5.0);
  const auto psi2 = local::twisted_local_factor_psi(2, psi_char, 5.0, 2 * psi.shells);
  const double shift = std::max(std::abs(eta.value - eta2.value), std::abs(psi.value - psi2.value));
  check(r, "K-doubling at p=2, a=2", shift < 1e-12,
        "eta " + num(eta.value.real()) + ", psi " + num(psi.value.real()) + ", shift " + num(shift));
}

void arch_criterion(CriterionReport& r, const RunConfig& cfg) {
  within(r, "radial(4) = pi^2", arch::radial_height_integral(4.0, cfg.tolerances).value.real(), kPi * kPi, 1e-6, false);
  for (double s : {4.0, 5.0, 6.0}) {
    const double closed = std::pow(kPi, 1.5) * std::tgamma((s - 3.0) / 2.0) / std::tgamma(s / 2.0);
    within(r, "radial(" + num(s) + ") vs Gamma form", arch::radial_height_integral(s, cfg.tolerances).value.real(), closed,
           1e-6, true);
  }
  const double f1 = arch::fourier_height_integral(6.0, 1, 0, cfg.tolerances).value.real();
  within(r, "F(1,0) at s=6 vs 3D quadrature", f1, heightzeta_oracles::fourier_3d(6.0, 1.0), 1e-5, false);
  const double f4 = arch::fourier_height_integral(6.0, 4, 0, cfg.tolerances).value.real();
  check(r, "|F(4)| <= 0.01 |F(1)|", std::abs(f4) <= 0.01 * std::abs(f1), "ratio " + num(std::abs(f4 / f1)));
}

void counting_criterion(CriterionReport& r, const RunConfig&) {
  std::int64_t mismatch = 0;
  for (std::int64_t b = 1; b <= 20; ++b) {
    if (points::count_fast(bound_of(b)) != points::count_naive(bound_of(b))) mismatch = b;
  }
  check(r, "fast = naive for B <= 20", mismatch == 0, mismatch == 0 ? "all equal" : "differs at B=" + std::to_string(mismatch));
  const auto n2 = points::count_fast(bound_of(2));
  check(r, "N(2) = 27", n2 == 27, std::to_string(n2));
  const auto n50 = points::count_fast(bound_of(50));
  within(r, "N(50)/50^4", static_cast<double>(n50) / std::pow(50.0, 4), kCountConstant, 0.05, true);
  const auto start = std::chrono::steady_clock::now();
  const auto n200 = points::count_fast(bound_of(200), 1);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  within(r, "N(200)/200^4", static_cast<double>(n200) / std::pow(200.0, 4), kCountConstant, 0.03, true);
  check(r, "N(200) single-threaded < 60 s", elapsed < 60.0, num(elapsed) + " s");
}

void residue_criterion(CriterionReport& r, const RunConfig& cfg) {
  const std::vector<points::HeightBound> bounds{bound_of(40), bound_of(60), bound_of(80), bound_of(100)};
  const auto fit = zeta::residue_estimate(bounds, cfg.threads);
  within(r, "residue fit over 40..100", fit.residue, kResidueValue, 0.03, true);
  within(r, "(s-4) z0(s) at s=4.001", 0.001 * zeta::z0(4.001).real(), kResidueValue, 0.01, true);
}

void spectral_criterion(CriterionReport& r, const RunConfig&) {
  const auto rule = heightzeta_oracles::gauss_legendre(32);
  double ortho = 0.0;
  double residual = 0.0;
  for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2)}) {
    std::vector<spectral::EigenFunction> phi;
    for (int n = 0; n <= 8; ++n) {
      phi.emplace_back(spectral::SpectralIndex{{a, 1}, n});
      residual = std::max(residual, spectral::oscillator_residual({{a, 1}, n}));
    }
    const double half = phi.front().clamp_radius();
    constexpr int panels = 64;
    const double width = 2.0 * half / panels;
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= n; ++m) {
        double total = 0.0;
        for (int k = 0; k < panels; ++k) {
          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = -half + width * (k + 0.5 * (rule.nodes[i] + 1.0));
            total += 0.5 * width * rule.weights[i] * phi[static_cast<std::size_t>(n)](x) * phi[static_cast<std::size_t>(m)](x);
          }
        }
        ortho = std::max(ortho, std::abs(total - (n == m ? 1.0 : 0.0)));
      }
    }
  }
  check(r, "orthonormality n,m <= 8", ortho <= 1e-6, "max dev " + num(ortho));
  check(r, "oscillator residual", residual <= 1e-6, "max " + num(residual));
  const double l0 = spectral::eigenvalue({{Rational(1), 1}, 0});
  const double l2 = spectral::eigenvalue({{Rational(1, 2), 1}, 2});
  check(r, "eigenvalues -2pi, -5pi", std::abs(l0 + 2 * kPi) < 1e-12 && std::abs(l2 + 5 * kPi) < 1e-12,
        num(l0) + ", " + num(l2));
  const auto m1 = spectral::multiplicity_global(Rational(5), 1);
  const auto m2 = spectral::multiplicity_global(Rational(1, 2), 2);
  const auto m3 = spectral::multiplicity_global(Rational(1, 3), 2);
  check(r, "multiplicities 5, 2, 0", m1 == 5 && m2 == 2 && m3 == 0, m1.str() + ", " + m2.str() + ", " + m3.str());
}

void majorant_criterion(CriterionReport& r, const RunConfig&) {
  for (std::int64_t nk : {1, 2}) {
    const auto base = spectral::z2_majorant(4, 2, 100, 100, nk);
    const auto doubled = spectral::z2_majorant(4, 2, 200, 200, nk);
    const double move = std::abs(doubled.total() - base.total());
    check(r, "m=4 mprime=2 nK=" + std::to_string(nk) + " doubling", move < base.tail_bound,
          "value " + num(base.total()) + ", moved " + num(move) + " < tail " + num(base.tail_bound));
  }
}

void decomposition_criterion(CriterionReport& r, const RunConfig& cfg) {
  const auto r6 = zeta::report(6.0, bound_of(200), 8, cfg.threads);
  const double ratio = std::abs(r6.residual) / std::abs(r6.z0);
  check(r, "s=6 |residual| <= 0.05 |z0|", ratio <= 0.05, "ratio " + num(ratio));
  const auto r8 = zeta::report(8.0, bound_of(200), 8, cfg.threads);
  check(r, "residual shrinks at s=8", std::abs(r8.residual) < std::abs(r6.residual),
        "|res(6)| " + num(std::abs(r6.residual)) + ", |res(8)| " + num(std::abs(r8.residual)));
}

struct Spec {
  const char* title;
  double budget;
  void (*run)(CriterionReport&, const RunConfig&);
};

constexpr Spec kSpecs[kCriterionCount] = {
    {"invariants", 1.0, invariants_criterion},
    {"local factors", 1.0, local_criterion},
    {"twisted good primes", 1.0, twisted_criterion},
    {"archimedean", 30.0, arch_criterion},
    {"counting", 60.0, counting_criterion},
    {"residue", 60.0, residue_criterion},
    {"spectral", 10.0, spectral_criterion},
    {"majorant", 5.0, majorant_criterion},
    {"decomposition (exploratory)", 120.0, decomposition_criterion},
};

}  // namespace

bool CriterionReport::pass() const {
  if (checks.empty() || seconds >= budget_seconds) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string CriterionReport::line() const {
  std::ostringstream os;
  os << "criterion " << id << ' ' << (pass() ? "PASS" : "FAIL") << ' ' << title << ':';
  const char* sep = " ";
  for (const auto& c : checks) {
    os << sep << (c.pass ? "" : "[failed] ") << c.label << " = " << c.measured;
    sep = "; ";
  }
  os << " [" << num(seconds) << " s / " << num(budget_seconds) << " s]";
  return os.str();
}

CriterionReport run_criterion(int id, const RunConfig& cfg) {
  if (id < 1 || id > kCriterionCount) fail(ErrorKind::DomainError, "criterion must be in 1.." + std::to_string(kCriterionCount));
  const Spec& spec = kSpecs[id - 1];
  CriterionReport report;
  report.id = id;
  report.title = spec.title;
  report.budget_seconds = spec.budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(report, cfg);
  } catch (const Error& e) {
    check(report, std::string(to_string(e.kind())), false, e.what());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace heightzeta::cli
