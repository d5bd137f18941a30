#include "heightzeta_oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace heightzeta_oracles {

GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

namespace {

// int over the (v2, v3) plane of (c + r^2)^{-s/2}: pi int_0^inf (c + u)^{-s/2} du,
// with u = c t / (1 - t).
// int_{R^2} (c + |w|^2)^{-s/2} dw in closed form
double plane_integral(double s, double c) { return 2.0 * std::numbers::pi * std::pow(c, 1.0 - 0.5 * s) / (s - 2.0); }

}  // namespace

double fourier_3d(double s, double rho, double extent) {
  if (!(s > 3.0)) throw std::domain_error("fourier_3d needs s > 3");
  const GaussRule outer = gauss_legendre(24);
  // panels of width at most a quarter period
  const double width = rho > 0.0 ? std::min(0.25, 0.25 / rho) : 0.25;
  const auto panels = static_cast<long>(std::ceil(extent / width));
  double total = 0.0;
  for (long k = 0; k < panels; ++k) {
    const double lo = k * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
      const double v1 = lo + 0.5 * width * (outer.nodes[i] + 1.0);
      panel += outer.weights[i] * std::cos(2.0 * std::numbers::pi * rho * v1) * plane_integral(s, 1.0 + v1 * v1);
    }
    total += 0.5 * width * panel;
  }
  return 2.0 * total;  // v1 < 0 by symmetry
}

namespace {

double ipow(double base, int e) { return std::pow(base, e); }

std::int64_t vp(std::int64_t n, std::int64_t p) {
  std::int64_t v = 0;
  n = std::abs(n);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Integral of conj(psi(a t)) over the shell |t| = p^v (v >= 1) or the unit
// ball (v = 0), for v_p(a) = m; `untwisted` means a = 0.
double shell_weight(std::int64_t p, int v, bool untwisted, std::int64_t m) {
  const double pd = static_cast<double>(p);
  if (v == 0) return untwisted || m >= 0 ? 1.0 : 0.0;
  if (untwisted || v <= m) return ipow(pd, v - 1) * (pd - 1.0);
  if (v == m + 1) return -ipow(pd, static_cast<int>(m));
  return 0.0;
}

Complex height_factor(std::int64_t p, int v, Complex s) {
  return std::exp(-s * static_cast<double>(v) * std::log(static_cast<double>(p)));
}

}  // namespace

Complex twisted_eta_bruteforce(std::int64_t p, std::int64_t a1, std::int64_t a2, Complex s, int z_shells) {
  const bool u1 = a1 == 0;
  const bool u2 = a2 == 0;
  const std::int64_t m1 = u1 ? 0 : vp(a1, p);
  const std::int64_t m2 = u2 ? 0 : vp(a2, p);
  const int x_shells = u1 ? z_shells : static_cast<int>(m1) + 1;
  const int y_shells = u2 ? z_shells : static_cast<int>(m2) + 1;
  const int top = std::max({x_shells, y_shells, z_shells});
  std::vector<Complex> hf;
  std::vector<double> wz;
  for (int v = 0; v <= top; ++v) {
    hf.push_back(height_factor(p, v, s));
    wz.push_back(shell_weight(p, v, true, 0));
  }
  Complex total = 0.0;
  for (int vx = 0; vx <= x_shells; ++vx) {
    const double wx = shell_weight(p, vx, u1, m1);
    if (wx == 0.0) continue;
    for (int vy = 0; vy <= y_shells; ++vy) {
      const double wy = shell_weight(p, vy, u2, m2);
      if (wy == 0.0) continue;
      for (int vz = 0; vz <= z_shells; ++vz) {
        total += wx * wy * wz[static_cast<std::size_t>(vz)] * hf[static_cast<std::size_t>(std::max({vx, vy, vz}))];
      }
    }
  }
  return total;
}

Complex twisted_psi_bruteforce(std::int64_t p, std::int64_t num, std::int64_t den, Complex s, int y_shells) {
  if (num == 0 || den <= 0) throw std::domain_error("need a = num/den nonzero");
  const std::int64_t m = vp(num, p) - vp(den, p);
  Complex total = 0.0;
  for (int vz = 0; vz <= std::max<std::int64_t>(m + 1, 0); ++vz) {
    const double wz = shell_weight(p, vz, false, m);
    if (wz == 0.0) continue;
    for (int vy = 0; vy <= y_shells; ++vy) {
      total += wz * shell_weight(p, vy, true, 0) * height_factor(p, std::max(vz, vy), s);
    }
  }
  return total;
}

long double hermite_coefficient(int n, int m) {
  if (m < 0 || 2 * m > n) return 0.0L;
  auto fact = [](int k) {
    long double f = 1.0L;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const long double sign = m % 2 == 0 ? 1.0L : -1.0L;
  return fact(n) * sign * std::pow(2.0L, 2 * n - 3 * m) / (fact(m) * fact(n - 2 * m));
}

std::uint64_t primitive_count(std::uint64_t L) {
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(L)) + 1.0);
  const auto lim = static_cast<std::int64_t>(L);
  std::uint64_t count = 0;
  for (std::int64_t d = 1; d <= r; ++d)
    for (std::int64_t a = -r; a <= r; ++a)
      for (std::int64_t b = -r; b <= r; ++b)
        for (std::int64_t c = -r; c <= r; ++c)
          if (d * d + a * a + b * b + c * c <= lim && std::gcd(std::gcd(d, a), std::gcd(b, c)) == 1) ++count;
  return count;
}

}  // namespace heightzeta_oracles
