#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands on a
// finite interval. Subintervals are bisected in order of largest error; the
// final sum runs over subintervals in left-to-right order so results do not
// depend on heap layout.

#include "heightzeta/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace heightzeta::quadrature {

struct Estimate {
  Complex value;
  double error = 0.0;
  int subdivisions = 0;
  bool converged = true;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(center);
  Complex kronrod = fc * kKronrodWeights[7];
  Complex gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const Complex sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Integrates f over [a, b] until error <= max(abs_tol, rel_tol * |value|)
/// or max_subdivisions panels have been used.
template <class F>
Estimate integrate(F&& f, double a, double b, double abs_tol, double rel_tol, int max_subdivisions = 1000) {
  std::priority_queue<detail::Panel> heap;
  heap.push(detail::gauss_kronrod_15(f, a, b));
  Complex total = heap.top().value;
  double error = heap.top().error;
  int panels = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(total)) && panels < max_subdivisions) {
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
    const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  std::vector<detail::Panel> done;
  done.reserve(heap.size());
  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  std::sort(done.begin(), done.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  Estimate out;
  out.value = Complex(0.0, 0.0);
  out.error = 0.0;
  for (const auto& p : done) {
    out.value += p.value;
    out.error += p.error;
  }
  out.subdivisions = panels;
  out.converged = out.error <= std::max(abs_tol, rel_tol * std::abs(out.value));
  return out;
}

}  // namespace heightzeta::quadrature
