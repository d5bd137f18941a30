#include "heightzeta/points.hpp"

#include "heightzeta/error.hpp"

#include <cmath>
#include <numeric>

namespace heightzeta::points {

GroupElement identity() { return {Rational(0), Rational(0), Rational(0)}; }

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  return {g.x + h.x, g.z + h.z + g.x * h.y, g.y + h.y};
}

GroupElement inverse(const GroupElement& g) { return {-g.x, g.x * g.y - g.z, -g.y}; }

PrimitiveQuadruple to_quadruple(const GroupElement& g) {
  const BigInt d = lcm(lcm(denominator_of(g.x), denominator_of(g.z)), denominator_of(g.y));
  auto scaled = [&d](const Rational& c) { return numerator_of(c) * (d / denominator_of(c)); };
  return {d, scaled(g.x), scaled(g.z), scaled(g.y)};
}

double height(const GroupElement& g) { return std::sqrt(to_quadruple(g).norm_sq().convert_to<double>()); }

Complex height_pow(EvalPoint s, const GroupElement& g) {
  const double log_norm = std::log(to_quadruple(g).norm_sq().convert_to<double>());
  return std::exp(0.5 * s * log_norm);
}

BigInt height_finite(const GroupElement& g) { return to_quadruple(g).d; }

HeightBound::HeightBound(Rational value) : value_(std::move(value)), norm_limit_(0) {
  if (value_ < 1) fail(ErrorKind::DomainError, "height bound must be at least 1");
  if (value_ > kMaxBound) {
    fail(ErrorKind::Overflow, "height bound exceeds " + std::to_string(kMaxBound) + "; 64-bit norms are not guaranteed");
  }
  const Rational sq = value_ * value_;
  norm_limit_ = BigInt(numerator_of(sq) / denominator_of(sq)).convert_to<std::uint64_t>();
}

HeightBound HeightBound::parse(std::string_view text) { return HeightBound(parse_rational(text)); }

double HeightBound::to_double() const { return heightzeta::to_double(value_); }

std::string HeightBound::str() const { return to_string(value_); }

namespace {

void require_countable(const HeightBound& bound) {
  if (bound.value() > kMaxCountBound) {
    fail(ErrorKind::Overflow, "N(B) may exceed 64 bits for B > " + std::to_string(kMaxCountBound));
  }
}

// #{(a1, a2, a3) in Z^3 : |a|^2 <= rem}
std::uint64_t ball3_count(std::uint64_t rem) {
  std::uint64_t total = 0;
  const std::uint64_t a1_max = isqrt(rem);
  for (std::uint64_t a1 = 0; a1 <= a1_max; ++a1) {
    const std::uint64_t rem2 = rem - a1 * a1;
    // the a3 range shrinks monotonically as a2 grows
    std::uint64_t a3_max = isqrt(rem2);
    std::uint64_t disc = 0;
    for (std::uint64_t a2 = 0; a2 * a2 <= rem2; ++a2) {
      const std::uint64_t rem3 = rem2 - a2 * a2;
      while (a3_max * a3_max > rem3) --a3_max;
      disc += (a2 == 0 ? 1 : 2) * (2 * a3_max + 1);
    }
    total += (a1 == 0 ? 1 : 2) * disc;
  }
  return total;
}

}  // namespace

std::uint64_t count_half_ball(std::uint64_t norm_limit, int threads) {
  const std::uint64_t d_max = isqrt(norm_limit);
  std::vector<std::uint64_t> per_d(d_max + 1, 0);
  run_partitioned(threads, [&](int stream, int streams) {
    for (std::uint64_t d = 1 + static_cast<std::uint64_t>(stream); d <= d_max; d += static_cast<std::uint64_t>(streams)) {
      per_d[d] = ball3_count(norm_limit - d * d);
    }
  });
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= d_max; ++d) total += per_d[d];
  return total;
}

std::uint64_t count_fast(const HeightBound& bound, int threads) {
  require_countable(bound);
  const std::uint64_t L = bound.norm_limit();
  const std::uint64_t k_max = isqrt(L);
  const auto mu = mobius_table(static_cast<std::int64_t>(k_max));
  std::int64_t total = 0;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    if (mu[k] == 0) continue;
    total += mu[k] * static_cast<std::int64_t>(count_half_ball(L / (k * k), threads));
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_naive(const HeightBound& bound) {
  require_countable(bound);
  const auto L = static_cast<std::int64_t>(bound.norm_limit());
  const auto r = static_cast<std::int64_t>(isqrt(bound.norm_limit()));
  std::uint64_t count = 0;
  for (std::int64_t d = 1; d <= r; ++d) {
    for (std::int64_t a1 = -r; a1 <= r; ++a1) {
      for (std::int64_t a2 = -r; a2 <= r; ++a2) {
        for (std::int64_t a3 = -r; a3 <= r; ++a3) {
          if (d * d + a1 * a1 + a2 * a2 + a3 * a3 > L) continue;
          if (std::gcd(std::gcd(d, a1), std::gcd(a2, a3)) == 1) ++count;
        }
      }
    }
  }
  return count;
}

double predict_count(double bound) { return kCountingConstant * bound * bound * bound * bound; }

void enumerate(const HeightBound& bound, const std::function<void(const HeightPoint&)>& visit) {
  const auto L = static_cast<std::int64_t>(bound.norm_limit());
  const auto r = static_cast<std::int64_t>(isqrt(bound.norm_limit()));
  for (std::int64_t d = 1; d <= r; ++d) {
    const std::int64_t rem1 = L - d * d;
    const auto r1 = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rem1)));
    for (std::int64_t a1 = -r1; a1 <= r1; ++a1) {
      const std::int64_t rem2 = rem1 - a1 * a1;
      const auto r2 = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rem2)));
      for (std::int64_t a2 = -r2; a2 <= r2; ++a2) {
        const std::int64_t rem3 = rem2 - a2 * a2;
        const auto r3 = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rem3)));
        for (std::int64_t a3 = -r3; a3 <= r3; ++a3) {
          if (std::gcd(std::gcd(d, a1), std::gcd(a2, a3)) != 1) continue;
          HeightPoint pt;
          pt.g = {Rational(a1, d), Rational(a2, d), Rational(a3, d)};
          pt.norm_sq = static_cast<std::uint64_t>(d * d + a1 * a1 + a2 * a2 + a3 * a3);
          visit(pt);
        }
      }
    }
  }
}

std::vector<HeightPoint> enumerate(const HeightBound& bound) {
  std::vector<HeightPoint> out;
  enumerate(bound, [&out](const HeightPoint& p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> primitive_norm_counts(const HeightBound& bound, int threads) {
  const std::uint64_t L = bound.norm_limit();
  if (L > 100'000'000) fail(ErrorKind::Overflow, "norm histogram limited to B <= 10^4");
  const std::uint64_t r = isqrt(L);
  const std::size_t size = L + 1;

  // r2[m] = #{(a1, a2) : a1^2 + a2^2 = m}
  std::vector<std::uint64_t> r2(size, 0);
  for (std::uint64_t a1 = 0; a1 <= r; ++a1) {
    for (std::uint64_t a2 = 0; a1 * a1 + a2 * a2 <= L; ++a2) {
      r2[a1 * a1 + a2 * a2] += (a1 == 0 ? 1 : 2) * (a2 == 0 ? 1 : 2);
    }
  }

  // Split [0, L] into contiguous blocks, one per stream.
  auto blocks = [&](auto&& body) {
    run_partitioned(threads, [&](int stream, int streams) {
      const std::uint64_t lo = size * static_cast<std::uint64_t>(stream) / static_cast<std::uint64_t>(streams);
      const std::uint64_t hi = size * static_cast<std::uint64_t>(stream + 1) / static_cast<std::uint64_t>(streams);
      body(lo, hi);
    });
  };

  // r3[m] = sum_{a3} r2[m - a3^2]
  std::vector<std::uint64_t> r3(size, 0);
  blocks([&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t m = lo; m < hi; ++m) {
      std::uint64_t acc = r2[m];
      for (std::uint64_t a3 = 1; a3 * a3 <= m; ++a3) acc += 2 * r2[m - a3 * a3];
      r3[m] = acc;
    }
  });

  // all[n] = #{(d, a) : d >= 1, d^2 + |a|^2 = n}
  std::vector<std::uint64_t> all(size, 0);
  blocks([&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n < hi; ++n) {
      std::uint64_t acc = 0;
      for (std::uint64_t d = 1; d * d <= n; ++d) acc += r3[n - d * d];
      all[n] = acc;
    }
  });

  // Moebius inversion over the common factor k: n = k^2 m.
  const auto mu = mobius_table(static_cast<std::int64_t>(r));
  std::vector<std::int64_t> signed_counts(size, 0);
  for (std::uint64_t k = 1; k <= r; ++k) {
    if (mu[k] == 0) continue;
    const std::uint64_t k2 = k * k;
    for (std::uint64_t m = 1; m * k2 <= L; ++m) signed_counts[m * k2] += mu[k] * static_cast<std::int64_t>(all[m]);
  }
  std::vector<std::uint64_t> counts(size, 0);
  for (std::size_t n = 0; n < size; ++n) counts[n] = static_cast<std::uint64_t>(signed_counts[n]);
  return counts;
}

}  // namespace heightzeta::points
