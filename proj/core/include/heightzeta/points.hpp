#pragma once

// Rational points of the Heisenberg group G = {g(x, z, y)} embedded in P^3 as
// (1 : x : z : y), their anticanonical-hyperplane heights, and the counting
// function N(B) = #{g in G(Q) : H(g) <= B}.
//
// A point is carried by its primitive integer representative (d, a1, a2, a3)
// with d >= 1; the full height is sqrt(d^2 + a1^2 + a2^2 + a3^2), of which the
// finite places contribute exactly d.

#include "heightzeta/numeric.hpp"
#include "heightzeta/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace heightzeta::points {

struct GroupElement {
  Rational x;
  Rational z;
  Rational y;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity();
/// (x,z,y)(x',z',y') = (x + x', z + z' + x y', y + y').
GroupElement multiply(const GroupElement& g, const GroupElement& h);
/// (x,z,y)^{-1} = (-x, x y - z, -y).
GroupElement inverse(const GroupElement& g);

/// Projective representative of (1 : x : z : y), coordinate order (d, x, z, y).
struct PrimitiveQuadruple {
  BigInt d;
  BigInt a1;
  BigInt a2;
  BigInt a3;

  friend bool operator==(const PrimitiveQuadruple&, const PrimitiveQuadruple&) = default;
  BigInt norm_sq() const { return d * d + a1 * a1 + a2 * a2 + a3 * a3; }
};

PrimitiveQuadruple to_quadruple(const GroupElement& g);

double height(const GroupElement& g);
/// H(s, g) = height(g)^s.
Complex height_pow(EvalPoint s, const GroupElement& g);
/// Product over primes of max(1, |x|_p, |z|_p, |y|_p): the common denominator d.
BigInt height_finite(const GroupElement& g);

/// A height bound B held exactly; membership tests compare integer norms with
/// floor(B^2). Bounds above kMaxBound are rejected with an Overflow error.
class HeightBound {
 public:
  static constexpr std::int64_t kMaxBound = 1'000'000;

  explicit HeightBound(Rational value);
  static HeightBound parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  /// floor(B^2): a point is counted iff d^2 + |a|^2 <= norm_limit().
  std::uint64_t norm_limit() const noexcept { return norm_limit_; }
  double to_double() const;
  std::string str() const;

 private:
  Rational value_;
  std::uint64_t norm_limit_;
};

/// Largest bound for which N(B) is guaranteed to fit in 64 bits.
inline constexpr std::int64_t kMaxCountBound = 40'000;

/// Brute force: nested loops over (d, a1, a2, a3) with a gcd test.
std::uint64_t count_naive(const HeightBound& bound);

/// N(B) = sum_k mu(k) M(B/k), where M(R) counts all (d, a) with d >= 1 and
/// norm <= R^2. Parallel over d with a fixed-order reduction.
std::uint64_t count_fast(const HeightBound& bound, int threads = 1);

/// M(R) for an integer norm limit L = floor(R^2).
std::uint64_t count_half_ball(std::uint64_t norm_limit, int threads = 1);

/// (pi^2 / (4 zeta(4))) B^4 = (90 / (4 pi^2)) B^4.
double predict_count(double bound);
inline constexpr double kCountingConstant = 90.0 / (4.0 * kPi * kPi);

struct HeightPoint {
  GroupElement g;
  std::uint64_t norm_sq = 0;  // d^2 + a1^2 + a2^2 + a3^2 = H(g)^2
};

/// Visits every rational point with H(g) <= B exactly once, in increasing
/// (d, a1, a2, a3) lexicographic order.
void enumerate(const HeightBound& bound, const std::function<void(const HeightPoint&)>& visit);
std::vector<HeightPoint> enumerate(const HeightBound& bound);

/// counts[n] = number of rational points with H(g)^2 = n, for n <= floor(B^2).
std::vector<std::uint64_t> primitive_norm_counts(const HeightBound& bound, int threads = 1);

}  // namespace heightzeta::points
