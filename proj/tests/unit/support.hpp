#pragma once

#include "heightzeta/rational.hpp"

#include <cstdint>
#include <random>

namespace heightzeta::testing {

inline constexpr std::uint64_t kSeed = 20240917;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  Rational rational(std::int64_t max_num = 20, std::int64_t max_den = 12) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }
  Rational positive_rational(std::int64_t max_num = 20, std::int64_t max_den = 12) {
    return Rational(integer(1, max_num), integer(1, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace heightzeta::testing
