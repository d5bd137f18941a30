#pragma once

#include "heightzeta/rational.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace heightzeta {

using Complex = std::complex<double>;

/// A complex parameter s (or a component s_alpha of a vector parameter).
using EvalPoint = Complex;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Parses "5", "4.5", "5+0.7i", "5-0.7i", "0.7i".
EvalPoint parse_eval_point(std::string_view text);

/// s as a non-negative integer when it is exactly one (imaginary part zero);
/// used for the exact-rational fast paths.
std::optional<unsigned> exact_integer_exponent(EvalPoint s, unsigned limit = 256);

bool is_prime(std::int64_t n) noexcept;
std::vector<std::int64_t> primes_up_to(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Moebius function on 0..n by a linear sieve (mu[0] is unused and 0).
std::vector<std::int8_t> mobius_table(std::int64_t n);

/// floor(sqrt(n)), exact for every 64-bit input.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// p-adic valuation; nullopt for zero (valuation +infinity).
std::optional<int> valuation(std::int64_t n, std::int64_t p) noexcept;
std::optional<int> valuation(const BigInt& n, std::int64_t p);
std::optional<int> valuation(const Rational& q, std::int64_t p);

/// p^e as an exact big integer.
BigInt big_pow(std::int64_t p, unsigned e);

/// Splits [0, n) into `threads` interleaved work streams and runs them on
/// scoped threads; fn(stream_index, stream_count) must write only to data it
/// owns. Callers reduce the per-stream results in a fixed order.
template <class Fn>
void run_partitioned(int threads, Fn&& fn) {
  const int count = std::max(1, threads);
  if (count == 1) {
    fn(0, 1);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(count - 1));
  for (int t = 1; t < count; ++t) pool.emplace_back([&fn, t, count] { fn(t, count); });
  fn(0, count);
}

}  // namespace heightzeta
