#include "heightzeta/numeric.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace heightzeta {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
  // Exact decimal parse first, so the value does not depend on the C locale.
  return to_double(parse_rational(text));
}

}  // namespace

EvalPoint parse_eval_point(std::string_view text) {
  const std::string_view whole = text;
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (cleaned.empty()) throw std::invalid_argument("empty complex number");
  if (cleaned.back() != 'i' && cleaned.back() != 'j') return {parse_real(cleaned, whole), 0.0};

  cleaned.pop_back();
  // Split at the last sign that is not the leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = cleaned.size(); k-- > 1;) {
    if ((cleaned[k] == '+' || cleaned[k] == '-') && cleaned[k - 1] != 'e' && cleaned[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](std::string_view part) {
    if (part == "+" || part.empty()) return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, whole);
  };
  if (split == std::string::npos) return {0.0, imag_of(cleaned)};
  return {parse_real(std::string_view(cleaned).substr(0, split), whole),
          imag_of(std::string_view(cleaned).substr(split))};
}

std::optional<unsigned> exact_integer_exponent(EvalPoint s, unsigned limit) {
  if (s.imag() != 0.0) return std::nullopt;
  const double re = s.real();
  if (re < 0.0 || re > static_cast<double>(limit) || std::floor(re) != re) return std::nullopt;
  return static_cast<unsigned>(re);
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int8_t> mobius_table(std::int64_t n) {
  const auto size = static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1;
  std::vector<std::int8_t> mu(size, 0);
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(size, false);
  mu[1] = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<std::size_t>(i)] = -1;
    }
    for (std::int64_t p : primes) {
      const std::int64_t ip = i * p;
      if (ip > n) break;
      composite[static_cast<std::size_t>(ip)] = true;
      if (i % p == 0) {
        mu[static_cast<std::size_t>(ip)] = 0;
        break;
      }
      mu[static_cast<std::size_t>(ip)] = static_cast<std::int8_t>(-mu[static_cast<std::size_t>(i)]);
    }
  }
  return mu;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // sqrt of a 64-bit value rounded through double can be off by one either way.
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
  while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<int> valuation(std::int64_t n, std::int64_t p) noexcept {
  if (n == 0) return std::nullopt;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::optional<int> valuation(const BigInt& n, std::int64_t p) {
  if (n == 0) return std::nullopt;
  BigInt m = n;
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::optional<int> valuation(const Rational& q, std::int64_t p) {
  if (q == 0) return std::nullopt;
  return *valuation(numerator_of(q), p) - *valuation(denominator_of(q), p);
}

BigInt big_pow(std::int64_t p, unsigned e) { return boost::multiprecision::pow(BigInt(p), e); }

}  // namespace heightzeta
