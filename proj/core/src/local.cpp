#include "heightzeta/local.hpp"

#include "heightzeta/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heightzeta::local {

namespace {

using geometry::GeometryDescriptor;

void require_prime(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorKind::PrimeError, std::to_string(p) + " is not prime");
}

Complex as_complex(const Rational& q) { return {to_double(q), 0.0}; }

Complex complex_ppow_neg(std::int64_t p, EvalPoint s) { return std::exp(-s * std::log(static_cast<double>(p))); }

Rational rational_ppow_neg(std::int64_t p, unsigned n) { return Rational(BigInt(1), big_pow(p, n)); }

template <class T>
T int_power(std::int64_t p, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= T(p);
  return r;
}

template <class T>
T strata_sum(const GeometryDescriptor& geom, const std::map<std::string, T>& x, std::int64_t p) {
  const T one(1);
  const T pm1(p - 1);
  T total(0);
  for (const auto& stratum : geom.strata) {
    T term(geometry::evaluate_poly(stratum.count_poly, p));
    for (const auto& member : stratum.subset) {
      const auto kappa = geom.find(member)->kappa;
      // y = p^{-(s_alpha - kappa_alpha + 1)}
      const T y = x.at(member) * int_power<T>(p, static_cast<int>(kappa - 1));
      term *= pm1 * y / (one - y);
    }
    total += term;
  }
  return total / int_power<T>(p, geom.dim);
}

template <class T>
T p3_closed_form(std::int64_t p, const T& x) {
  const T one(1);
  return (one - x) / (one - int_power<T>(p, 3) * x);
}

template <class T>
T untwisted_shells(std::int64_t p, const T& x, int K) {
  const T one(1);
  const T p3 = int_power<T>(p, 3);
  const T q = p3 * x;  // p^{3-s}
  const T thin = one - one / p3;  // shell measure ratio 1 - p^{-3}
  T total(1);
  T q_pow(1);
  for (int v = 1; v <= K; ++v) {
    q_pow *= q;
    total += thin * q_pow;  // (p^{3v} - p^{3v-3}) p^{-vs}
  }
  total += thin * q_pow * q / (one - q);
  return total;
}

// Cumulative character integral over the ball |t|_p <= p^V of conj(psi_1(c t))
// with v_p(c) = m: p^V when the character is trivial there (V <= m), else 0.
// An untwisted coordinate has m = +infinity.
template <class T>
std::vector<T> shell_weights(std::int64_t p, std::optional<int> twist_valuation, int K) {
  std::vector<T> cumulative(static_cast<std::size_t>(K) + 1);
  T pv(1);
  for (int V = 0; V <= K; ++V) {
    cumulative[static_cast<std::size_t>(V)] = (!twist_valuation || V <= *twist_valuation) ? pv : T(0);
    pv *= T(p);
  }
  std::vector<T> w(cumulative.size());
  w[0] = cumulative[0];
  for (std::size_t v = 1; v < w.size(); ++v) w[v] = cumulative[v] - cumulative[v - 1];
  return w;
}

template <class T>
void accumulate_profiles(const std::vector<std::vector<T>>& weights, const std::vector<T>& x_pow,
                         std::size_t coord, int running_max, const T& running_weight, T& total) {
  if (coord == weights.size()) {
    total += running_weight * x_pow[static_cast<std::size_t>(running_max)];
    return;
  }
  const auto& w = weights[coord];
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (w[v] == T(0)) continue;
    accumulate_profiles(weights, x_pow, coord + 1, std::max(running_max, static_cast<int>(v)),
                        T(running_weight * w[v]), total);
  }
}

template <class T>
T profile_sum(std::int64_t p, const std::vector<std::optional<int>>& twists, int K, const T& x) {
  std::vector<std::vector<T>> weights;
  weights.reserve(twists.size());
  for (const auto& m : twists) weights.push_back(shell_weights<T>(p, m, K));
  std::vector<T> x_pow(static_cast<std::size_t>(K) + 1);
  x_pow[0] = T(1);
  for (std::size_t v = 1; v < x_pow.size(); ++v) x_pow[v] = x_pow[v - 1] * x;
  T total(0);
  accumulate_profiles(weights, x_pow, 0, 0, T(1), total);
  return total;
}

ShellSum evaluate_profiles(std::int64_t p, const std::vector<std::optional<int>>& twists, int K, EvalPoint s) {
  if (const auto n = exact_integer_exponent(s)) {
    return {as_complex(profile_sum<Rational>(p, twists, K, rational_ppow_neg(p, *n))), K, true};
  }
  return {profile_sum<Complex>(p, twists, K, complex_ppow_neg(p, s)), K, false};
}

int resolve_shells(int minimal, std::optional<int> requested) {
  if (!requested) return minimal;
  if (*requested < minimal) {
    fail(ErrorKind::DomainError, "shell count " + std::to_string(*requested) +
                                     " is below the minimum " + std::to_string(minimal) + " for this character");
  }
  return *requested;
}

}  // namespace

SVector uniform_svector(const geometry::GeometryDescriptor& geom, EvalPoint s) {
  SVector out;
  for (const auto& c : geom.components) out[c.name] = s;
  return out;
}

std::vector<std::int64_t> EtaCharacter::bad_primes() const {
  std::set<std::int64_t> primes;
  for (auto a : {a1, a2}) {
    if (a == 0) continue;
    for (auto p : prime_divisors(a)) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

std::vector<std::int64_t> PsiCharacter::bad_primes() const {
  const Rational scaled = a * nK;
  const BigInt n = abs(numerator_of(scaled));
  if (n > BigInt(std::numeric_limits<std::int64_t>::max())) {
    fail(ErrorKind::Overflow, "character numerator exceeds 64 bits");
  }
  return prime_divisors(n.convert_to<std::int64_t>());
}

PsiCharacter make_psi_character(const Rational& a, std::int64_t nK) {
  if (a == 0) fail(ErrorKind::TrivialCharacter, "psi_a requires a != 0");
  if (nK < 1) fail(ErrorKind::DomainError, "level nK must be positive");
  if (!is_integer(a * nK)) {
    fail(ErrorKind::DomainError, "a = " + to_string(a) + " is not in (1/" + std::to_string(nK) + ")Z");
  }
  return {a, nK};
}

Complex euler_factor_strata(const GeometryDescriptor& geom, const SVector& s, std::int64_t p) {
  require_prime(p);
  bool exact = true;
  for (const auto& c : geom.components) {
    const auto it = s.find(c.name);
    if (it == s.end()) fail(ErrorKind::UnknownComponent, "s has no entry for component '" + c.name + "'");
    if (!(it->second.real() > static_cast<double>(c.kappa - 1))) {
      fail(ErrorKind::DomainError, "Re(s_" + c.name + ") must exceed kappa - 1 = " + std::to_string(c.kappa - 1));
    }
    exact = exact && exact_integer_exponent(it->second).has_value();
  }
  if (s.size() != geom.components.size()) fail(ErrorKind::UnknownComponent, "s names a component not in the descriptor");

  if (exact) {
    std::map<std::string, Rational> x;
    for (const auto& [name, value] : s) x[name] = rational_ppow_neg(p, *exact_integer_exponent(value));
    return as_complex(strata_sum<Rational>(geom, x, p));
  }
  std::map<std::string, Complex> x;
  for (const auto& [name, value] : s) x[name] = complex_ppow_neg(p, value);
  return strata_sum<Complex>(geom, x, p);
}

Complex euler_factor_strata(const GeometryDescriptor& geom, EvalPoint s, std::int64_t p) {
  return euler_factor_strata(geom, uniform_svector(geom, s), p);
}

Complex local_height_integral_p3(std::int64_t p, EvalPoint s) {
  require_prime(p);
  if (!(s.real() > 3.0)) fail(ErrorKind::DomainError, "the P^3 local integral needs Re(s) > 3");
  if (const auto n = exact_integer_exponent(s)) return as_complex(p3_closed_form<Rational>(p, rational_ppow_neg(p, *n)));
  return p3_closed_form<Complex>(p, complex_ppow_neg(p, s));
}

Complex shell_oracle_untwisted(std::int64_t p, EvalPoint s, int K) {
  require_prime(p);
  if (!(s.real() > 3.0)) fail(ErrorKind::DomainError, "the shell sum needs Re(s) > 3");
  if (K < 0) fail(ErrorKind::DomainError, "shell count must be non-negative");
  if (const auto n = exact_integer_exponent(s)) return as_complex(untwisted_shells<Rational>(p, rational_ppow_neg(p, *n), K));
  return untwisted_shells<Complex>(p, complex_ppow_neg(p, s), K);
}

ShellSum twisted_local_factor_eta(std::int64_t p, const EtaCharacter& eta, EvalPoint s, std::optional<int> shells) {
  require_prime(p);
  if (eta.trivial()) fail(ErrorKind::TrivialCharacter, "eta_(0,0) is trivial; use the untwisted integral");
  if (!(s.real() > 3.0)) fail(ErrorKind::DomainError, "twisted eta integral needs Re(s) > 3");

  const auto m1 = valuation(eta.a1, p);
  const auto m2 = valuation(eta.a2, p);
  const int minimal = std::max(m1.value_or(-1), m2.value_or(-1)) + 1;
  // coordinates in (x, y, z) order; z is never twisted by eta
  return evaluate_profiles(p, {m1, m2, std::nullopt}, resolve_shells(minimal, shells), s);
}

ShellSum twisted_local_factor_psi(std::int64_t p, const PsiCharacter& psi, EvalPoint s, std::optional<int> shells) {
  require_prime(p);
  if (psi.a == 0) fail(ErrorKind::TrivialCharacter, "psi_0 is trivial");
  if (!(s.real() > 2.0)) fail(ErrorKind::DomainError, "twisted psi integral needs Re(s) > 2");

  const int m = *valuation(psi.a, p);
  const int minimal = std::max(m, 0) + 1;
  // coordinates (z, y); psi twists z only
  return evaluate_profiles(p, {m, std::nullopt}, resolve_shells(minimal, shells), s);
}

Complex zeta_p(std::int64_t p, EvalPoint s) {
  require_prime(p);
  if (const auto n = exact_integer_exponent(s)) {
    if (*n == 0) fail(ErrorKind::DomainError, "zeta_p has a pole at s = 0");
    const BigInt pn = big_pow(p, *n);
    return as_complex(Rational(pn, pn - 1));
  }
  const Complex denom = 1.0 - complex_ppow_neg(p, s);
  if (std::abs(denom) < 1e-14) fail(ErrorKind::DomainError, "zeta_p evaluated at a pole");
  return 1.0 / denom;
}

Complex partial_zeta(const std::set<std::int64_t>& primes, EvalPoint s) {
  if (!(s.real() > 1.0)) fail(ErrorKind::DomainError, "partial zeta needs Re(s) > 1");
  Complex value = riemann_zeta(s);
  for (auto p : primes) value /= zeta_p(p, s);
  return value;
}

}  // namespace heightzeta::local
