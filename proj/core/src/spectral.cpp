#include "heightzeta/spectral.hpp"

#include "heightzeta/error.hpp"
#include "heightzeta/quadrature.hpp"

#include <cmath>
#include <deque>
#include <memory>
#include <mutex>

namespace heightzeta::spectral {

BetaXPolynomial BetaXPolynomial::constant(const BigInt& c) {
  BetaXPolynomial p;
  p.add_term(0, 0, c);
  return p;
}

void BetaXPolynomial::add_term(int beta_pow, int x_pow, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({beta_pow, x_pow}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BetaXPolynomial::coefficient(int beta_pow, int x_pow) const {
  const auto it = terms_.find({beta_pow, x_pow});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BetaXPolynomial BetaXPolynomial::derivative_x() const {
  BetaXPolynomial out;
  for (const auto& [mono, c] : terms_) {
    if (mono.second > 0) out.add_term(mono.first, mono.second - 1, c * mono.second);
  }
  return out;
}

BetaXPolynomial BetaXPolynomial::times_beta_x(const BigInt& c) const {
  BetaXPolynomial out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono.first + 1, mono.second + 1, coeff * c);
  return out;
}

BetaXPolynomial BetaXPolynomial::operator+(const BetaXPolynomial& other) const {
  BetaXPolynomial out = *this;
  for (const auto& [mono, c] : other.terms_) out.add_term(mono.first, mono.second, c);
  return out;
}

BetaXPolynomial BetaXPolynomial::operator-(const BetaXPolynomial& other) const {
  BetaXPolynomial out = *this;
  for (const auto& [mono, c] : other.terms_) out.add_term(mono.first, mono.second, -c);
  return out;
}

BetaXPolynomial BetaXPolynomial::reflected() const {
  BetaXPolynomial out;
  for (const auto& [mono, c] : terms_) out.add_term(mono.first, mono.second, mono.second % 2 == 0 ? c : BigInt(-c));
  return out;
}

double BetaXPolynomial::evaluate(double beta, double x) const {
  double total = 0.0;
  for (const auto& [mono, c] : terms_) {
    total += c.convert_to<double>() * std::pow(beta, mono.first) * std::pow(x, mono.second);
  }
  return total;
}

const BetaXPolynomial& hermite_polynomial(int n) {
  if (n < 0) fail(ErrorKind::DomainError, "Hermite degree must be non-negative");
  static std::mutex guard;
  static std::deque<BetaXPolynomial> cache;  // deque: references survive growth
  std::lock_guard lock(guard);
  if (cache.empty()) cache.push_back(BetaXPolynomial::constant(1));
  while (static_cast<int>(cache.size()) <= n) {
    const auto& h = cache.back();
    cache.push_back(h.times_beta_x(4) - h.derivative_x());
  }
  return cache[static_cast<std::size_t>(n)];
}

namespace {

double beta_of(const Rational& a) {
  if (a == 0) fail(ErrorKind::TrivialCharacter, "oscillator character needs a != 0");
  return kPi * std::abs(to_double(a));
}

}  // namespace

double hermite_h(int n, const Rational& a, double x) { return hermite_polynomial(n).evaluate(beta_of(a), x); }

double eigenvalue(const SpectralIndex& idx) {
  if (idx.n < 0) fail(ErrorKind::DomainError, "spectral index n must be non-negative");
  return -2.0 * kPi * (2.0 * idx.n + 1.0) * std::abs(to_double(idx.character.a));
}

double full_laplacian_eigenvalue(const SpectralIndex& idx) {
  const double a = to_double(idx.character.a);
  return eigenvalue(idx) - 4.0 * kPi * kPi * a * a;
}

EigenFunction::EigenFunction(const SpectralIndex& idx)
    : n_(idx.n),
      beta_(beta_of(idx.character.a)),
      lambda_(spectral::eigenvalue(idx)),
      clamp_(8.0 / std::sqrt(std::abs(to_double(idx.character.a)))),
      c_(1.0),
      h_(&hermite_polynomial(idx.n)),
      dh_(h_->derivative_x()),
      d2h_(dh_.derivative_x()) {
  const double beta = beta_;
  const BetaXPolynomial* h = h_;
  auto density = [beta, h](double x) {
    const double v = h->evaluate(beta, x);
    return Complex(std::exp(-2.0 * beta * x * x) * v * v, 0.0);
  };
  const auto est = quadrature::integrate(density, -clamp_, clamp_, 1e-300, 1e-13, 4000);
  const double norm_sq = est.value.real();
  if (!est.converged || !(norm_sq > 0.0) || est.error > 1e-10 * norm_sq) {
    fail(ErrorKind::ToleranceNotMet, "eigenfunction normalization did not reach 1e-10");
  }
  c_ = 1.0 / std::sqrt(norm_sq);
}

double EigenFunction::operator()(double x) const {
  if (std::abs(x) > clamp_) return 0.0;
  return c_ * std::exp(-beta_ * x * x) * h_->evaluate(beta_, x);
}

double EigenFunction::second_derivative(double x) const {
  if (std::abs(x) > clamp_) return 0.0;
  // (e^{-beta x^2} h)'' = e^{-beta x^2} (h'' - 4 beta x h' + (4 beta^2 x^2 - 2 beta) h)
  const double b = beta_;
  const double h = h_->evaluate(b, x);
  return c_ * std::exp(-b * x * x) *
         (d2h_.evaluate(b, x) - 4.0 * b * x * dh_.evaluate(b, x) + (4.0 * b * b * x * x - 2.0 * b) * h);
}

double eigenfunction(const SpectralIndex& idx, double x) {
  static std::mutex guard;
  static std::map<std::pair<int, Rational>, std::unique_ptr<EigenFunction>> cache;
  const EigenFunction* fn = nullptr;
  {
    std::lock_guard lock(guard);
    auto& slot = cache[{idx.n, abs(idx.character.a)}];
    if (!slot) slot = std::make_unique<EigenFunction>(idx);
    fn = slot.get();
  }
  return (*fn)(x);
}

double oscillator_residual(const SpectralIndex& idx, std::span<const double> x_grid) {
  const EigenFunction phi(idx);
  const double a = to_double(idx.character.a);
  const double lambda = phi.eigenvalue();
  double worst = 0.0;
  double scale = 0.0;
  for (double x : x_grid) {
    const double value = phi(x);
    const double potential = 4.0 * kPi * kPi * a * a * x * x;
    worst = std::max(worst, std::abs(phi.second_derivative(x) - potential * value - lambda * value));
    scale = std::max(scale, std::abs(lambda * value));
  }
  if (scale == 0.0) fail(ErrorKind::DomainError, "residual grid misses the support of the eigenfunction");
  return worst / scale;
}

double oscillator_residual(const SpectralIndex& idx) {
  const double half_width = 5.0 / std::sqrt(std::abs(to_double(idx.character.a)));
  constexpr int points = 2001;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = -half_width + 2.0 * half_width * i / (points - 1);
  return oscillator_residual(idx, grid);
}

BigInt multiplicity_global(const Rational& a, std::int64_t nK) {
  if (nK < 1) fail(ErrorKind::DomainError, "level nK must be positive");
  const Rational scaled = a * nK;
  if (a == 0 || !is_integer(scaled)) return 0;
  return abs(numerator_of(scaled)) * nK;
}

BigInt multiplicity_local(std::int64_t p, const Rational& a, std::int64_t np, std::int64_t nK) {
  if (!is_prime(p)) fail(ErrorKind::PrimeError, std::to_string(p) + " is not prime");
  if (nK < 1) fail(ErrorKind::DomainError, "level nK must be positive");
  if (np + *valuation(nK, p) < 0) {
    fail(ErrorKind::HypothesisViolated, "p^np * nK is not a p-adic integer");
  }
  const Rational scaled = a * nK;
  if (a == 0 || !is_integer(scaled)) return 0;
  const bool ramified = *valuation(numerator_of(scaled), p) > 0 || nK % p == 0;
  if (!ramified) return 1;
  const int v = *valuation(Rational(a * nK * nK), p);
  return big_pow(p, static_cast<unsigned>(v));
}

MajorantResult z2_majorant(int m, int mprime, std::int64_t a_max, std::int64_t n_max, std::int64_t nK) {
  const int e = m - mprime;
  if (e < 2) fail(ErrorKind::DivergentParameters, "the majorant series needs m - mprime >= 2");
  if (a_max < 1 || n_max < 0 || nK < 1) fail(ErrorKind::DomainError, "need a_max >= 1, n_max >= 0, nK >= 1");

  const double four_pi2 = 4.0 * kPi * kPi;
  const auto J = a_max * nK;
  MajorantResult out;
  double n_tail = 0.0;
  for (std::int64_t j = 1; j <= J; ++j) {
    const double a = static_cast<double>(j) / static_cast<double>(nK);
    const double mult = static_cast<double>(nK) * static_cast<double>(j);  // nK^2 |a|
    double inner = 0.0;
    for (std::int64_t n = n_max; n >= 0; --n) {
      inner += std::pow(2.0 * kPi * (2.0 * n + 1.0) * a + four_pi2 * a * a, -e);
    }
    // omitted n > n_max: integral comparison for the decreasing summand
    const double n_rest = std::pow(2.0 * kPi * (2.0 * n_max + 1.0) * a + four_pi2 * a * a, 1 - e) /
                          (4.0 * kPi * a * (e - 1));
    out.finite_sum += 2.0 * mult * inner;  // a and -a
    n_tail += 2.0 * mult * n_rest;
  }

  // omitted |a| > a_max: sum over all n is at most f(a,0) + int_0^inf f(a,t) dt,
  // bounded by (4 pi^2 a^2)^{-e} + (4 pi^2 a^2)^{1-e} / (4 pi |a| (e-1)); then sum
  // over j > J by integral comparison of j^{1-k}.
  const double nk = static_cast<double>(nK);
  const double Jd = static_cast<double>(J);
  const double first = std::pow(four_pi2, -e) * std::pow(nk, 2 * e) * std::pow(Jd, 2 - 2 * e) / (2 * e - 2);
  const double second = std::pow(four_pi2, 1 - e) / (4.0 * kPi * (e - 1)) * std::pow(nk, 2 * e - 1) *
                        std::pow(Jd, 3 - 2 * e) / (2 * e - 3);
  const double a_tail = 2.0 * nk * (first + second);
  out.tail_bound = n_tail + a_tail;
  return out;
}

}  // namespace heightzeta::spectral
