#include <array>
#include <cmath>
#include <string>

#include "optcode/error.hpp"
#include "optcode/maxent.hpp"

namespace optcode::maxent {

namespace {

constexpr int kBorweinTerms = 40;

// B_2, B_4, ..., B_20 divided by (2j)!.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 1.0) {
    throw DomainError("zeta sum diverges for alpha <= 1 (got alpha = " + std::to_string(alpha) + ")");
  }
}

}  // namespace

double riemann_zeta(double alpha) {
  check_alpha(alpha);
  // zeta(s) = eta(s) / (1 - 2^(1-s)); eta by Borwein's algorithm 2.
  constexpr int n = kBorweinTerms;
  std::array<double, n + 1> d{};
  double term = 1.0;
  double acc = 1.0;
  d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += term;
    d[static_cast<std::size_t>(i)] = acc;
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (d[static_cast<std::size_t>(k)] - d[n]) / std::pow(k + 1.0, alpha);
  }
  const double eta = -sum / d[n];
  return eta / -std::expm1((1.0 - alpha) * std::log(2.0));
}

double hurwitz_zeta(double alpha, double b) {
  check_alpha(alpha);
  if (!std::isfinite(b) || b <= 0.0) throw DomainError("Hurwitz zeta needs b > 0");

  const int m = 20 + static_cast<int>(std::ceil(alpha));
  double head = 0.0;
  for (int k = m - 1; k >= 0; --k) head += std::pow(k + b, -alpha);

  const double x = m + b;
  double tail = std::pow(x, 1.0 - alpha) / (alpha - 1.0) + 0.5 * std::pow(x, -alpha);
  // Rising factorial alpha (alpha+1) ... (alpha+2j-2) times x^(-alpha-2j+1).
  double rising = alpha;
  double power = std::pow(x, -alpha - 1.0);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double correction = kBernoulliOverFactorial[j] * rising * power;
    tail += correction;
    if (std::abs(correction) < 1e-18 * tail) break;
    rising *= (alpha + 2.0 * j + 1.0) * (alpha + 2.0 * j + 2.0);
    power /= x * x;
  }
  return head + tail;
}

}  // namespace optcode::maxent
