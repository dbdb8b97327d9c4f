#include "orbiquant/special_functions.hpp"

#include "orbiquant/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orbiquant {

namespace {

double bessel_series(int order, double x) {
  const double half = 0.5 * x;
  const double log_lead = order * std::log(half) - std::lgamma(order + 1.0);
  if (log_lead < -745.0) return 0.0;
  double term = std::exp(log_lead);
  double sum = term;
  const double q = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (k + order));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_miller(int order, double x) {
  const double scale = std::max<double>(order, x);
  int start = order + static_cast<int>(x) + 20 + static_cast<int>(std::sqrt(60.0 * scale));
  start += start % 2;  // even

  constexpr double kBig = 1e250;
  constexpr double kRescale = 1e-250;
  const double two_over_x = 2.0 / x;

  double next = 0.0;      // J_{k+1}
  double current = 1e-300;  // J_k, arbitrary seed
  double result = 0.0;
  double even_sum = 0.0;  // J_0 + 2 sum J_{2k}
  for (int k = start; k > 0; --k) {
    const double previous = k * two_over_x * current - next;
    next = current;
    current = previous;  // now J_{k-1}
    if (std::abs(current) > kBig) {
      current *= kRescale;
      next *= kRescale;
      result *= kRescale;
      even_sum *= kRescale;
    }
    const int index = k - 1;
    if (index == order) result = current;
    if (index > 0 && index % 2 == 0) even_sum += 2.0 * current;
  }
  even_sum += current;
  return result / even_sum;
}

}  // namespace

double bessel_j(int order, double x) {
  if (order < 0) fail(ErrorCode::DomainError, "bessel_j order must be >= 0");
  if (x < 0.0) fail(ErrorCode::DomainError, "bessel_j argument must be >= 0");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x <= 2.0 || 0.25 * x * x <= order + 1.0) return bessel_series(order, x);
  return bessel_miller(order, x);
}

double laguerre(int degree, double alpha, double x) {
  if (degree < 0) fail(ErrorCode::DomainError, "laguerre degree must be >= 0");
  double prev = 1.0;
  if (degree == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < degree; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi(int degree, double alpha, double beta, double x) {
  if (degree < 0) fail(ErrorCode::DomainError, "jacobi degree must be >= 0");
  double prev = 1.0;
  if (degree == 0) return prev;
  double cur = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  const double ab = alpha + beta;
  for (int n = 2; n <= degree; ++n) {
    const double c = 2.0 * n + ab;
    const double a1 = 2.0 * n * (n + ab) * (c - 2.0);
    const double a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
    const double a3 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c;
    const double next = (a2 * cur - a3 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_gamma(double x) {
  if (!(x > 0.0)) fail(ErrorCode::DomainError, "log_gamma needs x > 0");
  if (x <= 21.0 && x == std::floor(x)) {
    double factorial = 1.0;  // (x-1)! is exact in binary64 up to 20!
    for (int k = 2; k < static_cast<int>(x); ++k) factorial *= k;
    return std::log(factorial);
  }
  return std::lgamma(x);
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) fail(ErrorCode::BadParameter, "gauss_legendre order must be >= 1");
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p1 = z;
        p0 = 1.0;
      }
      derivative = order * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / derivative;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (order == 1) {
      z = 0.0;
      derivative = 1.0;
    }
    const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule.nodes[order - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[order - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

}  // namespace orbiquant
