#pragma once

#include <vector>

namespace orbiquant {

/// Bessel function of the first kind J_order(x) for integer order >= 0 and
/// x >= 0.
///
/// Small arguments (x <= 2, or x^2/4 <= order + 1, where the ascending series
/// has no cancellation) use the power series; everything else uses Miller's
/// backward recurrence normalized by J_0 + 2 sum_k J_2k = 1. Deep-underflow
/// values return 0.
double bessel_j(int order, double x);

/// Generalized Laguerre polynomial L_p^(alpha)(x) by three-term recurrence.
double laguerre(int degree, double alpha, double x);

/// Jacobi polynomial P_nu^(alpha,beta)(x) by three-term recurrence.
double jacobi(int degree, double alpha, double beta, double x);

/// log Gamma(x) for x > 0. Integer arguments up to 21 return log of the exact
/// factorial. Throws DomainError for x <= 0.
double log_gamma(double x);

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, in (-1, 1)
  std::vector<double> weights;  // positive, summing to 2
  int order = 0;

  /// Integrate f over [a, b] with the affinely mapped rule.
  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

/// N-point Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration on P_N.
QuadratureRule gauss_legendre(int order);

}  // namespace orbiquant
