#pragma once

#include "orbiquant/eigenfunction.hpp"
#include "orbiquant/orbifold.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Independent checks for the closed forms. Brute counts use plain integer
// scans and never call the formulas they validate; the numerical checks use
// only special_functions.

namespace orbiquant {

/// #{m in [-l, l] : m = q (mod n)} by scanning.
std::int64_t brute_degeneracy_football(std::int64_t n, std::int64_t q, std::int64_t l);

struct SnmWitness {
  std::int64_t k1;
  std::int64_t k2;
  std::int64_t nu;
};

struct BruteSnmCount {
  std::int64_t count = 0;
  std::vector<SnmWitness> witnesses;  // ascending k1
};

/// Box scan |k1|, |k2| <= K of n k1 + m k2 = Q with K - |k1| - |k2| even and >= 0.
BruteSnmCount brute_degeneracy_snm(std::int64_t n, std::int64_t m, std::int64_t charge, std::int64_t level);

/// #{(A, C) >= 0 : n A + m C = q} by a double scan.
std::int64_t brute_monomial_count(std::int64_t n, std::int64_t m, std::int64_t q);

/// #{C in [0, N_phi] : C = a (mod n)}: invariant monomials z^C on the football.
std::int64_t brute_football_section_count(std::int64_t n, std::int64_t n_phi, std::int64_t weight);

/// Radial truncation for oscillator quadrature: beta r_max^2 = 80.
inline constexpr double kOscillatorTailExponent = 80.0;

struct InnerProductSpec {
  enum class Mode { Full, AngularOnly };
  Mode mode = Mode::Full;
  int radial_nodes = 200;
  /// Required for non-oscillator wedge models in Full mode.
  std::optional<double> r_max;
};

/// <eval1, eval2>: Gauss-Legendre in the radial (or interval) variable, angular
/// integrals in closed form, summed over components. AngularOnly returns
/// sum_c int conj(A1_c) A2_c dphi. Throws DomainMismatch for evaluators on
/// different models, domains or component counts.
std::complex<double> orthonormality_check(const EigenfunctionEvaluator& eval1, const EigenfunctionEvaluator& eval2,
                                          const InnerProductSpec& spec = {});

enum class OdeTag { ConeBessel, OscRadial, SnmRadialX };

std::string to_string(OdeTag tag);
OdeTag parse_ode_tag(const std::string& text);  // cone_bessel | osc_radial | snm_radial_x

/// Finite-difference step used at coordinate u.
double ode_step(const EigenfunctionEvaluator& evaluator, double u);

/// Max over samples of |residual| / (max |term| + eps) with fourth-order
/// central differences. Throws BadSamplePoints when the stencil leaves the
/// domain and DomainMismatch when the tag does not fit the evaluator.
double ode_residual(const EigenfunctionEvaluator& evaluator, OdeTag tag, const std::vector<double>& samples);

/// `count` equally spaced points on [lo, hi], endpoints included.
std::vector<double> sample_points(double lo, double hi, std::size_t count);

struct GroupLawReport {
  std::string base;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::vector<std::string> counterexamples;  // "<law>: <bundles>"
};

/// Random normalized triples over `base`, checking associativity,
/// commutativity, identity, inverse and degree additivity exactly. Shard s
/// draws from mt19937_64(seed + s); output is independent of thread timing.
GroupLawReport group_law_fuzz(const OrbifoldSurface& base, std::int64_t trials, std::uint64_t seed,
                              int shards = 1);

}  // namespace orbiquant
