#pragma once

#include "orbiquant/orbifold.hpp"
#include "orbiquant/picard.hpp"
#include "orbiquant/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbiquant {

/// Physical constants shared by the quantization rules and the spectra.
/// Every field is positive except charge and monopole_strength.
struct PhysicalParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double inertia = 1.0;
  double circumference = 1.0;
  double charge = 1.0;
  double monopole_strength = 0.0;

  /// Throws BadParameter if a declared-positive field is not strictly positive.
  void validate() const;
};

/// Inclusive integer range [lo, hi].
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Relative tolerance for the physical-unit integrality checks.
inline constexpr double kIntegralityTolerance = 1e-9;

struct IntegralityCheck {
  std::int64_t quanta = 0;  // nearest integer
  bool ok = false;
  double value = 0.0;       // the raw real number tested
};

struct PrequantumSector {
  SeifertData bundle;
  std::string flat_label;
};

/// All normalized (d0; a, b) over S^2(n,m) with d0 + a/n + b/m = flux, in
/// ascending (a, b) order. Orders of 1 are smooth points. Throws NotIntegral
/// when flux is outside (1/lcm(n,m)) Z.
std::vector<PrequantumSector> prequantize_orbisphere(std::int64_t n, std::int64_t m, const Rational& flux);

/// 2 e g / hbar in Z.
IntegralityCheck dirac_condition(double charge, double monopole_strength, double hbar);

/// e B A / (2 pi hbar) in Z.
IntegralityCheck torus_flux_quanta(double field, double area, double charge, double hbar);

/// p_l = hbar n (l + alpha) for the free quotient S^1/Z_n with flat holonomy alpha.
std::vector<double> bohr_sommerfeld_circle(const PhysicalParams& params, std::int64_t n, const Rational& alpha,
                                           IntRange l_range);

/// p_phi = hbar (a + n l) on the weight-a sector of [C/Z_n].
std::vector<double> bohr_sommerfeld_cone(std::int64_t n, std::int64_t weight, double hbar, IntRange l_range);

/// E_n = hbar omega (n + 1/2), n = 0..n_max (Maslov index 2 for the ellipse).
std::vector<double> bs_maslov_oscillator(const PhysicalParams& params, std::int64_t n_max);

/// K_X = (2g - 2; m_1 - 1, ..., m_k - 1).
SeifertData canonical_bundle(const OrbifoldSurface& surface);

struct HalfFormResult {
  bool exists = false;
  std::optional<SeifertData> delta;
  /// First even cone order when the half-form is obstructed.
  std::optional<std::int64_t> obstruction_order;
};

/// Square root of K_X on a genus-0 base with at most two cone points:
/// exists iff every cone order is odd, delta = (-1; (m_i - 1)/2, ...).
HalfFormResult half_form_bundle(const OrbifoldSurface& surface);

/// L tensor delta. Throws NoHalfForm when no half-form exists on L's base.
SeifertData metaplectic_correct(const SeifertData& bundle);

struct Monomial {
  std::int64_t a_exponent;  // A in z1^A z2^C
  std::int64_t c_exponent;  // C
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct WeightedSectionCount {
  std::int64_t count = 0;
  std::vector<Monomial> monomials;
};

/// Monomials z1^A z2^C of weight nA + mC = q on P(n,m). Throws NotCoprime.
WeightedSectionCount weighted_section_count(std::int64_t n, std::int64_t m, std::int64_t q);

struct FootballSections {
  std::int64_t dim = 0;
  std::vector<std::int64_t> exponents;  // C with z^C invariant
};

/// Invariant monomials z^C, 0 <= C <= N_phi, C = a mod n, on S^2(n,n).
FootballSections football_section_dim(std::int64_t n, std::int64_t n_phi, std::int64_t weight);

struct CorrectedSectionCount {
  std::int64_t count = 0;
  std::int64_t shifted_q = 0;
};

/// Half-form corrected count on P(n,m): q -> q - (n+m)/2. Throws NotCoprime,
/// then NoHalfForm when n + m is odd.
CorrectedSectionCount corrected_weighted_section_count(std::int64_t n, std::int64_t m, std::int64_t q);

/// Correction data for the non-compact examples where the Seifert formalism
/// does not apply (vertical polarization on [C/Z_n], cotangent [T*C/D_n]).
struct PolarizationCorrection {
  bool genuine_half_form = false;
  bool half_density_substitute = false;
  bool extra_equivariant_phase = false;
  std::string note;
};

PolarizationCorrection vertical_polarization_correction(const Model& model);

}  // namespace orbiquant
