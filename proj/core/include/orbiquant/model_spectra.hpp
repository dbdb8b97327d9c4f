#pragma once

#include "orbiquant/eigenfunction.hpp"
#include "orbiquant/quantization.hpp"
#include "orbiquant/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace orbiquant {

// ---------------------------------------------------------------------------
// Sector labels

/// Z_n weight q on a cone-type model, 0 <= q < n.
struct CyclicWeight {
  std::int64_t q;
  std::int64_t n;
};

/// Flat holonomy exp(2 pi i alpha) on S^1/Z_n, alpha in [0, 1).
struct FlatHolonomy {
  Rational alpha;
  std::int64_t n;
};

enum class MirrorKind { NN, DD, ND, DN };

std::string to_string(MirrorKind kind);
MirrorKind parse_mirror_kind(const std::string& text);

/// One-dimensional sector of [C/D_n]; ND and DN exist only for even n.
struct DihedralScalar {
  MirrorKind kind;
  std::int64_t n;
};

/// Two-dimensional sector of [C/D_n], 1 <= q <= floor((n-1)/2).
struct DihedralDoublet {
  std::int64_t q;
  std::int64_t n;
};

/// Kaluza-Klein charge for S^3 -> S^2(n,m), gcd(n,m) = 1.
struct KKCharge {
  std::int64_t charge;
  std::int64_t n;
  std::int64_t m;
};

using SectorLabel = std::variant<CyclicWeight, FlatHolonomy, DihedralScalar, DihedralDoublet, KKCharge>;
using DihedralSector = std::variant<DihedralScalar, DihedralDoublet>;

// Validating constructors; each throws InvalidSector (or NotCoprime).
CyclicWeight cyclic_weight(std::int64_t q, std::int64_t n);
FlatHolonomy flat_holonomy(const Rational& alpha, std::int64_t n);
DihedralScalar dihedral_scalar(MirrorKind kind, std::int64_t n);
DihedralDoublet dihedral_doublet(std::int64_t q, std::int64_t n);
KKCharge kk_charge(std::int64_t charge, std::int64_t n, std::int64_t m);

/// "NN", "DD", "ND", "DN" or "doublet:<q>".
DihedralSector parse_dihedral_sector(const std::string& text, std::int64_t n);

std::string describe(const SectorLabel& sector);

// ---------------------------------------------------------------------------
// Spectral lines

struct Degeneracy {
  enum class Kind { Finite, InfiniteRadialMultiplicity, Continuum };
  Kind kind = Kind::Finite;
  std::int64_t count = 0;  // meaningful for Finite only

  static Degeneracy finite(std::int64_t count) { return {Kind::Finite, count}; }
  static Degeneracy continuum() { return {Kind::Continuum, 0}; }
  static Degeneracy infinite_radial() { return {Kind::InfiniteRadialMultiplicity, 0}; }
};

using QuantumNumbers = std::map<std::string, std::int64_t>;

/// One energy level. `quantum_numbers` labels the level, `states` lists the
/// quantum numbers of every state in it (size == degeneracy when finite).
struct SpectralLine {
  double energy = 0.0;
  QuantumNumbers quantum_numbers;
  Degeneracy degeneracy;
  std::vector<QuantumNumbers> states;
};

// ---------------------------------------------------------------------------
// S^1 / Z_n

/// E_l = (hbar^2/2M) (2 pi n / L)^2 (l + alpha)^2 for l in range, levels
/// merged by |l + alpha| (exact), ascending.
std::vector<SpectralLine> circle_spectrum(const PhysicalParams& params, const FlatHolonomy& sector, IntRange l_range);

// ---------------------------------------------------------------------------
// Planar cone C / Z_n

/// Delta-normalized sqrt(n k / 2 pi) J_|m|(k r) e^{i m phi}, m = q + n l,
/// Friedrichs at the apex. The radial factor is sqrt(k) J_|m|(k r), the
/// angular one carries sqrt(n / 2 pi). ode_parameters: k, nu, energy.
EigenfunctionEvaluator cone_free_eigenfunction(std::int64_t n, const CyclicWeight& sector, std::int64_t l, double k,
                                               const PhysicalParams& params = {});

/// Levels E = hbar omega (2 n_r + |m| + 1) <= e_max with m = q (mod n).
std::vector<SpectralLine> cone_oscillator_spectrum(std::int64_t n, const CyclicWeight& sector,
                                                   const PhysicalParams& params, double e_max);

/// N r^|m| exp(-beta r^2 / 2) L_{n_r}^{|m|}(beta r^2) e^{i m phi} on the
/// wedge of angle 2 pi / n, beta = M omega / hbar.
EigenfunctionEvaluator cone_oscillator_wavefunction(std::int64_t n, std::int64_t n_r, std::int64_t m,
                                                    const PhysicalParams& params);

/// sqrt(n beta^{|m|+1} / pi * n_r! / Gamma(n_r + |m| + 1)).
double cone_oscillator_normalization(std::int64_t n, std::int64_t n_r, std::int64_t m, double beta);

// ---------------------------------------------------------------------------
// Football S^2(n,n) = S^2 / Z_n

/// g_l^(q) = floor((l - q)/n) + floor((l + q)/n) + 1.
std::int64_t football_degeneracy(std::int64_t n, std::int64_t q, std::int64_t l);

/// E_l = hbar^2 l (l+1) / 2I for 0 <= l <= l_max, empty levels omitted.
std::vector<SpectralLine> football_spectrum(std::int64_t n, const CyclicWeight& sector, const PhysicalParams& params,
                                            std::int64_t l_max);

// ---------------------------------------------------------------------------
// Orbisphere S^2(n,m), gcd(n,m) = 1, via S^3 reduction

struct SnmState {
  std::int64_t k1;
  std::int64_t k2;
  std::int64_t nu;
};

/// States at level K in charge sector Q, walking the Diophantine line
/// k1 = k1_0 + m l, k2 = k2_0 - n l over the window |k1| + |k2| <= K.
std::vector<SnmState> snm_level_states(std::int64_t n, std::int64_t m, std::int64_t charge, std::int64_t level);

struct SnmGroundLevel {
  std::int64_t k_min;
  std::int64_t k1;
  std::int64_t k2;
};

/// K_min(Q) = min |k1| + |k2| over n k1 + m k2 = Q.
SnmGroundLevel snm_ground_level(std::int64_t n, std::int64_t m, std::int64_t charge);

/// E_K = hbar^2 K (K + 2) / 2I for 0 <= K <= k_max, empty levels omitted.
std::vector<SpectralLine> snm_spectrum(std::int64_t n, std::int64_t m, const KKCharge& sector,
                                       const PhysicalParams& params, std::int64_t k_max);

/// Unnormalized f(x) = (1-x)^{|k2|/2} (1+x)^{|k1|/2} P_nu^{(|k2|,|k1|)}(x)
/// on [-1, 1]. ode_parameters: k1, k2, nu, lambda = K (K + 2).
EigenfunctionEvaluator snm_wavefunction(std::int64_t k1, std::int64_t k2, std::int64_t nu);

// ---------------------------------------------------------------------------
// Dihedral cone C / D_n

/// First `count` allowed Bessel orders, ascending.
std::vector<std::int64_t> dihedral_angular_orders(const DihedralSector& sector, std::int64_t count);

/// Wedge [0, pi/n]. Scalar: sqrt(k) C_j J_nu(k r) cos|sin(nu phi), C_0 = 1/sqrt(alpha)
/// for the NN constant mode, else sqrt(2/alpha). Doublet (real u/v basis):
/// sqrt(k/alpha) J_nu(k r) (cos(nu phi) u +- sin(nu phi) v), + on nu = q (mod n).
/// The radial factor is sqrt(k) J_nu(k r); C_j (or 1/sqrt(alpha)) sits in the
/// angular factor, so angular-only inner products are 1 on the diagonal.
EigenfunctionEvaluator dihedral_eigenfunction(const DihedralSector& sector, std::int64_t nu, double k);

/// Doublet in the chiral basis where r is diagonal:
/// sqrt(k / 2 alpha) J_nu(k r) (e^{+-i nu phi}, e^{-+i nu phi}).
EigenfunctionEvaluator dihedral_doublet_chiral(const DihedralDoublet& sector, std::int64_t nu, double k);

}  // namespace orbiquant
