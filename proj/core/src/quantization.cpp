#include "orbiquant/quantization.hpp"

#include "orbiquant/error.hpp"

#include <cmath>
#include <numbers>

namespace orbiquant {

void PhysicalParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::BadParameter, std::string(name) + " must be > 0");
  };
  positive(hbar, "hbar");
  positive(mass, "mass");
  positive(omega, "omega");
  positive(inertia, "inertia");
  positive(circumference, "circumference");
}

namespace {

IntegralityCheck integrality(double value) {
  IntegralityCheck out;
  out.value = value;
  const double nearest = std::nearbyint(value);
  out.quanta = static_cast<std::int64_t>(nearest);
  out.ok = std::abs(value - nearest) <= kIntegralityTolerance * std::max(1.0, std::abs(value));
  return out;
}

void require_range(IntRange r) {
  if (r.hi < r.lo) fail(ErrorCode::BadParameter, "empty range");
}

}  // namespace

std::vector<PrequantumSector> prequantize_orbisphere(std::int64_t n, std::int64_t m, const Rational& flux) {
  const auto base = OrbifoldSurface::orbisphere(n, m);
  const auto lattice = lcm64(n, m);
  if (!(flux * Rational(lattice)).is_integer()) {
    fail(ErrorCode::NotIntegral, "flux " + flux.to_string() + " not in (1/" + std::to_string(lattice) +
                                     ")Z for S^2(" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  // enumerate the local weights; d0 is forced
  std::vector<SeifertData> found;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      const Rational rest = flux - Rational(a, n) - Rational(b, m);
      if (!rest.is_integer()) continue;
      std::vector<std::int64_t> weights;
      if (n > 1) weights.push_back(a);
      if (m > 1) weights.push_back(b);
      found.emplace_back(base, to_int64(rest.numerator()), std::move(weights));
    }
  }

  std::vector<SeifertData> twists;
  if (base.cone_orders().size() == 2) twists = flat_sectors(base);

  std::vector<PrequantumSector> out;
  for (const auto& bundle : found) {
    std::string label = "untwisted";
    if (!twists.empty()) {
      // sectors differ from the first one by a flat bundle F_r
      const auto quotient = tensor(bundle, inverse(found.front()));
      for (std::size_t r = 0; r < twists.size(); ++r) {
        if (twists[r] == quotient) label = "flat twist r=" + std::to_string(r);
      }
    }
    out.push_back({bundle, label});
  }
  return out;
}

IntegralityCheck dirac_condition(double charge, double monopole_strength, double hbar) {
  if (!(hbar > 0.0)) fail(ErrorCode::BadParameter, "hbar must be > 0");
  return integrality(2.0 * charge * monopole_strength / hbar);
}

IntegralityCheck torus_flux_quanta(double field, double area, double charge, double hbar) {
  if (!(hbar > 0.0)) fail(ErrorCode::BadParameter, "hbar must be > 0");
  if (!(area > 0.0)) fail(ErrorCode::BadParameter, "area must be > 0");
  return integrality(charge * field * area / (2.0 * std::numbers::pi * hbar));
}

std::vector<double> bohr_sommerfeld_circle(const PhysicalParams& params, std::int64_t n, const Rational& alpha,
                                           IntRange l_range) {
  params.validate();
  if (n < 1) fail(ErrorCode::BadParameter, "n must be >= 1");
  require_range(l_range);
  const Rational twist = alpha.mod1();
  std::vector<double> out;
  for (auto l = l_range.lo; l <= l_range.hi; ++l) {
    out.push_back(params.hbar * (Rational(n) * (Rational(l) + twist)).to_double());
  }
  return out;
}

std::vector<double> bohr_sommerfeld_cone(std::int64_t n, std::int64_t weight, double hbar, IntRange l_range) {
  if (!(hbar > 0.0)) fail(ErrorCode::BadParameter, "hbar must be > 0");
  if (n < 1) fail(ErrorCode::BadParameter, "n must be >= 1");
  if (weight < 0 || weight >= n) fail(ErrorCode::BadParameter, "weight must satisfy 0 <= a < n");
  require_range(l_range);
  std::vector<double> out;
  for (auto l = l_range.lo; l <= l_range.hi; ++l) {
    out.push_back(hbar * static_cast<double>(checked_add(weight, checked_mul(n, l))));
  }
  return out;
}

std::vector<double> bs_maslov_oscillator(const PhysicalParams& params, std::int64_t n_max) {
  params.validate();
  if (n_max < 0) fail(ErrorCode::BadParameter, "n_max must be >= 0");
  std::vector<double> out;
  const double quantum = params.hbar * params.omega;
  for (std::int64_t k = 0; k <= n_max; ++k) out.push_back(quantum * (static_cast<double>(k) + 0.5));
  return out;
}

SeifertData canonical_bundle(const OrbifoldSurface& surface) {
  if (!surface.is_closed()) fail(ErrorCode::MirrorVariant, "canonical bundle needs a closed base");
  std::vector<std::int64_t> weights;
  for (auto m : surface.cone_orders()) weights.push_back(m - 1);
  return SeifertData(surface, 2 * surface.genus() - 2, std::move(weights));
}

HalfFormResult half_form_bundle(const OrbifoldSurface& surface) {
  if (!surface.is_closed()) fail(ErrorCode::MirrorVariant, "half-form needs a closed base");
  if (surface.genus() != 0 || surface.cone_orders().size() > 2) {
    fail(ErrorCode::UnsupportedBase, "half-form criterion tabulated only for genus 0 with <= 2 cone points, got " +
                                         surface.label());
  }
  HalfFormResult out;
  std::vector<std::int64_t> weights;
  for (auto m : surface.cone_orders()) {
    // 2l = m - 1 (mod m) is solvable iff m is odd
    if (m % 2 == 0) {
      out.obstruction_order = m;
      return out;
    }
    weights.push_back((m - 1) / 2);
  }
  out.exists = true;
  out.delta = SeifertData(surface, -1, std::move(weights));
  return out;
}

SeifertData metaplectic_correct(const SeifertData& bundle) {
  const auto half = half_form_bundle(bundle.base());
  if (!half.exists) {
    fail(ErrorCode::NoHalfForm, "even cone order " + std::to_string(*half.obstruction_order) + " on " +
                                    bundle.base().label() + " obstructs the half-form");
  }
  return tensor(bundle, *half.delta);
}

WeightedSectionCount weighted_section_count(std::int64_t n, std::int64_t m, std::int64_t q) {
  if (n < 1 || m < 1) fail(ErrorCode::BadParameter, "weights must be >= 1");
  if (gcd64(n, m) != 1) fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
  WeightedSectionCount out;
  if (q < 0) return out;
  for (std::int64_t a = 0; a <= q / n; ++a) {
    const auto rest = q - n * a;
    if (rest % m == 0) out.monomials.push_back({a, rest / m});
  }
  out.count = static_cast<std::int64_t>(out.monomials.size());
  return out;
}

FootballSections football_section_dim(std::int64_t n, std::int64_t n_phi, std::int64_t weight) {
  if (n < 1) fail(ErrorCode::BadParameter, "n must be >= 1");
  if (weight < 0 || weight >= n) fail(ErrorCode::BadParameter, "weight must satisfy 0 <= a < n");
  FootballSections out;
  if (n_phi < 0 || n_phi < weight) return out;
  // N_phi - a = n d0 + b, so the invariant exponents are a, a + n, ..., a + d0 n
  const auto d0 = floor_div(n_phi - weight, n);
  for (std::int64_t j = 0; j <= d0; ++j) out.exponents.push_back(weight + j * n);
  out.dim = d0 + 1;
  return out;
}

CorrectedSectionCount corrected_weighted_section_count(std::int64_t n, std::int64_t m, std::int64_t q) {
  if (n < 1 || m < 1) fail(ErrorCode::BadParameter, "weights must be >= 1");
  if (gcd64(n, m) != 1) fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
  if ((n + m) % 2 != 0) {
    fail(ErrorCode::NoHalfForm, "n + m = " + std::to_string(n + m) + " is odd; even cone order " +
                                    std::to_string(n % 2 == 0 ? n : m) + " obstructs the half-form");
  }
  CorrectedSectionCount out;
  out.shifted_q = q - (n + m) / 2;
  out.count = weighted_section_count(n, m, out.shifted_q).count;
  return out;
}

PolarizationCorrection vertical_polarization_correction(const Model& model) {
  PolarizationCorrection out;
  switch (model.family) {
    case Model::Family::Cone:
      if (model.n < 2) fail(ErrorCode::BadParameter, "cone needs n >= 2");
      out.genuine_half_form = true;
      out.note = "K_P = <dp> is Z_n-invariant; trivial square root, no extra phase";
      return out;
    case Model::Family::CircleQuotient:
      if (model.n < 1) fail(ErrorCode::BadParameter, "circle quotient needs n >= 1");
      out.genuine_half_form = true;
      out.note = "horizontal leaves are smooth circles; half-form and Maslov phases vanish";
      return out;
    case Model::Family::DihedralCone:
      if (model.n < 2) fail(ErrorCode::BadParameter, "dihedral cone needs n >= 2");
      out.half_density_substitute = true;
      out.note = "reflections obstruct an equivariant half-form; the transverse half-density is equivariantly trivial";
      return out;
    default:
      break;
  }
  fail(ErrorCode::UnsupportedModel, "no vertical-polarization data for " + to_string(model.family));
}

}  // namespace orbiquant
