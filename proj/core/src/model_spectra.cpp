#include "orbiquant/model_spectra.hpp"

#include "orbiquant/error.hpp"
#include "orbiquant/orbifold.hpp"
#include "orbiquant/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace orbiquant {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order(std::int64_t n) {
  if (n < 1) fail(ErrorCode::BadParameter, "n must be >= 1, got " + std::to_string(n));
}

std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) fail(ErrorCode::Overflow, "integer magnitude overflow");
  return v < 0 ? -v : v;
}

// x, y with a x + b y = gcd(a, b), a, b >= 1
std::pair<std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  return {x0, y0};
}

struct DiophantineLine {
  std::int64_t k1;  // k1(l) = k1 + m l
  std::int64_t k2;  // k2(l) = k2 - n l
};

DiophantineLine diophantine_line(std::int64_t n, std::int64_t m, std::int64_t charge) {
  require_order(n);
  require_order(m);
  if (gcd64(n, m) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
  const auto [x, y] = extended_gcd(n, m);
  // reduce k1 into [0, m) so the particular solution stays small
  const std::int64_t k1 = floor_mod(checked_mul(floor_mod(x, m), floor_mod(charge, m)), m);
  const std::int64_t rest = checked_add(charge, -checked_mul(n, k1));
  return {k1, rest / m};
}

double circle_prefactor(const PhysicalParams& p) {
  const double k = 2.0 * kPi / p.circumference;
  return p.hbar * p.hbar / (2.0 * p.mass) * k * k;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sector labels

std::string to_string(MirrorKind kind) {
  switch (kind) {
    case MirrorKind::NN: return "NN";
    case MirrorKind::DD: return "DD";
    case MirrorKind::ND: return "ND";
    case MirrorKind::DN: return "DN";
  }
  return "?";
}

MirrorKind parse_mirror_kind(const std::string& text) {
  if (text == "NN") return MirrorKind::NN;
  if (text == "DD") return MirrorKind::DD;
  if (text == "ND") return MirrorKind::ND;
  if (text == "DN") return MirrorKind::DN;
  fail(ErrorCode::InvalidSector, "unknown mirror sector '" + text + "'");
}

CyclicWeight cyclic_weight(std::int64_t q, std::int64_t n) {
  if (n < 1) fail(ErrorCode::InvalidSector, "n must be >= 1");
  if (q < 0 || q >= n)
    fail(ErrorCode::InvalidSector, "weight q=" + std::to_string(q) + " outside [0," + std::to_string(n) + ")");
  return {q, n};
}

FlatHolonomy flat_holonomy(const Rational& alpha, std::int64_t n) {
  if (n < 1) fail(ErrorCode::InvalidSector, "n must be >= 1");
  return {alpha.mod1(), n};
}

DihedralScalar dihedral_scalar(MirrorKind kind, std::int64_t n) {
  if (n < 2) fail(ErrorCode::InvalidSector, "dihedral order n must be >= 2");
  if ((kind == MirrorKind::ND || kind == MirrorKind::DN) && n % 2 != 0)
    fail(ErrorCode::InvalidSector, to_string(kind) + " sector needs even n, got n=" + std::to_string(n));
  return {kind, n};
}

DihedralDoublet dihedral_doublet(std::int64_t q, std::int64_t n) {
  if (n < 2) fail(ErrorCode::InvalidSector, "dihedral order n must be >= 2");
  if (q < 1 || q > (n - 1) / 2)
    fail(ErrorCode::InvalidSector,
         "doublet label q=" + std::to_string(q) + " outside [1," + std::to_string((n - 1) / 2) + "]");
  return {q, n};
}

KKCharge kk_charge(std::int64_t charge, std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) fail(ErrorCode::InvalidSector, "orbisphere orders must be >= 1");
  if (gcd64(n, m) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
  return {charge, n, m};
}

DihedralSector parse_dihedral_sector(const std::string& text, std::int64_t n) {
  const std::string prefix = "doublet:";
  if (text.rfind(prefix, 0) == 0) {
    std::int64_t q = 0;
    try {
      std::size_t used = 0;
      q = std::stoll(text.substr(prefix.size()), &used);
      if (used != text.size() - prefix.size()) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
      fail(ErrorCode::InvalidSector, "bad doublet label '" + text + "'");
    }
    return dihedral_doublet(q, n);
  }
  return dihedral_scalar(parse_mirror_kind(text), n);
}

std::string describe(const SectorLabel& sector) {
  struct Visitor {
    std::string operator()(const CyclicWeight& s) const {
      return "q=" + std::to_string(s.q) + " (mod " + std::to_string(s.n) + ")";
    }
    std::string operator()(const FlatHolonomy& s) const {
      return "alpha=" + s.alpha.to_string() + " n=" + std::to_string(s.n);
    }
    std::string operator()(const DihedralScalar& s) const { return to_string(s.kind) + " n=" + std::to_string(s.n); }
    std::string operator()(const DihedralDoublet& s) const {
      return "doublet q=" + std::to_string(s.q) + " n=" + std::to_string(s.n);
    }
    std::string operator()(const KKCharge& s) const {
      return "Q=" + std::to_string(s.charge) + " (n,m)=(" + std::to_string(s.n) + "," + std::to_string(s.m) + ")";
    }
  };
  return std::visit(Visitor{}, sector);
}

// ---------------------------------------------------------------------------
// S^1 / Z_n

std::vector<SpectralLine> circle_spectrum(const PhysicalParams& params, const FlatHolonomy& sector,
                                          IntRange l_range) {
  params.validate();
  if (sector.n < 2) fail(ErrorCode::InvalidSector, "circle quotient needs n >= 2");
  if (l_range.lo > l_range.hi) fail(ErrorCode::BadParameter, "empty l range");
  const Rational alpha = sector.alpha.mod1();
  const std::int64_t num = to_int64(alpha.numerator());
  const std::int64_t den = to_int64(alpha.denominator());

  // exact key |l den + num| = den |l + alpha|
  std::map<std::int64_t, std::vector<std::int64_t>> groups;
  for (auto l = l_range.lo; l <= l_range.hi; ++l) groups[abs64(checked_add(checked_mul(l, den), num))].push_back(l);

  const double prefactor = circle_prefactor(params);
  std::vector<SpectralLine> out;
  for (const auto& [key, ls] : groups) {
    const double w = (Rational(sector.n) * (Rational(ls.front()) + alpha)).to_double();
    SpectralLine line;
    line.energy = prefactor * w * w;
    line.quantum_numbers = {{"l", ls.front()}};
    line.degeneracy = Degeneracy::finite(static_cast<std::int64_t>(ls.size()));
    for (auto l : ls) line.states.push_back({{"l", l}});
    out.push_back(std::move(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Planar cone

EigenfunctionEvaluator cone_free_eigenfunction(std::int64_t n, const CyclicWeight& sector, std::int64_t l, double k,
                                               const PhysicalParams& params) {
  require_order(n);
  if (sector.n != n) fail(ErrorCode::InvalidSector, "sector order does not match n");
  if (!(k > 0.0) || !std::isfinite(k)) fail(ErrorCode::BadParameter, "k must be > 0");
  params.validate();
  const std::int64_t m = checked_add(sector.q, checked_mul(n, l));
  const std::int64_t nu = abs64(m);
  if (nu > INT32_MAX) fail(ErrorCode::Overflow, "Bessel order too large");
  const double norm = std::sqrt(static_cast<double>(n) * k / (2.0 * kPi));
  const int order = static_cast<int>(nu);
  Domain domain{Domain::Kind::Wedge, 2.0 * kPi / static_cast<double>(n), 0.0, 0.0};
  return EigenfunctionEvaluator(
      ModelTag::ConeFree, {{"n", n}, {"q", sector.q}, {"l", l}, {"m", m}}, norm, domain,
      [order, k](double r) { return std::sqrt(k) * bessel_j(order, k * r); },
      {FourierSum::exponential(static_cast<double>(m), std::sqrt(static_cast<double>(n) / (2.0 * kPi)))},
      {{"k", k}, {"nu", static_cast<double>(nu)}, {"energy", params.hbar * params.hbar * k * k / (2.0 * params.mass)}});
}

std::vector<SpectralLine> cone_oscillator_spectrum(std::int64_t n, const CyclicWeight& sector,
                                                   const PhysicalParams& params, double e_max) {
  require_order(n);
  if (sector.n != n) fail(ErrorCode::InvalidSector, "sector order does not match n");
  params.validate();
  if (!std::isfinite(e_max)) fail(ErrorCode::BadParameter, "e_max must be finite");
  const double quantum = params.hbar * params.omega;
  // E = quantum (N + 1) <= e_max, with slack for e_max given as an exact level
  const double top = std::floor(e_max / quantum - 1.0 + 1e-9);
  std::vector<SpectralLine> out;
  if (top < 0.0) return out;
  if (top > 1e6) fail(ErrorCode::BadParameter, "e_max admits too many levels");
  const auto n_max = static_cast<std::int64_t>(top);
  for (std::int64_t big_n = 0; big_n <= n_max; ++big_n) {
    SpectralLine line;
    line.energy = quantum * static_cast<double>(big_n + 1);
    line.quantum_numbers = {{"N", big_n}};
    for (std::int64_t m = -big_n; m <= big_n; ++m) {
      if ((big_n - abs64(m)) % 2 != 0 || floor_mod(m - sector.q, n) != 0) continue;
      line.states.push_back({{"n_r", (big_n - abs64(m)) / 2}, {"m", m}});
    }
    if (line.states.empty()) continue;
    line.degeneracy = Degeneracy::finite(static_cast<std::int64_t>(line.states.size()));
    out.push_back(std::move(line));
  }
  return out;
}

double cone_oscillator_normalization(std::int64_t n, std::int64_t n_r, std::int64_t m, double beta) {
  require_order(n);
  if (n_r < 0) fail(ErrorCode::BadParameter, "n_r must be >= 0");
  if (!(beta > 0.0)) fail(ErrorCode::BadParameter, "beta must be > 0");
  const auto am = static_cast<double>(abs64(m));
  const auto nr = static_cast<double>(n_r);
  const double log_norm = 0.5 * (std::log(static_cast<double>(n)) + (am + 1.0) * std::log(beta) - std::log(kPi) +
                                 log_gamma(nr + 1.0) - log_gamma(nr + am + 1.0));
  return std::exp(log_norm);
}

EigenfunctionEvaluator cone_oscillator_wavefunction(std::int64_t n, std::int64_t n_r, std::int64_t m,
                                                    const PhysicalParams& params) {
  params.validate();
  const double beta = params.mass * params.omega / params.hbar;
  const double norm = cone_oscillator_normalization(n, n_r, m, beta);
  const std::int64_t am = abs64(m);
  if (am > INT32_MAX || n_r > INT32_MAX) fail(ErrorCode::Overflow, "quantum numbers too large");
  const double log_norm = std::log(norm);
  const int degree = static_cast<int>(n_r);
  const auto alpha = static_cast<double>(am);
  auto radial = [log_norm, degree, alpha, beta](double r) {
    const double x = beta * r * r;
    const double lag = laguerre(degree, alpha, x);
    if (r == 0.0) return alpha == 0.0 ? std::exp(log_norm) * lag : 0.0;
    // r^|m| e^{-x/2} in log form to survive large |m|
    return std::exp(log_norm + alpha * std::log(r) - 0.5 * x) * lag;
  };
  const double energy = params.hbar * params.omega * static_cast<double>(2 * n_r + am + 1);
  Domain domain{Domain::Kind::Wedge, 2.0 * kPi / static_cast<double>(n), 0.0, 0.0};
  return EigenfunctionEvaluator(ModelTag::ConeOscillator, {{"n", n}, {"n_r", n_r}, {"m", m}}, norm, domain, radial,
                                {FourierSum::exponential(static_cast<double>(m))},
                                {{"beta", beta},
                                 {"m", static_cast<double>(m)},
                                 {"energy", energy},
                                 {"hbar", params.hbar},
                                 {"mass", params.mass},
                                 {"omega", params.omega}});
}

// ---------------------------------------------------------------------------
// Football

std::int64_t football_degeneracy(std::int64_t n, std::int64_t q, std::int64_t l) {
  require_order(n);
  if (l < 0) fail(ErrorCode::BadParameter, "l must be >= 0");
  return floor_div(l - q, n) + floor_div(l + q, n) + 1;
}

std::vector<SpectralLine> football_spectrum(std::int64_t n, const CyclicWeight& sector, const PhysicalParams& params,
                                            std::int64_t l_max) {
  require_order(n);
  if (sector.n != n) fail(ErrorCode::InvalidSector, "sector order does not match n");
  params.validate();
  if (l_max < 0) fail(ErrorCode::BadParameter, "l_max must be >= 0");
  std::vector<SpectralLine> out;
  for (std::int64_t l = 0; l <= l_max; ++l) {
    const std::int64_t g = football_degeneracy(n, sector.q, l);
    if (g < 1) continue;
    SpectralLine line;
    line.energy = params.hbar * params.hbar * static_cast<double>(l) * static_cast<double>(l + 1) /
                  (2.0 * params.inertia);
    line.quantum_numbers = {{"l", l}};
    line.degeneracy = Degeneracy::finite(g);
    // smallest m >= -l with m = q (mod n)
    for (std::int64_t m = -l + floor_mod(sector.q + l, n); m <= l; m += n) line.states.push_back({{"m", m}});
    out.push_back(std::move(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbisphere

std::vector<SnmState> snm_level_states(std::int64_t n, std::int64_t m, std::int64_t charge, std::int64_t level) {
  const auto line = diophantine_line(n, m, charge);
  std::vector<SnmState> out;
  if (level < 0) return out;
  // |k1| <= K bounds l: -K <= k1 + m l <= K
  const std::int64_t lo = -floor_div(checked_add(level, line.k1), m);
  const std::int64_t hi = floor_div(checked_add(level, -line.k1), m);
  for (std::int64_t l = lo; l <= hi; ++l) {
    const std::int64_t k1 = line.k1 + m * l;
    const std::int64_t k2 = checked_add(line.k2, -checked_mul(n, l));
    const std::int64_t used = checked_add(abs64(k1), abs64(k2));
    if (used > level || (level - used) % 2 != 0) continue;
    out.push_back({k1, k2, (level - used) / 2});
  }
  return out;
}

SnmGroundLevel snm_ground_level(std::int64_t n, std::int64_t m, std::int64_t charge) {
  const auto line = diophantine_line(n, m, charge);
  // |k1 + m l| + |k2 - n l| is convex in l; its minimum sits next to a kink
  std::vector<std::int64_t> candidates;
  for (std::int64_t base : {floor_div(-line.k1, m), floor_div(line.k2, n)}) {
    candidates.push_back(base);
    candidates.push_back(base + 1);
  }
  std::optional<SnmGroundLevel> best;
  for (auto l : candidates) {
    const std::int64_t k1 = checked_add(line.k1, checked_mul(m, l));
    const std::int64_t k2 = checked_add(line.k2, -checked_mul(n, l));
    const SnmGroundLevel here{checked_add(abs64(k1), abs64(k2)), k1, k2};
    if (!best || std::tie(here.k_min, here.k1) < std::tie(best->k_min, best->k1)) best = here;
  }
  return *best;
}

std::vector<SpectralLine> snm_spectrum(std::int64_t n, std::int64_t m, const KKCharge& sector,
                                       const PhysicalParams& params, std::int64_t k_max) {
  if (sector.n != n || sector.m != m) fail(ErrorCode::InvalidSector, "sector orders do not match (n, m)");
  params.validate();
  if (k_max < 0) fail(ErrorCode::BadParameter, "k_max must be >= 0");
  std::vector<SpectralLine> out;
  for (std::int64_t big_k = 0; big_k <= k_max; ++big_k) {
    const auto states = snm_level_states(n, m, sector.charge, big_k);
    if (states.empty()) continue;
    SpectralLine line;
    line.energy = params.hbar * params.hbar * static_cast<double>(big_k) * static_cast<double>(big_k + 2) /
                  (2.0 * params.inertia);
    line.quantum_numbers = {{"K", big_k}};
    line.degeneracy = Degeneracy::finite(static_cast<std::int64_t>(states.size()));
    for (const auto& s : states) line.states.push_back({{"k1", s.k1}, {"k2", s.k2}, {"nu", s.nu}});
    out.push_back(std::move(line));
  }
  return out;
}

EigenfunctionEvaluator snm_wavefunction(std::int64_t k1, std::int64_t k2, std::int64_t nu) {
  if (nu < 0) fail(ErrorCode::BadParameter, "nu must be >= 0");
  const std::int64_t a1 = abs64(k1);
  const std::int64_t a2 = abs64(k2);
  if (nu > INT32_MAX) fail(ErrorCode::Overflow, "nu too large");
  const std::int64_t big_k = checked_add(checked_mul(2, nu), checked_add(a1, a2));
  const auto p1 = static_cast<double>(a1);
  const auto p2 = static_cast<double>(a2);
  const int degree = static_cast<int>(nu);
  auto profile = [p1, p2, degree](double x) {
    return std::pow(1.0 - x, 0.5 * p2) * std::pow(1.0 + x, 0.5 * p1) * jacobi(degree, p2, p1, x);
  };
  Domain domain{Domain::Kind::Interval, 0.0, -1.0, 1.0};
  const auto kd = static_cast<double>(big_k);
  return EigenfunctionEvaluator(ModelTag::SnmRadial, {{"k1", k1}, {"k2", k2}, {"nu", nu}, {"K", big_k}}, 1.0, domain,
                                profile, {FourierSum::exponential(0.0)},
                                {{"k1", static_cast<double>(k1)},
                                 {"k2", static_cast<double>(k2)},
                                 {"nu", static_cast<double>(nu)},
                                 {"lambda", kd * (kd + 2.0)}});
}

// ---------------------------------------------------------------------------
// Dihedral cone

std::vector<std::int64_t> dihedral_angular_orders(const DihedralSector& sector, std::int64_t count) {
  if (count < 0) fail(ErrorCode::BadParameter, "count must be >= 0");
  std::vector<std::int64_t> out;
  if (const auto* s = std::get_if<DihedralScalar>(&sector)) {
    const auto valid = dihedral_scalar(s->kind, s->n);
    std::int64_t first = 0;
    switch (valid.kind) {
      case MirrorKind::NN: first = 0; break;
      case MirrorKind::DD: first = valid.n; break;
      case MirrorKind::ND:
      case MirrorKind::DN: first = valid.n / 2; break;
    }
    for (std::int64_t j = 0; j < count; ++j) out.push_back(checked_add(first, checked_mul(valid.n, j)));
    return out;
  }
  const auto d = std::get<DihedralDoublet>(sector);
  const auto valid = dihedral_doublet(d.q, d.n);
  // q + n j < (n - q) + n j < q + n (j + 1)
  for (std::int64_t j = 0; static_cast<std::int64_t>(out.size()) < count; ++j) {
    out.push_back(checked_add(valid.q, checked_mul(valid.n, j)));
    if (static_cast<std::int64_t>(out.size()) < count)
      out.push_back(checked_add(valid.n - valid.q, checked_mul(valid.n, j)));
  }
  return out;
}

namespace {

struct DoubletLadder {
  DihedralDoublet sector;
  bool plus;  // nu = q (mod n)
};

DoubletLadder doublet_ladder(const DihedralDoublet& d, std::int64_t nu) {
  const auto valid = dihedral_doublet(d.q, d.n);
  if (nu >= 1 && floor_mod(nu - valid.q, valid.n) == 0) return {valid, true};
  if (nu >= 1 && floor_mod(nu + valid.q, valid.n) == 0) return {valid, false};
  fail(ErrorCode::OrderMismatch,
       "nu=" + std::to_string(nu) + " not allowed in doublet q=" + std::to_string(valid.q));
}

void require_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) fail(ErrorCode::BadParameter, "k must be > 0");
}

int bessel_order(std::int64_t nu) {
  if (nu > INT32_MAX) fail(ErrorCode::Overflow, "Bessel order too large");
  return static_cast<int>(nu);
}

}  // namespace

EigenfunctionEvaluator dihedral_eigenfunction(const DihedralSector& sector, std::int64_t nu, double k) {
  require_k(k);
  if (const auto* s = std::get_if<DihedralScalar>(&sector)) {
    const auto valid = dihedral_scalar(s->kind, s->n);
    const double alpha = kPi / static_cast<double>(valid.n);
    bool allowed = false;
    switch (valid.kind) {
      case MirrorKind::NN: allowed = nu >= 0 && nu % valid.n == 0; break;
      case MirrorKind::DD: allowed = nu >= valid.n && nu % valid.n == 0; break;
      case MirrorKind::ND:
      case MirrorKind::DN: allowed = nu > 0 && nu % valid.n == valid.n / 2; break;
    }
    if (!allowed)
      fail(ErrorCode::OrderMismatch, "nu=" + std::to_string(nu) + " not allowed in sector " + to_string(valid.kind));
    const double c = (valid.kind == MirrorKind::NN && nu == 0) ? 1.0 / std::sqrt(alpha) : std::sqrt(2.0 / alpha);
    const double norm = std::sqrt(k) * c;
    const bool cosine = valid.kind == MirrorKind::NN || valid.kind == MirrorKind::ND;
    const auto freq = static_cast<double>(nu);
    const int order = bessel_order(nu);
    return EigenfunctionEvaluator(
        ModelTag::DihedralScalar, {{"n", valid.n}, {"nu", nu}}, norm, Domain{Domain::Kind::Wedge, alpha, 0.0, 0.0},
        [order, k](double r) { return std::sqrt(k) * bessel_j(order, k * r); },
        {cosine ? FourierSum::cosine(freq, c) : FourierSum::sine(freq, c)}, {{"k", k}, {"nu", freq}});
  }
  const auto ladder = doublet_ladder(std::get<DihedralDoublet>(sector), nu);
  const double alpha = kPi / static_cast<double>(ladder.sector.n);
  const double c = 1.0 / std::sqrt(alpha);
  const double norm = std::sqrt(k) * c;
  const auto freq = static_cast<double>(nu);
  const int order = bessel_order(nu);
  return EigenfunctionEvaluator(
      ModelTag::DihedralDoublet, {{"n", ladder.sector.n}, {"q", ladder.sector.q}, {"nu", nu}}, norm,
      Domain{Domain::Kind::Wedge, alpha, 0.0, 0.0},
      [order, k](double r) { return std::sqrt(k) * bessel_j(order, k * r); },
      {FourierSum::cosine(freq, c), FourierSum::sine(freq, ladder.plus ? c : -c)}, {{"k", k}, {"nu", freq}});
}

EigenfunctionEvaluator dihedral_doublet_chiral(const DihedralDoublet& sector, std::int64_t nu, double k) {
  require_k(k);
  const auto ladder = doublet_ladder(sector, nu);
  const double alpha = kPi / static_cast<double>(ladder.sector.n);
  const double c = 1.0 / std::sqrt(2.0 * alpha);
  const double norm = std::sqrt(k) * c;
  const double freq = ladder.plus ? static_cast<double>(nu) : -static_cast<double>(nu);
  const int order = bessel_order(nu);
  return EigenfunctionEvaluator(
      ModelTag::DihedralDoublet, {{"n", ladder.sector.n}, {"q", ladder.sector.q}, {"nu", nu}}, norm,
      Domain{Domain::Kind::Wedge, alpha, 0.0, 0.0},
      [order, k](double r) { return std::sqrt(k) * bessel_j(order, k * r); },
      {FourierSum::exponential(freq, c), FourierSum::exponential(-freq, c)}, {{"k", k}, {"nu", static_cast<double>(nu)}});
}

}  // namespace orbiquant
