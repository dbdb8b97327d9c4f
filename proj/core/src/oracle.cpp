#include "orbiquant/oracle.hpp"

#include "orbiquant/error.hpp"
#include "orbiquant/picard.hpp"
#include "orbiquant/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace orbiquant {

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) fail(ErrorCode::BadParameter, std::string(name) + " must be >= 1");
}

bool congruent(std::int64_t a, std::int64_t b, std::int64_t n) { return ((a - b) % n + n) % n == 0; }

}  // namespace

std::int64_t brute_degeneracy_football(std::int64_t n, std::int64_t q, std::int64_t l) {
  require_positive(n, "n");
  std::int64_t count = 0;
  for (std::int64_t m = -l; m <= l; ++m)
    if (congruent(m, q, n)) ++count;
  return count;
}

BruteSnmCount brute_degeneracy_snm(std::int64_t n, std::int64_t m, std::int64_t charge, std::int64_t level) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (gcd64(n, m) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
  BruteSnmCount out;
  for (std::int64_t k1 = -level; k1 <= level; ++k1) {
    for (std::int64_t k2 = -level; k2 <= level; ++k2) {
      if (n * k1 + m * k2 != charge) continue;
      const std::int64_t used = std::abs(k1) + std::abs(k2);
      if (used > level || (level - used) % 2 != 0) continue;
      out.witnesses.push_back({k1, k2, (level - used) / 2});
    }
  }
  out.count = static_cast<std::int64_t>(out.witnesses.size());
  return out;
}

std::int64_t brute_monomial_count(std::int64_t n, std::int64_t m, std::int64_t q) {
  require_positive(n, "n");
  require_positive(m, "m");
  std::int64_t count = 0;
  for (std::int64_t a = 0; n * a <= q; ++a)
    for (std::int64_t c = 0; n * a + m * c <= q; ++c)
      if (n * a + m * c == q) ++count;
  return count;
}

std::int64_t brute_football_section_count(std::int64_t n, std::int64_t n_phi, std::int64_t weight) {
  require_positive(n, "n");
  std::int64_t count = 0;
  for (std::int64_t c = 0; c <= n_phi; ++c)
    if (congruent(c, weight, n)) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Quadrature inner products

std::complex<double> orthonormality_check(const EigenfunctionEvaluator& eval1, const EigenfunctionEvaluator& eval2,
                                          const InnerProductSpec& spec) {
  const auto& d1 = eval1.domain();
  const auto& d2 = eval2.domain();
  if (eval1.model() != eval2.model()) fail(ErrorCode::DomainMismatch, "evaluators belong to different models");
  if (d1.kind != d2.kind || d1.angular_width != d2.angular_width || d1.lo != d2.lo || d1.hi != d2.hi)
    fail(ErrorCode::DomainMismatch, "evaluators live on different domains");
  if (eval1.components() != eval2.components())
    fail(ErrorCode::DomainMismatch, "evaluators have different component counts");
  if (spec.radial_nodes < 1) fail(ErrorCode::BadParameter, "radial_nodes must be >= 1");

  if (d1.kind == Domain::Kind::Interval) {
    if (spec.mode == InnerProductSpec::Mode::AngularOnly)
      fail(ErrorCode::DomainMismatch, "interval evaluators have no angular part");
    const auto rule = gauss_legendre(spec.radial_nodes);
    return rule.integrate([&](double x) { return eval1.radial(x) * eval2.radial(x); }, d1.lo, d1.hi);
  }

  std::complex<double> angular = 0.0;
  std::vector<std::complex<double>> per_component;
  for (std::size_t c = 0; c < eval1.components(); ++c)
    per_component.push_back(angular_inner_product(eval1.angular()[c], eval2.angular()[c], d1.angular_width));
  for (auto a : per_component) angular += a;
  if (spec.mode == InnerProductSpec::Mode::AngularOnly) return angular;

  double r_max = 0.0;
  if (spec.r_max) {
    r_max = *spec.r_max;
  } else if (eval1.model() == ModelTag::ConeOscillator) {
    r_max = std::sqrt(kOscillatorTailExponent / eval1.ode_parameter("beta"));
  } else {
    fail(ErrorCode::BadParameter, "r_max is required for " + to_string(eval1.model()));
  }
  if (!(r_max > 0.0)) fail(ErrorCode::BadParameter, "r_max must be > 0");
  const auto rule = gauss_legendre(spec.radial_nodes);
  const double radial = rule.integrate([&](double r) { return eval1.radial(r) * eval2.radial(r) * r; }, 0.0, r_max);
  return radial * angular;
}

// ---------------------------------------------------------------------------
// ODE residuals

std::string to_string(OdeTag tag) {
  switch (tag) {
    case OdeTag::ConeBessel: return "cone_bessel";
    case OdeTag::OscRadial: return "osc_radial";
    case OdeTag::SnmRadialX: return "snm_radial_x";
  }
  return "?";
}

OdeTag parse_ode_tag(const std::string& text) {
  if (text == "cone_bessel") return OdeTag::ConeBessel;
  if (text == "osc_radial") return OdeTag::OscRadial;
  if (text == "snm_radial_x") return OdeTag::SnmRadialX;
  fail(ErrorCode::BadParameter, "unknown ODE tag '" + text + "'");
}

double ode_step(const EigenfunctionEvaluator& evaluator, double u) {
  const auto& d = evaluator.domain();
  if (d.kind == Domain::Kind::Interval) return 1e-4 * 0.5 * (d.hi - d.lo);
  return 1e-4 * std::max(1.0, std::abs(u));
}

namespace {

struct Derivatives {
  double f, d1, d2;
};

Derivatives stencil(const EigenfunctionEvaluator& e, double u, double h) {
  const double fm2 = e.radial(u - 2 * h), fm1 = e.radial(u - h), f0 = e.radial(u);
  const double fp1 = e.radial(u + h), fp2 = e.radial(u + 2 * h);
  return {f0, (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h),
          (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)};
}

void require_tag(const EigenfunctionEvaluator& e, OdeTag tag) {
  bool ok = false;
  switch (tag) {
    case OdeTag::ConeBessel:
      ok = e.model() == ModelTag::ConeFree || e.model() == ModelTag::DihedralScalar ||
           e.model() == ModelTag::DihedralDoublet;
      break;
    case OdeTag::OscRadial: ok = e.model() == ModelTag::ConeOscillator; break;
    case OdeTag::SnmRadialX: ok = e.model() == ModelTag::SnmRadial; break;
  }
  if (!ok) fail(ErrorCode::DomainMismatch, to_string(tag) + " does not apply to " + to_string(e.model()));
}

}  // namespace

double ode_residual(const EigenfunctionEvaluator& evaluator, OdeTag tag, const std::vector<double>& samples) {
  require_tag(evaluator, tag);
  if (samples.empty()) fail(ErrorCode::BadSamplePoints, "no sample points");
  const auto& dom = evaluator.domain();
  constexpr double eps = 1e-300;
  double worst = 0.0;
  for (double u : samples) {
    const double h = ode_step(evaluator, u);
    const bool inside = dom.kind == Domain::Kind::Interval ? (u - 2 * h > dom.lo && u + 2 * h < dom.hi)
                                                           : (u - 2 * h > 0.0);
    if (!std::isfinite(u) || !inside)
      fail(ErrorCode::BadSamplePoints, "sample " + std::to_string(u) + " too close to the domain boundary");
    const auto [f, df, ddf] = stencil(evaluator, u, h);
    std::vector<double> terms;
    switch (tag) {
      case OdeTag::ConeBessel: {
        // r^2 R'' + r R' + (k^2 r^2 - nu^2) R = 0
        const double k = evaluator.ode_parameter("k");
        const double nu = evaluator.ode_parameter("nu");
        terms = {u * u * ddf, u * df, k * k * u * u * f, -nu * nu * f};
        break;
      }
      case OdeTag::OscRadial: {
        // -(hbar^2/2M)(R'' + R'/r - m^2 R/r^2) + M omega^2 r^2 R / 2 - E R = 0
        const double hbar = evaluator.ode_parameter("hbar");
        const double mass = evaluator.ode_parameter("mass");
        const double omega = evaluator.ode_parameter("omega");
        const double m = evaluator.ode_parameter("m");
        const double energy = evaluator.ode_parameter("energy");
        const double c = -hbar * hbar / (2 * mass);
        terms = {c * ddf, c * df / u, -c * m * m * f / (u * u), 0.5 * mass * omega * omega * u * u * f, -energy * f};
        break;
      }
      case OdeTag::SnmRadialX: {
        // (1-x^2) f'' - 2x f' - (k1^2/(2(1+x)) + k2^2/(2(1-x))) f + lambda f / 4 = 0
        const double k1 = evaluator.ode_parameter("k1");
        const double k2 = evaluator.ode_parameter("k2");
        const double lambda = evaluator.ode_parameter("lambda");
        terms = {(1 - u * u) * ddf, -2 * u * df, -k1 * k1 / (2 * (1 + u)) * f, -k2 * k2 / (2 * (1 - u)) * f,
                 0.25 * lambda * f};
        break;
      }
    }
    double sum = 0.0, scale = 0.0;
    for (double t : terms) {
      sum += t;
      scale = std::max(scale, std::abs(t));
    }
    worst = std::max(worst, std::abs(sum) / (scale + eps));
  }
  return worst;
}

std::vector<double> sample_points(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  if (count == 0) return out;
  if (count == 1) return {lo};
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

// ---------------------------------------------------------------------------
// Group-law fuzz

namespace {

SeifertData random_bundle(const OrbifoldSurface& base, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> degree(-50, 50);
  std::vector<std::int64_t> weights;
  for (auto order : base.cone_orders()) {
    std::uniform_int_distribution<std::int64_t> w(0, order - 1);
    weights.push_back(w(rng));
  }
  const auto d0 = degree(rng);
  return SeifertData(base, d0, std::move(weights));
}

struct ShardResult {
  std::int64_t failures = 0;
  std::vector<std::string> counterexamples;
};

ShardResult run_shard(const OrbifoldSurface& base, std::int64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ShardResult out;
  const auto trivial = SeifertData::trivial(base);
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto a = random_bundle(base, rng);
    const auto b = random_bundle(base, rng);
    const auto c = random_bundle(base, rng);
    const std::string tag = a.to_string() + " " + b.to_string() + " " + c.to_string();
    auto check = [&](bool ok, const char* law) {
      if (ok) return;
      ++out.failures;
      out.counterexamples.push_back(std::string(law) + ": " + tag);
    };
    check(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)), "associativity");
    check(tensor(a, b) == tensor(b, a), "commutativity");
    check(tensor(a, trivial) == a, "identity");
    check(tensor(a, inverse(a)) == trivial, "inverse");
    check(degree(tensor(a, b)) == degree(a) + degree(b), "degree additivity");
  }
  return out;
}

}  // namespace

GroupLawReport group_law_fuzz(const OrbifoldSurface& base, std::int64_t trials, std::uint64_t seed, int shards) {
  if (!base.is_closed()) fail(ErrorCode::MirrorVariant, "group law fuzz needs a closed base");
  if (trials < 0) fail(ErrorCode::BadParameter, "trials must be >= 0");
  if (shards < 1) fail(ErrorCode::BadParameter, "shards must be >= 1");
  std::vector<ShardResult> results(static_cast<std::size_t>(shards));
  auto shard_trials = [&](int s) { return trials * (s + 1) / shards - trials * s / shards; };
  if (shards == 1) {
    results[0] = run_shard(base, trials, seed);
  } else {
    std::vector<std::thread> workers;
    for (int s = 0; s < shards; ++s)
      workers.emplace_back([&, s] { results[s] = run_shard(base, shard_trials(s), seed + static_cast<unsigned>(s)); });
    for (auto& w : workers) w.join();
  }
  GroupLawReport report{base.label(), seed, trials, 0, {}};
  for (auto& r : results) {
    report.failures += r.failures;
    for (auto& c : r.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  return report;
}

}  // namespace orbiquant
