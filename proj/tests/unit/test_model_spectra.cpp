#include "doctest.h"

#include <orbiquant/error.hpp>
#include <orbiquant/model_spectra.hpp>
#include <orbiquant/oracle.hpp>

#include <cmath>
#include <numbers>
#include <set>

using namespace orbiquant;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadParameter;
}

std::int64_t degeneracy_at(const std::vector<SpectralLine>& lines, const std::string& key, std::int64_t value) {
  for (const auto& l : lines)
    if (l.quantum_numbers.at(key) == value) return l.degeneracy.count;
  return 0;
}

void check_sorted(const std::vector<SpectralLine>& lines) {
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1].energy < lines[i].energy);
  for (const auto& l : lines) {
    CHECK(l.degeneracy.count >= 1);
    CHECK(static_cast<std::int64_t>(l.states.size()) == l.degeneracy.count);
  }
}

}  // namespace

TEST_CASE("sector label validation") {
  CHECK(code_of([] { cyclic_weight(3, 3); }) == ErrorCode::InvalidSector);
  CHECK(code_of([] { cyclic_weight(-1, 3); }) == ErrorCode::InvalidSector);
  CHECK(code_of([] { dihedral_scalar(MirrorKind::ND, 3); }) == ErrorCode::InvalidSector);
  CHECK(code_of([] { dihedral_doublet(2, 4); }) == ErrorCode::InvalidSector);
  CHECK(code_of([] { dihedral_doublet(0, 5); }) == ErrorCode::InvalidSector);
  CHECK(code_of([] { kk_charge(1, 2, 4); }) == ErrorCode::NotCoprime);
  CHECK(flat_holonomy(Rational(-1, 3), 3).alpha == Rational(2, 3));
  CHECK(std::holds_alternative<DihedralDoublet>(parse_dihedral_sector("doublet:2", 5)));
  CHECK(std::get<DihedralScalar>(parse_dihedral_sector("DN", 4)).kind == MirrorKind::DN);
  CHECK(code_of([] { parse_dihedral_sector("XY", 4); }) == ErrorCode::InvalidSector);
  CHECK(code_of([] { parse_dihedral_sector("doublet:x", 5); }) == ErrorCode::InvalidSector);
}

TEST_CASE("circle spectrum") {
  PhysicalParams p;
  const auto untwisted = circle_spectrum(p, flat_holonomy(Rational(0), 2), {-3, 3});
  check_sorted(untwisted);
  CHECK(untwisted[0].energy == 0.0);
  CHECK(untwisted[0].degeneracy.count == 1);
  for (std::size_t i = 1; i < untwisted.size(); ++i) CHECK(untwisted[i].degeneracy.count == 2);

  const auto half = circle_spectrum(p, flat_holonomy(Rational(1, 2), 2), {-4, 3});
  for (const auto& l : half) CHECK(l.degeneracy.count == 2);

  p.circumference = 2 * kPi;
  const auto third = circle_spectrum(p, flat_holonomy(Rational(1, 3), 3), {-2, 2});
  CHECK(third[0].energy == doctest::Approx(0.5));
  for (const auto& l : third) CHECK(l.degeneracy.count == 1);
  CHECK(code_of([&] { circle_spectrum(p, flat_holonomy(Rational(0), 1), {0, 1}); }) == ErrorCode::InvalidSector);
}

TEST_CASE("free cone eigenfunctions") {
  const double k = 2.5;
  for (std::int64_t n : {1, 3}) {
    const auto e = cone_free_eigenfunction(n, cyclic_weight(0, n), 0, k);
    CHECK(std::abs(e(0.0, 0.7)) == doctest::Approx(std::sqrt(n * k / (2 * kPi))));
    CHECK(e.normalization() == doctest::Approx(std::sqrt(n * k / (2 * kPi))));
    CHECK(e.ode_parameter("energy") == doctest::Approx(0.5 * k * k));
  }
  const auto twisted = cone_free_eigenfunction(3, cyclic_weight(1, 3), 0, k);
  CHECK(std::abs(twisted(0.0, 0.2)) == 0.0);
  const auto wound = cone_free_eigenfunction(3, cyclic_weight(1, 3), -1, k);
  CHECK(wound.quantum_numbers().at("m") == -2);
  CHECK(wound.ode_parameter("nu") == 2.0);
  CHECK(code_of([] { cone_free_eigenfunction(3, cyclic_weight(0, 3), 0, 0.0); }) == ErrorCode::BadParameter);
}

TEST_CASE("cone oscillator spectrum") {
  PhysicalParams p;
  const auto s31 = cone_oscillator_spectrum(3, cyclic_weight(1, 3), p, 10);
  check_sorted(s31);
  CHECK(s31.front().energy == 2.0);
  CHECK(s31.front().states.front().at("m") == 1);

  const auto smooth = cone_oscillator_spectrum(1, cyclic_weight(0, 1), p, 12);
  for (const auto& l : smooth) CHECK(l.degeneracy.count == l.quantum_numbers.at("N") + 1);

  const auto s20 = cone_oscillator_spectrum(2, cyclic_weight(0, 2), p, 3);
  CHECK(s20.back().energy == 3.0);
  CHECK(s20.back().degeneracy.count == 3);

  // summed over sectors: smooth-plane degeneracy N + 1
  for (std::int64_t n = 1; n <= 6; ++n) {
    std::map<std::int64_t, std::int64_t> total;
    for (std::int64_t q = 0; q < n; ++q)
      for (const auto& l : cone_oscillator_spectrum(n, cyclic_weight(q, n), p, 15))
        total[l.quantum_numbers.at("N")] += l.degeneracy.count;
    for (std::int64_t N = 0; N <= 14; ++N) CHECK(total[N] == N + 1);
  }
  // ground state min(q, n - q) + 1
  for (std::int64_t n = 2; n <= 7; ++n)
    for (std::int64_t q = 0; q < n; ++q)
      CHECK(cone_oscillator_spectrum(n, cyclic_weight(q, n), p, 20).front().energy == std::min(q, n - q) + 1);
  CHECK(cone_oscillator_spectrum(3, cyclic_weight(1, 3), p, 1.5).empty());
}

TEST_CASE("cone oscillator wavefunction") {
  PhysicalParams p;
  p.mass = 2.0;
  p.omega = 0.75;
  const double beta = p.mass * p.omega / p.hbar;
  const auto ground = cone_oscillator_wavefunction(3, 0, 0, p);
  CHECK(ground.normalization() == doctest::Approx(std::sqrt(3 * beta / kPi)));
  CHECK(ground.radial(0.0) == doctest::Approx(std::sqrt(3 * beta / kPi)));
  const auto excited = cone_oscillator_wavefunction(3, 1, 2, p);
  CHECK(excited.radial(0.0) == 0.0);
  const auto self = orthonormality_check(excited, excited);
  CHECK(std::abs(self - 1.0) < 1e-8);
  CHECK(code_of([&] { cone_oscillator_wavefunction(3, -1, 0, p); }) == ErrorCode::BadParameter);
}

TEST_CASE("football spectrum") {
  PhysicalParams p;
  const auto smooth = football_spectrum(1, cyclic_weight(0, 1), p, 12);
  for (const auto& l : smooth) CHECK(l.degeneracy.count == 2 * l.quantum_numbers.at("l") + 1);
  CHECK(degeneracy_at(football_spectrum(3, cyclic_weight(0, 3), p, 5), "l", 3) == 3);
  const auto s31 = football_spectrum(3, cyclic_weight(1, 3), p, 5);
  check_sorted(s31);
  CHECK(s31.front().quantum_numbers.at("l") == 1);
  for (std::int64_t n = 1; n <= 6; ++n)
    for (std::int64_t l = 0; l <= 25; ++l) {
      std::int64_t sum = 0;
      for (std::int64_t q = 0; q < n; ++q) sum += football_degeneracy(n, q, l);
      CHECK(sum == 2 * l + 1);
    }
  // states obey the selection rule
  for (const auto& line : football_spectrum(4, cyclic_weight(3, 4), p, 10))
    for (const auto& s : line.states) {
      CHECK(((s.at("m") - 3) % 4 + 4) % 4 == 0);
      CHECK(std::abs(s.at("m")) <= line.quantum_numbers.at("l"));
    }
}

TEST_CASE("orbisphere spectrum") {
  PhysicalParams p;
  const auto smooth = snm_spectrum(1, 1, kk_charge(0, 1, 1), p, 12);
  for (const auto& l : smooth) {
    const auto K = l.quantum_numbers.at("K");
    CHECK(K % 2 == 0);
    CHECK(l.degeneracy.count == K + 1);
  }
  const auto s23 = snm_spectrum(2, 3, kk_charge(0, 2, 3), p, 6);
  CHECK(degeneracy_at(s23, "K", 5) == 2);
  const auto g = snm_ground_level(2, 3, 1);
  CHECK(g.k_min == 2);
  CHECK(g.k1 == -1);
  CHECK(g.k2 == 1);
  CHECK(snm_spectrum(2, 3, kk_charge(1, 2, 3), p, 10).front().quantum_numbers.at("K") == 2);
  CHECK(code_of([&] { snm_spectrum(2, 4, KKCharge{0, 2, 4}, p, 3); }) == ErrorCode::NotCoprime);

  for (auto [n, m] : {std::pair{2, 3}, {3, 4}, {2, 5}, {3, 5}})
    for (std::int64_t Q = -6; Q <= 6; ++Q) {
      const auto ground = snm_ground_level(n, m, Q);
      if (Q != 0) CHECK(ground.k_min > 0);
      CHECK(n * ground.k1 + m * ground.k2 == Q);
      for (std::int64_t K = 0; K <= 20; ++K) {
        const auto here = snm_level_states(n, m, Q, K);
        CHECK(here.size() == snm_level_states(n, m, -Q, K).size());
        if (K < ground.k_min) CHECK(here.empty());
      }
      CHECK(snm_level_states(n, m, Q, ground.k_min).size() >= 1);
    }
}

TEST_CASE("orbisphere radial profile") {
  const auto flat = snm_wavefunction(2, 1, 0);
  const double x = 0.3;
  CHECK(flat.radial(x) == doctest::Approx(std::pow(1 - x, 0.5) * std::pow(1 + x, 1.0)));
  CHECK(snm_wavefunction(1, 1, 2).radial(1.0) == 0.0);
  CHECK(snm_wavefunction(1, 0, 2).radial(1.0) != 0.0);
  CHECK(snm_wavefunction(1, -1, 2).ode_parameter("lambda") == 6.0 * 8.0);
  CHECK(code_of([] { snm_wavefunction(0, 0, -1); }) == ErrorCode::BadParameter);
}

TEST_CASE("dihedral orders") {
  CHECK(dihedral_angular_orders(dihedral_scalar(MirrorKind::NN, 3), 3) == std::vector<std::int64_t>{0, 3, 6});
  CHECK(dihedral_angular_orders(dihedral_scalar(MirrorKind::DD, 3), 3) == std::vector<std::int64_t>{3, 6, 9});
  CHECK(dihedral_angular_orders(dihedral_scalar(MirrorKind::ND, 4), 3) == std::vector<std::int64_t>{2, 6, 10});
  CHECK(dihedral_angular_orders(dihedral_doublet(2, 5), 4) == std::vector<std::int64_t>{2, 3, 7, 8});
  CHECK(code_of([] { dihedral_angular_orders(DihedralScalar{MirrorKind::DN, 5}, 2); }) == ErrorCode::InvalidSector);

  // orders weighted by sector dimension reproduce the cyclic cover: one state
  // per m, so 1 at nu = 0 and 2 (m = +-nu) otherwise
  for (std::int64_t n = 2; n <= 8; ++n) {
    std::multiset<std::int64_t> all;
    auto add = [&](const DihedralSector& s) {
      const int dim = std::holds_alternative<DihedralDoublet>(s) ? 2 : 1;
      for (auto nu : dihedral_angular_orders(s, 40))
        for (int i = 0; i < dim; ++i) all.insert(nu);
    };
    add(dihedral_scalar(MirrorKind::NN, n));
    add(dihedral_scalar(MirrorKind::DD, n));
    if (n % 2 == 0) {
      add(dihedral_scalar(MirrorKind::ND, n));
      add(dihedral_scalar(MirrorKind::DN, n));
    }
    for (std::int64_t q = 1; q <= (n - 1) / 2; ++q) add(dihedral_doublet(q, n));
    for (std::int64_t nu = 0; nu < 3 * n; ++nu) CHECK(all.count(nu) == (nu == 0 ? 1u : 2u));
  }
}

TEST_CASE("dihedral eigenfunctions") {
  const double alpha = kPi / 4;
  const auto nn0 = dihedral_eigenfunction(dihedral_scalar(MirrorKind::NN, 4), 0, 1.0);
  CHECK(std::abs(nn0(0.0, 0.1) - nn0(0.0, 0.6)) < 1e-15);
  CHECK(nn0.normalization() == doctest::Approx(1 / std::sqrt(alpha)));

  const auto dd = dihedral_eigenfunction(dihedral_scalar(MirrorKind::DD, 4), 4, 1.0);
  CHECK(std::abs(dd(1.3, 0.0)) < 1e-15);
  CHECK(std::abs(dd(1.3, alpha)) < 1e-14);

  // Neumann at phi = 0, Dirichlet at phi = alpha
  const auto nd = dihedral_eigenfunction(dihedral_scalar(MirrorKind::ND, 4), 2, 1.0);
  CHECK(std::abs(nd(1.3, alpha)) < 1e-14);

  const auto doublet = dihedral_eigenfunction(dihedral_doublet(1, 5), 4, 2.0);
  REQUIRE(doublet.components() == 2);
  CHECK(doublet.angular()[1].terms[0].coefficient.imag() > 0);  // - sign on nu = -q
  const double width = kPi / 5;
  const double total = std::real(angular_inner_product(doublet.angular()[0], doublet.angular()[0], width) +
                                 angular_inner_product(doublet.angular()[1], doublet.angular()[1], width));
  CHECK(total == doctest::Approx(1.0));

  CHECK(code_of([] { dihedral_eigenfunction(dihedral_scalar(MirrorKind::DD, 4), 0, 1.0); }) == ErrorCode::OrderMismatch);
  CHECK(code_of([] { dihedral_eigenfunction(dihedral_doublet(1, 5), 5, 1.0); }) == ErrorCode::OrderMismatch);

  const auto chiral = dihedral_doublet_chiral(dihedral_doublet(2, 5), 7, 1.5);
  const auto v = chiral.values(0.8, 0.3);
  CHECK(std::abs(v[0]) == doctest::Approx(std::abs(v[1])));
}
