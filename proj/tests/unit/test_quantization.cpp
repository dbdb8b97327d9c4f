#include "doctest.h"

#include <orbiquant/error.hpp>
#include <orbiquant/quantization.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace orbiquant;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadParameter;
}

}  // namespace

TEST_CASE("prequantization of the football") {
  const auto s = prequantize_orbisphere(3, 3, Rational(7, 3));
  REQUIRE(s.size() == 3);
  CHECK(s[0].bundle.to_string() == "(2;0,1)");
  CHECK(s[1].bundle.to_string() == "(2;1,0)");
  CHECK(s[2].bundle.to_string() == "(1;2,2)");
  for (const auto& x : s) CHECK(degree(x.bundle) == Rational(7, 3));
  // sectors differ pairwise by flat bundles
  const auto flats = flat_sectors(OrbifoldSurface::sphere({3, 3}));
  for (const auto& x : s) {
    const auto q = tensor(x.bundle, inverse(s[0].bundle));
    CHECK(std::find(flats.begin(), flats.end(), q) != flats.end());
  }
}

TEST_CASE("prequantization edge cases") {
  const auto coprime = prequantize_orbisphere(2, 3, Rational(1, 6));
  REQUIRE(coprime.size() == 1);
  CHECK(degree(coprime[0].bundle) == Rational(1, 6));
  CHECK(coprime[0].bundle.to_string() == "(-1;1,2)");

  // zero flux gives the flat sectors
  const auto zero = prequantize_orbisphere(4, 6, Rational(0));
  const auto flats = flat_sectors(OrbifoldSurface::sphere({4, 6}));
  REQUIRE(zero.size() == flats.size());
  for (const auto& x : zero) CHECK(std::find(flats.begin(), flats.end(), x.bundle) != flats.end());

  CHECK(code_of([] { prequantize_orbisphere(2, 3, Rational(1, 7)); }) == ErrorCode::NotIntegral);
  // smooth points drop out
  CHECK(prequantize_orbisphere(1, 1, Rational(3)).size() == 1);
}

TEST_CASE("dirac and torus flux") {
  auto d = dirac_condition(1, 0.5, 1);
  CHECK(d.ok);
  CHECK(d.quanta == 1);
  CHECK_FALSE(dirac_condition(1, 0.3, 1).ok);
  d = dirac_condition(2, 0.75, 1);
  CHECK(d.ok);
  CHECK(d.quanta == 3);

  const double two_pi = 2 * std::numbers::pi;
  auto t = torus_flux_quanta(4 * two_pi, 1.0, 1.0, 1.0);
  CHECK(t.ok);
  CHECK(t.quanta == 4);
  CHECK_FALSE(torus_flux_quanta(2.5 * two_pi, 1.0, 1.0, 1.0).ok);
  t = torus_flux_quanta(0.0, 3.0, 1.0, 1.0);
  CHECK(t.ok);
  CHECK(t.quanta == 0);
  CHECK(code_of([] { dirac_condition(1, 0.5, 0); }) == ErrorCode::BadParameter);
}

TEST_CASE("bohr-sommerfeld rules") {
  PhysicalParams p;
  p.hbar = 0.5;
  CHECK(bohr_sommerfeld_circle(p, 3, Rational(1, 3), {0, 0})[0] == doctest::Approx(0.5));
  CHECK(bohr_sommerfeld_circle(p, 2, Rational(0), {0, 0})[0] == 0.0);
  CHECK(bohr_sommerfeld_circle(p, 4, Rational(1, 2), {-1, -1})[0] == doctest::Approx(-1.0));
  const auto cone = bohr_sommerfeld_cone(3, 1, 1.0, {0, 1});
  CHECK(cone == std::vector<double>{1.0, 4.0});
  CHECK(bohr_sommerfeld_cone(5, 0, 1.0, {0, 0})[0] == 0.0);
  CHECK(bohr_sommerfeld_cone(5, 4, 1.0, {-1, -1})[0] == -1.0);

  PhysicalParams unit;
  const auto e = bs_maslov_oscillator(unit, 3);
  CHECK(e == std::vector<double>{0.5, 1.5, 2.5, 3.5});
  unit.omega = 0.0;
  CHECK(code_of([&] { bs_maslov_oscillator(unit, 3); }) == ErrorCode::BadParameter);
}

TEST_CASE("canonical and half-form bundles") {
  CHECK(canonical_bundle(OrbifoldSurface::sphere({3, 3})).to_string() == "(-2;2,2)");
  CHECK(canonical_bundle(OrbifoldSurface::sphere({})).to_string() == "(-2;)");
  CHECK(canonical_bundle(OrbifoldSurface::sphere({2, 5})).to_string() == "(-2;1,4)");
  CHECK(degree(canonical_bundle(OrbifoldSurface::sphere({2, 5}))) == -euler_characteristic(OrbifoldSurface::sphere({2, 5})));

  const auto h33 = half_form_bundle(OrbifoldSurface::sphere({3, 3}));
  REQUIRE(h33.exists);
  CHECK(h33.delta->to_string() == "(-1;1,1)");
  CHECK(tensor(*h33.delta, *h33.delta) == canonical_bundle(OrbifoldSurface::sphere({3, 3})));
  const auto h44 = half_form_bundle(OrbifoldSurface::sphere({4, 4}));
  CHECK_FALSE(h44.exists);
  CHECK(*h44.obstruction_order == 4);
  CHECK(half_form_bundle(OrbifoldSurface::sphere({3, 5})).delta->to_string() == "(-1;1,2)");
  CHECK(code_of([] { half_form_bundle(OrbifoldSurface::sphere({3, 3, 3})); }) == ErrorCode::UnsupportedBase);
}

TEST_CASE("metaplectic correction") {
  const auto s33 = OrbifoldSurface::sphere({3, 3});
  CHECK(metaplectic_correct(SeifertData(s33, 2, {1, 0})).to_string() == "(1;2,1)");
  // both carries fire; degree 10/3 - 1/3 = 3
  const auto c = metaplectic_correct(SeifertData(s33, 2, {2, 2}));
  CHECK(c.to_string() == "(3;0,0)");
  CHECK(degree(c) == Rational(3));
  try {
    metaplectic_correct(SeifertData(OrbifoldSurface::sphere({4, 4}), 1, {1, 1}));
    FAIL("expected NoHalfForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoHalfForm);
    CHECK(std::string(e.what()).find('4') != std::string::npos);
  }
}

TEST_CASE("weighted sections") {
  CHECK(weighted_section_count(2, 3, 1).count == 0);
  const auto w = weighted_section_count(2, 3, 6);
  CHECK(w.count == 2);
  CHECK(std::find(w.monomials.begin(), w.monomials.end(), Monomial{3, 0}) != w.monomials.end());
  CHECK(std::find(w.monomials.begin(), w.monomials.end(), Monomial{0, 2}) != w.monomials.end());
  const auto z = weighted_section_count(5, 7, 0);
  REQUIRE(z.count == 1);
  CHECK(z.monomials[0] == Monomial{0, 0});
  CHECK(weighted_section_count(2, 3, -1).count == 0);
  CHECK(code_of([] { weighted_section_count(2, 4, 6); }) == ErrorCode::NotCoprime);
}

TEST_CASE("football sections") {
  const auto f = football_section_dim(3, 7, 1);
  CHECK(f.dim == 3);
  CHECK(f.exponents == std::vector<std::int64_t>{1, 4, 7});
  CHECK(football_section_dim(1, 5, 0).dim == 6);
  CHECK(football_section_dim(3, -2, 0).dim == 0);
}

TEST_CASE("corrected sections") {
  const auto c = corrected_weighted_section_count(3, 5, 12);
  CHECK(c.shifted_q == 8);
  CHECK(c.count == 1);
  CHECK(code_of([] { corrected_weighted_section_count(2, 3, 10); }) == ErrorCode::NoHalfForm);
  const auto s = corrected_weighted_section_count(1, 1, 5);
  CHECK(s.shifted_q == 4);
  CHECK(s.count == 5);
  CHECK(code_of([] { corrected_weighted_section_count(2, 4, 10); }) == ErrorCode::NotCoprime);
}

TEST_CASE("vertical polarization data") {
  CHECK(vertical_polarization_correction(Model::cone(3)).genuine_half_form);
  const auto d = vertical_polarization_correction(Model::dihedral_cone(4));
  CHECK_FALSE(d.genuine_half_form);
  CHECK(d.half_density_substitute);
  CHECK(code_of([] { vertical_polarization_correction(Model::football(3)); }) == ErrorCode::UnsupportedModel);
}
