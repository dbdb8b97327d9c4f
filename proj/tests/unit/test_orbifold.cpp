#include "doctest.h"

#include <orbiquant/error.hpp>
#include <orbiquant/orbifold.hpp>

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

TEST_CASE("construction rejects smooth or invalid orders") {
  CHECK(code_of([] { OrbifoldSurface::sphere({3, 1}); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { OrbifoldSurface::mirror_disk({0}); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { OrbifoldSurface::closed(-1, {}); }) == ErrorCode::BadParameter);
  CHECK(OrbifoldSurface::orbisphere(1, 5).cone_orders() == std::vector<std::int64_t>{5});
  CHECK(OrbifoldSurface::orbisphere(1, 1).cone_orders().empty());
}

TEST_CASE("labels") {
  CHECK(OrbifoldSurface::sphere({3, 5}).label() == "S^2(3,5)");
  CHECK(OrbifoldSurface::closed(1, {}).label() == "T^2");
  CHECK(OrbifoldSurface::mirror_disk({2, 2, 3}).label() == "D(2,2,3)");
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(OrbifoldSurface::closed(1, {})) == Rational(0));
  CHECK(euler_characteristic(OrbifoldSurface::sphere({3, 3})) == Rational(2, 3));
  CHECK(euler_characteristic(OrbifoldSurface::sphere({3})) == Rational(4, 3));
  CHECK(euler_characteristic(OrbifoldSurface::closed(2, {})) == Rational(-2));
  CHECK(code_of([] { euler_characteristic(OrbifoldSurface::mirror_disk({2})); }) == ErrorCode::MirrorVariant);
}

TEST_CASE("mirror disks and doubling") {
  CHECK(euler_characteristic_mirror(OrbifoldSurface::mirror_disk({2, 2})) == Rational(1, 2));
  CHECK(euler_characteristic_mirror(OrbifoldSurface::mirror_disk({})) == Rational(1));
  CHECK(euler_characteristic_mirror(OrbifoldSurface::mirror_disk({2, 3, 5})) == Rational(1, 60));
  CHECK(code_of([] { euler_characteristic_mirror(OrbifoldSurface::sphere({})); }) == ErrorCode::ClosedVariant);

  const auto d = oriented_double(OrbifoldSurface::mirror_disk({2, 2}));
  CHECK(d == OrbifoldSurface::sphere({2, 2}));
  CHECK(euler_characteristic(d) == Rational(1));
  CHECK(euler_characteristic(oriented_double(OrbifoldSurface::mirror_disk({}))) == Rational(2));
  CHECK(oriented_double(OrbifoldSurface::mirror_disk({7})) == OrbifoldSurface::sphere({7}));
  CHECK(code_of([] { oriented_double(OrbifoldSurface::sphere({2})); }) == ErrorCode::ClosedVariant);
}

TEST_CASE("global quotient") {
  CHECK(global_quotient_euler(Rational(2), 3) == Rational(2, 3));
  CHECK(global_quotient_euler(Rational(2), 1) == Rational(2));
  CHECK(global_quotient_euler(Rational(0), 4) == Rational(0));
  CHECK(global_quotient_euler(Rational(2), 3) == euler_characteristic(OrbifoldSurface::sphere({3, 3})));
  CHECK(code_of([] { global_quotient_euler(Rational(2), 0); }) == ErrorCode::BadParameter);
}

TEST_CASE("fundamental groups") {
  CHECK(fundamental_group(Model::orbisphere(4, 6)) == GroupDescriptor::cyclic(2));
  CHECK(fundamental_group(Model::orbisphere(2, 3)).family == GroupDescriptor::Family::Trivial);
  CHECK(fundamental_group(Model::teardrop(5)).family == GroupDescriptor::Family::Trivial);
  CHECK(fundamental_group(Model::cone(7)) == GroupDescriptor::cyclic(7));
  CHECK(fundamental_group(Model::football(3)) == GroupDescriptor::cyclic(3));
  const auto d = fundamental_group(Model::dihedral_cone(5));
  CHECK(d.family == GroupDescriptor::Family::Dihedral);
  CHECK(*d.order == 10);
  CHECK(*fundamental_group(Model::symmetric_product(4)).order == 24);
  CHECK_FALSE(fundamental_group(Model::circle_quotient(3)).is_finite());
  CHECK(code_of([] { fundamental_group(Model::cone(0)); }) == ErrorCode::BadParameter);
}

TEST_CASE("coverings") {
  auto ds = [](std::int64_t n) {
    std::vector<std::int64_t> out;
    for (const auto& c : covering_divisors(n)) out.push_back(c.d);
    return out;
  };
  CHECK(ds(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(ds(2) == std::vector<std::int64_t>{1, 2});
  CHECK(ds(7) == std::vector<std::int64_t>{1, 7});
  const auto c = covering_divisors(6);
  CHECK(c.front().label == "universal manifold cover");
  CHECK(c.back().label == "identity");
  CHECK(c[1].map == "[C/Z_2] -> [C/Z_6]");
  CHECK(code_of([] { covering_divisors(1); }) == ErrorCode::BadParameter);
}

TEST_CASE("model family names round trip") {
  for (const char* name :
       {"cone", "orbisphere", "football", "teardrop", "dihedral-cone", "symmetric-product", "circle-quotient"}) {
    CHECK(to_string(parse_model_family(name)) == name);
  }
  CHECK_THROWS_AS(parse_model_family("torus"), Error);
}
