#include "orbiquant/orbifold.hpp"

#include "orbiquant/error.hpp"

#include <numeric>

namespace orbiquant {

namespace {

void require_orders(const std::vector<std::int64_t>& orders, const char* what) {
  for (auto k : orders) {
    if (k < 2) {
      fail(ErrorCode::BadParameter, std::string(what) + " order " + std::to_string(k) +
                                        " < 2 (order 1 is a smooth point; omit it)");
    }
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

OrbifoldSurface OrbifoldSurface::closed(std::int64_t genus, std::vector<std::int64_t> cone_orders) {
  if (genus < 0) fail(ErrorCode::BadParameter, "negative genus");
  require_orders(cone_orders, "cone");
  OrbifoldSurface s;
  s.kind_ = Kind::Closed;
  s.genus_ = genus;
  s.cone_orders_ = std::move(cone_orders);
  return s;
}

OrbifoldSurface OrbifoldSurface::orbisphere(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) fail(ErrorCode::BadParameter, "orbisphere orders must be >= 1");
  std::vector<std::int64_t> cones;
  if (n > 1) cones.push_back(n);
  if (m > 1) cones.push_back(m);
  return sphere(std::move(cones));
}

OrbifoldSurface OrbifoldSurface::mirror_disk(std::vector<std::int64_t> corner_orders) {
  require_orders(corner_orders, "corner");
  OrbifoldSurface s;
  s.kind_ = Kind::MirrorDisk;
  s.corner_orders_ = std::move(corner_orders);
  return s;
}

std::string OrbifoldSurface::label() const {
  if (kind_ == Kind::MirrorDisk) return "D(" + join(corner_orders_) + ")";
  std::string base;
  if (genus_ == 0) base = "S^2";
  else if (genus_ == 1) base = "T^2";
  else base = "Sigma_" + std::to_string(genus_);
  if (cone_orders_.empty()) return base;
  return base + "(" + join(cone_orders_) + ")";
}

Rational euler_characteristic(const OrbifoldSurface& surface) {
  if (!surface.is_closed()) {
    fail(ErrorCode::MirrorVariant, "mirror disk; use euler_characteristic_mirror");
  }
  Rational chi(2 - 2 * surface.genus());
  for (auto m : surface.cone_orders()) chi -= Rational(1) - Rational(1, m);
  return chi;
}

Rational euler_characteristic_mirror(const OrbifoldSurface& surface) {
  if (!surface.is_mirror_disk()) {
    fail(ErrorCode::ClosedVariant, "closed surface; use euler_characteristic");
  }
  Rational defect;
  for (auto k : surface.corner_orders()) defect += Rational(1) - Rational(1, k);
  return Rational(1) - Rational(1, 2) * defect;
}

OrbifoldSurface oriented_double(const OrbifoldSurface& surface) {
  if (!surface.is_mirror_disk()) fail(ErrorCode::ClosedVariant, "oriented double needs a mirror disk");
  return OrbifoldSurface::sphere(surface.corner_orders());
}

Rational global_quotient_euler(const Rational& chi_cover, std::int64_t group_order) {
  if (group_order < 1) fail(ErrorCode::BadParameter, "group order must be >= 1");
  return chi_cover / Rational(group_order);
}

std::string to_string(Model::Family family) {
  switch (family) {
    case Model::Family::Cone: return "cone";
    case Model::Family::Orbisphere: return "orbisphere";
    case Model::Family::Football: return "football";
    case Model::Family::Teardrop: return "teardrop";
    case Model::Family::DihedralCone: return "dihedral-cone";
    case Model::Family::SymmetricProduct: return "symmetric-product";
    case Model::Family::CircleQuotient: return "circle-quotient";
  }
  return "unknown";
}

Model::Family parse_model_family(const std::string& text) {
  for (auto f : {Model::Family::Cone, Model::Family::Orbisphere, Model::Family::Football,
                 Model::Family::Teardrop, Model::Family::DihedralCone,
                 Model::Family::SymmetricProduct, Model::Family::CircleQuotient}) {
    if (to_string(f) == text) return f;
  }
  fail(ErrorCode::BadParameter, "unknown model '" + text + "'");
}

GroupDescriptor GroupDescriptor::cyclic(std::int64_t n) {
  if (n < 1) fail(ErrorCode::BadParameter, "cyclic group order must be >= 1");
  if (n == 1) return trivial();
  return {Family::Cyclic, n, BigInt(n)};
}

GroupDescriptor GroupDescriptor::dihedral(std::int64_t n) {
  if (n < 2) fail(ErrorCode::BadParameter, "dihedral group needs n >= 2");
  return {Family::Dihedral, n, BigInt(2 * n)};
}

GroupDescriptor GroupDescriptor::symmetric(std::int64_t n) {
  if (n < 1) fail(ErrorCode::BadParameter, "symmetric group needs n >= 1");
  BigInt order = 1;
  for (std::int64_t k = 2; k <= n; ++k) order *= k;
  return {Family::Symmetric, n, order};
}

std::string to_string(GroupDescriptor::Family family) {
  switch (family) {
    case GroupDescriptor::Family::Trivial: return "trivial";
    case GroupDescriptor::Family::Cyclic: return "cyclic";
    case GroupDescriptor::Family::Dihedral: return "dihedral";
    case GroupDescriptor::Family::Symmetric: return "symmetric";
    case GroupDescriptor::Family::Integers: return "integers";
  }
  return "unknown";
}

std::string GroupDescriptor::label() const {
  switch (family) {
    case Family::Trivial: return "1";
    case Family::Cyclic: return "Z_" + std::to_string(n);
    case Family::Dihedral: return "D_" + std::to_string(n);
    case Family::Symmetric: return "S_" + std::to_string(n);
    case Family::Integers: return "Z";
  }
  return "?";
}

GroupDescriptor fundamental_group(const Model& model) {
  using F = Model::Family;
  switch (model.family) {
    case F::Cone:
      if (model.n < 2) fail(ErrorCode::BadParameter, "cone needs n >= 2");
      return GroupDescriptor::cyclic(model.n);
    case F::Orbisphere:
      if (model.n < 1 || model.m < 1) fail(ErrorCode::BadParameter, "orbisphere needs n, m >= 1");
      return GroupDescriptor::cyclic(gcd64(model.n, model.m));
    case F::Football:
      if (model.n < 1) fail(ErrorCode::BadParameter, "football needs n >= 1");
      return GroupDescriptor::cyclic(model.n);
    case F::Teardrop:
      if (model.n < 1) fail(ErrorCode::BadParameter, "teardrop needs m >= 1");
      return GroupDescriptor::trivial();
    case F::DihedralCone:
      if (model.n < 2) fail(ErrorCode::BadParameter, "dihedral cone needs n >= 2");
      return GroupDescriptor::dihedral(model.n);
    case F::SymmetricProduct:
      if (model.n < 1) fail(ErrorCode::BadParameter, "symmetric product needs n >= 1");
      return GroupDescriptor::symmetric(model.n);
    case F::CircleQuotient:
      if (model.n < 1) fail(ErrorCode::BadParameter, "circle quotient needs n >= 1");
      return GroupDescriptor::integers();
  }
  fail(ErrorCode::UnsupportedModel, "unknown model family");
}

std::vector<Covering> covering_divisors(std::int64_t n) {
  if (n < 2) fail(ErrorCode::BadParameter, "covering_divisors needs n >= 2");
  std::vector<Covering> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::string label = d == 1 ? "universal manifold cover" : d == n ? "identity" : "intermediate";
    out.push_back({d, "[C/Z_" + std::to_string(d) + "] -> [C/Z_" + std::to_string(n) + "]", label});
  }
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd64(a, b), b);
}

}  // namespace orbiquant
