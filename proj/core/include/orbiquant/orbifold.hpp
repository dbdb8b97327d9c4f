#pragma once

#include "orbiquant/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbiquant {

/// A closed oriented 2-orbifold (genus + cone orders) or a disk bounded by
/// mirrors with corner reflectors. The two variants never mix.
class OrbifoldSurface {
 public:
  enum class Kind { Closed, MirrorDisk };

  /// Cone orders must all be >= 2; order 1 is a smooth point and is rejected.
  static OrbifoldSurface closed(std::int64_t genus, std::vector<std::int64_t> cone_orders);
  static OrbifoldSurface sphere(std::vector<std::int64_t> cone_orders) {
    return closed(0, std::move(cone_orders));
  }
  /// Genus-0 sphere S^2(n,m) where an order of 1 denotes a smooth point and
  /// is left out of the cone list.
  static OrbifoldSurface orbisphere(std::int64_t n, std::int64_t m);
  static OrbifoldSurface mirror_disk(std::vector<std::int64_t> corner_orders);

  Kind kind() const { return kind_; }
  bool is_closed() const { return kind_ == Kind::Closed; }
  bool is_mirror_disk() const { return kind_ == Kind::MirrorDisk; }

  std::int64_t genus() const { return genus_; }
  const std::vector<std::int64_t>& cone_orders() const { return cone_orders_; }
  const std::vector<std::int64_t>& corner_orders() const { return corner_orders_; }

  /// Short human label, e.g. "S^2(3,5)", "T^2", "Sigma_2(3)", "D(2,2,3)".
  std::string label() const;

  friend bool operator==(const OrbifoldSurface&, const OrbifoldSurface&) = default;

 private:
  OrbifoldSurface() = default;

  Kind kind_ = Kind::Closed;
  std::int64_t genus_ = 0;
  std::vector<std::int64_t> cone_orders_;
  std::vector<std::int64_t> corner_orders_;
};

/// chi_orb = (2 - 2g) - sum_i (1 - 1/m_i). Throws MirrorVariant on a mirror disk.
Rational euler_characteristic(const OrbifoldSurface& surface);

/// chi_orb = 1 - (1/2) sum_j (1 - 1/k_j). Throws ClosedVariant on a closed surface.
Rational euler_characteristic_mirror(const OrbifoldSurface& surface);

/// Genus-0 closed surface with one cone point of order k_j per corner.
OrbifoldSurface oriented_double(const OrbifoldSurface& surface);

/// chi(M) / |G| for a global quotient [M/G].
Rational global_quotient_euler(const Rational& chi_cover, std::int64_t group_order);

/// The example families whose invariants are tabulated by the library.
struct Model {
  enum class Family {
    Cone,              // [C/Z_n]
    Orbisphere,        // S^2(n,m)
    Football,          // S^2(n,n)
    Teardrop,          // S^2(m)
    DihedralCone,      // [C/D_n]
    SymmetricProduct,  // [C^n/S_n]
    CircleQuotient,    // S^1/Z_n
  };

  Family family;
  std::int64_t n = 0;
  std::int64_t m = 0;

  static Model cone(std::int64_t n) { return {Family::Cone, n, 0}; }
  static Model orbisphere(std::int64_t n, std::int64_t m) { return {Family::Orbisphere, n, m}; }
  static Model football(std::int64_t n) { return {Family::Football, n, n}; }
  static Model teardrop(std::int64_t m) { return {Family::Teardrop, m, 0}; }
  static Model dihedral_cone(std::int64_t n) { return {Family::DihedralCone, n, 0}; }
  static Model symmetric_product(std::int64_t n) { return {Family::SymmetricProduct, n, 0}; }
  static Model circle_quotient(std::int64_t n) { return {Family::CircleQuotient, n, 0}; }
};

std::string to_string(Model::Family family);
/// Parses the CLI spelling: cone, orbisphere, football, teardrop,
/// dihedral-cone, symmetric-product, circle-quotient.
Model::Family parse_model_family(const std::string& text);

struct GroupDescriptor {
  enum class Family { Trivial, Cyclic, Dihedral, Symmetric, Integers };

  Family family = Family::Trivial;
  std::int64_t n = 1;
  /// Group order; empty for the infinite cyclic group.
  std::optional<BigInt> order;

  static GroupDescriptor trivial() { return {Family::Trivial, 1, BigInt(1)}; }
  static GroupDescriptor cyclic(std::int64_t n);
  static GroupDescriptor dihedral(std::int64_t n);
  static GroupDescriptor symmetric(std::int64_t n);
  static GroupDescriptor integers() { return {Family::Integers, 0, std::nullopt}; }

  bool is_finite() const { return order.has_value(); }
  std::string label() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

std::string to_string(GroupDescriptor::Family family);

/// Orbifold fundamental group of a tabulated family. Cyclic(1) collapses to
/// Trivial (e.g. a coprime orbisphere).
GroupDescriptor fundamental_group(const Model& model);

struct Covering {
  std::int64_t d;
  std::string map;    // "[C/Z_d] -> [C/Z_n]"
  std::string label;  // "universal manifold cover", "identity" or "intermediate"
};

/// One entry per divisor d of n, ascending.
std::vector<Covering> covering_divisors(std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace orbiquant
