#pragma once

#include "orbiquant/orbifold.hpp"
#include "orbiquant/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbiquant {

/// Orbifold line bundle in normalized Seifert form (d0; a_1, ..., a_k) over a
/// closed oriented base with cone orders m_i, 0 <= a_i < m_i.
///
/// Construction normalizes arbitrary integer weights, moving the carries
/// floor(a_i / m_i) into d0, so two values are isomorphic bundles exactly
/// when they compare equal.
class SeifertData {
 public:
  SeifertData(OrbifoldSurface base, std::int64_t d0, std::vector<std::int64_t> weights);

  static SeifertData trivial(const OrbifoldSurface& base);

  const OrbifoldSurface& base() const { return base_; }
  std::int64_t d0() const { return d0_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }

  bool is_trivial() const;
  /// "(d0;a1,a2)"
  std::string to_string() const;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;

 private:
  OrbifoldSurface base_;
  std::int64_t d0_ = 0;
  std::vector<std::int64_t> weights_;
};

/// Parses "d0;a1,a2,..." (weights may be empty: "-2;").
SeifertData parse_seifert(const OrbifoldSurface& base, const std::string& text);

/// d0 + sum_i a_i / m_i.
Rational degree(const SeifertData& bundle);

/// Tensor product with carries. Throws BaseMismatch for different bases.
SeifertData tensor(const SeifertData& lhs, const SeifertData& rhs);

SeifertData inverse(const SeifertData& bundle);

struct PicardStructure {
  std::int64_t free_rank = 0;
  /// Orders of the cyclic torsion factors; order-1 factors are omitted.
  std::vector<std::int64_t> torsion_orders;
  /// Degree image is (1/denominator) Z; empty when no degree map applies.
  std::optional<std::int64_t> degree_lattice_denominator;

  friend bool operator==(const PicardStructure&, const PicardStructure&) = default;
};

PicardStructure picard_structure(const Model& model);

/// Degree-zero bundles over S^2(n,m): the trivial bundle followed by
/// F_r = (-1; r n/g, m - r m/g) for 1 <= r < g, g = gcd(n,m).
std::vector<SeifertData> flat_sectors(const OrbifoldSurface& base);

/// -a_i/m_i reduced into [0,1); the holonomy phase is exp(2 pi i value).
Rational holonomy_phase(const SeifertData& bundle, std::size_t cone_index);

struct Character {
  std::string name;
  struct Value {
    std::string generator;
    Rational phase;  // value exp(2 pi i phase), phase in [0,1)
  };
  std::vector<Value> values;
};

struct CharacterTable {
  GroupDescriptor group;
  std::vector<Character> characters;
};

/// One-dimensional characters of Cyclic(n), Dihedral(n) or Symmetric(n).
CharacterTable character_table(const GroupDescriptor& group);

}  // namespace orbiquant
