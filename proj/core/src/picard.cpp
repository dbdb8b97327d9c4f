#include "orbiquant/picard.hpp"

#include "orbiquant/error.hpp"

#include <charconv>

namespace orbiquant {

SeifertData::SeifertData(OrbifoldSurface base, std::int64_t d0, std::vector<std::int64_t> weights)
    : base_(std::move(base)), d0_(d0), weights_(std::move(weights)) {
  if (!base_.is_closed()) fail(ErrorCode::MirrorVariant, "Seifert data needs a closed oriented base");
  const auto& orders = base_.cone_orders();
  if (weights_.size() != orders.size()) {
    fail(ErrorCode::BadParameter, "expected " + std::to_string(orders.size()) + " weights for " +
                                      base_.label() + ", got " + std::to_string(weights_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    d0_ = checked_add(d0_, floor_div(weights_[i], orders[i]));
    weights_[i] = floor_mod(weights_[i], orders[i]);
  }
}

SeifertData SeifertData::trivial(const OrbifoldSurface& base) {
  return SeifertData(base, 0, std::vector<std::int64_t>(base.cone_orders().size(), 0));
}

bool SeifertData::is_trivial() const {
  if (d0_ != 0) return false;
  for (auto a : weights_) {
    if (a != 0) return false;
  }
  return true;
}

std::string SeifertData::to_string() const {
  std::string out = "(" + std::to_string(d0_) + ";";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out + ")";
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    fail(ErrorCode::BadParameter, "malformed Seifert data '" + whole + "'");
  }
  return v;
}

}  // namespace

SeifertData parse_seifert(const OrbifoldSurface& base, const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  auto semi = body.find(';');
  if (semi == std::string::npos) fail(ErrorCode::BadParameter, "Seifert data needs 'd0;a1,...': " + text);
  std::int64_t d0 = parse_int(body.substr(0, semi), text);
  std::vector<std::int64_t> weights;
  std::string rest = body.substr(semi + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    weights.push_back(parse_int(rest.substr(pos, comma - pos), text));
    pos = comma + 1;
  }
  return SeifertData(base, d0, std::move(weights));
}

Rational degree(const SeifertData& bundle) {
  Rational deg(bundle.d0());
  const auto& orders = bundle.base().cone_orders();
  for (std::size_t i = 0; i < orders.size(); ++i) deg += Rational(bundle.weights()[i], orders[i]);
  return deg;
}

SeifertData tensor(const SeifertData& lhs, const SeifertData& rhs) {
  if (!(lhs.base() == rhs.base())) {
    fail(ErrorCode::BaseMismatch, lhs.base().label() + " vs " + rhs.base().label());
  }
  std::vector<std::int64_t> weights(lhs.weights().size());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = lhs.weights()[i] + rhs.weights()[i];
  // the constructor reduces each weight mod m_i and adds the carry to d0
  return SeifertData(lhs.base(), checked_add(lhs.d0(), rhs.d0()), std::move(weights));
}

SeifertData inverse(const SeifertData& bundle) {
  std::vector<std::int64_t> weights(bundle.weights().size());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = -bundle.weights()[i];
  return SeifertData(bundle.base(), checked_mul(-1, bundle.d0()), std::move(weights));
}

PicardStructure picard_structure(const Model& model) {
  using F = Model::Family;
  PicardStructure out;
  switch (model.family) {
    case F::Cone:
      if (model.n < 2) fail(ErrorCode::BadParameter, "cone needs n >= 2");
      out.torsion_orders = {model.n};
      return out;
    case F::Orbisphere: {
      if (model.n < 1 || model.m < 1) fail(ErrorCode::BadParameter, "orbisphere needs n, m >= 1");
      out.free_rank = 1;
      auto g = gcd64(model.n, model.m);
      if (g > 1) out.torsion_orders = {g};
      out.degree_lattice_denominator = lcm64(model.n, model.m);
      return out;
    }
    case F::Football:
      if (model.n < 1) fail(ErrorCode::BadParameter, "football needs n >= 1");
      out.free_rank = 1;
      if (model.n > 1) out.torsion_orders = {model.n};
      out.degree_lattice_denominator = model.n;
      return out;
    case F::Teardrop:
      if (model.n < 2) fail(ErrorCode::BadParameter, "teardrop needs m >= 2");
      out.free_rank = 1;
      out.degree_lattice_denominator = model.n;
      return out;
    case F::DihedralCone:
      if (model.n < 2) fail(ErrorCode::BadParameter, "dihedral cone needs n >= 2");
      out.torsion_orders = model.n % 2 ? std::vector<std::int64_t>{2} : std::vector<std::int64_t>{2, 2};
      return out;
    case F::SymmetricProduct:
      if (model.n < 2) fail(ErrorCode::BadParameter, "symmetric product needs n >= 2");
      out.torsion_orders = {2};
      return out;
    case F::CircleQuotient:
      break;
  }
  fail(ErrorCode::UnsupportedModel, "no Picard table for " + to_string(model.family));
}

std::vector<SeifertData> flat_sectors(const OrbifoldSurface& base) {
  if (!base.is_closed() || base.genus() != 0 || base.cone_orders().size() != 2) {
    fail(ErrorCode::BaseMismatch, "flat_sectors needs a two-cone-point sphere S^2(n,m), got " + base.label());
  }
  const auto n = base.cone_orders()[0];
  const auto m = base.cone_orders()[1];
  const auto g = gcd64(n, m);
  std::vector<SeifertData> out{SeifertData::trivial(base)};
  for (std::int64_t r = 1; r < g; ++r) out.emplace_back(base, -1, std::vector<std::int64_t>{r * n / g, m - r * m / g});
  return out;
}

Rational holonomy_phase(const SeifertData& bundle, std::size_t cone_index) {
  const auto& orders = bundle.base().cone_orders();
  if (cone_index >= orders.size()) {
    fail(ErrorCode::IndexOutOfRange, "cone index " + std::to_string(cone_index) + " on " + bundle.base().label());
  }
  return (-Rational(bundle.weights()[cone_index], orders[cone_index])).mod1();
}

CharacterTable character_table(const GroupDescriptor& group) {
  using F = GroupDescriptor::Family;
  CharacterTable table{group, {}};
  const Rational zero(0);
  const Rational half(1, 2);
  switch (group.family) {
    case F::Cyclic:
      for (std::int64_t q = 0; q < group.n; ++q) {
        table.characters.push_back({"chi_" + std::to_string(q), {{"g", Rational(q, group.n)}}});
      }
      return table;
    case F::Dihedral:
      // chi(r)^2 = 1 from s r s^-1 = r^-1; chi(r) = -1 needs (-1)^n = 1.
      table.characters.push_back({"1", {{"r", zero}, {"s", zero}}});
      table.characters.push_back({"sgn", {{"r", zero}, {"s", half}}});
      if (group.n % 2 == 0) {
        table.characters.push_back({"det", {{"r", half}, {"s", zero}}});
        table.characters.push_back({"sgn*det", {{"r", half}, {"s", half}}});
      }
      return table;
    case F::Symmetric:
      if (group.n < 2) break;
      table.characters.push_back({"trivial", {{"transposition", zero}}});
      table.characters.push_back({"sign", {{"transposition", half}}});
      return table;
    case F::Trivial:
      table.characters.push_back({"chi_0", {{"g", zero}}});
      return table;
    case F::Integers:
      break;
  }
  fail(ErrorCode::UnsupportedGroup, "character table for " + group.label());
}

}  // namespace orbiquant
