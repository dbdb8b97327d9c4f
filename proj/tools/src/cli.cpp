#include "orbiquant_cli/cli.hpp"

#include "orbiquant_cli/output.hpp"

#include "CLI11.hpp"

#include <orbiquant/error.hpp>
#include <orbiquant/model_spectra.hpp>
#include <orbiquant/oracle.hpp>
#include <orbiquant/orbifold.hpp>
#include <orbiquant/picard.hpp>
#include <orbiquant/quantization.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

namespace orbiquant::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Output {
  Json doc;
  std::string table;  // array flattened for --format csv; empty = one row
};

// Every option binds into one struct; only the chosen subcommand reads it.
struct Flags {
  std::string format = "json";
  std::optional<std::uint64_t> seed;

  std::int64_t genus = 0;
  std::string cones;
  std::string corners;
  std::string bundle, lhs, rhs;
  std::string cover_chi;
  std::int64_t group_order = 0;

  std::string model;
  std::string group;
  std::int64_t n = 0, m = 0, q = 0, Q = 0;
  std::int64_t l = 0, lmin = 0, lmax = 0, nmax = 0, kmax = 0, count = 0;
  std::int64_t nphi = 0, weight = 0, nr = 0;
  std::int64_t k1 = 0, k2 = 0, nu = 0;
  std::int64_t K = 0;
  std::string alpha = "0";
  std::string flux;
  std::string sector;
  std::string tag;
  std::string state_a, state_b;
  bool chiral = false;

  double hbar = 1.0, mass = 1.0, omega = 1.0, inertia = 1.0, circumference = 1.0;
  double charge = 1.0, monopole = 0.0, field = 0.0, area = 1.0;
  double k = 1.0, emax = 0.0, from = 0.0, to = 1.0, phi = 0.0;
  int points = 50;
  int nodes = 200;
  std::optional<double> r_max;
  std::int64_t trials = 1000;
  int shards = 1;
};

// ---------------------------------------------------------------------------
// argument helpers

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      fail(ErrorCode::BadParameter, "bad integer list '" + text + "'");
    }
  }
  return out;
}

OrbifoldSurface closed_surface(const Flags& f) { return OrbifoldSurface::closed(f.genus, parse_list(f.cones)); }

Model make_model(const Flags& f) {
  const auto family = parse_model_family(f.model);
  switch (family) {
    case Model::Family::Orbisphere: return Model::orbisphere(f.n, f.m);
    case Model::Family::Football: return Model::football(f.n);
    case Model::Family::Teardrop: return Model::teardrop(f.n);
    default: return Model{family, f.n, 0};
  }
}

PhysicalParams physics(const Flags& f) {
  PhysicalParams p;
  p.hbar = f.hbar;
  p.mass = f.mass;
  p.omega = f.omega;
  p.inertia = f.inertia;
  p.circumference = f.circumference;
  p.charge = f.charge;
  p.monopole_strength = f.monopole;
  p.validate();
  return p;
}

std::uint64_t resolve_seed(const Flags& f) {
  if (f.seed) return *f.seed;
  if (const char* env = std::getenv("ORBIQUANT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::logic_error&) {
      fail(ErrorCode::BadParameter, std::string("ORBIQUANT_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return kDefaultSeed;
}

// ---------------------------------------------------------------------------
// JSON builders

std::string rat(const Rational& r) { return r.to_string(); }

Json bundle_json(const SeifertData& b) {
  return Json{{"bundle", b.to_string()}, {"degree", rat(degree(b))}};
}

Json qn_json(const QuantumNumbers& qn) {
  Json out = Json::object();
  for (const auto& [k, v] : qn) out[k] = v;
  return out;
}

Json degeneracy_json(const Degeneracy& d) {
  switch (d.kind) {
    case Degeneracy::Kind::Finite: return d.count;
    case Degeneracy::Kind::Continuum: return "continuum";
    case Degeneracy::Kind::InfiniteRadialMultiplicity: return "infinite-radial";
  }
  return nullptr;
}

Json lines_json(const std::vector<SpectralLine>& lines) {
  Json out = Json::array();
  for (const auto& line : lines) {
    Json states = Json::array();
    for (const auto& s : line.states) states.push_back(qn_json(s));
    out.push_back({{"energy", line.energy},
                   {"quantum_numbers", qn_json(line.quantum_numbers)},
                   {"degeneracy", degeneracy_json(line.degeneracy)},
                   {"states", states}});
  }
  return out;
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::vector<std::int64_t> parse_tuple(const std::string& text, std::size_t arity, const char* what) {
  auto v = parse_list(text);
  if (v.size() != arity)
    fail(ErrorCode::BadParameter, std::string(what) + " expects " + std::to_string(arity) + " comma-separated integers");
  return v;
}

// ---------------------------------------------------------------------------
// eigenfunction construction shared by `eigenfunction` and `verify`

EigenfunctionEvaluator build_evaluator(const Flags& f) {
  if (f.model == "cone-free") return cone_free_eigenfunction(f.n, cyclic_weight(f.q, f.n), f.l, f.k, physics(f));
  if (f.model == "cone-oscillator") return cone_oscillator_wavefunction(f.n, f.nr, f.m, physics(f));
  if (f.model == "snm") return snm_wavefunction(f.k1, f.k2, f.nu);
  if (f.model == "dihedral") {
    const auto sector = parse_dihedral_sector(f.sector, f.n);
    if (f.chiral) {
      const auto* d = std::get_if<DihedralDoublet>(&sector);
      if (!d) fail(ErrorCode::InvalidSector, "--chiral needs a doublet sector");
      return dihedral_doublet_chiral(*d, f.nu, f.k);
    }
    return dihedral_eigenfunction(sector, f.nu, f.k);
  }
  fail(ErrorCode::BadParameter, "unknown eigenfunction model '" + f.model + "'");
}

OdeTag default_tag(const EigenfunctionEvaluator& e) {
  switch (e.model()) {
    case ModelTag::ConeOscillator: return OdeTag::OscRadial;
    case ModelTag::SnmRadial: return OdeTag::SnmRadialX;
    default: return OdeTag::ConeBessel;
  }
}

Json evaluator_header(const EigenfunctionEvaluator& e) {
  Json qn = Json::object();
  for (const auto& [k, v] : e.quantum_numbers()) qn[k] = v;
  Json ode = Json::object();
  for (const auto& [k, v] : e.ode_parameters()) ode[k] = v;
  Json domain;
  if (e.domain().kind == Domain::Kind::Interval) {
    domain = {{"kind", "interval"}, {"lo", e.domain().lo}, {"hi", e.domain().hi}};
  } else {
    domain = {{"kind", "wedge"}, {"angular_width", e.domain().angular_width}};
  }
  return Json{{"model", to_string(e.model())},
              {"quantum_numbers", qn},
              {"normalization", e.normalization()},
              {"domain", domain},
              {"ode_parameters", ode}};
}

// ---------------------------------------------------------------------------
// commands

using Handler = std::function<Output(const Flags&)>;

struct Registry {
  CLI::App& root;
  Flags& f;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  CLI::App* group(const std::string& name, const std::string& help) {
    auto* g = root.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  }

  CLI::App* command(CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    auto* c = parent->add_subcommand(name, help);
    c->fallthrough();
    commands.emplace_back(c, std::move(h));
    return c;
  }

  void surface(CLI::App* c) {
    c->add_option("--genus", f.genus, "genus of the base")->capture_default_str();
    c->add_option("--cones", f.cones, "comma-separated cone orders, e.g. 3,5");
  }
};

void add_topology(Registry& r) {
  Flags& f = r.f;
  auto* euler = r.command(&r.root, "euler", "orbifold Euler characteristic", [](const Flags& f) {
    if (!f.cover_chi.empty())
      return Output{{{"chi_orb", rat(global_quotient_euler(Rational::parse(f.cover_chi), f.group_order))}}, ""};
    if (!f.corners.empty())
      return Output{{{"chi_orb", rat(euler_characteristic_mirror(OrbifoldSurface::mirror_disk(parse_list(f.corners))))}},
                    ""};
    return Output{{{"chi_orb", rat(euler_characteristic(closed_surface(f)))}}, ""};
  });
  r.surface(euler);
  euler->add_option("--corners", f.corners, "corner reflector orders of a mirror disk");
  euler->add_option("--cover-chi", f.cover_chi, "chi of the cover M for a global quotient [M/G]");
  euler->add_option("--group-order", f.group_order, "|G| for a global quotient");

  r.command(&r.root, "double", "oriented double of a mirror disk", [](const Flags& f) {
     const auto disk = OrbifoldSurface::mirror_disk(parse_list(f.corners));
     const auto doubled = oriented_double(disk);
     return Output{{{"disk", disk.label()},
                    {"chi_orb", rat(euler_characteristic_mirror(disk))},
                    {"double", doubled.label()},
                    {"chi_double", rat(euler_characteristic(doubled))}},
                   ""};
   })->add_option("--corners", f.corners, "corner reflector orders")->required();

  auto* pi1 = r.command(&r.root, "pi1", "orbifold fundamental group of a model", [](const Flags& f) {
    const auto g = fundamental_group(make_model(f));
    Json order = nullptr;
    if (g.order) order = g.order->str();
    return Output{{{"model", f.model}, {"group", g.label()}, {"family", to_string(g.family)}, {"order", order}}, ""};
  });
  pi1->add_option("--model", f.model, "cone|orbisphere|football|teardrop|dihedral-cone|symmetric-product|circle-quotient")
      ->required();
  pi1->add_option("--n", f.n, "first order")->required();
  pi1->add_option("--m", f.m, "second order (orbisphere)");

  r.command(&r.root, "coverings", "intermediate covers of [C/Z_n]", [](const Flags& f) {
     Json rows = Json::array();
     for (const auto& c : covering_divisors(f.n)) rows.push_back({{"d", c.d}, {"map", c.map}, {"label", c.label}});
     return Output{{{"n", f.n}, {"coverings", rows}}, "coverings"};
   })->add_option("--n", f.n, "cone order")->required();
}

void add_picard(Registry& r) {
  Flags& f = r.f;
  auto* deg = r.command(&r.root, "degree", "orbifold degree of a bundle", [](const Flags& f) {
    const auto b = parse_seifert(closed_surface(f), f.bundle);
    return Output{bundle_json(b), ""};
  });
  r.surface(deg);
  deg->add_option("--bundle", f.bundle, "Seifert data d0;a1,a2,...")->required();

  auto* ten = r.command(&r.root, "tensor", "tensor product of two bundles", [](const Flags& f) {
    const auto base = closed_surface(f);
    const auto a = parse_seifert(base, f.lhs);
    const auto b = parse_seifert(base, f.rhs);
    const auto t = tensor(a, b);
    return Output{{{"lhs", a.to_string()}, {"rhs", b.to_string()}, {"tensor", t.to_string()}, {"degree", rat(degree(t))}},
                  ""};
  });
  r.surface(ten);
  ten->add_option("--lhs", f.lhs, "Seifert data")->required();
  ten->add_option("--rhs", f.rhs, "Seifert data")->required();

  auto* inv = r.command(&r.root, "inverse", "dual bundle", [](const Flags& f) {
    const auto b = parse_seifert(closed_surface(f), f.bundle);
    const auto i = inverse(b);
    return Output{{{"bundle", b.to_string()}, {"inverse", i.to_string()}, {"degree", rat(degree(i))}}, ""};
  });
  r.surface(inv);
  inv->add_option("--bundle", f.bundle, "Seifert data")->required();

  auto* pic = r.command(&r.root, "picard", "Picard group of a model", [](const Flags& f) {
    const auto p = picard_structure(make_model(f));
    Json lattice = nullptr;
    if (p.degree_lattice_denominator) lattice = rat(Rational(1, *p.degree_lattice_denominator));
    return Output{{{"model", f.model},
                   {"free_rank", p.free_rank},
                   {"torsion_orders", p.torsion_orders},
                   {"degree_lattice", lattice}},
                  ""};
  });
  pic->add_option("--model", f.model, "model family")->required();
  pic->add_option("--n", f.n, "first order")->required();
  pic->add_option("--m", f.m, "second order (orbisphere)");

  auto* flat = r.command(&r.root, "flat-sectors", "degree-zero bundles over S^2(n,m)", [](const Flags& f) {
    const auto base = OrbifoldSurface::orbisphere(f.n, f.m);
    Json rows = Json::array();
    for (const auto& s : flat_sectors(base)) {
      Json hol = Json::array();
      for (std::size_t i = 0; i < s.weights().size(); ++i) hol.push_back(rat(holonomy_phase(s, i)));
      rows.push_back({{"bundle", s.to_string()}, {"degree", rat(degree(s))}, {"holonomy", hol}});
    }
    return Output{{{"base", base.label()}, {"sectors", rows}}, "sectors"};
  });
  flat->add_option("--n", f.n, "first cone order")->required();
  flat->add_option("--m", f.m, "second cone order")->required();

  auto* chars = r.command(&r.root, "characters", "one-dimensional characters", [](const Flags& f) {
    GroupDescriptor g;
    if (f.group == "cyclic") {
      g = GroupDescriptor::cyclic(f.n);
    } else if (f.group == "dihedral") {
      g = GroupDescriptor::dihedral(f.n);
    } else if (f.group == "symmetric") {
      g = GroupDescriptor::symmetric(f.n);
    } else {
      fail(ErrorCode::BadParameter, "unknown group '" + f.group + "'");
    }
    const auto table = character_table(g);
    Json rows = Json::array();
    for (const auto& c : table.characters) {
      Json values = Json::object();
      for (const auto& v : c.values) values[v.generator] = rat(v.phase);
      rows.push_back({{"name", c.name}, {"values", values}});
    }
    return Output{{{"group", table.group.label()}, {"characters", rows}}, "characters"};
  });
  chars->add_option("--group", f.group, "cyclic|dihedral|symmetric")->required();
  chars->add_option("--n", f.n, "group parameter")->required();
}

void add_quantization(Registry& r) {
  Flags& f = r.f;
  auto* pre = r.command(&r.root, "prequantize", "prequantum bundles of flux on S^2(n,m)", [](const Flags& f) {
    const auto flux = Rational::parse(f.flux);
    Json rows = Json::array();
    for (const auto& s : prequantize_orbisphere(f.n, f.m, flux)) {
      Json row = bundle_json(s.bundle);
      row["label"] = s.flat_label;
      rows.push_back(row);
    }
    return Output{{{"base", OrbifoldSurface::orbisphere(f.n, f.m).label()}, {"flux", rat(flux)}, {"sectors", rows}},
                  "sectors"};
  });
  pre->add_option("--n", f.n, "first cone order")->required();
  pre->add_option("--m", f.m, "second cone order")->required();
  pre->add_option("--flux", f.flux, "normalized flux p/q")->required();

  auto integrality_json = [](const IntegralityCheck& c) {
    return Json{{"value", c.value}, {"quanta", c.quanta}, {"integral", c.ok}};
  };
  auto* dirac = r.command(&r.root, "dirac", "Dirac quantization 2 e g / hbar", [integrality_json](const Flags& f) {
    return Output{integrality_json(dirac_condition(f.charge, f.monopole, f.hbar)), ""};
  });
  dirac->add_option("--charge", f.charge, "electric charge e")->capture_default_str();
  dirac->add_option("--g", f.monopole, "monopole strength g")->required();
  dirac->add_option("--hbar", f.hbar)->capture_default_str();

  auto* torus = r.command(&r.root, "torus-flux", "flux quanta e B A / (2 pi hbar)", [integrality_json](const Flags& f) {
    return Output{integrality_json(torus_flux_quanta(f.field, f.area, f.charge, f.hbar)), ""};
  });
  torus->add_option("--B", f.field, "magnetic field")->required();
  torus->add_option("--area", f.area, "torus area")->required();
  torus->add_option("--charge", f.charge)->capture_default_str();
  torus->add_option("--hbar", f.hbar)->capture_default_str();

  auto* bs = r.group("bs", "Bohr-Sommerfeld rules");
  auto* circle = r.command(bs, "circle", "p_l = hbar n (l + alpha) on S^1/Z_n", [](const Flags& f) {
    const auto values = bohr_sommerfeld_circle(physics(f), f.n, Rational::parse(f.alpha), {f.lmin, f.lmax});
    Json rows = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
      rows.push_back({{"l", f.lmin + static_cast<std::int64_t>(i)}, {"p", values[i]}});
    return Output{{{"rule", "circle"}, {"n", f.n}, {"alpha", rat(Rational::parse(f.alpha).mod1())}, {"values", rows}},
                  "values"};
  });
  circle->add_option("--n", f.n)->required();
  circle->add_option("--alpha", f.alpha, "flat holonomy p/q")->capture_default_str();
  circle->add_option("--lmin", f.lmin)->required();
  circle->add_option("--lmax", f.lmax)->required();
  circle->add_option("--hbar", f.hbar)->capture_default_str();

  auto* cone = r.command(bs, "cone", "p_phi = hbar (q + n l) on [C/Z_n]", [](const Flags& f) {
    const auto values = bohr_sommerfeld_cone(f.n, f.q, f.hbar, {f.lmin, f.lmax});
    Json rows = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
      rows.push_back({{"l", f.lmin + static_cast<std::int64_t>(i)}, {"p", values[i]}});
    return Output{{{"rule", "cone"}, {"n", f.n}, {"q", f.q}, {"values", rows}}, "values"};
  });
  cone->add_option("--n", f.n)->required();
  cone->add_option("--q", f.q, "cyclic weight")->required();
  cone->add_option("--lmin", f.lmin)->required();
  cone->add_option("--lmax", f.lmax)->required();
  cone->add_option("--hbar", f.hbar)->capture_default_str();

  auto* osc = r.command(bs, "oscillator", "E_n = hbar omega (n + 1/2)", [](const Flags& f) {
    const auto values = bs_maslov_oscillator(physics(f), f.nmax);
    Json rows = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
      rows.push_back({{"n", static_cast<std::int64_t>(i)}, {"energy", values[i]}});
    return Output{{{"rule", "oscillator"}, {"maslov_index", 2}, {"values", rows}}, "values"};
  });
  osc->add_option("--nmax", f.nmax)->required();
  osc->add_option("--hbar", f.hbar)->capture_default_str();
  osc->add_option("--omega", f.omega)->capture_default_str();

  auto* canon = r.command(&r.root, "canonical", "orbifold canonical bundle", [](const Flags& f) {
    const auto base = closed_surface(f);
    Json doc{{"surface", base.label()}};
    doc.update(bundle_json(canonical_bundle(base)));
    return Output{doc, ""};
  });
  r.surface(canon);

  auto* half = r.command(&r.root, "half-form", "square root of the canonical bundle", [](const Flags& f) {
    const auto base = closed_surface(f);
    const auto h = half_form_bundle(base);
    Json delta = nullptr, obstruction = nullptr;
    if (h.delta) delta = h.delta->to_string();
    if (h.obstruction_order) obstruction = *h.obstruction_order;
    return Output{{{"surface", base.label()}, {"exists", h.exists}, {"delta", delta}, {"obstruction_order", obstruction}},
                  ""};
  });
  r.surface(half);

  auto* meta = r.command(&r.root, "metaplectic", "half-form corrected bundle L (x) delta", [](const Flags& f) {
    const auto b = parse_seifert(closed_surface(f), f.bundle);
    const auto h = half_form_bundle(b.base());
    const auto corrected = metaplectic_correct(b);
    return Output{{{"bundle", b.to_string()},
                   {"delta", h.delta ? Json(h.delta->to_string()) : Json(nullptr)},
                   {"corrected", corrected.to_string()},
                   {"degree", rat(degree(corrected))}},
                  ""};
  });
  r.surface(meta);
  meta->add_option("--bundle", f.bundle, "Seifert data")->required();

  auto* sections = r.group("sections", "holomorphic section counts");
  auto* weighted = r.command(sections, "weighted", "monomials of weight q on P(n,m)", [](const Flags& f) {
    const auto w = weighted_section_count(f.n, f.m, f.q);
    Json monos = Json::array();
    for (const auto& mono : w.monomials) monos.push_back({{"A", mono.a_exponent}, {"C", mono.c_exponent}});
    return Output{{{"dim", w.count}, {"monomials", monos}}, "monomials"};
  });
  weighted->add_option("--n", f.n)->required();
  weighted->add_option("--m", f.m)->required();
  weighted->add_option("--q", f.q, "weighted degree")->required();

  auto* football = r.command(sections, "football", "invariant sections on S^2(n,n)", [](const Flags& f) {
    const auto s = football_section_dim(f.n, f.nphi, f.weight);
    return Output{{{"dim", s.dim}, {"exponents", s.exponents}}, "exponents"};
  });
  football->add_option("--n", f.n)->required();
  football->add_option("--nphi", f.nphi, "flux N_phi")->required();
  football->add_option("--a", f.weight, "isotropy weight")->required();

  auto* corrected = r.command(sections, "corrected", "half-form corrected count on P(n,m)", [](const Flags& f) {
    const auto c = corrected_weighted_section_count(f.n, f.m, f.q);
    return Output{{{"dim", c.count}, {"shifted_q", c.shifted_q}}, ""};
  });
  corrected->add_option("--n", f.n)->required();
  corrected->add_option("--m", f.m)->required();
  corrected->add_option("--q", f.q)->required();
}

void add_spectra(Registry& r) {
  Flags& f = r.f;
  auto* spectrum = r.group("spectrum", "energy levels and degeneracies");

  auto* circle = r.command(spectrum, "circle", "S^1/Z_n with flat holonomy", [](const Flags& f) {
    const auto p = physics(f);
    const auto sector = flat_holonomy(Rational::parse(f.alpha), f.n);
    return Output{{{"model", "circle-quotient"},
                   {"sector", {{"alpha", rat(sector.alpha)}, {"n", f.n}}},
                   {"params", {{"hbar", p.hbar}, {"M", p.mass}, {"L", p.circumference}}},
                   {"lines", lines_json(circle_spectrum(p, sector, {f.lmin, f.lmax}))}},
                  "lines"};
  });
  circle->add_option("--n", f.n)->required();
  circle->add_option("--alpha", f.alpha, "flat holonomy p/q")->capture_default_str();
  circle->add_option("--lmin", f.lmin)->required();
  circle->add_option("--lmax", f.lmax)->required();
  circle->add_option("--hbar", f.hbar)->capture_default_str();
  circle->add_option("--M", f.mass)->capture_default_str();
  circle->add_option("--L", f.circumference, "circumference")->capture_default_str();

  auto* osc = r.command(spectrum, "cone-oscillator", "isotropic oscillator on [C/Z_n]", [](const Flags& f) {
    const auto p = physics(f);
    return Output{{{"model", "cone-oscillator"},
                   {"sector", {{"q", f.q}, {"n", f.n}}},
                   {"params", {{"hbar", p.hbar}, {"M", p.mass}, {"omega", p.omega}}},
                   {"lines", lines_json(cone_oscillator_spectrum(f.n, cyclic_weight(f.q, f.n), p, f.emax))}},
                  "lines"};
  });
  osc->add_option("--n", f.n)->required();
  osc->add_option("--q", f.q)->required();
  osc->add_option("--emax", f.emax, "energy cutoff")->required();
  osc->add_option("--hbar", f.hbar)->capture_default_str();
  osc->add_option("--M", f.mass)->capture_default_str();
  osc->add_option("--omega", f.omega)->capture_default_str();

  auto* football = r.command(spectrum, "football", "rigid rotor on S^2(n,n)", [](const Flags& f) {
    const auto p = physics(f);
    return Output{{{"model", "football"},
                   {"sector", {{"q", f.q}, {"n", f.n}}},
                   {"params", {{"hbar", p.hbar}, {"I", p.inertia}}},
                   {"lines", lines_json(football_spectrum(f.n, cyclic_weight(f.q, f.n), p, f.lmax))}},
                  "lines"};
  });
  football->add_option("--n", f.n)->required();
  football->add_option("--q", f.q)->required();
  football->add_option("--lmax", f.lmax)->required();
  football->add_option("--I", f.inertia, "moment of inertia")->capture_default_str();
  football->add_option("--hbar", f.hbar)->capture_default_str();

  auto* snm = r.command(spectrum, "snm", "S^3 reduction to S^2(n,m)", [](const Flags& f) {
    const auto p = physics(f);
    return Output{{{"model", "orbisphere"},
                   {"sector", {{"Q", f.Q}, {"n", f.n}, {"m", f.m}}},
                   {"params", {{"hbar", p.hbar}, {"I", p.inertia}}},
                   {"lines", lines_json(snm_spectrum(f.n, f.m, kk_charge(f.Q, f.n, f.m), p, f.kmax))}},
                  "lines"};
  });
  snm->add_option("--n", f.n)->required();
  snm->add_option("--m", f.m)->required();
  snm->add_option("--Q", f.Q, "Kaluza-Klein charge")->required();
  snm->add_option("--kmax", f.kmax)->required();
  snm->add_option("--I", f.inertia)->capture_default_str();
  snm->add_option("--hbar", f.hbar)->capture_default_str();

  auto* orders = r.command(&r.root, "dihedral-orders", "allowed Bessel orders on [C/D_n]", [](const Flags& f) {
    return Output{{{"n", f.n}, {"sector", f.sector}, {"orders", dihedral_angular_orders(parse_dihedral_sector(f.sector, f.n), f.count)}},
                  "orders"};
  });
  orders->add_option("--n", f.n)->required();
  orders->add_option("--sector", f.sector, "NN|DD|ND|DN|doublet:<q>")->required();
  orders->add_option("--count", f.count)->required();
}

void eigen_options(Registry& r, CLI::App* c) {
  Flags& f = r.f;
  c->add_option("--model", f.model, "cone-free|cone-oscillator|snm|dihedral")->required();
  c->add_option("--n", f.n, "cone or dihedral order");
  c->add_option("--q", f.q, "cyclic weight (cone-free)");
  c->add_option("--l", f.l, "winding l (cone-free)");
  c->add_option("--k", f.k, "wavenumber")->capture_default_str();
  c->add_option("--nr", f.nr, "radial quantum number (cone-oscillator)");
  c->add_option("--m", f.m, "angular momentum (cone-oscillator)");
  c->add_option("--k1", f.k1);
  c->add_option("--k2", f.k2);
  c->add_option("--nu", f.nu, "Jacobi degree (snm) or Bessel order (dihedral)");
  c->add_option("--sector", f.sector, "dihedral sector");
  c->add_flag("--chiral", f.chiral, "dihedral doublet in the chiral basis");
  c->add_option("--hbar", f.hbar)->capture_default_str();
  c->add_option("--M", f.mass)->capture_default_str();
  c->add_option("--omega", f.omega)->capture_default_str();
}

void add_eigenfunction(Registry& r) {
  Flags& f = r.f;
  auto* eig = r.command(&r.root, "eigenfunction", "sample an eigenfunction on a radial grid", [](const Flags& f) {
    const auto e = build_evaluator(f);
    if (f.points < 1) fail(ErrorCode::BadParameter, "--points must be >= 1");
    Json doc = evaluator_header(e);
    doc["phi"] = f.phi;
    Json samples = Json::array();
    for (double u : sample_points(f.from, f.to, static_cast<std::size_t>(f.points))) {
      const auto values = e.values(u, f.phi);
      Json row{{"u", u}};
      if (values.size() == 1) {
        row["re"] = values[0].real();
        row["im"] = values[0].imag();
      } else {
        for (std::size_t c = 0; c < values.size(); ++c) {
          row["re_" + std::to_string(c + 1)] = values[c].real();
          row["im_" + std::to_string(c + 1)] = values[c].imag();
        }
      }
      samples.push_back(row);
    }
    doc["samples"] = samples;
    return Output{doc, "samples"};
  });
  eigen_options(r, eig);
  eig->add_option("--from", f.from, "first grid point (r, or x for snm)")->capture_default_str();
  eig->add_option("--to", f.to, "last grid point")->capture_default_str();
  eig->add_option("--points", f.points)->capture_default_str();
  eig->add_option("--phi", f.phi, "angle")->capture_default_str();
}

void add_verify(Registry& r) {
  Flags& f = r.f;
  auto* verify = r.group("verify", "oracle checks");

  auto* fd = r.command(verify, "football-degeneracy", "brute vs formula g_l^(q)", [](const Flags& f) {
    const auto brute = brute_degeneracy_football(f.n, f.q, f.l);
    const auto formula = football_degeneracy(f.n, f.q, f.l);
    return Output{{{"n", f.n}, {"q", f.q}, {"l", f.l}, {"brute", brute}, {"formula", formula}, {"agree", brute == formula}},
                  ""};
  });
  fd->add_option("--n", f.n)->required();
  fd->add_option("--q", f.q)->required();
  fd->add_option("--l", f.l)->required();

  auto* sd = r.command(verify, "snm-degeneracy", "brute vs Diophantine walk g_K^(Q)", [](const Flags& f) {
    const auto brute = brute_degeneracy_snm(f.n, f.m, f.Q, f.K);
    const auto formula = static_cast<std::int64_t>(snm_level_states(f.n, f.m, f.Q, f.K).size());
    Json witnesses = Json::array();
    for (const auto& w : brute.witnesses) witnesses.push_back({{"k1", w.k1}, {"k2", w.k2}, {"nu", w.nu}});
    return Output{{{"n", f.n},
                   {"m", f.m},
                   {"Q", f.Q},
                   {"K", f.K},
                   {"brute", brute.count},
                   {"formula", formula},
                   {"agree", brute.count == formula},
                   {"witnesses", witnesses}},
                  "witnesses"};
  });
  sd->add_option("--n", f.n)->required();
  sd->add_option("--m", f.m)->required();
  sd->add_option("--Q", f.Q)->required();
  sd->add_option("--K", f.K)->required();

  auto* mono = r.command(verify, "monomials", "brute vs weighted section count", [](const Flags& f) {
    const auto brute = brute_monomial_count(f.n, f.m, f.q);
    const auto formula = weighted_section_count(f.n, f.m, f.q).count;
    return Output{{{"n", f.n}, {"m", f.m}, {"q", f.q}, {"brute", brute}, {"formula", formula}, {"agree", brute == formula}},
                  ""};
  });
  mono->add_option("--n", f.n)->required();
  mono->add_option("--m", f.m)->required();
  mono->add_option("--q", f.q)->required();

  auto* ortho = r.command(verify, "orthonormality", "quadrature inner product of two states", [](const Flags& f) {
    Flags fa = f, fb = f;
    InnerProductSpec spec;
    spec.radial_nodes = f.nodes;
    spec.r_max = f.r_max;
    std::optional<double> expected;
    if (f.model == "cone-oscillator") {
      const auto a = parse_tuple(f.state_a, 2, "--a (n_r,m)");
      const auto b = parse_tuple(f.state_b, 2, "--b (n_r,m)");
      fa.nr = a[0], fa.m = a[1], fb.nr = b[0], fb.m = b[1];
      expected = a == b ? 1.0 : 0.0;
    } else if (f.model == "snm") {
      const auto a = parse_tuple(f.state_a, 3, "--a (k1,k2,nu)");
      const auto b = parse_tuple(f.state_b, 3, "--b (k1,k2,nu)");
      fa.k1 = a[0], fa.k2 = a[1], fa.nu = a[2], fb.k1 = b[0], fb.k2 = b[1], fb.nu = b[2];
      // profiles are unnormalized: only orthogonality has a reference value
      if (std::abs(a[0]) == std::abs(b[0]) && std::abs(a[1]) == std::abs(b[1]) && a[2] != b[2]) expected = 0.0;
    } else if (f.model == "cone-free" || f.model == "dihedral") {
      // continuum states: angular factor only
      spec.mode = InnerProductSpec::Mode::AngularOnly;
      const auto a = parse_tuple(f.state_a, 1, "--a");
      const auto b = parse_tuple(f.state_b, 1, "--b");
      if (f.model == "cone-free") {
        fa.l = a[0], fb.l = b[0];
      } else {
        fa.nu = a[0], fb.nu = b[0];
      }
      expected = a == b ? 1.0 : 0.0;
    } else {
      fail(ErrorCode::BadParameter, "unknown eigenfunction model '" + f.model + "'");
    }
    const auto value = orthonormality_check(build_evaluator(fa), build_evaluator(fb), spec);
    Json doc{{"model", f.model},
             {"a", f.state_a},
             {"b", f.state_b},
             {"mode", spec.mode == InnerProductSpec::Mode::AngularOnly ? "angular" : "full"},
             {"inner_product", complex_json(value)}};
    doc["expected"] = expected ? Json(*expected) : Json(nullptr);
    doc["deviation"] = expected ? Json(std::abs(value - *expected)) : Json(nullptr);
    return Output{doc, ""};
  });
  eigen_options(r, ortho);
  ortho->add_option("--a", f.state_a, "first state: n_r,m | k1,k2,nu | l | nu")->required();
  ortho->add_option("--b", f.state_b, "second state")->required();
  ortho->add_option("--nodes", f.nodes, "radial Gauss-Legendre nodes")->capture_default_str();
  ortho->add_option("--rmax", f.r_max, "radial cutoff (default beta r^2 = 80 for the oscillator)");

  auto* ode = r.command(verify, "ode", "finite-difference ODE residual", [](const Flags& f) {
    const auto e = build_evaluator(f);
    const auto tag = f.tag.empty() ? default_tag(e) : parse_ode_tag(f.tag);
    if (f.points < 1) fail(ErrorCode::BadParameter, "--points must be >= 1");
    const auto samples = sample_points(f.from, f.to, static_cast<std::size_t>(f.points));
    return Output{{{"model", to_string(e.model())},
                   {"tag", to_string(tag)},
                   {"from", f.from},
                   {"to", f.to},
                   {"points", f.points},
                   {"max_residual", ode_residual(e, tag, samples)}},
                  ""};
  });
  eigen_options(r, ode);
  ode->add_option("--tag", f.tag, "cone_bessel|osc_radial|snm_radial_x");
  ode->add_option("--from", f.from)->required();
  ode->add_option("--to", f.to)->required();
  ode->add_option("--points", f.points)->capture_default_str();

  auto* fuzz = r.command(verify, "group-law", "random exact checks of the bundle group law", [](const Flags& f) {
    const auto report = group_law_fuzz(closed_surface(f), f.trials, resolve_seed(f), f.shards);
    return Output{{{"base", report.base},
                   {"seed", report.seed},
                   {"trials", report.trials},
                   {"failures", report.failures},
                   {"counterexamples", report.counterexamples}},
                  ""};
  });
  r.surface(fuzz);
  fuzz->add_option("--trials", f.trials)->capture_default_str();
  fuzz->add_option("--shards", f.shards, "worker threads (seed + shard index each)")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Quantum mechanics and geometric quantization on 2-orbifolds", "orbiquant"};
  app.require_subcommand(1);
  app.add_option("--format", flags.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--seed", flags.seed, "fuzz seed (falls back to ORBIQUANT_SEED)");

  Registry registry{app, flags, {}};
  add_topology(registry);
  add_picard(registry);
  add_quantization(registry);
  add_spectra(registry);
  add_eigenfunction(registry);
  add_verify(registry);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    for (auto& c : what)
      if (c == '\n') c = ' ';
    err << "error: Usage: " << what << '\n';
    return kExitUsage;
  }

  const Handler* handler = nullptr;
  for (const auto& [cmd, h] : registry.commands)
    if (cmd->parsed()) handler = &h;
  if (!handler) {
    err << "error: Usage: no command given\n";
    return kExitUsage;
  }

  try {
    const Output result = (*handler)(flags);
    std::ostringstream buffer;
    if (flags.format == "csv") {
      write_csv(result.doc, result.table, buffer);
    } else {
      write_json(result.doc, buffer);
    }
    out << buffer.str();
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::BadParameter ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace orbiquant::cli
