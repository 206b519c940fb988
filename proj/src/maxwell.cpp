#include <descent/maxwell.hpp>

#include <sstream>

namespace descent {

namespace {

constexpr int kDim = 4;
constexpr int kAxisT = 0, kAxisX = 1, kAxisY = 2, kAxisZ = 3;

void check_lorentzian4(const Metric& g) {
  if (g.dimension() != kDim || g.sign(0) != 1 || g.sign(1) != -1 || g.sign(2) != -1 || g.sign(3) != -1) {
    throw std::invalid_argument("expected the four-dimensional Lorentzian metric (+,-,-,-)");
  }
}

void check_coordinate_pair(const DescentPair& pair, int axis, const char* what) {
  bool ok = pair.dimension() == kDim;
  for (int a = 0; ok && a < kDim; ++a) {
    const Rational expected(a == axis ? 1 : 0);
    ok = pair.direction().component(a) == expected && pair.covector().component(a) == expected;
  }
  if (!ok) throw std::invalid_argument(std::string(what) + ": expected the coordinate pair along " +
                                       axis_letter(axis));
}

BasisIndex bi(std::initializer_list<int> axes) { return BasisIndex::from_axes(axes); }

}  // namespace

EMConfig::EMConfig()
    : Ex(kDim), Ey(kDim), Ez(kDim), Bx(kDim), By(kDim), Bz(kDim), rho(kDim), jx(kDim), jy(kDim), jz(kDim) {}

std::vector<std::pair<std::string, const Poly*>> EMConfig::components() const {
  return {{"Ex", &Ex}, {"Ey", &Ey}, {"Ez", &Ez}, {"Bx", &Bx}, {"By", &By},
          {"Bz", &Bz}, {"rho", &rho}, {"jx", &jx}, {"jy", &jy}, {"jz", &jz}};
}

Form assemble_faraday(const EMConfig& c) {
  Form E(kDim);
  E.add_term(bi({kAxisX}), c.Ex);
  E.add_term(bi({kAxisY}), c.Ey);
  E.add_term(bi({kAxisZ}), c.Ez);
  Form B(kDim);
  B.add_term(bi({kAxisY, kAxisZ}), c.Bx);
  B.add_term(bi({kAxisX, kAxisZ}), -c.By);  // dz^dx stored as -dx^dz
  B.add_term(bi({kAxisX, kAxisY}), c.Bz);
  return extend(FrameVector::axis(kDim, kAxisT), E) - B;
}

Form assemble_ampere_vacuum(const EMConfig& c, const Metric& g) {
  check_lorentzian4(g);
  return hodge(assemble_faraday(c), g);
}

Form assemble_current(const EMConfig& c) {
  Form j(kDim);
  j.add_term(bi({kAxisY, kAxisZ}), c.jx);
  j.add_term(bi({kAxisX, kAxisZ}), -c.jy);
  j.add_term(bi({kAxisX, kAxisY}), c.jz);
  Form R(kDim);
  R.add_term(bi({kAxisX, kAxisY, kAxisZ}), c.rho);
  return extend(FrameVector::axis(kDim, kAxisT), j) - R;
}

MaxwellResiduals residuals(const EMConfig& c, const Metric& g) {
  const Form F = assemble_faraday(c);
  const Form G = assemble_ampere_vacuum(c, g);
  const Form J = assemble_current(c);
  return MaxwellResiduals{exterior_derivative(F), exterior_derivative(G) - J, exterior_derivative(J)};
}

descent_violation_error::descent_violation_error(std::vector<DescentViolation> violations)
    : std::runtime_error([&violations] {
        std::ostringstream msg;
        msg << "descent condition violated:";
        for (const auto& v : violations) msg << " (" << v.component << ", " << axis_letter(v.axis) << ")";
        return msg.str();
      }()),
      violations_(std::move(violations)) {}

std::vector<DescentViolation> descent_violations(const EMConfig& c, const std::vector<int>& axes) {
  std::vector<DescentViolation> out;
  for (const auto& [name, poly] : c.components()) {
    for (int axis : axes) {
      if (poly->depends_on(axis)) out.push_back({name, axis});
    }
  }
  return out;
}

bool SectorReport::all_zero() const {
  for (const auto& [id, form] : residuals) {
    if (!form.is_zero()) return false;
  }
  for (const auto& [id, poly] : crosscheck) {
    if (!poly.is_zero()) return false;
  }
  return true;
}

SectorReport split_single(const EMConfig& c, const Metric& g, const DescentPair& pair_z) {
  check_lorentzian4(g);
  check_coordinate_pair(pair_z, kAxisZ, "split_single");
  if (auto bad = descent_violations(c, {kAxisZ}); !bad.empty()) throw descent_violation_error(std::move(bad));

  const Form F = assemble_faraday(c);
  const Form G = assemble_ampere_vacuum(c, g);
  const Form J = assemble_current(c);
  const auto f = decompose_single(pair_z, F);
  const auto gg = decompose_single(pair_z, G);
  const auto jj = decompose_single(pair_z, J);
  auto d = [](const Form& w) { return exterior_derivative(w); };
  auto iz_star = [&](const Form& w) { return interior(pair_z.direction(), hodge(w, g)); };

  SectorReport rep;
  rep.residuals.emplace("EEB.faraday", d(f.scalar_part));
  rep.residuals.emplace("EEB.ampere", d(gg.vector_part) + jj.vector_part);
  rep.residuals.emplace("EEB.constitutive", gg.vector_part - iz_star(f.scalar_part));
  rep.residuals.emplace("BBE.faraday", d(f.vector_part));
  rep.residuals.emplace("BBE.ampere", d(gg.scalar_part) - jj.scalar_part);
  rep.residuals.emplace("BBE.constitutive", gg.scalar_part - iz_star(f.vector_part));
  rep.residuals.emplace("continuity.reduced", d(jj.vector_part));
  return rep;
}

SectorReport split_double(const EMConfig& c, const Metric& g, const DescentPair& pair_y,
                          const DescentPair& pair_z) {
  check_lorentzian4(g);
  check_coordinate_pair(pair_y, kAxisY, "split_double");
  check_coordinate_pair(pair_z, kAxisZ, "split_double");
  if (auto bad = descent_violations(c, {kAxisY, kAxisZ}); !bad.empty()) {
    throw descent_violation_error(std::move(bad));
  }

  const Form F = assemble_faraday(c);
  const Form J = assemble_current(c);
  const auto f = decompose_double(pair_y, pair_z, F);
  const auto jj = decompose_double(pair_y, pair_z, J);
  auto d = [](const Form& w) { return exterior_derivative(w); };
  // i_{Y^Z} = i_Z i_Y
  auto iyz_star = [&](const Form& w) {
    return interior(pair_z.direction(), interior(pair_y.direction(), hodge(w, g)));
  };

  SectorReport rep;
  rep.residuals.emplace("sector.Ex.faraday", d(f.part(0, 0)));
  rep.residuals.emplace("sector.Ex.ampere", d(iyz_star(f.part(0, 0))) - jj.part(1, 1));
  rep.residuals.emplace("sector.EyBz.faraday", d(f.part(1, 0)));
  rep.residuals.emplace("sector.EyBz.ampere", d(iyz_star(f.part(1, 0))) + jj.part(0, 1));
  rep.residuals.emplace("sector.ByEz.faraday", d(f.part(0, 1)));
  rep.residuals.emplace("sector.ByEz.ampere", d(iyz_star(f.part(0, 1))) - jj.part(1, 0));
  rep.residuals.emplace("sector.Bx.faraday", d(f.part(1, 1)));
  rep.residuals.emplace("sector.Bx.ampere", d(iyz_star(f.part(1, 1))) - jj.part(0, 0));
  return rep;
}

std::map<std::string, Poly> componentwise_crosscheck(const EMConfig& c, const Metric& g, SplitMode mode) {
  check_lorentzian4(g);
  const std::vector<int> axes =
      mode == SplitMode::single ? std::vector<int>{kAxisZ} : std::vector<int>{kAxisY, kAxisZ};
  if (auto bad = descent_violations(c, axes); !bad.empty()) throw descent_violation_error(std::move(bad));

  auto dt = [](const Poly& p) { return p.partial(kAxisT); };
  auto dx = [](const Poly& p) { return p.partial(kAxisX); };
  auto dy = [](const Poly& p) { return p.partial(kAxisY); };

  std::map<std::string, Poly> out;
  if (mode == SplitMode::single) {
    out.emplace("sector.Bz.faraday", dt(c.Bz) + dx(c.Ey) - dy(c.Ex));
    out.emplace("sector.E.gauss", dx(c.Ex) + dy(c.Ey) - c.rho);
    out.emplace("sector.Ex.ampere", -dt(c.Ex) + dy(c.Bz) - c.jx);
    out.emplace("sector.Ey.ampere", -dt(c.Ey) - dx(c.Bz) - c.jy);
    out.emplace("sector.B.div", dx(c.Bx) + dy(c.By));
    out.emplace("sector.Bx.faraday", dt(c.Bx) + dy(c.Ez));
    out.emplace("sector.By.faraday", dt(c.By) - dx(c.Ez));
    out.emplace("sector.Ez.ampere", -dt(c.Ez) + dx(c.By) - dy(c.Bx) - c.jz);
  } else {
    out.emplace("sector.Ex.gauss", dx(c.Ex) - c.rho);
    out.emplace("sector.Ex.ampere", -dt(c.Ex) - c.jx);
    out.emplace("sector.Bz.faraday", dt(c.Bz) + dx(c.Ey));
    out.emplace("sector.Ey.ampere", -dt(c.Ey) - dx(c.Bz) - c.jy);
    out.emplace("sector.By.faraday", dt(c.By) - dx(c.Ez));
    out.emplace("sector.Ez.ampere", -dt(c.Ez) + dx(c.By) - c.jz);
    out.emplace("sector.Bx.div", dx(c.Bx));
    out.emplace("sector.Bx.static", dt(c.Bx));
  }
  return out;
}

}  // namespace descent
