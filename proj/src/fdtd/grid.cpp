#include <descent/fdtd/grid.hpp>

#include <cmath>
#include <stdexcept>

namespace descent::fdtd {

void GridSpec::validate() const {
  if (nx < 1 || ny < 1 || nz < 1) throw std::invalid_argument("grid: sizes must be positive");
  if (!(dx > 0.0)) throw std::invalid_argument("grid: spacing must be positive");
  if (!(courant > 0.0) || courant > 1.0) {
    throw std::invalid_argument("grid: Courant number must lie in (0, 1], dt <= dx/sqrt(3)");
  }
}

double GridSpec::dt() const { return courant * dx / std::sqrt(3.0); }

Grid::Grid(const GridSpec& spec) : spec_(spec) {
  spec_.validate();
  const std::size_t n = spec_.cells();
  ex_.assign(n, 0.0);
  ey_.assign(n, 0.0);
  ez_.assign(n, 0.0);
  bx_.assign(n, 0.0);
  by_.assign(n, 0.0);
  bz_.assign(n, 0.0);
}

Grid Grid::sample(const EMConfig& c, const GridSpec& spec) {
  Grid g(spec);
  const double dx = spec.dx;
  const double tb = -0.5 * spec.dt();  // magnetic fields lead by half a step
  for (int k = 0; k < spec.nz; ++k) {
    for (int j = 0; j < spec.ny; ++j) {
      for (int i = 0; i < spec.nx; ++i) {
        const double xi = i * dx, xh = (i + 0.5) * dx;
        const double yj = j * dx, yh = (j + 0.5) * dx;
        const double zk = k * dx, zh = (k + 0.5) * dx;
        const std::size_t at = g.index(i, j, k);
        g.ex_[at] = c.Ex.eval(std::array{0.0, xh, yj, zk});
        g.ey_[at] = c.Ey.eval(std::array{0.0, xi, yh, zk});
        g.ez_[at] = c.Ez.eval(std::array{0.0, xi, yj, zh});
        g.bx_[at] = c.Bx.eval(std::array{tb, xi, yh, zh});
        g.by_[at] = c.By.eval(std::array{tb, xh, yj, zh});
        g.bz_[at] = c.Bz.eval(std::array{tb, xh, yh, zk});
      }
    }
  }
  return g;
}

Grid Grid::sample_stream_bbe(const Poly& psi, const Poly& ez, const GridSpec& spec) {
  Grid g(spec);
  const double dx = spec.dx;
  const double tb = -0.5 * spec.dt();
  // psi on lattice nodes; (Bx, By) as its lattice curl so the discrete
  // divergence cancels exactly on the torus.
  std::vector<double> nodes(static_cast<std::size_t>(spec.nx) * static_cast<std::size_t>(spec.ny));
  for (int j = 0; j < spec.ny; ++j) {
    for (int i = 0; i < spec.nx; ++i) {
      nodes[static_cast<std::size_t>(i) + static_cast<std::size_t>(spec.nx) * static_cast<std::size_t>(j)] =
          psi.eval(std::array{tb, i * dx, j * dx, 0.0});
    }
  }
  auto node = [&](int i, int j) {
    return nodes[static_cast<std::size_t>(i % spec.nx) +
                 static_cast<std::size_t>(spec.nx) * static_cast<std::size_t>(j % spec.ny)];
  };
  for (int k = 0; k < spec.nz; ++k) {
    for (int j = 0; j < spec.ny; ++j) {
      for (int i = 0; i < spec.nx; ++i) {
        const std::size_t at = g.index(i, j, k);
        g.bx_[at] = (node(i, j + 1) - node(i, j)) / dx;
        g.by_[at] = -(node(i + 1, j) - node(i, j)) / dx;
        g.ez_[at] = ez.eval(std::array{0.0, i * dx, j * dx, (k + 0.5) * dx});
      }
    }
  }
  return g;
}

namespace {

struct RowPlan {
  const GridSpec& spec;
  int jp(int j) const { return j + 1 == spec.ny ? 0 : j + 1; }
  int jm(int j) const { return j == 0 ? spec.ny - 1 : j - 1; }
  int kp(int k) const { return k + 1 == spec.nz ? 0 : k + 1; }
  int km(int k) const { return k == 0 ? spec.nz - 1 : k - 1; }
};

}  // namespace

void Grid::update_b(const Kernels& kernels) {
  const RowPlan rp{spec_};
  const int nx = spec_.nx;
  const double cdt = spec_.dt() / spec_.dx;
  for (int k = 0; k < spec_.nz; ++k) {
    for (int j = 0; j < spec_.ny; ++j) {
      double* bx = &bx_[index(0, j, k)];
      double* by = &by_[index(0, j, k)];
      double* bz = &bz_[index(0, j, k)];
      const double* ey = &ey_[index(0, j, k)];
      const double* ez = &ez_[index(0, j, k)];
      const double* ex_j = &ex_[index(0, j, k)];
      const double* ex_jp = &ex_[index(0, rp.jp(j), k)];
      const double* ex_kp = &ex_[index(0, j, rp.kp(k))];
      const double* ey_kp = &ey_[index(0, j, rp.kp(k))];
      const double* ez_jp = &ez_[index(0, rp.jp(j), k)];

      // dBx/dt = -(Dy Ez - Dz Ey), no x shift
      kernels.curl_accum_row(bx, ez_jp, ez, ey_kp, ey, -cdt, static_cast<std::size_t>(nx));
      // dBy/dt = -(Dz Ex - Dx Ez), forward x shift on Ez
      if (nx > 1) kernels.curl_accum_row(by, ex_kp, ex_j, ez + 1, ez, -cdt, static_cast<std::size_t>(nx - 1));
      by[nx - 1] += -cdt * ((ex_kp[nx - 1] - ex_j[nx - 1]) - (ez[0] - ez[nx - 1]));
      // dBz/dt = -(Dx Ey - Dy Ex), forward x shift on Ey
      if (nx > 1) kernels.curl_accum_row(bz, ey + 1, ey, ex_jp, ex_j, -cdt, static_cast<std::size_t>(nx - 1));
      bz[nx - 1] += -cdt * ((ey[0] - ey[nx - 1]) - (ex_jp[nx - 1] - ex_j[nx - 1]));
    }
  }
}

void Grid::update_e(const Kernels& kernels, const CurrentSampler* sources) {
  const RowPlan rp{spec_};
  const int nx = spec_.nx;
  const double dt = spec_.dt();
  const double cdt = dt / spec_.dx;
  for (int k = 0; k < spec_.nz; ++k) {
    for (int j = 0; j < spec_.ny; ++j) {
      double* ex = &ex_[index(0, j, k)];
      double* ey = &ey_[index(0, j, k)];
      double* ez = &ez_[index(0, j, k)];
      const double* bx = &bx_[index(0, j, k)];
      const double* by = &by_[index(0, j, k)];
      const double* bz = &bz_[index(0, j, k)];
      const double* bz_jm = &bz_[index(0, rp.jm(j), k)];
      const double* by_km = &by_[index(0, j, rp.km(k))];
      const double* bx_km = &bx_[index(0, j, rp.km(k))];
      const double* bx_jm = &bx_[index(0, rp.jm(j), k)];

      // dEx/dt = Dy Bz - Dz By, backward differences, no x shift
      kernels.curl_accum_row(ex, bz, bz_jm, by, by_km, cdt, static_cast<std::size_t>(nx));
      // dEy/dt = Dz Bx - Dx Bz, backward x shift on Bz
      if (nx > 1) {
        kernels.curl_accum_row(ey + 1, bx + 1, bx_km + 1, bz + 1, bz, cdt, static_cast<std::size_t>(nx - 1));
      }
      ey[0] += cdt * ((bx[0] - bx_km[0]) - (bz[0] - bz[nx - 1]));
      // dEz/dt = Dx By - Dy Bx, backward x shift on By
      if (nx > 1) {
        kernels.curl_accum_row(ez + 1, by + 1, by, bx + 1, bx_jm + 1, cdt, static_cast<std::size_t>(nx - 1));
      }
      ez[0] += cdt * ((by[0] - by[nx - 1]) - (bx[0] - bx_jm[0]));
    }
  }
  if (sources) {
    const double dx = spec_.dx;
    const double th = (static_cast<double>(steps_) + 0.5) * dt;
    for (int k = 0; k < spec_.nz; ++k) {
      for (int j = 0; j < spec_.ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          const std::size_t at = index(i, j, k);
          ex_[at] -= dt * (*sources)((i + 0.5) * dx, j * dx, k * dx, th)[0];
          ey_[at] -= dt * (*sources)(i * dx, (j + 0.5) * dx, k * dx, th)[1];
          ez_[at] -= dt * (*sources)(i * dx, j * dx, (k + 0.5) * dx, th)[2];
        }
      }
    }
  }
}

void Grid::step(long n, const CurrentSampler* sources, const Kernels& kernels) {
  for (long s = 0; s < n; ++s) {
    update_b(kernels);
    update_e(kernels, sources);
    ++steps_;
  }
}

SectorEnergies Grid::energies(const Kernels& kernels) const {
  const double vol = spec_.dx * spec_.dx * spec_.dx;
  const std::size_t n = spec_.cells();
  SectorEnergies e;
  e.eeb = (kernels.sum_squares(ex_.data(), n) + kernels.sum_squares(ey_.data(), n) +
           kernels.sum_squares(bz_.data(), n)) *
          vol;
  e.bbe = (kernels.sum_squares(bx_.data(), n) + kernels.sum_squares(by_.data(), n) +
           kernels.sum_squares(ez_.data(), n)) *
          vol;
  e.total = e.eeb + e.bbe;
  return e;
}

double Grid::leakage(Sector intended, const Kernels& kernels) const {
  const SectorEnergies e = energies(kernels);
  return intended == Sector::eeb ? e.bbe : e.eeb;
}

double Grid::divb_max(const Kernels& kernels) const {
  const RowPlan rp{spec_};
  const int nx = spec_.nx;
  double best = 0.0;
  for (int k = 0; k < spec_.nz; ++k) {
    for (int j = 0; j < spec_.ny; ++j) {
      const double* bx = &bx_[index(0, j, k)];
      const double* by = &by_[index(0, j, k)];
      const double* bz = &bz_[index(0, j, k)];
      const double* by_jp = &by_[index(0, rp.jp(j), k)];
      const double* bz_kp = &bz_[index(0, j, rp.kp(k))];
      if (nx > 1) {
        const double row = kernels.max_abs_div3(bx + 1, bx, by_jp, by, bz_kp, bz,
                                                static_cast<std::size_t>(nx - 1));
        if (row > best) best = row;
      }
      const double tail = std::fabs((bx[0] - bx[nx - 1]) + (by_jp[nx - 1] - by[nx - 1]) +
                                    (bz_kp[nx - 1] - bz[nx - 1]));
      if (tail > best) best = tail;
    }
  }
  return best / spec_.dx;
}

void Grid::curl_e_into(std::vector<double>& cx, std::vector<double>& cy, std::vector<double>& cz,
                       const Kernels& kernels) const {
  const RowPlan rp{spec_};
  const int nx = spec_.nx;
  const std::size_t n = spec_.cells();
  cx.assign(n, 0.0);
  cy.assign(n, 0.0);
  cz.assign(n, 0.0);
  for (int k = 0; k < spec_.nz; ++k) {
    for (int j = 0; j < spec_.ny; ++j) {
      double* rx = &cx[index(0, j, k)];
      double* ry = &cy[index(0, j, k)];
      double* rz = &cz[index(0, j, k)];
      const double* ey = &ey_[index(0, j, k)];
      const double* ez = &ez_[index(0, j, k)];
      const double* ex_j = &ex_[index(0, j, k)];
      const double* ex_jp = &ex_[index(0, rp.jp(j), k)];
      const double* ex_kp = &ex_[index(0, j, rp.kp(k))];
      const double* ey_kp = &ey_[index(0, j, rp.kp(k))];
      const double* ez_jp = &ez_[index(0, rp.jp(j), k)];

      kernels.curl_accum_row(rx, ez_jp, ez, ey_kp, ey, 1.0, static_cast<std::size_t>(nx));
      if (nx > 1) kernels.curl_accum_row(ry, ex_kp, ex_j, ez + 1, ez, 1.0, static_cast<std::size_t>(nx - 1));
      ry[nx - 1] += (ex_kp[nx - 1] - ex_j[nx - 1]) - (ez[0] - ez[nx - 1]);
      if (nx > 1) kernels.curl_accum_row(rz, ey + 1, ey, ex_jp, ex_j, 1.0, static_cast<std::size_t>(nx - 1));
      rz[nx - 1] += (ey[0] - ey[nx - 1]) - (ex_jp[nx - 1] - ex_j[nx - 1]);
    }
  }
}

double Grid::conserved_energy(const Kernels& kernels) const {
  const std::size_t n = spec_.cells();
  const double vol = spec_.dx * spec_.dx * spec_.dx;
  const double cdt = spec_.dt() / spec_.dx;
  std::vector<double> cx, cy, cz;
  curl_e_into(cx, cy, cz, kernels);
  // Stored B is the half step behind E; the next half step is
  // B - cdt * (lattice curl of E), so <B-, B+> = |B|^2 - cdt <B, curl E>.
  const double e2 = kernels.sum_squares(ex_.data(), n) + kernels.sum_squares(ey_.data(), n) +
                    kernels.sum_squares(ez_.data(), n);
  const double b2 = kernels.sum_squares(bx_.data(), n) + kernels.sum_squares(by_.data(), n) +
                    kernels.sum_squares(bz_.data(), n);
  const double cross = kernels.dot(bx_.data(), cx.data(), n) + kernels.dot(by_.data(), cy.data(), n) +
                       kernels.dot(bz_.data(), cz.data(), n);
  return 0.5 * vol * (e2 + b2 - cdt * cross);
}

}  // namespace descent::fdtd
