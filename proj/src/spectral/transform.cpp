#include "stratmhd/spectral/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "stratmhd/error.hpp"

namespace stratmhd::spectral {
namespace {

constexpr unsigned kFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Plans for one (nx, ny) shape, executed with the new-array interface so a
// single instance can be shared read-only across threads.
struct Plans {
  fftw_plan dct_y = nullptr;  // REDFT00 along y, ny points
  fftw_plan dst_y = nullptr;  // RODFT00 along y, interior ny-2 points
  fftw_plan r2c_x = nullptr;
  fftw_plan c2r_x = nullptr;

  Plans(int nx, int ny) {
    const int nh = nx / 2 + 1;
    std::vector<double> a(static_cast<size_t>(nx) * ny), b(a.size());
    auto* ca = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * nh * ny));
    std::lock_guard lock(planner_mutex());
    fftw_r2r_kind redft = FFTW_REDFT00;
    fftw_r2r_kind rodft = FFTW_RODFT00;
    int n_y = ny;
    int n_int = ny - 2;
    int n_x = nx;
    dct_y = fftw_plan_many_r2r(1, &n_y, nx, a.data(), nullptr, nx, 1, b.data(), nullptr, nx, 1,
                               &redft, kFlags);
    dst_y = fftw_plan_many_r2r(1, &n_int, nx, a.data(), nullptr, nx, 1, b.data(), nullptr, nx,
                               1, &rodft, kFlags);
    r2c_x = fftw_plan_many_dft_r2c(1, &n_x, ny, a.data(), nullptr, 1, nx, ca, nullptr, 1, nh,
                                   kFlags);
    c2r_x = fftw_plan_many_dft_c2r(1, &n_x, ny, ca, nullptr, 1, nh, a.data(), nullptr, 1, nx,
                                   kFlags);
    fftw_free(ca);
    if (!dct_y || !dst_y || !r2c_x || !c2r_x) throw Error("FFTW planning failed");
  }

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    for (fftw_plan p : {dct_y, dst_y, r2c_x, c2r_x}) {
      if (p) fftw_destroy_plan(p);
    }
  }

  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

std::shared_ptr<const Plans> plans_for(const Grid& g) {
  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Plans>> cache;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_pair(g.nx, g.ny);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto p = std::make_shared<const Plans>(g.nx, g.ny);
  cache.emplace(key, p);
  return p;
}

}  // namespace

Spectrum forward(const GridField& f) {
  const Grid& g = f.grid;
  g.validate();
  if (f.values.rows() != g.nx || f.values.cols() != g.ny) {
    throw InvalidArgument("grid field shape does not match grid");
  }
  if (!f.values.allFinite()) throw InvalidArgument("non-finite value in grid field");

  const int nx = g.nx, ny = g.ny, n = g.ymodes(), nh = nx / 2 + 1;
  auto plans = plans_for(g);

  // y-transform; ycoef(i, q) holds the y-coefficient q at x_i.
  Eigen::ArrayXXd in = f.values;
  Eigen::ArrayXXd ycoef = Eigen::ArrayXXd::Zero(nx, ny);
  if (f.parity == Parity::EvenY) {
    fftw_execute_r2r(plans->dct_y, in.data(), ycoef.data());
    ycoef.col(0) /= 2.0 * n;
    ycoef.col(n) /= 2.0 * n;
    for (int q = 1; q < n; ++q) ycoef.col(q) /= n;
  } else {
    Eigen::ArrayXXd tmp = Eigen::ArrayXXd::Zero(nx, ny);
    fftw_execute_r2r(plans->dst_y, in.data() + nx, tmp.data());
    for (int q = 1; q < n; ++q) ycoef.col(q) = tmp.col(q - 1) / n;
  }

  std::vector<cdouble> half(static_cast<size_t>(nh) * ny);
  fftw_execute_dft_r2c(plans->r2c_x, ycoef.data(), reinterpret_cast<fftw_complex*>(half.data()));

  Spectrum s(g, f.parity);
  for (int q = 0; q < ny; ++q) {
    for (int k = 0; k < nh; ++k) {
      const cdouble c = half[static_cast<size_t>(q) * nh + k] / static_cast<double>(nx);
      s.coeffs(k, q) = c;
      if (k > 0 && k < nx / 2) s.coeffs(nx - k, q) = std::conj(c);
    }
  }
  return s;
}

GridField inverse(const Spectrum& s) {
  const Grid& g = s.grid;
  g.validate();
  const int nx = g.nx, ny = g.ny, n = g.ymodes(), nh = nx / 2 + 1;
  auto plans = plans_for(g);

  std::vector<cdouble> half(static_cast<size_t>(nh) * ny);
  for (int q = 0; q < ny; ++q) {
    for (int k = 0; k < nh; ++k) half[static_cast<size_t>(q) * nh + k] = s.coeffs(k, q);
  }
  Eigen::ArrayXXd ycoef(nx, ny);
  fftw_execute_dft_c2r(plans->c2r_x, reinterpret_cast<fftw_complex*>(half.data()),
                       ycoef.data());

  GridField out(g, s.parity);
  if (s.parity == Parity::EvenY) {
    for (int q = 1; q < n; ++q) ycoef.col(q) *= 0.5;
    fftw_execute_r2r(plans->dct_y, ycoef.data(), out.values.data());
  } else {
    Eigen::ArrayXXd z(nx, ny);
    z.setZero();
    for (int q = 1; q < n; ++q) z.col(q - 1) = 0.5 * ycoef.col(q);
    fftw_execute_r2r(plans->dst_y, z.data(), out.values.data() + nx);
  }
  return out;
}

Spectrum pad_to(const Spectrum& s, const Grid& fine) {
  const Grid& g = s.grid;
  if (fine.nx < g.nx || fine.ny < g.ny || fine.lx != g.lx) {
    throw InvalidArgument("pad_to: target grid is not a refinement");
  }
  Spectrum out(fine, s.parity);
  const bool same_nx = fine.nx == g.nx;
  for (int slot = 0; slot < g.nx; ++slot) {
    const int j = g.wavenumber(slot);
    for (int q = 0; q < g.ny; ++q) {
      const cdouble c = s.coeffs(slot, q);
      if (g.is_nyquist(slot) && !same_nx) {
        out.at(j, q) += 0.5 * c;
        out.at(-j, q) += 0.5 * c;
      } else {
        out.at(j, q) += c;
      }
    }
  }
  return out;
}

Spectrum truncate_to(const Spectrum& s, const Grid& coarse) {
  const Grid& g = s.grid;
  if (coarse.nx > g.nx || coarse.ny > g.ny || coarse.lx != g.lx) {
    throw InvalidArgument("truncate_to: target grid is not coarser");
  }
  Spectrum out(coarse, s.parity);
  const int half = coarse.nx / 2;
  for (int j = -half; j < half; ++j) {
    for (int q = 0; q < coarse.ny; ++q) {
      cdouble c = s.at(j, q);
      if (j == -half && coarse.nx < g.nx) c = (c + s.at(half, q)).real();
      out.at(j, q) = c;
    }
  }
  if (s.parity == Parity::OddY) out.coeffs.col(coarse.ny - 1).setZero();
  return out;
}

}  // namespace stratmhd::spectral
