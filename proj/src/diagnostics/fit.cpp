#include <cmath>
#include <string>

#include "stratmhd/diagnostics/diagnostics.hpp"
#include "stratmhd/error.hpp"

namespace stratmhd::diagnostics {

DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& v, double t_start,
                   double t_end) {
  if (t.size() != v.size()) throw InvalidArgument("fit_decay: series lengths differ");
  std::vector<double> xs, ys;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_start || t[i] > t_end) continue;
    if (!(v[i] > 0.0)) {
      throw InvalidArgument("non-positive sample " + std::to_string(v[i]) + " at t=" +
                            std::to_string(t[i]));
    }
    xs.push_back(t[i]);
    ys.push_back(std::log(v[i]));
  }
  const int n = static_cast<int>(xs.size());
  if (n < 5) {
    throw InvalidArgument("too few samples in fit window (" + std::to_string(n) + " < 5)");
  }
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("fit_decay: all samples at one time");
  const double slope = sxy / sxx;
  DecayFit fit;
  fit.rate = -slope;
  fit.intercept = my - slope * mx;
  double ss_res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
  fit.t_start = t_start;
  fit.t_end = t_end;
  fit.samples = n;
  return fit;
}

}  // namespace stratmhd::diagnostics
