#include <cmath>

#include "stratmhd/error.hpp"
#include "stratmhd/oracle/oracle.hpp"

namespace stratmhd::oracle {

Eigen::VectorXd rk4_reference(const OdeProblem& p, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("rk4_reference: dt must be positive");
  if (p.y0.size() != p.dimension) throw InvalidArgument("rk4_reference: y0 size mismatch");
  if (!p.rhs) throw InvalidArgument("rk4_reference: missing right-hand side");
  Eigen::VectorXd y = p.y0;
  double t = p.t0;
  const double span = p.t1 - p.t0;
  if (span < 0.0) throw InvalidArgument("rk4_reference: t1 < t0");
  const long steps = static_cast<long>(std::ceil(span / dt - 1e-9));
  for (long n = 0; n < steps; ++n) {
    const double h = std::min(dt, p.t1 - t);
    if (h <= 0.0) break;
    const Eigen::VectorXd k1 = p.rhs(t, y);
    const Eigen::VectorXd k2 = p.rhs(t + 0.5 * h, y + 0.5 * h * k1);
    const Eigen::VectorXd k3 = p.rhs(t + 0.5 * h, y + 0.5 * h * k2);
    const Eigen::VectorXd k4 = p.rhs(t + h, y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = (n + 1 == steps) ? p.t1 : t + h;
    if (!y.allFinite()) throw NumericalAbort("rk4_reference: non-finite state");
  }
  return y;
}

}  // namespace stratmhd::oracle
