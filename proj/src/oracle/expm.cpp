#include <cmath>

#include <Eigen/LU>

#include "stratmhd/error.hpp"
#include "stratmhd/oracle/oracle.hpp"

namespace stratmhd::oracle {

Eigen::MatrixXd expm_reference(const Eigen::MatrixXd& m, double t) {
  if (m.rows() != m.cols()) throw InvalidArgument("expm_reference: matrix is not square");
  if (!m.allFinite() || !std::isfinite(t)) throw InvalidArgument("expm_reference: non-finite input");
  const long n = m.rows();
  Eigen::MatrixXd x = m * t;
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  x /= std::ldexp(1.0, s);

  constexpr int p = 6;
  Eigen::MatrixXd num = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd den = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double c = 1.0;
  for (int k = 1; k <= p; ++k) {
    c *= static_cast<double>(p - k + 1) / (k * (2.0 * p - k + 1));
    power = power * x;
    num += c * power;
    den += ((k % 2) ? -c : c) * power;
  }
  Eigen::MatrixXd e = den.partialPivLu().solve(num);
  for (int i = 0; i < s; ++i) e = e * e;
  if (!e.allFinite()) throw NumericalAbort("expm_reference: overflow");
  return e;
}

}  // namespace stratmhd::oracle
