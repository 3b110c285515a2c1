#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace spinchain {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Model { su2, su3 };

/// Boundary fields of the open su(2) chain: diag(p+u, p-u) on the left,
/// a tilted field (q, xi) on the right.  Shifted forms pbar, qbar drive
/// the reduced Bethe equations.
struct BoundaryParamsSU2 {
  double p = 8.0;
  double q = 4.0;
  double xi = 0.0;

  double pbar() const { return p - 0.5; }
  double qbar() const { return q / std::sqrt(1.0 + xi * xi) - 0.5; }

  void validate() const {
    if (p == 0.0 || q == 0.0)
      throw std::invalid_argument("su(2) boundary parameters p, q must be nonzero");
  }
};

/// Boundary fields of the open su(3) chain.  f, fbar are the shifted
/// combinations entering the reduced Bethe equations; both are positive
/// on the ground-state window h in (0,2), hbar in (-1,0).
struct BoundaryParamsSU3 {
  double h = 1.2;
  double hbar = -1.0 / 13.0;

  double f() const { return -0.5 + 1.0 / h; }
  double fbar() const { return -1.0 - 1.0 / hbar; }

  void validate() const {
    if (h == 0.0 || hbar == 0.0)
      throw std::invalid_argument("su(3) boundary parameters h, hbar must be nonzero");
    if (hbar == -2.0)
      throw std::invalid_argument("su(3) boundary parameter hbar = -2 is degenerate");
  }
};

}  // namespace spinchain
