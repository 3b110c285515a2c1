#pragma once

#include "spinchain/linalg.hpp"

namespace spinchain::algebra {

/// su(n) R-matrix family R(u) = u*Id + P with crossing parameter fixed to 1.
struct RMatrixSpec {
  int n = 2;
  double eta = 1.0;

  RMatrixSpec() = default;
  explicit RMatrixSpec(int rank, double crossing = 1.0) : n(rank), eta(crossing) {
    if (n < 2) throw std::invalid_argument("RMatrixSpec: rank must be >= 2");
    if (eta != 1.0) throw std::invalid_argument("RMatrixSpec: crossing parameter is fixed to 1");
  }
};

/// P = sum_{mu,nu} E^{mu nu} (x) E^{nu mu}, the swap on V (x) V.
Matrix permutation(int n);

/// Weyl matrix E^{mu nu} = |mu><nu|, indices 1-based.
Matrix weyl(int n, int mu, int nu);

Matrix r_matrix(double u, const RMatrixSpec& spec);
Matrix r_matrix(double u, int n);

// boundary K-matrices
Matrix k_minus_su2(double u, double p);
Matrix k_plus_su2(double u, double q, double xi);
Matrix k_minus_su3(double u, double h);
Matrix k_plus_su3(double u, double hbar);

// ---- integrability identity residuals (max-norm) ----------------------

double qybe_residual(int n, double u1, double u2, double u3);
double unitarity_residual(int n, double u);
double crossing_unitarity_residual(int n, double u);
double fusion_residual(int n);
double reflection_residual_su2(double p, double u1, double u2);
double dual_reflection_residual_su2(double q, double xi, double u1, double u2);
double reflection_residual_su3(double h, double u1, double u2);
double dual_reflection_residual_su3(double hbar, double u1, double u2);

}  // namespace spinchain::algebra
