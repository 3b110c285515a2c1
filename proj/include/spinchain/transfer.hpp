#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "spinchain/types.hpp"

namespace spinchain::transfer {

using Complex = std::complex<double>;

/// Double-row transfer matrix t(u) = tr_0 { K+_0(u) T_0(u) K-_0(u) That_0(u) }
/// as a dense n^N x n^N matrix.  Dense construction; N is capped (8 for
/// su(2), 5 for su(3)).
Matrix double_row_transfer(double u, const BoundaryParamsSU2& params, int N);
Matrix double_row_transfer(double u, const BoundaryParamsSU3& params, int N);

/// d/du ln t(u) at u = 0, evaluated as t(0)^{-1} t'(0) with a Richardson
/// central difference (h = 1e-4).  Must reproduce the direct Hamiltonian
/// builders entrywise.
Matrix hamiltonian_from_transfer(const BoundaryParamsSU2& params, int N);
Matrix hamiltonian_from_transfer(const BoundaryParamsSU3& params, int N);

// ---- su(2) T-Q -----------------------------------------------------------

/// Roots of the su(2) T-Q relation.  The homogeneous branch stores real
/// mu_j with lambda_j = i mu_j - 1/2 (M = N/2 of them at the even-N ground
/// state); the small-N inhomogeneous branch stores N complex lambda_j.
struct TQDataSU2 {
  int N = 0;
  BoundaryParamsSU2 params;
  std::vector<double> mu;        // homogeneous parameterization
  std::vector<Complex> lambda;   // inhomogeneous parameterization

  bool inhomogeneous() const { return !lambda.empty(); }
};

/// Eigenvalue expression Lambda(u).  Uses whichever root branch the data
/// carries; the inhomogeneous term is 2[1 - (1+xi^2)^{1/2}] [u(u+1)]^{2N+1}/Q(u)
/// and is included only when requested.
double tq_lambda_su2(double u, const TQDataSU2& data, bool include_inhomogeneous);
Complex tq_lambda_su2(Complex u, const TQDataSU2& data, bool include_inhomogeneous);

/// Energy from the root set, E = sum 2/(lambda(lambda+1)) + 2N - 1 + 1/p
/// + sqrt(1+xi^2)/q (real part; the imaginary part must cancel).
double tq_energy_su2(const TQDataSU2& data);

struct InhomSolveOptions {
  int starts = 200;          // multistart budget
  double box = 3.0;          // re/im sampled from [-box, box]
  double residual_tol = 1e-10;
  double spectrum_tol = 1e-8;
  unsigned seed = 20240817;  // fixed start grid
};

/// Multistart damped Newton on the inhomogeneous su(2) BAEs (N <= 3).
/// Returns all distinct verified states sorted by energy: each state's
/// Lambda(u) matches an eigenvalue of t(u) at 5 sample points and its
/// energy matches an ED eigenvalue.  Empty result = no convergent set.
std::vector<TQDataSU2> solve_inhomogeneous_baes_su2(int N, const BoundaryParamsSU2& params,
                                                    const InhomSolveOptions& opts = {});

/// Residual of the printed product-form BAEs at the given roots (max norm).
double inhom_bae_residual_su2(const std::vector<Complex>& lambda, int N,
                              const BoundaryParamsSU2& params);

// ---- su(3) T-Q -----------------------------------------------------------

/// Root content of the su(3) T-Q expression in the real mu parameterization
/// (lambda^(1) = i mu - 1/2, lambda^(2) = i mu - 1), plus Q^(0)(u) = u^{2N},
/// Q^(3) = 1.
struct TQDataSU3 {
  int N = 0;
  BoundaryParamsSU3 params;
  std::vector<double> mu1;
  std::vector<double> mu2;
};

/// Lambda(u) = z_1 + z_2 + z_3 + x as printed; throws near poles.
double tq_lambda_su3(double u, const TQDataSU3& data);

/// Individual pieces, exposed for cross-checks.
double tq_z_su3(int m, double u, const TQDataSU3& data);
double tq_x_su3(double u, const TQDataSU3& data);
double k_factor_su3(int m, double u, const BoundaryParamsSU3& params);

}  // namespace spinchain::transfer
