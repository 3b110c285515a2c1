#pragma once

#include <vector>

#include "spinchain/types.hpp"

namespace spinchain::ed {

struct Triplet {
  Index row;
  Index col;
  double value;
};

/// Sparse symmetric operator on the N-site chain, stored as local bond
/// and site terms.  Matrix-free apply for large dimensions; explicit
/// triplets (and dense form) for small ones.
class ChainOperator {
 public:
  ChainOperator(int sites, int local_dim);

  void add_bond(int site, const Matrix& op);   // acts on (site, site+1), 1-based
  void add_site(int site, const Matrix& op);
  void add_constant(double c) { constant_ += c; }

  int sites() const { return sites_; }
  int local_dim() const { return local_dim_; }
  Index dim() const { return dim_; }
  double constant() const { return constant_; }

  void apply(const double* x, double* y) const;
  Vector apply(const Vector& x) const;

  std::vector<Triplet> triplets() const;
  Matrix dense() const;
  bool is_symmetric(double tol = 1e-14) const;

 private:
  int sites_;
  int local_dim_;
  Index dim_;
  double constant_ = 0.0;
  std::vector<std::pair<int, Matrix>> bonds_;
  std::vector<std::pair<int, Matrix>> site_ops_;
};

/// H = sum_j sigma_j . sigma_{j+1} + (1/p) sigma_1^z
///       + (1/q)(sigma_N^z + xi sigma_N^x) + N
ChainOperator build_h_su2(int N, const BoundaryParamsSU2& params);

/// H = 2 sum_j P_{j,j+1} + (2 hbar/(2+hbar)) (E_N^{13}+E_N^{22}+E_N^{31})
///       + 2 h E_1^{11} + 2/3 - h
ChainOperator build_h_su3(int N, const BoundaryParamsSU3& params);

struct LanczosOptions {
  double tol = 1e-10;
  int max_iter = -1;  // default cap: 5 * dim
};

/// Lowest eigenvalue by Lanczos with full reorthogonalization.
/// Deterministic all-ones start; converged when ||Hv - theta v|| < tol.
double ground_energy(const ChainOperator& op, double tol = 1e-10);
double ground_energy(const ChainOperator& op, const LanczosOptions& opts);

/// Full spectrum through dense diagonalization (small dims only).
Vector dense_spectrum(const ChainOperator& op);

}  // namespace spinchain::ed
