#include "spinchain/algebra.hpp"

namespace spinchain::algebra {

Matrix permutation(int n) {
  Matrix p = Matrix::Zero(Index(n) * n, Index(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      p(Index(a) * n + b, Index(b) * n + a) = 1.0;
  return p;
}

Matrix weyl(int n, int mu, int nu) {
  if (mu < 1 || mu > n || nu < 1 || nu > n)
    throw std::invalid_argument("weyl: index out of range");
  Matrix e = Matrix::Zero(n, n);
  e(mu - 1, nu - 1) = 1.0;
  return e;
}

Matrix r_matrix(double u, const RMatrixSpec& spec) {
  return u * Matrix::Identity(Index(spec.n) * spec.n, Index(spec.n) * spec.n) +
         spec.eta * permutation(spec.n);
}

Matrix r_matrix(double u, int n) { return r_matrix(u, RMatrixSpec(n)); }

Matrix k_minus_su2(double u, double p) {
  Matrix k(2, 2);
  k << p + u, 0.0, 0.0, p - u;
  return k;
}

Matrix k_plus_su2(double u, double q, double xi) {
  Matrix k(2, 2);
  k << q + u + 1.0, xi * (u + 1.0), xi * (u + 1.0), q - u - 1.0;
  return k;
}

Matrix k_minus_su3(double u, double h) {
  if (h == 0.0) throw std::invalid_argument("k_minus_su3: h must be nonzero");
  Matrix k = (1.0 / h) * Matrix::Identity(3, 3);
  k(0, 0) += u;
  k(1, 1) -= u;
  k(2, 2) -= u;
  return k;
}

Matrix k_plus_su3(double u, double hbar) {
  if (hbar == 0.0) throw std::invalid_argument("k_plus_su3: hbar must be nonzero");
  Matrix a = Matrix::Zero(3, 3);
  a(0, 2) = a(1, 1) = a(2, 0) = -1.0;
  return (1.0 / hbar) * Matrix::Identity(3, 3) - (u + 1.5) * a;
}

// ---- identity residuals ------------------------------------------------

namespace {

// embed R acting on spaces (i, j) of a 3-fold product, i < j
Matrix r_on(const Matrix& r, int i, int j, int n) { return embed_pair(r, i, j, 3, n); }

Matrix r21(const Matrix& r12, int n) {
  const Matrix p = permutation(n);
  return p * r12 * p;
}

}  // namespace

double qybe_residual(int n, double u1, double u2, double u3) {
  const Matrix r12 = r_on(r_matrix(u1 - u2, n), 1, 2, n);
  const Matrix r13 = r_on(r_matrix(u1 - u3, n), 1, 3, n);
  const Matrix r23 = r_on(r_matrix(u2 - u3, n), 2, 3, n);
  return (r12 * r13 * r23 - r23 * r13 * r12).cwiseAbs().maxCoeff();
}

double unitarity_residual(int n, double u) {
  const Matrix lhs = r_matrix(u, n) * r21(r_matrix(-u, n), n);
  const double rho = -(u + 1.0) * (u - 1.0);
  return (lhs - rho * Matrix::Identity(lhs.rows(), lhs.cols())).cwiseAbs().maxCoeff();
}

double crossing_unitarity_residual(int n, double u) {
  const Matrix lhs = partial_transpose_first(r_matrix(u, n), n) *
                     partial_transpose_first(r21(r_matrix(-u - n, n), n), n);
  const double rho = -u * (u + n);
  return (lhs - rho * Matrix::Identity(lhs.rows(), lhs.cols())).cwiseAbs().maxCoeff();
}

double fusion_residual(int n) {
  const Index d = Index(n) * n;
  const Matrix p = permutation(n);
  const Matrix pminus = 0.5 * (Matrix::Identity(d, d) - p);
  const Matrix pplus = 0.5 * (Matrix::Identity(d, d) + p);
  const double r1 = (r_matrix(-1.0, n) + 2.0 * pminus).cwiseAbs().maxCoeff();
  const double r2 = (r_matrix(1.0, n) - 2.0 * pplus).cwiseAbs().maxCoeff();
  return std::max(r1, r2);
}

namespace {

template <typename KFun>
double re_residual(int n, KFun km, double u1, double u2) {
  const Matrix id = Matrix::Identity(n, n);
  const Matrix k1 = kron(km(u1), id);
  const Matrix k2 = kron(id, km(u2));
  const Matrix r12m = r_matrix(u1 - u2, n);
  const Matrix r21p = r21(r_matrix(u1 + u2, n), n);
  const Matrix r12p = r_matrix(u1 + u2, n);
  const Matrix r21m = r21(r_matrix(u1 - u2, n), n);
  return (r12m * k1 * r21p * k2 - k2 * r12p * k1 * r21m).cwiseAbs().maxCoeff();
}

template <typename KFun>
double dual_re_residual(int n, KFun kp, double u1, double u2) {
  const Matrix id = Matrix::Identity(n, n);
  const Matrix k1 = kron(kp(u1), id);
  const Matrix k2 = kron(id, kp(u2));
  const Matrix r12m = r_matrix(u2 - u1, n);
  const Matrix r21s = r21(r_matrix(-u1 - u2 - n, n), n);
  const Matrix r12s = r_matrix(-u1 - u2 - n, n);
  const Matrix r21m = r21(r_matrix(u2 - u1, n), n);
  return (r12m * k1 * r21s * k2 - k2 * r12s * k1 * r21m).cwiseAbs().maxCoeff();
}

}  // namespace

double reflection_residual_su2(double p, double u1, double u2) {
  return re_residual(2, [p](double u) { return k_minus_su2(u, p); }, u1, u2);
}

double dual_reflection_residual_su2(double q, double xi, double u1, double u2) {
  return dual_re_residual(2, [q, xi](double u) { return k_plus_su2(u, q, xi); }, u1, u2);
}

double reflection_residual_su3(double h, double u1, double u2) {
  return re_residual(3, [h](double u) { return k_minus_su3(u, h); }, u1, u2);
}

double dual_reflection_residual_su3(double hbar, double u1, double u2) {
  return dual_re_residual(3, [hbar](double u) { return k_plus_su3(u, hbar); }, u1, u2);
}

}  // namespace spinchain::algebra
