#include "spinchain/hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "spinchain/algebra.hpp"

namespace spinchain::ed {

namespace {

Index ipow(Index base, int e) {
  Index v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

constexpr Index kDenseTripletLimit = 4096;

}  // namespace

ChainOperator::ChainOperator(int sites, int local_dim)
    : sites_(sites), local_dim_(local_dim), dim_(ipow(local_dim, sites)) {
  if (sites < 1) throw std::invalid_argument("ChainOperator: need at least one site");
  if (local_dim < 2) throw std::invalid_argument("ChainOperator: local dimension < 2");
}

void ChainOperator::add_bond(int site, const Matrix& op) {
  if (site < 1 || site + 1 > sites_) throw std::invalid_argument("add_bond: site out of range");
  const Index d2 = Index(local_dim_) * local_dim_;
  if (op.rows() != d2 || op.cols() != d2)
    throw std::invalid_argument("add_bond: operator dimension mismatch");
  bonds_.emplace_back(site, op);
}

void ChainOperator::add_site(int site, const Matrix& op) {
  if (site < 1 || site > sites_) throw std::invalid_argument("add_site: site out of range");
  if (op.rows() != local_dim_ || op.cols() != local_dim_)
    throw std::invalid_argument("add_site: operator dimension mismatch");
  site_ops_.emplace_back(site, op);
}

void ChainOperator::apply(const double* x, double* y) const {
  const int n = local_dim_;
  for (Index i = 0; i < dim_; ++i) y[i] = constant_ * x[i];

  for (const auto& [site, op] : bonds_) {
    // pair (site, site+1): index = hi * n^2 * s + c * s + lo, c = a*n + b
    const Index s = ipow(n, sites_ - site - 1);
    const Index block = Index(n) * n * s;
    for (Index hi = 0; hi < dim_ / block; ++hi) {
      const Index base = hi * block;
      for (int c = 0; c < n * n; ++c) {
        const Index xoff = base + Index(c) * s;
        for (int cp = 0; cp < n * n; ++cp) {
          const double v = op(cp, c);
          if (v == 0.0) continue;
          const Index yoff = base + Index(cp) * s;
          for (Index lo = 0; lo < s; ++lo) y[yoff + lo] += v * x[xoff + lo];
        }
      }
    }
  }

  for (const auto& [site, op] : site_ops_) {
    const Index s = ipow(n, sites_ - site);
    const Index block = Index(n) * s;
    for (Index hi = 0; hi < dim_ / block; ++hi) {
      const Index base = hi * block;
      for (int a = 0; a < n; ++a) {
        const Index xoff = base + Index(a) * s;
        for (int ap = 0; ap < n; ++ap) {
          const double v = op(ap, a);
          if (v == 0.0) continue;
          const Index yoff = base + Index(ap) * s;
          for (Index lo = 0; lo < s; ++lo) y[yoff + lo] += v * x[xoff + lo];
        }
      }
    }
  }
}

Vector ChainOperator::apply(const Vector& x) const {
  Vector y(dim_);
  apply(x.data(), y.data());
  return y;
}

std::vector<Triplet> ChainOperator::triplets() const {
  std::vector<Triplet> out;
  const int n = local_dim_;
  if (constant_ != 0.0)
    for (Index i = 0; i < dim_; ++i) out.push_back({i, i, constant_});
  for (const auto& [site, op] : bonds_) {
    const Index s = ipow(n, sites_ - site - 1);
    const Index block = Index(n) * n * s;
    for (Index hi = 0; hi < dim_ / block; ++hi)
      for (int c = 0; c < n * n; ++c)
        for (int cp = 0; cp < n * n; ++cp) {
          const double v = op(cp, c);
          if (v == 0.0) continue;
          for (Index lo = 0; lo < s; ++lo)
            out.push_back({hi * block + Index(cp) * s + lo, hi * block + Index(c) * s + lo, v});
        }
  }
  for (const auto& [site, op] : site_ops_) {
    const Index s = ipow(n, sites_ - site);
    const Index block = Index(n) * s;
    for (Index hi = 0; hi < dim_ / block; ++hi)
      for (int a = 0; a < n; ++a)
        for (int ap = 0; ap < n; ++ap) {
          const double v = op(ap, a);
          if (v == 0.0) continue;
          for (Index lo = 0; lo < s; ++lo)
            out.push_back({hi * block + Index(ap) * s + lo, hi * block + Index(a) * s + lo, v});
        }
  }
  return out;
}

Matrix ChainOperator::dense() const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (const auto& t : triplets()) m(t.row, t.col) += t.value;
  return m;
}

bool ChainOperator::is_symmetric(double tol) const {
  for (const auto& [site, op] : bonds_)
    if ((op - op.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  for (const auto& [site, op] : site_ops_)
    if ((op - op.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

ChainOperator build_h_su2(int N, const BoundaryParamsSU2& params) {
  params.validate();
  ChainOperator h(N, 2);
  // sigma.sigma = 2 P - Id on each bond
  const Matrix bond = 2.0 * algebra::permutation(2) - Matrix::Identity(4, 4);
  for (int j = 1; j < N; ++j) h.add_bond(j, bond);
  Matrix sz(2, 2), sx(2, 2);
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;
  h.add_site(1, (1.0 / params.p) * sz);
  h.add_site(N, (1.0 / params.q) * (sz + params.xi * sx));
  h.add_constant(double(N));
  return h;
}

ChainOperator build_h_su3(int N, const BoundaryParamsSU3& params) {
  params.validate();
  ChainOperator h(N, 3);
  const Matrix bond = 2.0 * algebra::permutation(3);
  for (int j = 1; j < N; ++j) h.add_bond(j, bond);
  const double cb = 2.0 * params.hbar / (2.0 + params.hbar);
  const Matrix right = cb * (algebra::weyl(3, 1, 3) + algebra::weyl(3, 2, 2) + algebra::weyl(3, 3, 1));
  h.add_site(N, right);
  h.add_site(1, 2.0 * params.h * algebra::weyl(3, 1, 1));
  h.add_constant(2.0 / 3.0 - params.h);
  return h;
}

// ---- Lanczos -------------------------------------------------------------

namespace {

// CSR form for small dimensions, built from triplets
struct Csr {
  std::vector<Index> rowptr;
  std::vector<Index> col;
  std::vector<double> val;

  void apply(const double* x, double* y, Index dim) const {
    for (Index i = 0; i < dim; ++i) {
      double s = 0.0;
      for (Index k = rowptr[i]; k < rowptr[i + 1]; ++k) s += val[k] * x[col[k]];
      y[i] = s;
    }
  }
};

Csr to_csr(const ChainOperator& op) {
  auto trips = op.triplets();
  std::sort(trips.begin(), trips.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  Csr csr;
  const Index dim = op.dim();
  csr.rowptr.assign(dim + 1, 0);
  for (size_t k = 0; k < trips.size();) {
    size_t j = k;
    double s = trips[k].value;
    while (j + 1 < trips.size() && trips[j + 1].row == trips[k].row &&
           trips[j + 1].col == trips[k].col) {
      ++j;
      s += trips[j].value;
    }
    csr.col.push_back(trips[k].col);
    csr.val.push_back(s);
    csr.rowptr[trips[k].row + 1]++;
    k = j + 1;
  }
  for (Index i = 0; i < dim; ++i) csr.rowptr[i + 1] += csr.rowptr[i];
  return csr;
}

double smallest_ritz(const std::vector<double>& alpha, const std::vector<double>& beta,
                     Vector* ritz_coeffs) {
  const int k = int(alpha.size());
  Matrix t = Matrix::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    t(i, i) = alpha[i];
    if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(t);
  if (ritz_coeffs) *ritz_coeffs = es.eigenvectors().col(0);
  return es.eigenvalues()(0);
}

}  // namespace

double ground_energy(const ChainOperator& op, const LanczosOptions& opts) {
  const Index dim = op.dim();
  if (dim == 1) {
    Vector e = Vector::Ones(1);
    return op.apply(e)(0);
  }

  Csr csr;
  const bool use_csr = dim <= kDenseTripletLimit;
  if (use_csr) csr = to_csr(op);
  auto matvec = [&](const Vector& x) {
    Vector y(dim);
    if (use_csr)
      csr.apply(x.data(), y.data(), dim);
    else
      op.apply(x.data(), y.data());
    return y;
  };

  const long cap = opts.max_iter > 0 ? opts.max_iter : 5 * long(dim);
  std::vector<Vector> basis;
  std::vector<double> alpha, beta;

  Vector v = Vector::Ones(dim) / std::sqrt(double(dim));
  basis.push_back(v);
  Vector w = matvec(v);
  double scale = std::max(1.0, w.cwiseAbs().maxCoeff());

  long restarts = 0;
  for (long it = 0; it < cap; ++it) {
    const double a = basis.back().dot(w);
    alpha.push_back(a);
    w -= a * basis.back();
    if (basis.size() > 1) w -= beta.back() * basis[basis.size() - 2];
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) w -= b.dot(w) * b;

    // convergence test on the explicit Ritz residual
    Vector coeffs;
    const double theta = smallest_ritz(alpha, beta, &coeffs);
    Vector ritz = Vector::Zero(dim);
    for (size_t i = 0; i < basis.size(); ++i) ritz += coeffs(Index(i)) * basis[i];
    ritz.normalize();
    const double resid = (matvec(ritz) - theta * ritz).norm();
    if (resid < opts.tol) return theta;

    if (Index(basis.size()) == dim) return theta;  // Krylov space exhausted: exact

    const double b = w.norm();
    if (b < 1e-13 * scale) {
      // invariant subspace without convergence: restart with a shifted
      // deterministic vector orthogonal to the current basis
      if (++restarts > 8)
        throw std::runtime_error("ground_energy: Lanczos breakdown persisted across restarts");
      Vector r(dim);
      for (Index i = 0; i < dim; ++i) r(i) = std::sin(0.7 * double(i + restarts) + 0.3);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& bb : basis) r -= bb.dot(r) * bb;
      const double rn = r.norm();
      if (rn < 1e-12) return theta;
      beta.push_back(0.0);
      v = r / rn;
    } else {
      beta.push_back(b);
      v = w / b;
    }
    basis.push_back(v);
    w = matvec(v);
    scale = std::max(scale, w.cwiseAbs().maxCoeff());
  }
  throw std::runtime_error("ground_energy: Lanczos did not converge within the iteration cap");
}

double ground_energy(const ChainOperator& op, double tol) {
  LanczosOptions o;
  o.tol = tol;
  return ground_energy(op, o);
}

Vector dense_spectrum(const ChainOperator& op) {
  if (op.dim() > 8192) throw std::invalid_argument("dense_spectrum: dimension too large");
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.dense());
  return es.eigenvalues();
}

}  // namespace spinchain::ed
