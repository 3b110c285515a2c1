#include "spinchain/linalg.hpp"

namespace spinchain {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

static Index ipow(Index base, int e) {
  Index v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

Matrix embed_site(const Matrix& op, int site, int N, int n) {
  if (site < 1 || site > N) throw std::invalid_argument("embed_site: site out of range");
  if (op.rows() != n || op.cols() != n)
    throw std::invalid_argument("embed_site: operator dimension mismatch");
  Matrix left = Matrix::Identity(ipow(n, site - 1), ipow(n, site - 1));
  Matrix right = Matrix::Identity(ipow(n, N - site), ipow(n, N - site));
  return kron(kron(left, op), right);
}

Matrix embed_pair(const Matrix& op, int si, int sj, int N, int n) {
  if (si < 1 || sj <= si || sj > N) throw std::invalid_argument("embed_pair: bad site pair");
  if (op.rows() != Index(n) * n || op.cols() != Index(n) * n)
    throw std::invalid_argument("embed_pair: operator dimension mismatch");
  if (sj == si + 1) {
    Matrix left = Matrix::Identity(ipow(n, si - 1), ipow(n, si - 1));
    Matrix right = Matrix::Identity(ipow(n, N - sj), ipow(n, N - sj));
    return kron(kron(left, op), right);
  }
  // non-adjacent pair: index arithmetic, site 1 is the most significant digit
  const Index dim = ipow(n, N);
  const Index stri = ipow(n, N - si);
  const Index strj = ipow(n, N - sj);
  Matrix out = Matrix::Zero(dim, dim);
  for (Index col = 0; col < dim; ++col) {
    const int a = int(col / stri) % n;
    const int b = int(col / strj) % n;
    const Index base = col - Index(a) * stri - Index(b) * strj;
    for (int ap = 0; ap < n; ++ap)
      for (int bp = 0; bp < n; ++bp) {
        const double v = op(Index(ap) * n + bp, Index(a) * n + b);
        if (v == 0.0) continue;
        out(base + Index(ap) * stri + Index(bp) * strj, col) += v;
      }
  }
  return out;
}

Matrix partial_trace_first(const Matrix& m, int n) {
  if (m.rows() != m.cols() || m.rows() % n != 0)
    throw std::invalid_argument("partial_trace_first: dimension mismatch");
  const Index d = m.rows() / n;
  Matrix out = Matrix::Zero(d, d);
  for (int a = 0; a < n; ++a)
    out += m.block(Index(a) * d, Index(a) * d, d, d);
  return out;
}

Matrix partial_transpose_first(const Matrix& m, int n) {
  if (m.rows() != Index(n) * n || m.cols() != Index(n) * n)
    throw std::invalid_argument("partial_transpose_first: expects n^2 x n^2");
  Matrix out(m.rows(), m.cols());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          out(Index(a) * n + b, Index(c) * n + d) = m(Index(c) * n + b, Index(a) * n + d);
  return out;
}

}  // namespace spinchain
