#pragma once

#include "spinchain/types.hpp"

namespace spinchain {

Matrix kron(const Matrix& a, const Matrix& b);

/// Embed a single-site operator at `site` (1-based) into a chain of N
/// sites with local dimension n.
Matrix embed_site(const Matrix& op, int site, int N, int n);

/// Embed a two-site operator onto sites (si, sj), si < sj, of a chain of
/// N sites with local dimension n.  op is (n*n) x (n*n) with row index
/// a*n + b for (site si, site sj).
Matrix embed_pair(const Matrix& op, int si, int sj, int N, int n);

/// Trace out the first tensor factor of dimension n; input acts on an
/// n*m dimensional space ordered (first factor) x (rest).
Matrix partial_trace_first(const Matrix& m, int n);

/// Partial transpose on the first factor of V (x) V, both of dimension n.
Matrix partial_transpose_first(const Matrix& m, int n);

}  // namespace spinchain
