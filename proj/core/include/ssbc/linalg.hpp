#pragma once

#include "ssbc/types.hpp"

namespace ssbc {

/// Thin singular value decomposition mat = u * diag(s) * v^T.
///
/// For an r x c input with p = min(r, c): u is r x p, v is c x p, both with
/// orthonormal columns. s has r entries sorted non-increasing; entries past p
/// are exactly zero, so s[r - 1] is always the r-th singular value of the
/// padded spectrum (what the sketch shrink subtracts).
struct SingularTriple {
  Matrix u;
  Vector s;
  Matrix v;
};

SingularTriple svd_thin(const Matrix& mat);

struct PowerIterationOptions {
  int max_iterations = 1000;
  double relative_tolerance = 1e-9;
};

/// Largest singular value ||mat||_2 by power iteration on mat^T mat.
/// The start vector is fixed, so the result is deterministic.
double spectral_norm(const Matrix& mat, const PowerIterationOptions& options = {});

struct PseudoInverse {
  Matrix pinv;
  Index rank = 0;
};

/// Moore-Penrose pseudoinverse; singular values below
/// rcond * max(rows, cols) * s_max are treated as zero.
PseudoInverse pseudo_inverse(const Matrix& mat, double rcond = 1e-12);

struct EigenPairs {
  Vector values;   // non-increasing
  Matrix vectors;  // one eigenvector per column
};

/// The k algebraically largest eigenpairs of a symmetric matrix.
EigenPairs top_eigenpairs(const Matrix& symmetric, Index k);

}  // namespace ssbc
