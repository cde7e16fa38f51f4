#pragma once

#include <vector>

namespace subwalk {

// Row-major dense matrix helpers backed by LAPACK/BLAS.
// Sizes here are "desk scale" (up to ~4096), dense storage is fine.

struct SymEig {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j of the row-major n*n block is eigvec j; empty if not requested
};

// Full symmetric eigendecomposition (dsyevd). a is row-major n*n, unchanged.
SymEig sym_eig(int n, const std::vector<double>& a, bool want_vectors);

// Eigenvalues only in [vl, vu] plus their eigenvectors (dsyevr).
SymEig sym_eig_interval(int n, const std::vector<double>& a, double vl, double vu);

// c = alpha * op(a)*op(b) + beta * c, row-major.
void gemm(int m, int n, int k, double alpha, const double* a, bool ta,
          const double* b, bool tb, double beta, double* c);

// Solve a x = b (dgesv), a row-major n*n destroyed, b overwritten with x.
void solve_dense(int n, std::vector<double>& a, std::vector<double>& b);

}  // namespace subwalk
