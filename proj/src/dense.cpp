#include "subwalk/dense.hpp"

#include <lapacke.h>
#include <cblas.h>

#include <stdexcept>

namespace subwalk {

SymEig sym_eig(int n, const std::vector<double>& a, bool want_vectors) {
  SymEig out;
  out.values.resize(n);
  std::vector<double> work = a;  // dsyevd overwrites with eigenvectors (rows of V^T in row-major)
  int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, want_vectors ? 'V' : 'N', 'U', n,
                            work.data(), n, out.values.data());
  if (info != 0) throw std::runtime_error("dsyevd failed, info=" + std::to_string(info));
  if (want_vectors) out.vectors = std::move(work);
  return out;
}

SymEig sym_eig_interval(int n, const std::vector<double>& a, double vl, double vu) {
  SymEig out;
  std::vector<double> work = a;
  out.values.resize(n);
  out.vectors.resize(static_cast<size_t>(n) * n);
  std::vector<lapack_int> isuppz(2 * std::max(1, n));
  lapack_int m = 0;
  int info = LAPACKE_dsyevr(LAPACK_ROW_MAJOR, 'V', 'V', 'U', n, work.data(), n,
                            vl, vu, 0, 0, 0.0, &m, out.values.data(),
                            out.vectors.data(), n, isuppz.data());
  if (info != 0) throw std::runtime_error("dsyevr failed, info=" + std::to_string(info));
  out.values.resize(m);
  // keep only m columns: vectors stay in an n x n buffer with leading dim n;
  // callers index column j < m.
  return out;
}

void gemm(int m, int n, int k, double alpha, const double* a, bool ta,
          const double* b, bool tb, double beta, double* c) {
  cblas_dgemm(CblasRowMajor, ta ? CblasTrans : CblasNoTrans,
              tb ? CblasTrans : CblasNoTrans, m, n, k, alpha, a,
              ta ? m : k, b, tb ? k : n, beta, c, n);
}

void solve_dense(int n, std::vector<double>& a, std::vector<double>& b) {
  std::vector<lapack_int> ipiv(n);
  int nrhs = static_cast<int>(b.size()) / n;
  int info = LAPACKE_dgesv(LAPACK_ROW_MAJOR, n, nrhs, a.data(), n, ipiv.data(),
                           b.data(), nrhs);
  if (info != 0) throw std::runtime_error("dgesv failed, info=" + std::to_string(info));
}

}  // namespace subwalk
