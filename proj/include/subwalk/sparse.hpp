#pragma once

#include <cstddef>
#include <vector>

namespace subwalk {

// Compressed sparse row matrix, square.
struct Csr {
  int n = 0;
  std::vector<size_t> row_ptr;  // n+1
  std::vector<int> col;
  std::vector<double> val;

  void matvec(const double* x, double* y) const;
  void matvec_transpose(const double* x, double* y) const;
  Csr transposed() const;
  std::vector<double> dense() const;  // row-major n*n
};

// Builder accumulating (row, col, value) with duplicate merging per row.
class CsrBuilder {
 public:
  explicit CsrBuilder(int n) : n_(n), rows_(n) {}
  void add(int r, int c, double v) { rows_[r].emplace_back(c, v); }
  Csr build();
  int n() const { return n_; }
 private:
  int n_;
  std::vector<std::vector<std::pair<int, double>>> rows_;
};

// Extremal eigenvalues of a symmetric operator given by CSR matvec, via
// Lanczos with full reorthogonalization. Vectors in `deflate` (orthonormal)
// are projected out. Returns the largest `k` Ritz values (descending) and,
// when `ritz_vectors` is non-null, the corresponding vectors.
std::vector<double> lanczos_largest(const Csr& a, int k, int max_iter,
                                    const std::vector<std::vector<double>>& deflate,
                                    uint64_t seed,
                                    std::vector<std::vector<double>>* ritz_vectors = nullptr);

// Smallest eigenvalues (ascending), same contract.
std::vector<double> lanczos_smallest(const Csr& a, int k, int max_iter,
                                     const std::vector<std::vector<double>>& deflate,
                                     uint64_t seed);

}  // namespace subwalk
