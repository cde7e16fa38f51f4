#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace subwalk {

// Counter-based splittable RNG. Every draw is a pure function of the key
// tuple, so ensembles are order-independent and reproducible.
struct SplitMix {
  static uint64_t mix(uint64_t z);
  // keyed draw: uniform u64 from (seed, a, b, c)
  static uint64_t draw(uint64_t seed, uint64_t a, uint64_t b, uint64_t c);
  // uniform in [0,1)
  static double uniform(uint64_t seed, uint64_t a, uint64_t b, uint64_t c);
};

// Stateful stream for tests and sampling loops.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next_u64();
  double uniform();                     // [0,1)
  double uniform(double lo, double hi);
  int uniform_int(int n);               // {0,...,n-1}
  double normal();
 private:
  uint64_t state_;
};

// Gauss-Legendre nodes/weights on [-1,1], by Newton iteration on P_n.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;  // sum = 2
};
Quadrature gauss_legendre(int n);

// Symmetric eigensolve for small dense matrices (cyclic Jacobi).
// a is n*n row-major, overwritten; eigenvalues ascending; optional vectors
// (columns of v, row-major n*n).
void jacobi_sym_eig(int n, double* a, double* eig, double* v = nullptr);

// Smallest eigenvalue of a small symmetric matrix (copy-safe helper).
double sym_min_eig(int n, const double* a);

// Least-squares line fit y = a + b x; returns {a, b, r2}.
struct LineFit {
  double intercept = 0, slope = 0, r2 = 0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Solve small linear system a x = b in place (partial pivoting), n <= 8.
// Returns false when singular to working precision.
bool solve_small(int n, double* a, double* b);

double det_small(int n, const double* a);

}  // namespace subwalk
