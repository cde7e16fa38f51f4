#include "subwalk/num.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace subwalk {

uint64_t SplitMix::mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t SplitMix::draw(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  uint64_t z = mix(seed ^ 0x6a09e667f3bcc908ull);
  z = mix(z ^ a);
  z = mix(z ^ b);
  z = mix(z ^ c);
  return z;
}

double SplitMix::uniform(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  return (draw(seed, a, b, c) >> 11) * 0x1.0p-53;
}

uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  return SplitMix::mix(state_);
}

double Rng::uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

double Rng::normal() {
  // Box-Muller, fresh pair each call.
  double u1 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Quadrature gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      // evaluate P_n and P_n' by recurrence
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = -p1 / pp;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    q.weights[i] = w;
    q.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) q.nodes[n / 2] = 0.0;
  return q;
}

void jacobi_sym_eig(int n, double* a, double* eig, double* v) {
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
  if (v) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = (i == j) ? 1.0 : 0.0;
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        if (v) {
          for (int k = 0; k < n; ++k) {
            double vkp = v[k * n + p], vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  // sort ascending (insertion, n is tiny)
  for (int i = 1; i < n; ++i) {
    double key = eig[i];
    std::vector<double> col(n);
    if (v)
      for (int k = 0; k < n; ++k) col[k] = v[k * n + i];
    int j = i - 1;
    while (j >= 0 && eig[j] > key) {
      eig[j + 1] = eig[j];
      if (v)
        for (int k = 0; k < n; ++k) v[k * n + j + 1] = v[k * n + j];
      --j;
    }
    eig[j + 1] = key;
    if (v)
      for (int k = 0; k < n; ++k) v[k * n + j + 1] = col[k];
  }
}

double sym_min_eig(int n, const double* a) {
  std::vector<double> c(a, a + n * n), e(n);
  jacobi_sym_eig(n, c.data(), e.data());
  return e[0];
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  LineFit f;
  size_t m = x.size();
  if (m < 2 || y.size() != m) return f;
  double sx = 0, sy = 0;
  for (size_t i = 0; i < m; ++i) {
    sx += x[i];
    sy += y[i];
  }
  double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0;
  for (size_t i = 0; i < m; ++i) {
    double r = y[i] - (f.intercept + f.slope * x[i]);
    ssr += r * r;
  }
  f.r2 = (syy > 0) ? 1.0 - ssr / syy : 1.0;
  return f;
}

bool solve_small(int n, double* a, double* b) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (std::abs(a[piv * n + col]) < 1e-300) return false;
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      std::swap(b[piv], b[col]);
    }
    double d = a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / d;
      if (f == 0) continue;
      for (int k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < n; ++k) s -= a[r * n + k] * b[k];
    b[r] = s / a[r * n + r];
  }
  return true;
}

double det_small(int n, const double* a) {
  std::vector<double> m(a, a + n * n);
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (std::abs(m[piv * n + col]) < 1e-300) return 0.0;
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(m[piv * n + k], m[col * n + k]);
      det = -det;
    }
    det *= m[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      double f = m[r * n + col] / m[col * n + col];
      for (int k = col; k < n; ++k) m[r * n + k] -= f * m[col * n + k];
    }
  }
  return det;
}

}  // namespace subwalk
