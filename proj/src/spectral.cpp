#include "loopenergy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "loopenergy/error.hpp"

namespace loopenergy {

double ShiftedSpectrum::max_abs() const { return std::abs(abs_order.front()); }
double ShiftedSpectrum::min_abs() const { return std::abs(abs_order.back()); }

double TraceResiduals::max() const {
  return std::max({sum, sum_squares, shifted_squares});
}

SymmetricMatrix SymmetricMatrix::from(const AdjacencyMatrix& a) {
  SymmetricMatrix m{a.order(), std::vector<double>(static_cast<std::size_t>(a.order()) * a.order())};
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) m(i, j) = a(i, j);
  return m;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.order; ++i)
    for (int j = i + 1; j < a.order; ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (double x : a.entries) s += x * x;
  return std::sqrt(s);
}

// Zeroes a(p,q) with a two-sided rotation; accumulates into v when given.
void rotate(SymmetricMatrix& a, SymmetricMatrix* v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const int n = a.order;

  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  if (v != nullptr) {
    for (int k = 0; k < n; ++k) {
      const double vkp = (*v)(k, p);
      const double vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - s * vkq;
      (*v)(k, q) = s * vkp + c * vkq;
    }
  }
}

}  // namespace

EigenDecomposition jacobi_eigen(SymmetricMatrix a, double threshold, int max_sweeps,
                                bool want_vectors) {
  const int n = a.order;
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "matrix order must be at least 1");

  EigenDecomposition out;
  out.vectors.order = n;
  if (want_vectors) {
    out.vectors.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) out.vectors(i, i) = 1.0;
  }
  SymmetricMatrix* vectors = want_vectors ? &out.vectors : nullptr;

  const double limit = threshold * std::max(1.0, frobenius_norm(a));
  int sweeps = 0;
  while (off_diagonal_norm(a) >= limit) {
    if (sweeps == max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                      " sweeps (order " + std::to_string(n) + ")");
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, vectors, p, q);
    ++sweeps;
  }
  out.sweeps = sweeps;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
  out.values.reserve(static_cast<std::size_t>(n));
  for (int k : order) out.values.push_back(a(k, k));
  if (want_vectors) {
    SymmetricMatrix sorted{n, std::vector<double>(out.vectors.entries.size())};
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row) sorted(row, col) = out.vectors(row, order[col]);
    out.vectors = std::move(sorted);
  }
  return out;
}

Spectrum eigenvalues(const AdjacencyMatrix& a, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "eigenvalue tolerance must be positive");
  // Weyl: the residual off-diagonal mass bounds each eigenvalue's error.
  const double threshold = std::min(1e-13, tol);
  auto decomposition = jacobi_eigen(SymmetricMatrix::from(a), threshold, kJacobiMaxSweeps, false);
  return Spectrum{std::move(decomposition.values)};
}

Spectrum eigenvalues(const SelfLoopGraph& g, double tol) {
  return eigenvalues(adjacency_matrix(g), tol);
}

ShiftedSpectrum shifted_spectrum(const Spectrum& spec, int n, int sigma) {
  if (spec.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "spectrum length " + std::to_string(spec.size()) +
                                                " does not match n = " + std::to_string(n));
  }
  if (sigma < 0 || sigma > n) {
    throw Error(ErrorKind::InvalidArgument, "sigma must lie in [0, n]");
  }
  ShiftedSpectrum out;
  out.shift = static_cast<double>(sigma) / n;
  out.mu.reserve(spec.values.size());
  for (double lambda : spec.values) out.mu.push_back(lambda - out.shift);
  out.abs_order = out.mu;
  std::stable_sort(out.abs_order.begin(), out.abs_order.end(), [](double x, double y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
    return x > y;
  });
  return out;
}

TraceResiduals trace_residuals(const SelfLoopGraph& g, const Spectrum& spec) {
  const double n = g.order();
  const double m = g.size();
  const double sigma = g.loop_count();
  const double shift = sigma / n;
  double sum = 0.0;
  double squares = 0.0;
  double shifted = 0.0;
  for (double lambda : spec.values) {
    sum += lambda;
    squares += lambda * lambda;
    shifted += (lambda - shift) * (lambda - shift);
  }
  return TraceResiduals{std::abs(sum - sigma), std::abs(squares - (2 * m + sigma)),
                        std::abs(shifted - (2 * m + sigma - sigma * sigma / n))};
}

double spectral_radius(const SelfLoopGraph& g) {
  const auto spec = eigenvalues(g);
  double rho = 0.0;
  for (double lambda : spec.values) rho = std::max(rho, std::abs(lambda));
  return rho;
}

}  // namespace loopenergy
