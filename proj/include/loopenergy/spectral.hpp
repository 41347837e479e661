#pragma once

#include <vector>

#include "loopenergy/graph.hpp"

namespace loopenergy {

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;

/// Adjacency eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

/// Eigenvalues shifted by sigma/n.
struct ShiftedSpectrum {
  std::vector<double> mu;         // same order as the source Spectrum
  std::vector<double> abs_order;  // by |mu| descending, positive first on ties
  double shift = 0.0;

  double max_abs() const;  // |mu|_(1)
  double min_abs() const;  // |mu|_(n)
};

struct TraceResiduals {
  double sum = 0.0;            // |sum(lambda) - sigma|
  double sum_squares = 0.0;    // |sum(lambda^2) - (2m + sigma)|
  double shifted_squares = 0.0;  // |sum(mu^2) - (2m + sigma - sigma^2/n)|

  double max() const;
};

/// Dense row-major symmetric matrix, as consumed by the Jacobi solver.
struct SymmetricMatrix {
  int order = 0;
  std::vector<double> entries;

  double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
  double& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }

  static SymmetricMatrix from(const AdjacencyMatrix& a);
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  SymmetricMatrix vectors;     // column k is the eigenvector of values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm drops
/// below threshold * max(1, ||A||_F); throws NoConvergence after max_sweeps.
EigenDecomposition jacobi_eigen(SymmetricMatrix a, double threshold,
                                int max_sweeps = kJacobiMaxSweeps,
                                bool want_vectors = true);

Spectrum eigenvalues(const SelfLoopGraph& g, double tol = kDefaultEigenTol);
Spectrum eigenvalues(const AdjacencyMatrix& a, double tol = kDefaultEigenTol);

ShiftedSpectrum shifted_spectrum(const Spectrum& spec, int n, int sigma);

TraceResiduals trace_residuals(const SelfLoopGraph& g, const Spectrum& spec);

double spectral_radius(const SelfLoopGraph& g);

}  // namespace loopenergy
