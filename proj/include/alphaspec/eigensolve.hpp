#ifndef ALPHASPEC_EIGENSOLVE_HPP
#define ALPHASPEC_EIGENSOLVE_HPP

#include "alphaspec/graph.hpp"

#include <vector>

namespace alphaspec {

struct EigenCluster {
    double value;     // representative (mean of the cluster)
    int multiplicity;
};

struct SpectrumReport {
    double alpha = 0.0;
    std::vector<double> eigenvalues;    // sorted non-increasing
    std::vector<EigenCluster> clusters; // merged at cluster_tol
};

/// Cyclic Jacobi on a dense symmetric matrix (row-major, n*n). Converges
/// quadratically; eigenvalues returned sorted non-increasing. Throws when the
/// sweep budget is exhausted before the off-diagonal mass drops under tol.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          double tol = 1e-12, int max_sweeps = 64);

constexpr double kClusterTol = 1e-8;

/// Spectrum of A_alpha(G) at a floating alpha; each eigenvalue accurate to tol
/// (default 1e-10 is loose for Jacobi at these sizes).
SpectrumReport eigenvalues(const Graph& g, double alpha, double tol = 1e-10);

/// Largest eigenvalue shortcut used by the inequality suites.
double lambda1(const Graph& g, double alpha);

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& sorted_desc,
                                              double tol = kClusterTol);

} // namespace alphaspec

#endif
