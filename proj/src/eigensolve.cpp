#include "alphaspec/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alphaspec {

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, double tol,
                                          int max_sweeps) {
    if (n == 1) return {a[0]};
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(at(i, j)));
    if (scale == 0.0) return std::vector<double>(static_cast<size_t>(n), 0.0);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (std::sqrt(off) <= tol * scale) {
            std::vector<double> ev(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = at(i, i);
            std::sort(ev.begin(), ev.end(), std::greater<>());
            return ev;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;
                at(p, p) -= h;
                at(q, q) += h;
                at(p, q) = at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = at(i, p);
                    const double aiq = at(i, q);
                    at(i, p) = aip - s * (aiq + tau * aip);
                    at(p, i) = at(i, p);
                    at(i, q) = aiq + s * (aip - tau * aiq);
                    at(q, i) = at(i, q);
                }
            }
        }
    }
    throw std::runtime_error("Jacobi eigensolver: iteration budget exceeded");
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& sorted_desc,
                                              double tol) {
    std::vector<EigenCluster> clusters;
    for (double v : sorted_desc) {
        if (!clusters.empty() &&
            std::abs(clusters.back().value - v) <= tol * std::max(1.0, std::abs(v))) {
            auto& c = clusters.back();
            c.value = (c.value * c.multiplicity + v) / (c.multiplicity + 1);
            ++c.multiplicity;
        } else {
            clusters.push_back({v, 1});
        }
    }
    return clusters;
}

SpectrumReport eigenvalues(const Graph& g, double alpha, double tol) {
    if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("alpha outside [0,1]");
    if (tol <= 0.0) throw std::domain_error("tolerance must be positive");
    const int n = g.order();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<size_t>(i) * n + i] = alpha * g.degree(i);
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) a[static_cast<size_t>(i) * n + j] = 1.0 - alpha;
    }
    SpectrumReport report;
    report.alpha = alpha;
    report.eigenvalues = symmetric_eigenvalues(std::move(a), n, std::min(tol, 1e-12));
    report.clusters = cluster_eigenvalues(report.eigenvalues);
    return report;
}

double lambda1(const Graph& g, double alpha) {
    return eigenvalues(g, alpha).eigenvalues.front();
}

} // namespace alphaspec
