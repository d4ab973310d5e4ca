#pragma once
// Momentum-space quadrature grids. A grid is an ordered list of
// (wavevector, weight) nodes; every integral over momentum in the library is
// the weighted sum over these nodes. Grids are user-supplied; the sphere
// shell helper below exists so tests and demos have a sane default
// (Gauss-Legendre in latitude x uniform in longitude on a shell |k| = r).

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "svpol/errors.hpp"
#include "svpol/linalg.hpp"

namespace svpol {

struct GridNode {
    Vec3 k;
    double weight = 0.0;
};

class MomentumGrid {
  public:
    explicit MomentumGrid(std::vector<GridNode> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.empty()) throw std::invalid_argument("MomentumGrid: at least one node required");
        for (const auto& n : nodes_) {
            if (!(n.weight > 0.0) || !std::isfinite(n.weight))
                throw std::invalid_argument("MomentumGrid: weights must be positive and finite");
            if (!(norm(n.k) > 0.0)) throw std::invalid_argument("MomentumGrid: node momenta must be nonzero");
        }
    }

    std::size_t size() const { return nodes_.size(); }
    const GridNode& operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<GridNode>& nodes() const { return nodes_; }

  private:
    std::vector<GridNode> nodes_;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
inline void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

}  // namespace detail

// n_polar x n_azimuth nodes on the shell |k| = radius. Latitudes are
// Gauss-Legendre in cos(theta) (no nodes at the poles), longitudes uniform.
// Weights carry the surface measure r^2 * w_gl * (2 pi / n_azimuth).
inline MomentumGrid make_sphere_shell_grid(std::size_t n_polar, std::size_t n_azimuth,
                                           double radius) {
    if (n_polar == 0 || n_azimuth == 0)
        throw std::invalid_argument("make_sphere_shell_grid: node counts must be positive");
    if (!(radius > 0.0)) throw std::invalid_argument("make_sphere_shell_grid: radius must be positive");
    std::vector<double> ct, wt;
    detail::gauss_legendre(n_polar, ct, wt);
    std::vector<GridNode> nodes;
    nodes.reserve(n_polar * n_azimuth);
    const double dphi = 2.0 * M_PI / static_cast<double>(n_azimuth);
    for (std::size_t i = 0; i < n_polar; ++i) {
        const double st = std::sqrt(std::max(0.0, 1.0 - ct[i] * ct[i]));
        for (std::size_t j = 0; j < n_azimuth; ++j) {
            const double phi = dphi * (static_cast<double>(j) + 0.5);
            const Vec3 k = radius * Vec3{st * std::cos(phi), st * std::sin(phi), ct[i]};
            nodes.push_back({k, radius * radius * wt[i] * dphi});
        }
    }
    return MomentumGrid(std::move(nodes));
}

}  // namespace svpol
