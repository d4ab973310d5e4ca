#pragma once
// Spin angular momentum of a state, computed two structurally independent
// ways that must agree:
//
//   laboratory form:  S = [ sum_i wt_i hbar (-i f* x f) ] / [ sum_i wt_i f^dag f ]
//   local form:       S = [ sum_i wt_i hbar (f~^dag sigma_3 f~) k^_i ] / [ sum_i wt_i f~^dag f~ ]
//
// The local form makes explicit that the spin lies along the momentum at each
// node, with the helicity density f~^dag sigma_3 f~ as its amplitude.

#include <cmath>
#include <cstddef>
#include <vector>

#include "svpol/errors.hpp"
#include "svpol/grid.hpp"
#include "svpol/linalg.hpp"
#include "svpol/summation.hpp"
#include "svpol/wavefield.hpp"

namespace svpol {

using SpinVector = Vec3;

// per-node helicity density f~^dag sigma_3 f~ (unnormalized)
inline std::vector<double> helicity_density(const JonesWavefunction& ft) {
    std::vector<double> out(ft.size());
    for (std::size_t i = 0; i < ft.size(); ++i)
        out[i] = std::norm(ft[i].plus) - std::norm(ft[i].minus);
    return out;
}

inline SpinVector spin_total_local(const JonesWavefunction& ft, const MomentumGrid& grid,
                                   double hbar = 1.0) {
    detail::require_same_size(ft.size(), grid.size());
    std::vector<Vec3> num(grid.size());
    std::vector<double> den(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double h = std::norm(ft[i].plus) - std::norm(ft[i].minus);
        num[i] = grid[i].weight * h * (grid[i].k / norm(grid[i].k));
        den[i] = grid[i].weight * norm_sq(ft[i]);
    }
    const double total = pairwise_sum(den);
    if (!(total > 0.0)) throw ZeroNorm{};
    return hbar / total * pairwise_sum(num);
}

inline SpinVector spin_total_lab(const VectorWavefunction& f, const MomentumGrid& grid,
                                 double hbar = 1.0) {
    detail::require_same_size(f.size(), grid.size());
    const double r = transversality_residual(f, grid);
    if (r > kTransverseTol) throw NotTransverse(r);
    std::vector<Vec3> num(grid.size());
    std::vector<double> den(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        // f^dag Sigma f = -i f* x f, a real vector
        const Vec3c s = cplx{0.0, -1.0} * cross(svpol::conj(f[i]), f[i]);
        num[i] = grid[i].weight * real(s);
        den[i] = grid[i].weight * cdot(f[i], f[i]).real();
    }
    const double total = pairwise_sum(den);
    if (!(total > 0.0)) throw ZeroNorm{};
    return hbar / total * pairwise_sum(num);
}

}  // namespace svpol
