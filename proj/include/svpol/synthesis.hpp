#pragma once
// Position-space electric field synthesized from a momentum-grid vector
// wavefunction:
//
//   E(x,t) = (2 pi)^{-3/2} sum_i wt_i (hbar w_i / 2 eps0)^{1/2}
//            f(k_i) e^{i (k_i . x - w_i t)}  + c.c.,     w_i = c |k_i|.
//
// The divergence is evaluated analytically per plane-wave term (each term
// contributes i k . f), so the divergence check isolates the transversality
// constraint instead of measuring a finite-difference stencil.

#include <cmath>
#include <cstddef>
#include <vector>

#include "svpol/errors.hpp"
#include "svpol/grid.hpp"
#include "svpol/linalg.hpp"
#include "svpol/summation.hpp"
#include "svpol/wavefield.hpp"

namespace svpol {

struct PhysicalConstants {
    double hbar = 1.0;
    double c = 1.0;
    double epsilon0 = 1.0;
};

struct SpaceTimePoint {
    Vec3 x;
    double t = 0.0;
};

struct FieldSample {
    Vec3 x;
    double t = 0.0;
    Vec3 E;
};

namespace detail {

inline constexpr double kTwoPiPowMinus32 = 0.06349363593424097;  // (2 pi)^(-3/2)

inline double mode_amplitude(const GridNode& node, const PhysicalConstants& pc) {
    const double omega = pc.c * norm(node.k);
    return node.weight * std::sqrt(pc.hbar * omega / (2.0 * pc.epsilon0));
}

}  // namespace detail

inline std::vector<FieldSample> synthesize_field(const VectorWavefunction& f,
                                                 const MomentumGrid& grid,
                                                 const std::vector<SpaceTimePoint>& points,
                                                 const PhysicalConstants& pc = {}) {
    detail::require_same_size(f.size(), grid.size());
    const double r = transversality_residual(f, grid);
    if (r > kTransverseTol) throw NotTransverse(r);

    std::vector<FieldSample> out;
    out.reserve(points.size());
    std::vector<Vec3c> terms(grid.size());
    for (const auto& p : points) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double omega = pc.c * norm(grid[i].k);
            const double phase = dot(grid[i].k, p.x) - omega * p.t;
            terms[i] = detail::mode_amplitude(grid[i], pc) * (std::polar(1.0, phase) * f[i]);
        }
        const Vec3c half = detail::kTwoPiPowMinus32 * pairwise_sum(terms);
        out.push_back({p.x, p.t, real(half + svpol::conj(half))});
    }
    return out;
}

// max over points of |div E|, normalized by the scale max|k| * max|E|.
// Zero fields give zero residual.
inline double divergence_residual(const VectorWavefunction& f, const MomentumGrid& grid,
                                  const std::vector<SpaceTimePoint>& points,
                                  const PhysicalConstants& pc = {}) {
    detail::require_same_size(f.size(), grid.size());
    double max_k = 0.0;
    for (const auto& n : grid.nodes()) max_k = std::max(max_k, norm(n.k));

    double worst_div = 0.0;
    double max_field = 0.0;
    std::vector<double> div_terms(grid.size());
    std::vector<Vec3c> field_terms(grid.size());
    for (const auto& p : points) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double omega = pc.c * norm(grid[i].k);
            const double phase = dot(grid[i].k, p.x) - omega * p.t;
            const cplx e = std::polar(1.0, phase);
            const double amp = detail::mode_amplitude(grid[i], pc);
            const cplx k_dot_f = cdot(Vec3c{grid[i].k}, f[i]);  // k real, so this is plain k . f
            div_terms[i] = 2.0 * amp * (kImag * k_dot_f * e).real();
            field_terms[i] = amp * (e * f[i]);
        }
        const double div = detail::kTwoPiPowMinus32 * pairwise_sum(div_terms);
        const Vec3c half = detail::kTwoPiPowMinus32 * pairwise_sum(field_terms);
        const Vec3 E = real(half + svpol::conj(half));
        worst_div = std::max(worst_div, std::abs(div));
        max_field = std::max(max_field, norm(E));
    }
    const double scale = max_k * max_field;
    if (!(scale > 0.0)) return 0.0;
    return worst_div / scale;
}

}  // namespace svpol
