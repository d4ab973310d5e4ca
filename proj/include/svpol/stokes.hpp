#pragma once
// Generalized Stokes parameters. For a unit two-component amplitude a~ the
// triple s_i = a~^dag sigma_i a~ lives on the unit sphere; it is specified in
// the local reference system of the Stratton vector that defined a~, and is
// embedded in laboratory coordinates as s1 u + s2 v + s3 w. Changing the
// Stratton vector rotates (s1, s2) by -2 Phi and leaves s3 alone.
//
// All of it is insensitive to a per-node global phase of a~ (sigma_i
// expectations do not see e^{i theta}), so normalizing samples without fixing
// a phase is safe.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "svpol/algebra.hpp"
#include "svpol/errors.hpp"
#include "svpol/frames.hpp"
#include "svpol/grid.hpp"
#include "svpol/summation.hpp"
#include "svpol/wavefield.hpp"

namespace svpol {

struct StokesParams {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

inline double max_abs_diff(const StokesParams& a, const StokesParams& b) {
    return std::max({std::abs(a.s1 - b.s1), std::abs(a.s2 - b.s2), std::abs(a.s3 - b.s3)});
}

// s_i = a~^dag sigma_i a~ for a unit amplitude (norm within 1e-10).
inline StokesParams stokes_params(const Vec2c& a) {
    const double n2 = norm_sq(a);
    if (std::abs(n2 - 1.0) > 1e-10)
        throw NotNormalized("stokes_params requires a unit amplitude, got |a|^2 = " + std::to_string(n2));
    const cplx pm = std::conj(a.plus) * a.minus;
    return {2.0 * pm.real(), 2.0 * pm.imag(), std::norm(a.plus) - std::norm(a.minus)};
}

// Per-node Stokes parameters of a Jones wavefunction. Nodes whose sample norm
// falls below the null threshold are flagged undefined instead of fabricating
// a direction from noise. Carries the node quadrature weights so weighted
// statistics (intrinsic_check) need no second look at the grid.
class StokesField {
  public:
    struct Node {
        std::optional<StokesParams> sp;
        double weight = 0.0;
    };

    explicit StokesField(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

    std::size_t size() const { return nodes_.size(); }
    const Node& operator[](std::size_t i) const { return nodes_[i]; }
    bool defined(std::size_t i) const { return nodes_[i].sp.has_value(); }

    std::size_t defined_count() const {
        std::size_t n = 0;
        for (const auto& nd : nodes_)
            if (nd.sp) ++n;
        return n;
    }

  private:
    std::vector<Node> nodes_;
};

inline StokesField stokes_field(const JonesWavefunction& ft, const MomentumGrid& grid,
                                double null_threshold) {
    detail::require_same_size(ft.size(), grid.size());
    std::vector<StokesField::Node> nodes(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        nodes[i].weight = grid[i].weight;
        const double n = norm(ft[i]);
        if (n < null_threshold || n < 1e-300) continue;  // undefined
        nodes[i].sp = stokes_params(ft[i] / n);
    }
    return StokesField{std::move(nodes)};
}

// default threshold: 1e-12 of the largest sample norm
inline StokesField stokes_field(const JonesWavefunction& ft, const MomentumGrid& grid) {
    double max_norm = 0.0;
    for (const auto& s : ft.samples()) max_norm = std::max(max_norm, norm(s));
    return stokes_field(ft, grid, 1e-12 * max_norm);
}

// s1' = s1 cos(2 Phi) + s2 sin(2 Phi); s2' = -s1 sin(2 Phi) + s2 cos(2 Phi); s3' = s3.
inline StokesParams transform_stokes(const StokesParams& sp, double phi) {
    const double c = std::cos(2.0 * phi);
    const double s = std::sin(2.0 * phi);
    return {sp.s1 * c + sp.s2 * s, -sp.s1 * s + sp.s2 * c, sp.s3};
}

// Embedding in laboratory coordinates: s1 u + s2 v + s3 w.
using LabStokesVector = Vec3;

inline LabStokesVector lab_stokes(const StokesParams& sp, const LocalFrame& frame) {
    return sp.s1 * frame.u + sp.s2 * frame.v + sp.s3 * frame.w;
}

// Constant Stokes triple a state exhibits across the whole grid in one local
// representation.
struct IntrinsicUnitVector {
    double n1 = 0.0, n2 = 0.0, n3 = 0.0;
};

// Returns the (weighted-mean, renormalized) Stokes triple when every defined
// node sits within tol of the mean in max-norm; empty otherwise. A returned
// value certifies the state carries a definite intrinsic unit vector in this
// representation.
inline std::optional<IntrinsicUnitVector> intrinsic_check(const StokesField& sf,
                                                          double tol = 1e-9) {
    std::vector<Vec3> weighted;
    std::vector<double> weights;
    weighted.reserve(sf.size());
    weights.reserve(sf.size());
    for (std::size_t i = 0; i < sf.size(); ++i) {
        if (!sf.defined(i)) continue;
        const auto& sp = *sf[i].sp;
        weighted.push_back(sf[i].weight * Vec3{sp.s1, sp.s2, sp.s3});
        weights.push_back(sf[i].weight);
    }
    if (weighted.empty()) throw AllNodesUndefined{};
    const Vec3 mean = pairwise_sum(weighted) / pairwise_sum(weights);
    for (std::size_t i = 0; i < sf.size(); ++i) {
        if (!sf.defined(i)) continue;
        const auto& sp = *sf[i].sp;
        if (max_abs_diff(Vec3{sp.s1, sp.s2, sp.s3}, mean) > tol) return std::nullopt;
    }
    const Vec3 n = normalized(mean);
    return IntrinsicUnitVector{n.x, n.y, n.z};
}

}  // namespace svpol
