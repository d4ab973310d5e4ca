#pragma once
// Momentum-grid wavefunction containers and the quasi-unitary conversion
// between the three-component (laboratory) and two-component (local Jones)
// representations:
//
//   f~(k) = varpi^dag(I, k) f(k)        vector -> Jones
//   f(k)  = varpi(I, k) f~(k)           Jones  -> vector
//   f~'(k) = exp(+i sigma_3 Phi) f~(k)  change of Stratton vector
//
// Containers are immutable after construction. Conversions are per-node maps;
// reductions use pairwise summation in node order.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "svpol/errors.hpp"
#include "svpol/frames.hpp"
#include "svpol/grid.hpp"
#include "svpol/linalg.hpp"
#include "svpol/summation.hpp"

namespace svpol {

inline constexpr double kTransverseTol = 1e-9;  // admission threshold for vector inputs

class VectorWavefunction {
  public:
    explicit VectorWavefunction(std::vector<Vec3c> samples) : samples_(std::move(samples)) {}

    std::size_t size() const { return samples_.size(); }
    const Vec3c& operator[](std::size_t i) const { return samples_[i]; }
    const std::vector<Vec3c>& samples() const { return samples_; }

  private:
    std::vector<Vec3c> samples_;
};

// Two-component samples plus the Stratton vector that defines their local
// representation. A Jones wavefunction without its I is meaningless.
class JonesWavefunction {
  public:
    JonesWavefunction(std::vector<Vec2c> samples, StrattonVector sv)
        : samples_(std::move(samples)), sv_(sv) {}

    std::size_t size() const { return samples_.size(); }
    const Vec2c& operator[](std::size_t i) const { return samples_[i]; }
    const std::vector<Vec2c>& samples() const { return samples_; }
    const StrattonVector& sv() const { return sv_; }

  private:
    std::vector<Vec2c> samples_;
    StrattonVector sv_;
};

// Unit transverse complex 3-vector at a momentum. Validates both invariants
// on construction.
struct PolarizationVector {
    Vec3c a;
    Vec3 k;

    PolarizationVector(const Vec3c& a_, const Vec3& k_) : a(a_), k(k_) {
        const double n = norm(a);
        if (std::abs(n - 1.0) > 1e-12) throw NotNormalized("polarization vector norm " + std::to_string(n));
        const double kn = norm(k);
        if (!(kn > 0.0)) throw std::invalid_argument("PolarizationVector: zero wavevector");
        const double r = std::abs(cdot(Vec3c{k / kn}, a));
        if (r > kTransverseTol) throw NotTransverse(r);
    }
};

namespace detail {

inline void require_same_size(std::size_t got, std::size_t expected) {
    if (got != expected) throw SizeMismatch(got, expected);
}

inline LocalFrame frame_at_node(const StrattonVector& sv, const MomentumGrid& grid, std::size_t i) {
    try {
        return build_frame(sv, grid[i].k);
    } catch (const DegenerateFrame&) {
        throw DegenerateFrame{i};
    }
}

}  // namespace detail

// max over nodes of |k^ . f| / max(|f|, floor); null samples contribute 0.
inline double transversality_residual(const VectorWavefunction& f, const MomentumGrid& grid) {
    detail::require_same_size(f.size(), grid.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Vec3 khat = grid[i].k / norm(grid[i].k);
        const double num = std::abs(cdot(Vec3c{khat}, f[i]));
        const double den = std::max(norm(f[i]), 1e-300);
        worst = std::max(worst, num / den);
    }
    return worst;
}

inline JonesWavefunction to_jones(const VectorWavefunction& f, const StrattonVector& sv,
                                  const MomentumGrid& grid) {
    detail::require_same_size(f.size(), grid.size());
    const double r = transversality_residual(f, grid);
    if (r > kTransverseTol) throw NotTransverse(r);
    std::vector<Vec2c> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = quasi_unitary(detail::frame_at_node(sv, grid, i)).apply_adjoint(f[i]);
    return {std::move(out), sv};
}

inline VectorWavefunction to_vector(const JonesWavefunction& ft, const MomentumGrid& grid) {
    detail::require_same_size(ft.size(), grid.size());
    std::vector<Vec3c> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = quasi_unitary(detail::frame_at_node(ft.sv(), grid, i)).apply(ft[i]);
    return VectorWavefunction{std::move(out)};
}

// Re-expresses the same physical state in the representation fixed by
// sv_prime: per node, f~' = diag(e^{+i Phi}, e^{-i Phi}) f~ with
// Phi = frame_angle(I, I', k_i).
inline JonesWavefunction change_sv(const JonesWavefunction& ft, const StrattonVector& sv_prime,
                                   const MomentumGrid& grid) {
    detail::require_same_size(ft.size(), grid.size());
    std::vector<Vec2c> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double phi;
        try {
            phi = frame_angle(ft.sv(), sv_prime, grid[i].k);
        } catch (const DegenerateFrame&) {
            throw DegenerateFrame{i};
        }
        out[i] = Vec2c{std::polar(1.0, phi) * ft[i].plus, std::polar(1.0, -phi) * ft[i].minus};
    }
    return {std::move(out), sv_prime};
}

inline double norm_squared(const VectorWavefunction& f, const MomentumGrid& grid) {
    detail::require_same_size(f.size(), grid.size());
    std::vector<double> terms(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        terms[i] = grid[i].weight * cdot(f[i], f[i]).real();
    return pairwise_sum(terms);
}

inline double norm_squared(const JonesWavefunction& ft, const MomentumGrid& grid) {
    detail::require_same_size(ft.size(), grid.size());
    std::vector<double> terms(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) terms[i] = grid[i].weight * norm_sq(ft[i]);
    return pairwise_sum(terms);
}

}  // namespace svpol
