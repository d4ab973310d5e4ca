#pragma once
// Plane-wave polarization machinery: Pauli eigenstate constructors, the
// polarization vector of a plane-wave state in a given local representation,
// optical rotation as the abstract operator exp[-i (Sigma . w0) phi], the
// Stratton-vector change of a plane-wave state, and discrete geometric-phase
// accumulation.
//
// pancharatnam_phase is the single gauge-invariant oracle for geometric
// phase: the accumulated argument of successive state overlaps. sv_loop_phase
// is the fast path for helicity eigenstates under a loop of Stratton vectors;
// it cross-checks itself against the oracle on every call.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "svpol/algebra.hpp"
#include "svpol/errors.hpp"
#include "svpol/frames.hpp"
#include "svpol/linalg.hpp"
#include "svpol/summation.hpp"
#include "svpol/wavefield.hpp"

namespace svpol {

inline constexpr double kMinOverlap = 1e-6;  // below this, a step phase is meaningless

// sigma_1: (1, s)/sqrt(2); sigma_2: (1, i s)/sqrt(2); sigma_3: ((1+s)/2, (1-s)/2).
inline Vec2c eigenstate(int axis, int eigenvalue) {
    if (eigenvalue != 1 && eigenvalue != -1)
        throw std::invalid_argument("eigenstate: eigenvalue must be +1 or -1");
    const double s = static_cast<double>(eigenvalue);
    switch (axis) {
        case 1:
            return {kSqrtHalf, s * kSqrtHalf};
        case 2:
            return {kSqrtHalf, cplx{0.0, s * kSqrtHalf}};
        case 3:
            return {0.5 * (1.0 + s), 0.5 * (1.0 - s)};
        default:
            throw std::out_of_range("eigenstate: axis must be 1, 2 or 3");
    }
}

// A plane wave at momentum k0 whose Jones amplitude alpha~ is constant in the
// representation fixed by sv.
struct PlaneWaveState {
    Vec3 k0;
    StrattonVector sv;
    Vec2c jones;

    PlaneWaveState(const Vec3& k0_, const StrattonVector& sv_, const Vec2c& jones_)
        : k0(k0_), sv(sv_), jones(jones_) {
        if (std::abs(norm_sq(jones) - 1.0) > 1e-10)
            throw NotNormalized("plane-wave Jones amplitude");
        build_frame(sv, k0);  // validate non-degeneracy up front
    }
};

// a = varpi(I, k0) alpha~
inline PolarizationVector polarization_vector(const PlaneWaveState& state) {
    const QuasiUnitary q = quasi_unitary(build_frame(state.sv, state.k0));
    return {q.apply(state.jones), state.k0};
}

// Rotation of a polarization vector about its own propagation direction by
// phi; preserves unit norm and transversality.
inline PolarizationVector optical_rotation(const PolarizationVector& a, double phi) {
    const Mat3 r = rotation_about(a.k / norm(a.k), phi);
    return {r * a.a, a.k};
}

// Same intrinsic amplitude, new Stratton vector. The polarization vector of
// the result equals optical_rotation(old, Phi) with Phi the frame angle from
// sv to sv_prime at k0.
inline PlaneWaveState rotate_sv(const PlaneWaveState& state, const StrattonVector& sv_prime) {
    return {state.k0, sv_prime, state.jones};
}

// Ordered record of a discrete phase accumulation.
struct PhaseLog {
    std::vector<double> steps;  // per-step angles, radians
    double total = 0.0;         // unwrapped sum of steps, not reduced mod 2 pi
    cplx factor{1.0, 0.0};      // unit-modulus accumulated phase factor
};

// Accumulated argument of successive overlaps a_j^dag a_{j+1}. With closed
// set, the last state connects back to the first.
inline PhaseLog pancharatnam_phase(const std::vector<PolarizationVector>& states, bool closed) {
    if (states.size() < 2)
        throw std::invalid_argument("pancharatnam_phase: need at least two states");
    PhaseLog log;
    const std::size_t n_steps = states.size() - (closed ? 0 : 1);
    log.steps.reserve(n_steps);
    cplx factor{1.0, 0.0};
    for (std::size_t j = 0; j < n_steps; ++j) {
        const auto& a = states[j].a;
        const auto& b = states[(j + 1) % states.size()].a;
        const cplx overlap = cdot(a, b);
        const double mag = std::abs(overlap);
        if (mag < kMinOverlap) throw OrthogonalStep(j);
        log.steps.push_back(std::arg(overlap));
        factor *= overlap / mag;
    }
    log.total = pairwise_sum(log.steps);
    log.factor = factor;
    return log;
}

// Phase accumulated by a helicity eigenstate when its Stratton vector is
// carried through the given sequence (consecutive entries one step apart).
// Step angles are the frame angles Phi_j; the phase factor is
// exp(-i sigma3 sum_j Phi_j). Steps must be quarter-turn or finer, except for
// the momentum-independent antipodal flip I -> -I (Phi = pi exactly); angles
// in between sit too close to the atan2 branch cut to unwrap reliably.
inline PhaseLog sv_loop_phase(const PlaneWaveState& state,
                              const std::vector<StrattonVector>& loop, int sigma3) {
    if (sigma3 != 1 && sigma3 != -1)
        throw std::invalid_argument("sv_loop_phase: sigma3 must be +1 or -1");
    if (max_abs_diff(state.jones, eigenstate(3, sigma3)) > 1e-12)
        throw std::invalid_argument("sv_loop_phase: state must be the helicity eigenstate matching sigma3");
    if (loop.size() < 2) throw std::invalid_argument("sv_loop_phase: need at least two Stratton vectors");

    PhaseLog log;
    log.steps.reserve(loop.size() - 1);
    for (std::size_t j = 0; j + 1 < loop.size(); ++j) {
        const double phi = frame_angle(loop[j], loop[j + 1], state.k0);
        const bool fine = std::abs(phi) <= 0.5 * M_PI + 1e-9;
        const bool antipodal = std::abs(phi) >= M_PI - 1e-9;
        if (!fine && !antipodal)
            throw std::invalid_argument("sv_loop_phase: step " + std::to_string(j) +
                                        " rotates the frame by more than a quarter turn; refine the loop");
        log.steps.push_back(phi);
    }
    log.total = pairwise_sum(log.steps);
    log.factor = std::polar(1.0, -static_cast<double>(sigma3) * log.total);

    // cross-check against the gauge-invariant oracle
    std::vector<PolarizationVector> states;
    states.reserve(loop.size());
    for (const auto& sv : loop)
        states.push_back(polarization_vector(PlaneWaveState{state.k0, sv, state.jones}));
    const PhaseLog oracle = pancharatnam_phase(states, /*closed=*/false);
    if (std::abs(oracle.factor - log.factor) > 1e-10)
        throw Error("sv_loop_phase: disagreement with the overlap-product oracle");
    return log;
}

}  // namespace svpol
