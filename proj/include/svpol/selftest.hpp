#pragma once
// Seeded self-check battery: every structural identity the library promises,
// run over randomized inputs with pinned tolerances. Used by the `check` CLI
// command and by the acceptance suite.
//
// Tolerances are per check. The tol_scale option multiplies all of them
// (the CLI maps --tol to tol_scale = tol / 1e-10, so the default --tol
// reproduces the pinned values exactly and tightening --tol tightens every
// check).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "svpol/algebra.hpp"
#include "svpol/dynamics.hpp"
#include "svpol/errors.hpp"
#include "svpol/frames.hpp"
#include "svpol/grid.hpp"
#include "svpol/random.hpp"
#include "svpol/spin.hpp"
#include "svpol/stokes.hpp"
#include "svpol/summation.hpp"
#include "svpol/synthesis.hpp"
#include "svpol/wavefield.hpp"

namespace svpol::selftest {

struct CheckResult {
    std::string id;       // short kebab-case name
    int criterion = 0;    // acceptance criterion number, 0 for supplementary checks
    bool pass = false;
    double worst = 0.0;   // worst observed residual (or 0/1 for boolean checks)
    double tol = 0.0;     // effective tolerance the check ran at
    std::string note;
};

struct Options {
    std::uint64_t seed = 42;
    double tol_scale = 1.0;
};

namespace detail {

inline Rng rng_for(const Options& opt, std::uint64_t tag) {
    return Rng(opt.seed ^ (0x9e3779b97f4a7c15ull * (tag + 1)));
}

// Stratton vector keeping a healthy angle to every grid node
inline StrattonVector admissible_sv(Rng& rng, const MomentumGrid& grid, double min_sine = 1e-3) {
    for (;;) {
        const StrattonVector sv{rng.unit_vec3()};
        bool ok = true;
        for (const auto& n : grid.nodes())
            if (svpol::norm(cross(sv.vec(), n.k)) < min_sine * svpol::norm(n.k)) {
                ok = false;
                break;
            }
        if (ok) return sv;
    }
}

// random transverse wavefunction (projection applied twice so the residual
// sits at the rounding floor, ~1e-16)
inline VectorWavefunction random_transverse(Rng& rng, const MomentumGrid& grid) {
    std::vector<Vec3c> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Vec3 khat = grid[i].k / svpol::norm(grid[i].k);
        Vec3c f = rng.gauss_vec3c();
        for (int pass = 0; pass < 2; ++pass) f = f - cdot(Vec3c{khat}, f) * Vec3c{khat};
        samples[i] = f;
    }
    return VectorWavefunction{std::move(samples)};
}

// geodesic interpolation between unit vectors
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
    const double ang = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    if (ang < 1e-12) return a;
    const double s = std::sin(ang);
    return normalized((std::sin((1.0 - t) * ang) / s) * a + (std::sin(t * ang) / s) * b);
}

// closed polyline through the spherical octant x -> y -> z -> x
inline std::vector<Vec3> octant_loop(std::size_t n_steps) {
    const Vec3 corners[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const std::size_t per_arc = (n_steps + 2) / 3;
    std::vector<Vec3> pts;
    pts.reserve(3 * per_arc);
    for (int arc = 0; arc < 3; ++arc) {
        const Vec3& a = corners[arc];
        const Vec3& b = corners[(arc + 1) % 3];
        for (std::size_t j = 0; j < per_arc; ++j)
            pts.push_back(slerp(a, b, static_cast<double>(j) / static_cast<double>(per_arc)));
    }
    return pts;
}

inline double octant_pancharatnam_total(std::size_t n_steps, int sigma3, const StrattonVector& sv) {
    const auto loop = octant_loop(n_steps);
    std::vector<PolarizationVector> states;
    states.reserve(loop.size());
    for (const auto& khat : loop)
        states.push_back(polarization_vector(PlaneWaveState{khat, sv, eigenstate(3, sigma3)}));
    return pancharatnam_phase(states, /*closed=*/true).total;
}

}  // namespace detail

// --- acceptance-criterion checks -------------------------------------------

inline CheckResult check_quasi_unitarity(const Options& opt) {
    CheckResult r{"quasi-unitarity", 1, false, 0.0, 1e-12 * opt.tol_scale, "10^4 random (I,k)"};
    Rng pairs = detail::rng_for(opt, 1);  // shared stream with triad-closure
    Rng aux = detail::rng_for(opt, 101);
    for (int n = 0; n < 10000; ++n) {
        const StrattonVector sv{pairs.unit_vec3()};
        const Vec3 k = pairs.wavevector_admissible(sv);
        const LocalFrame fr = build_frame(sv, k);
        const QuasiUnitary q = quasi_unitary(fr);
        r.worst = std::max(r.worst, max_abs_diff(q.gram(), Mat2c::identity()));
        Mat3c proj_expected;
        const double w[3] = {fr.w.x, fr.w.y, fr.w.z};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                proj_expected(i, j) = (i == j ? 1.0 : 0.0) - w[i] * w[j];
        r.worst = std::max(r.worst, max_abs_diff(q.projector(), proj_expected));
        // transverse completeness: varpi varpi^dag a = a for k.a = 0
        Vec3c a = aux.gauss_vec3c();
        a = a - cdot(Vec3c{fr.w}, a) * Vec3c{fr.w};
        a = a - cdot(Vec3c{fr.w}, a) * Vec3c{fr.w};
        if (norm(a) > 1e-6) {
            a = a / norm(a);
            r.worst = std::max(r.worst, norm(q.apply(q.apply_adjoint(a)) - a));
        }
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_triad_closure(const Options& opt) {
    CheckResult r{"triad-closure", 2, false, 0.0, 1e-12 * opt.tol_scale, "same 10^4 pairs"};
    Rng pairs = detail::rng_for(opt, 1);
    for (int n = 0; n < 10000; ++n) {
        const StrattonVector sv{pairs.unit_vec3()};
        const Vec3 k = pairs.wavevector_admissible(sv);
        const LocalFrame f = build_frame(sv, k);
        r.worst = std::max({r.worst, norm(cross(f.u, f.v) - f.w), norm(cross(f.v, f.w) - f.u),
                            norm(cross(f.w, f.u) - f.v)});
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_jones_roundtrip(const Options& opt) {
    CheckResult r{"jones-roundtrip", 3, false, 0.0, 1e-12 * opt.tol_scale,
                  "10^3 transverse fields, 64-node grids"};
    Rng rng = detail::rng_for(opt, 3);
    const MomentumGrid grid = make_sphere_shell_grid(8, 8, 1.0);
    for (int n = 0; n < 1000; ++n) {
        const StrattonVector sv = detail::admissible_sv(rng, grid);
        const VectorWavefunction f = detail::random_transverse(rng, grid);
        const VectorWavefunction back = to_vector(to_jones(f, sv, grid), grid);
        for (std::size_t i = 0; i < grid.size(); ++i)
            r.worst = std::max(r.worst, norm(back[i] - f[i]));
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_frame_intertwining(const Options& opt) {
    CheckResult r{"frame-intertwining", 4, false, 0.0, 1e-12 * opt.tol_scale,
                  "10^4 random (I, I', k)"};
    Rng rng = detail::rng_for(opt, 4);
    for (int n = 0; n < 10000; ++n) {
        const StrattonVector sv{rng.unit_vec3()};
        const StrattonVector svp{rng.unit_vec3()};
        Vec3 k;
        for (;;) {
            k = rng.wavevector_admissible(sv);
            if (norm(cross(svp.vec(), k)) >= 1e-3 * norm(k)) break;
        }
        const LocalFrame fr = build_frame(sv, k);
        const QuasiUnitary q = quasi_unitary(fr);
        const QuasiUnitary qp_direct = quasi_unitary(build_frame(svp, k));
        const double phi = frame_angle(sv, svp, k);
        // route 1: rotate the columns about w by Phi
        const Mat3 rot = rotation_about(fr.w, phi);
        const QuasiUnitary qp_rot{rot * q.c_plus, rot * q.c_minus};
        // route 2: multiply by the helicity phase from the right
        const Mat2c h = helicity_phase_matrix(phi);
        const QuasiUnitary qp_phase{h(0, 0) * q.c_plus, h(1, 1) * q.c_minus};
        r.worst = std::max({r.worst, max_abs_diff(qp_rot.c_plus, qp_phase.c_plus),
                            max_abs_diff(qp_rot.c_minus, qp_phase.c_minus),
                            max_abs_diff(qp_direct.c_plus, qp_phase.c_plus),
                            max_abs_diff(qp_direct.c_minus, qp_phase.c_minus)});
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_stokes_rotation_law(const Options& opt) {
    CheckResult r{"stokes-rotation-law", 5, false, 0.0, 1e-10 * opt.tol_scale, "10^4 random cases"};
    Rng rng = detail::rng_for(opt, 5);
    double s3_drift = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const Vec2c a = rng.unit_vec2c();
        const double phi = rng.uniform(-M_PI, M_PI);
        const Vec2c a_rot = helicity_phase_matrix(-phi) * a;  // exp(+i sigma_3 Phi)
        const StokesParams direct = stokes_params(a_rot);
        const StokesParams law = transform_stokes(stokes_params(a), phi);
        r.worst = std::max(r.worst, max_abs_diff(direct, law));
        s3_drift = std::max(s3_drift, std::abs(direct.s3 - stokes_params(a).s3));
    }
    const double s3_tol = 1e-12 * opt.tol_scale;
    r.pass = r.worst <= r.tol && s3_drift <= s3_tol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "s3 drift %.3e (tol %.1e)", s3_drift, s3_tol);
    r.note = buf;
    return r;
}

inline CheckResult check_lab_stokes_embedding(const Options& opt) {
    CheckResult r{"lab-stokes-embedding", 6, false, 0.0, 1e-10 * opt.tol_scale, "10^4 random cases"};
    Rng rng = detail::rng_for(opt, 6);
    for (int n = 0; n < 10000; ++n) {
        const StrattonVector sv{rng.unit_vec3()};
        const StrattonVector svp{rng.unit_vec3()};
        Vec3 k;
        for (;;) {
            k = rng.wavevector_admissible(sv);
            if (norm(cross(svp.vec(), k)) >= 1e-3 * norm(k)) break;
        }
        const LocalFrame fr = build_frame(sv, k);
        const LocalFrame frp = build_frame(svp, k);
        const double phi = frame_angle(sv, svp, k);
        const StokesParams sp = stokes_params(rng.unit_vec2c());
        const Vec3 lhs = lab_stokes(transform_stokes(sp, phi), frp);
        const Vec3 rhs = rotation_about(fr.w, -phi) * lab_stokes(sp, fr);
        r.worst = std::max(r.worst, norm(lhs - rhs));
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_intrinsic_constancy(const Options& opt) {
    CheckResult r{"intrinsic-constancy", 7, false, 0.0, 1e-6, "2-node constancy breaking"};
    // constant transverse-SP amplitude on two nodes with distinct directions
    const MomentumGrid grid{{GridNode{{1, 0, 0}, 1.0}, GridNode{{0, 1, 0}, 1.0}}};
    const StrattonVector sv{Vec3{0, 0, 1}};
    const JonesWavefunction ft{{eigenstate(1, +1), eigenstate(1, +1)}, sv};
    const bool constant_in_i = intrinsic_check(stokes_field(ft, grid), r.tol).has_value();
    const StrattonVector generic{Vec3{1, 2, 3}};
    const bool constant_in_generic =
        intrinsic_check(stokes_field(change_sv(ft, generic, grid), grid), r.tol).has_value();
    const bool constant_in_antipodal =
        intrinsic_check(stokes_field(change_sv(ft, -sv, grid), grid), r.tol).has_value();
    r.pass = constant_in_i && !constant_in_generic && constant_in_antipodal;
    r.worst = r.pass ? 0.0 : 1.0;
    r.note = std::string("I:") + (constant_in_i ? "const" : "varies") +
             " I':" + (constant_in_generic ? "const" : "varies") +
             " -I:" + (constant_in_antipodal ? "const" : "varies");
    return r;
}

inline CheckResult check_spin_equivalence(const Options& opt) {
    CheckResult r{"spin-equivalence", 8, false, 0.0, 1e-10 * opt.tol_scale,
                  "10^3 transverse states"};
    Rng rng = detail::rng_for(opt, 8);
    const MomentumGrid grid = make_sphere_shell_grid(8, 8, 1.0);
    double invariance = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const StrattonVector sv = detail::admissible_sv(rng, grid);
        const StrattonVector svp = detail::admissible_sv(rng, grid);
        const VectorWavefunction f = detail::random_transverse(rng, grid);
        const JonesWavefunction ft = to_jones(f, sv, grid);
        const Vec3 lab = spin_total_lab(f, grid);
        const Vec3 local = spin_total_local(ft, grid);
        r.worst = std::max(r.worst, norm(lab - local));
        invariance = std::max(
            invariance, norm(spin_total_local(change_sv(ft, svp, grid), grid) - local));
    }
    // per-node spin operator components commute
    double comm = 0.0;
    for (int n = 0; n < 100; ++n) {
        const Vec3 w = rng.unit_vec3();
        const Mat3c sw = sigma_dot(w);
        const Mat3c s[3] = {cplx{w.x, 0} * sw, cplx{w.y, 0} * sw, cplx{w.z, 0} * sw};
        for (int a = 0; a < 3; ++a)
            comm = std::max(comm, max_abs(commutator(s[a], s[(a + 1) % 3])));
    }
    const double inv_tol = 1e-12 * opt.tol_scale;
    const double comm_tol = 1e-14 * opt.tol_scale;
    r.pass = r.worst <= r.tol && invariance <= inv_tol && comm <= comm_tol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "sv-invariance %.3e, commutators %.3e", invariance, comm);
    r.note = buf;
    return r;
}

inline CheckResult check_pauli_su2(const Options& opt) {
    CheckResult r{"pauli-su2", 9, false, 0.0, 1e-15 * opt.tol_scale, "all (i,j) pairs"};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Mat2c expected;
            for (int k = 1; k <= 3; ++k) {
                const int eps = (i == j || j == k || i == k) ? 0 : (((j - i + 3) % 3 == 1) ? 1 : -1);
                if (eps != 0) expected = expected + cplx{0.0, 2.0 * eps} * pauli(k);
            }
            r.worst = std::max(r.worst, max_abs_diff(commutator(pauli(i), pauli(j)), expected));
        }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_optical_rotation(const Options& opt) {
    CheckResult r{"optical-rotation", 10, false, 0.0, 1e-12 * opt.tol_scale,
                  "6 eigenstates x 10^3 SV changes"};
    Rng rng = detail::rng_for(opt, 10);
    double scalar_resid = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const StrattonVector sv{rng.unit_vec3()};
        const StrattonVector svp{rng.unit_vec3()};
        Vec3 k;
        for (;;) {
            k = rng.wavevector_admissible(sv);
            if (norm(cross(svp.vec(), k)) >= 1e-3 * norm(k)) break;
        }
        const double phi = frame_angle(sv, svp, k);
        for (int axis = 1; axis <= 3; ++axis)
            for (int val = -1; val <= 1; val += 2) {
                const PlaneWaveState state{k, sv, eigenstate(axis, val)};
                const PolarizationVector a = polarization_vector(state);
                const PolarizationVector a_sv = polarization_vector(rotate_sv(state, svp));
                const PolarizationVector a_rot = optical_rotation(a, phi);
                r.worst = std::max(r.worst, norm(a_sv.a - a_rot.a));
                if (axis == 3) {
                    const cplx ph = std::polar(1.0, -static_cast<double>(val) * phi);
                    scalar_resid = std::max(scalar_resid, norm(a_sv.a - ph * a.a));
                }
            }
    }
    r.worst = std::max(r.worst, scalar_resid);
    r.pass = r.worst <= r.tol;
    char buf[64];
    std::snprintf(buf, sizeof buf, "helicity scalar residual %.3e", scalar_resid);
    r.note = buf;
    return r;
}

inline CheckResult check_sv_loop_phase(const Options& opt) {
    CheckResult r{"sv-loop-phase", 11, false, 0.0, 1e-9, "quarter-turn loop and half loop"};
    Rng rng = detail::rng_for(opt, 11);
    double total_resid = 0.0;
    double factor_resid = 0.0;
    for (int n = 0; n < 8; ++n) {
        const Vec3 k0 = (n == 0) ? Vec3{1, 0, 0} : rng.wavevector_admissible(StrattonVector{Vec3{0, 0, 1}});
        Vec3 i0 = (n == 0) ? Vec3{0, 0, 1} : rng.unit_vec3();
        while (norm(cross(i0, k0)) < 0.3 * norm(k0)) i0 = rng.unit_vec3();
        const Vec3 khat = k0 / norm(k0);
        for (int sigma3 = -1; sigma3 <= 1; sigma3 += 2) {
            // one full turn of the SV about k0 in four quarter turns
            std::vector<StrattonVector> loop;
            for (int j = 0; j <= 4; ++j)
                loop.emplace_back(rotation_about(khat, -0.5 * M_PI * j) * i0);
            const PlaneWaveState state{k0, loop.front(), eigenstate(3, sigma3)};
            const PhaseLog log = sv_loop_phase(state, loop, sigma3);
            total_resid = std::max(total_resid, std::abs(std::abs(log.total) - 2.0 * M_PI));
            factor_resid = std::max(factor_resid, std::abs(log.factor - cplx{1.0, 0.0}));
            // antipodal half loop: factor -1 regardless of sigma3
            const PhaseLog half = sv_loop_phase(state, {loop.front(), -loop.front()}, sigma3);
            factor_resid = std::max(factor_resid, std::abs(half.factor - cplx{-1.0, 0.0}));
        }
    }
    const double factor_tol = 1e-12 * opt.tol_scale;
    r.worst = total_resid;
    r.tol = 1e-9 * opt.tol_scale;
    r.pass = total_resid <= r.tol && factor_resid <= factor_tol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "factor residual %.3e (tol %.1e)", factor_resid, factor_tol);
    r.note = buf;
    return r;
}

inline CheckResult check_momentum_loop_phase(const Options& opt) {
    CheckResult r{"momentum-loop-phase", 12, false, 0.0, 5e-3 * opt.tol_scale,
                  "octant geodesic loop, N=2000"};
    const StrattonVector sv{Vec3{-1, -1, -1}};
    const double t_plus = detail::octant_pancharatnam_total(2000, +1, sv);
    const double t_minus = detail::octant_pancharatnam_total(2000, -1, sv);
    const double t_plus_fine = detail::octant_pancharatnam_total(4000, +1, sv);
    r.worst = std::max(std::abs(std::abs(t_plus) - 0.5 * M_PI),
                       std::abs(std::abs(t_minus) - 0.5 * M_PI));
    const double drift = std::abs(t_plus_fine - t_plus);
    const double drift_tol = 1e-4 * opt.tol_scale;
    const bool sign_flip = (t_plus > 0.0) != (t_minus > 0.0);
    r.pass = r.worst <= r.tol && drift <= drift_tol && sign_flip;
    char buf[128];
    std::snprintf(buf, sizeof buf, "total(+1) %.6f, Richardson drift %.3e (tol %.1e), sign %s",
                  t_plus, drift, drift_tol, sign_flip ? "flips" : "does not flip");
    r.note = buf;
    return r;
}

inline CheckResult check_field_synthesis(const Options& opt) {
    CheckResult r{"field-synthesis", 13, false, 0.0, 1e-12 * opt.tol_scale,
                  "32-node grid x 100 points"};
    Rng rng = detail::rng_for(opt, 13);
    const MomentumGrid grid = make_sphere_shell_grid(4, 8, 1.0);
    const VectorWavefunction f = detail::random_transverse(rng, grid);
    std::vector<SpaceTimePoint> points;
    for (int n = 0; n < 100; ++n)
        points.push_back({{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)},
                          rng.uniform(0, 2)});
    const PhysicalConstants pc{};
    const auto samples = synthesize_field(f, grid, points, pc);

    // realness + agreement with an independent fold of the same integral
    double realness = 0.0;
    double agreement = 0.0;
    double field_scale = 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) {
        Vec3c sum{};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double omega = pc.c * norm(grid[i].k);
            const double phase = dot(grid[i].k, points[p].x) - omega * points[p].t;
            sum = sum + grid[i].weight * std::sqrt(pc.hbar * omega / (2.0 * pc.epsilon0)) *
                            (std::polar(1.0, phase) * f[i]);
        }
        const Vec3c full = svpol::detail::kTwoPiPowMinus32 * (sum + svpol::conj(sum));
        realness = std::max(realness, norm(imag(full)));
        agreement = std::max(agreement, norm(real(full) - samples[p].E));
        field_scale = std::max(field_scale, norm(samples[p].E));
    }
    const double div = divergence_residual(f, grid, points, pc);
    r.worst = std::max({realness / std::max(field_scale, 1e-300),
                        agreement / std::max(field_scale, 1e-300), div});
    r.pass = r.worst <= r.tol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "divergence residual %.3e", div);
    r.note = buf;
    return r;
}

// --- supplementary property checks ------------------------------------------

inline CheckResult check_sv_change_involution(const Options& opt) {
    CheckResult r{"sv-change-involution", 0, false, 0.0, 1e-12 * opt.tol_scale,
                  "change_sv there and back"};
    Rng rng = detail::rng_for(opt, 20);
    const MomentumGrid grid = make_sphere_shell_grid(8, 8, 1.0);
    double density = 0.0;
    for (int n = 0; n < 50; ++n) {
        const StrattonVector sv = detail::admissible_sv(rng, grid);
        const StrattonVector svp = detail::admissible_sv(rng, grid);
        const JonesWavefunction ft = to_jones(detail::random_transverse(rng, grid), sv, grid);
        const JonesWavefunction ftp = change_sv(ft, svp, grid);
        const JonesWavefunction back = change_sv(ftp, sv, grid);
        const VectorWavefunction fv = to_vector(ft, grid);
        const VectorWavefunction fvp = to_vector(ftp, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            r.worst = std::max(r.worst, max_abs_diff(back[i], ft[i]));
            // the represented vector wavefunction is unchanged
            r.worst = std::max(r.worst, norm(fvp[i] - fv[i]));
            density = std::max(density, std::abs(norm_sq(ftp[i]) - norm_sq(ft[i])));
        }
    }
    const double density_tol = 1e-13 * opt.tol_scale;
    r.pass = r.worst <= r.tol && density <= density_tol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "per-node density drift %.3e (tol %.1e)", density, density_tol);
    r.note = buf;
    return r;
}

inline CheckResult check_norm_equality(const Options& opt) {
    CheckResult r{"norm-equality", 0, false, 0.0, 1e-12 * opt.tol_scale,
                  "norm equal across representations"};
    Rng rng = detail::rng_for(opt, 21);
    const MomentumGrid grid = make_sphere_shell_grid(8, 8, 1.0);
    for (int n = 0; n < 100; ++n) {
        const StrattonVector sv = detail::admissible_sv(rng, grid);
        const VectorWavefunction f = detail::random_transverse(rng, grid);
        const double nv = norm_squared(f, grid);
        const double nj = norm_squared(to_jones(f, sv, grid), grid);
        r.worst = std::max(r.worst, std::abs(nv - nj) / nv);
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_helicity_bound(const Options& opt) {
    CheckResult r{"helicity-bound", 0, false, 0.0, 1e-14 * opt.tol_scale,
                  "|helicity density| <= probability density"};
    Rng rng = detail::rng_for(opt, 22);
    const MomentumGrid grid = make_sphere_shell_grid(4, 8, 1.0);
    for (int n = 0; n < 200; ++n) {
        std::vector<Vec2c> samples(grid.size());
        for (auto& s : samples) s = rng.gauss_vec2c();
        const JonesWavefunction ft{std::move(samples), StrattonVector{Vec3{0, 0, 1}}};
        const auto h = helicity_density(ft);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double excess = std::abs(h[i]) - norm_sq(ft[i]);
            r.worst = std::max(r.worst, excess / std::max(norm_sq(ft[i]), 1e-300));
        }
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_frame_scale_invariance(const Options& opt) {
    CheckResult r{"frame-scale-invariance", 0, false, 0.0, 1e-12 * opt.tol_scale,
                  "build_frame(I, lk) = build_frame(I, k)"};
    Rng rng = detail::rng_for(opt, 23);
    for (int n = 0; n < 1000; ++n) {
        const StrattonVector sv{rng.unit_vec3()};
        const Vec3 k = rng.wavevector_admissible(sv);
        const double lambda = std::exp(rng.uniform(-6.0, 6.0));
        const LocalFrame a = build_frame(sv, k);
        const LocalFrame b = build_frame(sv, lambda * k);
        r.worst = std::max({r.worst, norm(a.u - b.u), norm(a.v - b.v), norm(a.w - b.w)});
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_rotation_composition(const Options& opt) {
    CheckResult r{"rotation-composition", 0, false, 0.0, 1e-12 * opt.tol_scale,
                  "group law, orthogonality, unit determinant"};
    Rng rng = detail::rng_for(opt, 24);
    for (int n = 0; n < 1000; ++n) {
        const Vec3 w = rng.unit_vec3();
        const double p1 = rng.uniform(-M_PI, M_PI);
        const double p2 = rng.uniform(-M_PI, M_PI);
        const Mat3 lhs = rotation_about(w, p1) * rotation_about(w, p2);
        const Mat3 rhs = rotation_about(w, p1 + p2);
        r.worst = std::max(r.worst, max_abs_diff(lhs, rhs));
        const Mat3 rot = rotation_about(w, p1);
        r.worst = std::max(r.worst, max_abs_diff(transpose(rot) * rot, Mat3::identity()));
        r.worst = std::max(r.worst, std::abs(det(rot) - 1.0));
        const Mat2c h = helicity_phase_matrix(p1);
        r.worst = std::max(r.worst, max_abs_diff(adjoint(h) * h, Mat2c::identity()));
    }
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_synthesis_linearity(const Options& opt) {
    CheckResult r{"synthesis-linearity", 0, false, 0.0, 1e-12 * opt.tol_scale,
                  "E(f1 + f2) = E(f1) + E(f2)"};
    Rng rng = detail::rng_for(opt, 25);
    const MomentumGrid grid = make_sphere_shell_grid(4, 8, 1.0);
    const VectorWavefunction f1 = detail::random_transverse(rng, grid);
    const VectorWavefunction f2 = detail::random_transverse(rng, grid);
    std::vector<Vec3c> sum_samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) sum_samples[i] = f1[i] + f2[i];
    const VectorWavefunction fsum{std::move(sum_samples)};
    std::vector<SpaceTimePoint> points;
    for (int n = 0; n < 30; ++n)
        points.push_back({{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)},
                          rng.uniform(0, 2)});
    const auto e1 = synthesize_field(f1, grid, points);
    const auto e2 = synthesize_field(f2, grid, points);
    const auto es = synthesize_field(fsum, grid, points);
    double scale = 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) scale = std::max(scale, norm(es[p].E));
    for (std::size_t p = 0; p < points.size(); ++p)
        r.worst = std::max(r.worst, norm(es[p].E - (e1[p].E + e2[p].E)) / scale);
    r.pass = r.worst <= r.tol;
    return r;
}

inline CheckResult check_transversality_guard(const Options& opt) {
    CheckResult r{"transversality-guard", 0, false, 0.0, 0.0, "longitudinal inputs are rejected"};
    const MomentumGrid grid = make_sphere_shell_grid(2, 4, 1.0);
    std::vector<Vec3c> longitudinal(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        longitudinal[i] = Vec3c{grid[i].k / norm(grid[i].k)};
    const VectorWavefunction f{std::move(longitudinal)};
    bool jones_rejects = false, spin_rejects = false, synth_rejects = false, frame_rejects = false;
    try {
        to_jones(f, StrattonVector{Vec3{0, 0, 1}}, grid);
    } catch (const NotTransverse&) {
        jones_rejects = true;
    }
    try {
        spin_total_lab(f, grid);
    } catch (const NotTransverse&) {
        spin_rejects = true;
    }
    try {
        synthesize_field(f, grid, {{Vec3{0, 0, 0}, 0.0}});
    } catch (const NotTransverse&) {
        synth_rejects = true;
    }
    try {
        build_frame(StrattonVector{Vec3{0, 0, 1}}, Vec3{0, 0, 3});
    } catch (const DegenerateFrame&) {
        frame_rejects = true;
    }
    (void)opt;
    r.pass = jones_rejects && spin_rejects && synth_rejects && frame_rejects;
    r.worst = r.pass ? 0.0 : 1.0;
    return r;
}

inline CheckResult check_eigenstate_property(const Options& opt) {
    CheckResult r{"eigenstate-property", 0, false, 0.0, 1e-15 * opt.tol_scale,
                  "sigma_i e = s e for all six"};
    for (int axis = 1; axis <= 3; ++axis)
        for (int val = -1; val <= 1; val += 2) {
            const Vec2c e = eigenstate(axis, val);
            const Vec2c lhs = pauli(axis) * e;
            r.worst = std::max(r.worst, max_abs_diff(lhs, static_cast<double>(val) * e));
            r.worst = std::max(r.worst, std::abs(norm_sq(e) - 1.0));
        }
    r.pass = r.worst <= r.tol;
    return r;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_battery(const Options& opt = {}) {
    std::vector<CheckResult> results;
    results.push_back(check_quasi_unitarity(opt));
    results.push_back(check_triad_closure(opt));
    results.push_back(check_jones_roundtrip(opt));
    results.push_back(check_frame_intertwining(opt));
    results.push_back(check_stokes_rotation_law(opt));
    results.push_back(check_lab_stokes_embedding(opt));
    results.push_back(check_intrinsic_constancy(opt));
    results.push_back(check_spin_equivalence(opt));
    results.push_back(check_pauli_su2(opt));
    results.push_back(check_optical_rotation(opt));
    results.push_back(check_sv_loop_phase(opt));
    results.push_back(check_momentum_loop_phase(opt));
    results.push_back(check_field_synthesis(opt));
    results.push_back(check_sv_change_involution(opt));
    results.push_back(check_norm_equality(opt));
    results.push_back(check_helicity_bound(opt));
    results.push_back(check_frame_scale_invariance(opt));
    results.push_back(check_rotation_composition(opt));
    results.push_back(check_synthesis_linearity(opt));
    results.push_back(check_transversality_guard(opt));
    results.push_back(check_eigenstate_property(opt));
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

inline std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    char buf[256];
    for (const auto& r : results) {
        std::snprintf(buf, sizeof buf, "%-4s %-24s worst %.3e  tol %.1e  %s\n",
                      r.pass ? "PASS" : "FAIL", r.id.c_str(), r.worst, r.tol, r.note.c_str());
        out += buf;
    }
    return out;
}

}  // namespace svpol::selftest
