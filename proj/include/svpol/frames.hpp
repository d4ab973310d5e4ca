#pragma once
// Stratton-vector local reference frames.
//
// A constant real unit vector I (the Stratton vector) fixes, at every
// momentum k, a right-handed orthonormal triad
//
//   v = (I x k)/|I x k|,   u = v x k/|k|,   w = k/|k|,
//
// and with it the 3x2 quasi-unitary matrix of circular columns
// c+- = (u +- i v)/sqrt(2). The construction is singular when I is parallel
// or anti-parallel to k; that configuration raises DegenerateFrame rather
// than returning an ill-conditioned triad.

#include <cmath>
#include <stdexcept>

#include "svpol/errors.hpp"
#include "svpol/linalg.hpp"

namespace svpol {

inline constexpr double kParallelEps = 1e-9;  // degeneracy threshold on |I x k| / |k|
inline constexpr double kSqrtHalf = 0.70710678118654752440;

// A wavevector is any nonzero real 3-vector; only its direction matters to
// the frame construction.
using WaveVector = Vec3;

// Constant real unit vector fixing a local representation. Normalizes on
// construction; rejects the zero vector.
class StrattonVector {
  public:
    explicit StrattonVector(const Vec3& direction) {
        const double n = norm(direction);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("StrattonVector: direction must be nonzero and finite");
        i_ = direction / n;
    }

    const Vec3& vec() const { return i_; }

    StrattonVector operator-() const {
        StrattonVector r = *this;
        r.i_ = -r.i_;
        return r;
    }

  private:
    Vec3 i_;
};

// Right-handed orthonormal triad at one momentum, with the (I, k) that
// produced it kept as provenance.
struct LocalFrame {
    Vec3 u, v, w;
    Vec3 sv;  // the Stratton vector used
    Vec3 k;   // the momentum the frame lives at
};

// 3x2 matrix of circular columns c+ = (u + i v)/sqrt(2), c- = (u - i v)/sqrt(2).
struct QuasiUnitary {
    Vec3c c_plus, c_minus;

    // varpi applied to a two-component amplitude: c+ f+ + c- f-
    Vec3c apply(const Vec2c& f) const { return f.plus * c_plus + f.minus * c_minus; }

    // adjoint varpi^dag applied to a three-component amplitude
    Vec2c apply_adjoint(const Vec3c& f) const { return {cdot(c_plus, f), cdot(c_minus, f)}; }

    // varpi^dag varpi (identity on C^2 for a valid frame)
    Mat2c gram() const {
        Mat2c g;
        g(0, 0) = cdot(c_plus, c_plus);
        g(0, 1) = cdot(c_plus, c_minus);
        g(1, 0) = cdot(c_minus, c_plus);
        g(1, 1) = cdot(c_minus, c_minus);
        return g;
    }

    // varpi varpi^dag (projector onto the transverse plane, I3 - w w^T)
    Mat3c projector() const {
        Mat3c p;
        const Vec3c cols[2] = {c_plus, c_minus};
        for (const auto& c : cols) {
            const Vec3c cc = svpol::conj(c);
            const cplx ci[3] = {c.x, c.y, c.z};
            const cplx cj[3] = {cc.x, cc.y, cc.z};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) p(i, j) += ci[i] * cj[j];
        }
        return p;
    }
};

inline LocalFrame build_frame(const StrattonVector& sv, const WaveVector& k) {
    const double kn = norm(k);
    if (!(kn > 0.0) || !std::isfinite(kn))
        throw std::invalid_argument("build_frame: wavevector must be nonzero and finite");
    const Vec3 ixk = cross(sv.vec(), k);
    if (norm(ixk) < kParallelEps * kn) throw DegenerateFrame{};
    const Vec3 w = k / kn;
    const Vec3 v = normalized(ixk);
    const Vec3 u = cross(v, w);
    return {u, v, w, sv.vec(), k};
}

inline QuasiUnitary quasi_unitary(const LocalFrame& f) {
    const Vec3c u{f.u};
    const Vec3c v{f.v};
    return {kSqrtHalf * (u + kImag * v), kSqrtHalf * (u - kImag * v)};
}

// Rotation angle Phi of the transverse axes between the representations I and
// I' at momentum k:  u' = u cos(Phi) + v sin(Phi), v' = -u sin(Phi) + v cos(Phi).
// Branch fixed to (-pi, pi]. For anti-parallel Stratton vectors u'.v is pure
// rounding noise of either sign, which would flip the result between -pi and
// +pi; ties that close to the cut resolve to +pi, so frame_angle(I, -I, k)
// is deterministically pi.
inline double frame_angle(const StrattonVector& sv, const StrattonVector& sv_prime,
                          const WaveVector& k) {
    const LocalFrame f = build_frame(sv, k);
    const LocalFrame fp = build_frame(sv_prime, k);
    const double cos_part = dot(fp.u, f.u);
    double sin_part = dot(fp.u, f.v);
    if (cos_part < 0.0 && std::abs(sin_part) < 1e-12) sin_part = +0.0;
    return std::atan2(sin_part, cos_part);
}

}  // namespace svpol
