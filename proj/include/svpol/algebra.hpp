#pragma once
// Pauli matrices, the spin-1 generators Sigma_k with (Sigma_k)_ij = -i e_ijk,
// and the two rotation exponentials the formalism uses:
//
//   exp[-i (Sigma . w) phi]  -- a real SO(3) rotation by +phi about w,
//                               evaluated in closed form (Rodrigues);
//   exp(-i sigma_3 phi)      -- the diagonal U(2) helicity phase.
//
// No series summation anywhere; both exponentials have exact closed forms at
// these dimensions.

#include <cmath>
#include <stdexcept>

#include "svpol/linalg.hpp"

namespace svpol {

// sigma_i, i in {1,2,3}
inline Mat2c pauli(int i) {
    Mat2c s;
    switch (i) {
        case 1:
            s(0, 1) = 1.0;
            s(1, 0) = 1.0;
            return s;
        case 2:
            s(0, 1) = cplx{0.0, -1.0};
            s(1, 0) = cplx{0.0, 1.0};
            return s;
        case 3:
            s(0, 0) = 1.0;
            s(1, 1) = -1.0;
            return s;
        default:
            throw std::out_of_range("pauli: index must be 1, 2 or 3");
    }
}

// (Sigma_k)_ij = -i e_ijk
inline Mat3c sigma(int k) {
    if (k < 1 || k > 3) throw std::out_of_range("sigma: index must be 1, 2 or 3");
    Mat3c s;
    const auto eps = [](int i, int j, int l) -> double {
        if (i == j || j == l || i == l) return 0.0;
        return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;  // cyclic (i,j,l) of (0,1,2)
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s(i, j) = cplx{0.0, -eps(i, j, k - 1)};
    return s;
}

// Sigma . w contracted with a real direction
inline Mat3c sigma_dot(const Vec3& w) {
    Mat3c s;
    for (int k = 0; k < 3; ++k) {
        const Mat3c sk = sigma(k + 1);
        const double wk = (k == 0) ? w.x : (k == 1) ? w.y : w.z;
        s = s + wk * sk;
    }
    return s;
}

// exp[-i (Sigma . w) phi] via the Rodrigues form
//   R v = v cos(phi) + (w x v) sin(phi) + w (w . v) (1 - cos(phi)).
// Requires a unit axis.
inline Mat3 rotation_about(const Vec3& w, double phi) {
    if (std::abs(norm(w) - 1.0) > 1e-12)
        throw std::invalid_argument("rotation_about: axis must be a unit vector");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double t = 1.0 - c;
    Mat3 r;
    r(0, 0) = c + w.x * w.x * t;
    r(0, 1) = w.x * w.y * t - w.z * s;
    r(0, 2) = w.x * w.z * t + w.y * s;
    r(1, 0) = w.y * w.x * t + w.z * s;
    r(1, 1) = c + w.y * w.y * t;
    r(1, 2) = w.y * w.z * t - w.x * s;
    r(2, 0) = w.z * w.x * t - w.y * s;
    r(2, 1) = w.z * w.y * t + w.x * s;
    r(2, 2) = c + w.z * w.z * t;
    return r;
}

// exp(-i sigma_3 phi) = diag(e^{-i phi}, e^{+i phi})
inline Mat2c helicity_phase_matrix(double phi) {
    return Mat2c::diag(std::polar(1.0, -phi), std::polar(1.0, phi));
}

inline Mat2c commutator(const Mat2c& a, const Mat2c& b) { return a * b - b * a; }
inline Mat3c commutator(const Mat3c& a, const Mat3c& b) { return a * b - b * a; }

}  // namespace svpol
