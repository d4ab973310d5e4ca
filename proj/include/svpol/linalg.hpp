#pragma once
// Fixed-dimension real/complex vectors and matrices used throughout the
// library. Everything is a plain value type; no dynamic allocation.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace svpol {

using cplx = std::complex<double>;

inline constexpr cplx kImag{0.0, 1.0};

// ---------------------------------------------------------------------------
// real 3-vector

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// ---------------------------------------------------------------------------
// complex 3-vector

struct Vec3c {
    cplx x{}, y{}, z{};

    constexpr Vec3c() = default;
    constexpr Vec3c(cplx x_, cplx y_, cplx z_) : x(x_), y(y_), z(z_) {}
    constexpr Vec3c(const Vec3& r) : x(r.x), y(r.y), z(r.z) {}  // NOLINT: implicit widening intended
};

constexpr Vec3c operator+(const Vec3c& a, const Vec3c& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3c operator-(const Vec3c& a, const Vec3c& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3c operator-(const Vec3c& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3c operator*(const cplx& s, const Vec3c& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3c operator*(const Vec3c& a, const cplx& s) { return s * a; }
constexpr Vec3c operator*(double s, const Vec3c& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3c operator/(const Vec3c& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr Vec3c conj(const Vec3c& a) { return {std::conj(a.x), std::conj(a.y), std::conj(a.z)}; }

// Hermitian inner product; conjugates the first argument.
constexpr cplx cdot(const Vec3c& a, const Vec3c& b) {
    return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

constexpr Vec3c cross(const Vec3c& a, const Vec3c& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3c& a) { return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z)); }

constexpr Vec3 real(const Vec3c& a) { return {a.x.real(), a.y.real(), a.z.real()}; }
constexpr Vec3 imag(const Vec3c& a) { return {a.x.imag(), a.y.imag(), a.z.imag()}; }

inline double max_abs_diff(const Vec3c& a, const Vec3c& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// ---------------------------------------------------------------------------
// complex 2-vector (circular components, index 0 = plus, 1 = minus)

struct Vec2c {
    cplx plus{}, minus{};
};

constexpr Vec2c operator+(const Vec2c& a, const Vec2c& b) { return {a.plus + b.plus, a.minus + b.minus}; }
constexpr Vec2c operator-(const Vec2c& a, const Vec2c& b) { return {a.plus - b.plus, a.minus - b.minus}; }
constexpr Vec2c operator*(const cplx& s, const Vec2c& a) { return {s * a.plus, s * a.minus}; }
constexpr Vec2c operator*(double s, const Vec2c& a) { return {s * a.plus, s * a.minus}; }
constexpr Vec2c operator/(const Vec2c& a, double s) { return {a.plus / s, a.minus / s}; }

constexpr cplx cdot(const Vec2c& a, const Vec2c& b) {
    return std::conj(a.plus) * b.plus + std::conj(a.minus) * b.minus;
}

inline double norm(const Vec2c& a) { return std::sqrt(std::norm(a.plus) + std::norm(a.minus)); }

// |f+|^2 + |f-|^2, without the sqrt
constexpr double norm_sq(const Vec2c& a) { return std::norm(a.plus) + std::norm(a.minus); }

inline double max_abs_diff(const Vec2c& a, const Vec2c& b) {
    return std::max(std::abs(a.plus - b.plus), std::abs(a.minus - b.minus));
}

// ---------------------------------------------------------------------------
// 2x2 complex matrix

struct Mat2c {
    std::array<std::array<cplx, 2>, 2> m{};

    constexpr cplx& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    constexpr const cplx& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

    static constexpr Mat2c identity() {
        Mat2c r;
        r(0, 0) = 1.0;
        r(1, 1) = 1.0;
        return r;
    }

    static constexpr Mat2c diag(cplx a, cplx b) {
        Mat2c r;
        r(0, 0) = a;
        r(1, 1) = b;
        return r;
    }
};

constexpr Mat2c operator+(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

constexpr Mat2c operator-(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

constexpr Mat2c operator*(const cplx& s, const Mat2c& a) {
    Mat2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = s * a(i, j);
    return r;
}

constexpr Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

constexpr Vec2c operator*(const Mat2c& a, const Vec2c& v) {
    return {a(0, 0) * v.plus + a(0, 1) * v.minus, a(1, 0) * v.plus + a(1, 1) * v.minus};
}

constexpr Mat2c adjoint(const Mat2c& a) {
    Mat2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline double max_abs(const Mat2c& a) {
    double r = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r = std::max(r, std::abs(a(i, j)));
    return r;
}

inline double max_abs_diff(const Mat2c& a, const Mat2c& b) { return max_abs(a - b); }

// ---------------------------------------------------------------------------
// 3x3 complex matrix

struct Mat3c {
    std::array<std::array<cplx, 3>, 3> m{};

    constexpr cplx& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    constexpr const cplx& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

    static constexpr Mat3c identity() {
        Mat3c r;
        for (std::size_t i = 0; i < 3; ++i) r(i, i) = 1.0;
        return r;
    }
};

constexpr Mat3c operator+(const Mat3c& a, const Mat3c& b) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

constexpr Mat3c operator-(const Mat3c& a, const Mat3c& b) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

constexpr Mat3c operator*(const cplx& s, const Mat3c& a) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = s * a(i, j);
    return r;
}

constexpr Mat3c operator*(const Mat3c& a, const Mat3c& b) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

constexpr Vec3c operator*(const Mat3c& a, const Vec3c& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

constexpr Mat3c adjoint(const Mat3c& a) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline double max_abs(const Mat3c& a) {
    double r = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r = std::max(r, std::abs(a(i, j)));
    return r;
}

inline double max_abs_diff(const Mat3c& a, const Mat3c& b) { return max_abs(a - b); }

// ---------------------------------------------------------------------------
// 3x3 real matrix (rotations)

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    constexpr double& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    constexpr const double& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

    static constexpr Mat3 identity() {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i) r(i, i) = 1.0;
        return r;
    }
};

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

constexpr Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

// rotate a complex vector by a real matrix (acts on real and imaginary parts)
constexpr Vec3c operator*(const Mat3& a, const Vec3c& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

constexpr Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

constexpr double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

constexpr Mat3c complexified(const Mat3& a) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = a(i, j);
    return r;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
    return r;
}

}  // namespace svpol
