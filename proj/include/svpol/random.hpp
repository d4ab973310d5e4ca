#pragma once
// Seeded random generation for the self-check battery and tests. Draws are
// derived from raw mt19937_64 output rather than std::uniform_real_distribution
// / std::normal_distribution, whose sequences are implementation-defined; this
// keeps seeded runs reproducible across standard libraries.

#include <cmath>
#include <cstdint>
#include <random>

#include "svpol/frames.hpp"
#include "svpol/linalg.hpp"

namespace svpol {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    cplx gauss_cplx() { return {gauss(), gauss()}; }

    Vec3 gauss_vec3() { return {gauss(), gauss(), gauss()}; }

    Vec3 unit_vec3() {
        Vec3 v = gauss_vec3();
        while (norm(v) < 1e-6) v = gauss_vec3();
        return normalized(v);
    }

    Vec3c gauss_vec3c() { return {gauss_cplx(), gauss_cplx(), gauss_cplx()}; }

    Vec2c gauss_vec2c() { return {gauss_cplx(), gauss_cplx()}; }

    // random unit two-component amplitude
    Vec2c unit_vec2c() {
        Vec2c a = gauss_vec2c();
        while (norm(a) < 1e-6) a = gauss_vec2c();
        return a / norm(a);
    }

    // a random wavevector with norm in [0.5, 2], direction keeping a healthy
    // angle to the given Stratton vector so frames are well-conditioned
    Vec3 wavevector_admissible(const StrattonVector& sv, double min_sine = 1e-3) {
        for (;;) {
            const Vec3 k = uniform(0.5, 2.0) * unit_vec3();
            if (norm(cross(sv.vec(), k)) >= min_sine * norm(k)) return k;
        }
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace svpol
