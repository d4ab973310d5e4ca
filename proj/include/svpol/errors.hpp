#pragma once
// Error types raised by the library. Each maps to a stable CLI exit code
// (see tools/): parse/format problems -> 1, DegenerateFrame -> 2, physical
// constraint violations -> 3, self-check failures -> 4.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace svpol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Stratton vector is (anti)parallel to the momentum: the transverse axes
// are undefined there. Carries the offending grid node index when raised
// from a per-node operation.
struct DegenerateFrame : Error {
    explicit DegenerateFrame(std::optional<std::size_t> node_index = std::nullopt)
        : Error(node_index ? "degenerate frame: Stratton vector parallel to momentum at node " +
                                 std::to_string(*node_index)
                           : "degenerate frame: Stratton vector parallel to momentum"),
          node(node_index) {}

    std::optional<std::size_t> node;
};

struct NotTransverse : Error {
    explicit NotTransverse(double residual_)
        : Error("wavefunction is not transverse (residual " + std::to_string(residual_) + ")"),
          residual(residual_) {}

    double residual;
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& what_) : Error("not normalized: " + what_) {}
};

struct ZeroNorm : Error {
    ZeroNorm() : Error("state has zero norm") {}
};

// Consecutive states in a phase loop are orthogonal; the relative phase of
// the step is undefined.
struct OrthogonalStep : Error {
    explicit OrthogonalStep(std::size_t step_)
        : Error("orthogonal step in phase loop at step " + std::to_string(step_)), step(step_) {}

    std::size_t step;
};

struct AllNodesUndefined : Error {
    AllNodesUndefined() : Error("Stokes field has no defined node") {}
};

struct SizeMismatch : Error {
    SizeMismatch(std::size_t got, std::size_t expected)
        : Error("sample/grid length mismatch: " + std::to_string(got) + " vs " +
                std::to_string(expected)) {}
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace svpol
