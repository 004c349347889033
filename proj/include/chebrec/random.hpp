#pragma once

#include <cstdint>
#include <random>

namespace chebrec {

/// One splitmix64 step: advances `state` and returns the mixed output.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for stream (a, b) under a master seed, e.g. (delta index, seed index).
/// Distinct streams get decorrelated seeds independent of scheduling order.
[[nodiscard]] std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) noexcept;

/// Platform-independent normal variates: mt19937_64 (its output sequence is
/// fixed by the standard), 53-bit uniforms, and Box-Muller. Each pair of
/// uniforms (u1, u2) yields cos-branch then sin-branch variates, in that order.
class NormalSource {
public:
    explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    [[nodiscard]] double uniform();
    [[nodiscard]] double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace chebrec
