#include "chebrec/random.hpp"

#include <cmath>
#include <numbers>

namespace chebrec {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t state = master;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ (a * 0xD1B54A32D192ED03ULL);
    mixed = splitmix64(state);
    state = mixed ^ (b * 0xABC98388FB8FAC03ULL);
    return splitmix64(state);
}

double NormalSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalSource::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace chebrec
