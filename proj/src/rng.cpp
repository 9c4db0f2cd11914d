#include "latentshield/rng.hpp"

#include <cmath>

namespace latentshield {

namespace {

// splitmix64 finalizer; used for seeding and stream-id mixing.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    inc_ = (mix64(stream_id) << 1u) | 1u;
    state_ = 0;
    next_u32();
    state_ += mix64(seed ^ 0xDA3E39CB94B95BDBULL);
    next_u32();
}

std::uint32_t RngStream::next_u32() {
    std::uint64_t old = state_;
    state_ = old * kPcgMult + inc_;
    std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RngStream::next_u64() {
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
}

double RngStream::uniform() {
    for (;;) {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;  // u < 1 by construction
    }
}

std::vector<double> RngStream::gaussian(std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    while (out.size() < n) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * u2;
        out.push_back(r * std::cos(th));
        if (out.size() < n) out.push_back(r * std::sin(th));
    }
    return out;
}

std::size_t RngStream::uniform_index(std::size_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t b = bound;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    for (;;) {
        std::uint64_t x = next_u64();
        if (x < limit) return static_cast<std::size_t>(x % b);
    }
}

RngStream RngStream::child(std::uint64_t substream) const {
    return RngStream(seed_, mix64(stream_id_ ^ mix64(substream)));
}

std::uint64_t derive_stream_id(std::uint64_t base, std::uint64_t purpose, std::uint64_t index) {
    return mix64(base ^ mix64(purpose ^ mix64(index)));
}

}  // namespace latentshield
