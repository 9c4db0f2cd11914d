#pragma once

#include <cstdint>
#include <vector>

namespace latentshield {

// Deterministic seeded random stream (PCG32 core). A (seed, stream_id) pair
// plus the call sequence fully determines every output, and distinct
// stream_ids select statistically independent sequences. Streams are
// single-owner: parallel work derives child streams instead of sharing one.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform draw strictly inside (0,1); endpoints are rejected so inverse
    // CDFs stay finite.
    double uniform();

    // n i.i.d. standard normal draws via Box-Muller. Consumes uniforms in
    // pairs, so each call advances the stream by 2*ceil(n/2) uniforms.
    std::vector<double> gaussian(std::size_t n);

    // Unbiased integer in [0, bound).
    std::size_t uniform_index(std::size_t bound);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // Independent stream derived from the same seed.
    RngStream child(std::uint64_t substream) const;

private:
    std::uint64_t state_;
    std::uint64_t inc_;
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

// Stable stream-id derivation for index-keyed parallel work.
std::uint64_t derive_stream_id(std::uint64_t base, std::uint64_t purpose, std::uint64_t index);

}  // namespace latentshield
