#pragma once

#include <cstdint>

#include "latentshield/dataset.hpp"

namespace latentshield {

// Bundled stand-in corpus: procedurally rendered 28x28 digit glyphs with
// per-sample affine warps, stroke jitter and pixel noise. Deterministic given
// (seed, index), so a corpus of any size is prefix-stable. Used for demos and
// tests when no real IDX dataset is configured.
struct DigitStyle {
    double distortion = 1.0;   // scales geometric jitter
    double pixel_noise = 0.06; // stddev of additive Gaussian pixel noise
};

LabeledDataset synth_digits(std::size_t count, std::uint64_t seed,
                            const DigitStyle& style = {});

}  // namespace latentshield
