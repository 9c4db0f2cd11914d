#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latentshield/matrix.hpp"

namespace latentshield {

// Labeled image set: one image per row, pixels in [0,1].
struct LabeledDataset {
    Matrix images;            // N x (H*W)
    std::vector<int> labels;  // N
    std::size_t height = 0;
    std::size_t width = 0;
    std::string name;

    std::size_t size() const { return images.rows; }
};

// IDX readers/writers (MNIST layout, big-endian regardless of host).
// Image files carry magic 0x00000803 and dims (N, H, W); label files carry
// 0x00000801 and (N). Malformed input raises std::runtime_error naming the
// offending byte offset.
Matrix read_idx_images(const std::string& path, std::size_t* height = nullptr,
                       std::size_t* width = nullptr);
std::vector<int> read_idx_labels(const std::string& path);

// Pixels are quantized to 0..255 with round-half-even before writing.
void write_idx_images(const Matrix& images, std::size_t height, std::size_t width,
                      const std::string& path);
void write_idx_labels(const std::vector<int>& labels, const std::string& path);

// Round-half-even quantization of a [0,1] pixel to a byte.
std::uint8_t quantize_pixel(double v);

LabeledDataset load_dataset(const std::string& images_path, const std::string& labels_path,
                            const std::string& name);

// First n samples (or all, if n == 0 or n >= N).
LabeledDataset dataset_head(const LabeledDataset& d, std::size_t n);

// Row-subset by index list.
LabeledDataset dataset_subset(const LabeledDataset& d, const std::vector<std::size_t>& idx);

}  // namespace latentshield
