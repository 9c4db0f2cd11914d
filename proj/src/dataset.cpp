#include "latentshield/dataset.hpp"

#include <cfenv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace latentshield {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

[[noreturn]] void format_error(const std::string& path, std::size_t offset,
                               const std::string& what) {
    throw std::runtime_error("idx format error in '" + path + "' at byte " +
                             std::to_string(offset) + ": " + what);
}

std::uint32_t read_be32(std::ifstream& f, const std::string& path, std::size_t& offset) {
    unsigned char buf[4];
    f.read(reinterpret_cast<char*>(buf), 4);
    if (f.gcount() != 4) format_error(path, offset, "truncated header");
    offset += 4;
    return (std::uint32_t(buf[0]) << 24) | (std::uint32_t(buf[1]) << 16) |
           (std::uint32_t(buf[2]) << 8) | std::uint32_t(buf[3]);
}

void write_be32(std::ofstream& f, std::uint32_t v) {
    const unsigned char buf[4] = {static_cast<unsigned char>(v >> 24),
                                  static_cast<unsigned char>(v >> 16),
                                  static_cast<unsigned char>(v >> 8),
                                  static_cast<unsigned char>(v)};
    f.write(reinterpret_cast<const char*>(buf), 4);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
    return f;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    return f;
}

}  // namespace

Matrix read_idx_images(const std::string& path, std::size_t* height, std::size_t* width) {
    std::ifstream f = open_input(path);
    std::size_t offset = 0;
    const std::uint32_t magic = read_be32(f, path, offset);
    if (magic != kImageMagic)
        format_error(path, 0,
                     "bad image magic 0x" + std::to_string(magic) + " (expected 0x00000803)");
    const std::uint32_t n = read_be32(f, path, offset);
    const std::uint32_t h = read_be32(f, path, offset);
    const std::uint32_t w = read_be32(f, path, offset);
    if (h == 0 || w == 0) format_error(path, 8, "zero image dimensions");

    const std::size_t pixels = std::size_t(n) * h * w;
    std::vector<unsigned char> raw(pixels);
    f.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(pixels));
    if (static_cast<std::size_t>(f.gcount()) != pixels)
        format_error(path, offset + static_cast<std::size_t>(f.gcount()),
                     "truncated payload (expected " + std::to_string(pixels) + " bytes)");

    Matrix images(n, std::size_t(h) * w);
    for (std::size_t i = 0; i < pixels; ++i)
        images.data[i] = static_cast<double>(raw[i]) / 255.0;
    if (height) *height = h;
    if (width) *width = w;
    return images;
}

std::vector<int> read_idx_labels(const std::string& path) {
    std::ifstream f = open_input(path);
    std::size_t offset = 0;
    const std::uint32_t magic = read_be32(f, path, offset);
    if (magic != kLabelMagic)
        format_error(path, 0,
                     "bad label magic 0x" + std::to_string(magic) + " (expected 0x00000801)");
    const std::uint32_t n = read_be32(f, path, offset);

    std::vector<unsigned char> raw(n);
    f.read(reinterpret_cast<char*>(raw.data()), n);
    if (static_cast<std::size_t>(f.gcount()) != n)
        format_error(path, offset + static_cast<std::size_t>(f.gcount()), "truncated payload");

    return std::vector<int>(raw.begin(), raw.end());
}

std::uint8_t quantize_pixel(double v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("quantize_pixel: value outside [0,1]");
    // nearbyint under the default FE_TONEAREST mode rounds half to even.
    const double scaled = std::nearbyint(v * 255.0);
    return static_cast<std::uint8_t>(scaled);
}

void write_idx_images(const Matrix& images, std::size_t height, std::size_t width,
                      const std::string& path) {
    if (!images.empty() && images.cols != height * width)
        throw std::invalid_argument("write_idx_images: cols != height*width");
    std::ofstream f = open_output(path);
    write_be32(f, kImageMagic);
    write_be32(f, static_cast<std::uint32_t>(images.rows));
    write_be32(f, static_cast<std::uint32_t>(height));
    write_be32(f, static_cast<std::uint32_t>(width));
    std::vector<unsigned char> raw(images.data.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = quantize_pixel(images.data[i]);
    f.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

void write_idx_labels(const std::vector<int>& labels, const std::string& path) {
    std::ofstream f = open_output(path);
    write_be32(f, kLabelMagic);
    write_be32(f, static_cast<std::uint32_t>(labels.size()));
    std::vector<unsigned char> raw(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] > 255)
            throw std::invalid_argument("write_idx_labels: label " + std::to_string(labels[i]) +
                                        " does not fit in one byte");
        raw[i] = static_cast<unsigned char>(labels[i]);
    }
    f.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

LabeledDataset load_dataset(const std::string& images_path, const std::string& labels_path,
                            const std::string& name) {
    LabeledDataset d;
    d.images = read_idx_images(images_path, &d.height, &d.width);
    d.labels = read_idx_labels(labels_path);
    d.name = name;
    if (d.images.rows != d.labels.size())
        throw std::runtime_error("dataset '" + name + "': image count " +
                                 std::to_string(d.images.rows) + " != label count " +
                                 std::to_string(d.labels.size()));
    return d;
}

LabeledDataset dataset_head(const LabeledDataset& d, std::size_t n) {
    if (n == 0 || n >= d.size()) return d;
    LabeledDataset out;
    out.images = Matrix(n, d.images.cols);
    std::copy(d.images.data.begin(), d.images.data.begin() + n * d.images.cols,
              out.images.data.begin());
    out.labels.assign(d.labels.begin(), d.labels.begin() + n);
    out.height = d.height;
    out.width = d.width;
    out.name = d.name;
    return out;
}

LabeledDataset dataset_subset(const LabeledDataset& d, const std::vector<std::size_t>& idx) {
    LabeledDataset out;
    out.images = Matrix(idx.size(), d.images.cols);
    out.labels.resize(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= d.size()) throw std::out_of_range("dataset_subset: index out of range");
        std::copy(d.images.row(idx[i]), d.images.row(idx[i]) + d.images.cols,
                  out.images.row(i));
        out.labels[i] = d.labels[idx[i]];
    }
    out.height = d.height;
    out.width = d.width;
    out.name = d.name;
    return out;
}

}  // namespace latentshield
