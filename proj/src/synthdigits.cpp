#include "latentshield/synthdigits.hpp"

#include <algorithm>
#include <cmath>

#include "latentshield/rng.hpp"

namespace latentshield {

namespace {

constexpr std::size_t kSide = 28;

struct Pt {
    double x, y;
};

using Stroke = std::vector<Pt>;

void add_arc(std::vector<Stroke>& strokes, double cx, double cy, double rx, double ry,
             double deg0, double deg1, int steps = 20) {
    Stroke s;
    for (int i = 0; i <= steps; ++i) {
        const double t = (deg0 + (deg1 - deg0) * i / steps) * M_PI / 180.0;
        s.push_back({cx + rx * std::cos(t), cy + ry * std::sin(t)});
    }
    strokes.push_back(std::move(s));
}

void add_line(std::vector<Stroke>& strokes, Pt a, Pt b) {
    strokes.push_back({a, b});
}

// Glyph skeletons in a unit box, y growing downward.
std::vector<Stroke> digit_skeleton(int digit) {
    std::vector<Stroke> s;
    switch (digit) {
        case 0:
            add_arc(s, 0.50, 0.50, 0.26, 0.40, 0, 360, 28);
            break;
        case 1:
            s.push_back({{0.36, 0.26}, {0.55, 0.10}, {0.55, 0.90}});
            break;
        case 2:
            add_arc(s, 0.50, 0.32, 0.26, 0.23, 180, 360);
            add_line(s, {0.76, 0.32}, {0.24, 0.90});
            add_line(s, {0.24, 0.90}, {0.78, 0.90});
            break;
        case 3:
            add_arc(s, 0.46, 0.30, 0.25, 0.21, 210, 450);
            add_arc(s, 0.46, 0.69, 0.27, 0.21, 270, 500);
            break;
        case 4:
            add_line(s, {0.64, 0.10}, {0.22, 0.62});
            add_line(s, {0.22, 0.62}, {0.82, 0.62});
            add_line(s, {0.64, 0.10}, {0.64, 0.92});
            break;
        case 5:
            add_line(s, {0.74, 0.10}, {0.32, 0.10});
            add_line(s, {0.32, 0.10}, {0.28, 0.46});
            add_arc(s, 0.47, 0.66, 0.26, 0.23, 215, 495);
            break;
        case 6:
            add_arc(s, 0.58, 0.40, 0.30, 0.34, 230, 310);
            add_arc(s, 0.48, 0.66, 0.24, 0.24, 0, 360, 24);
            break;
        case 7:
            add_line(s, {0.22, 0.12}, {0.78, 0.12});
            add_line(s, {0.78, 0.12}, {0.40, 0.90});
            break;
        case 8:
            add_arc(s, 0.50, 0.30, 0.21, 0.20, 0, 360, 24);
            add_arc(s, 0.50, 0.70, 0.25, 0.22, 0, 360, 24);
            break;
        case 9:
            add_arc(s, 0.52, 0.34, 0.24, 0.24, 0, 360, 24);
            add_arc(s, 0.54, 0.45, 0.26, 0.42, 10, 120);
            break;
        default:
            break;
    }
    return s;
}

double segment_distance(double px, double py, Pt a, Pt b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((px - a.x) * dx + (py - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double qx = a.x + t * dx - px, qy = a.y + t * dy - py;
    return std::sqrt(qx * qx + qy * qy);
}

}  // namespace

LabeledDataset synth_digits(std::size_t count, std::uint64_t seed, const DigitStyle& style) {
    LabeledDataset out;
    out.images = Matrix(count, kSide * kSide);
    out.labels.resize(count);
    out.height = kSide;
    out.width = kSide;
    out.name = "synthdigits";

    for (std::size_t idx = 0; idx < count; ++idx) {
        const int digit = static_cast<int>(idx % 10);
        out.labels[idx] = digit;
        RngStream rng(seed, derive_stream_id(0x5D1917u, 7, idx));

        const double g = style.distortion;
        const double rot = (rng.uniform() - 0.5) * 0.42 * g;
        const double sx = 1.0 + (rng.uniform() - 0.5) * 0.32 * g;
        const double sy = 1.0 + (rng.uniform() - 0.5) * 0.32 * g;
        const double shear = (rng.uniform() - 0.5) * 0.36 * g;
        const double tx = (rng.uniform() - 0.5) * 0.13 * g;
        const double ty = (rng.uniform() - 0.5) * 0.13 * g;
        const double thick = 0.050 + rng.uniform() * 0.035;
        const double ink = 0.82 + rng.uniform() * 0.18;
        const double wa = rng.uniform() * 0.022 * g;
        const double wf = 4.0 + rng.uniform() * 5.0;
        const double wp = rng.uniform() * 2.0 * M_PI;

        const double cr = std::cos(rot), sr = std::sin(rot);
        auto warp = [&](Pt p) -> Pt {
            double x = p.x - 0.5, y = p.y - 0.5;
            x += wa * std::sin(wf * y + wp);
            x *= sx;
            y *= sy;
            x += shear * y;
            const double xr = cr * x - sr * y;
            const double yr = sr * x + cr * y;
            return {xr + 0.5 + tx, yr + 0.5 + ty};
        };

        std::vector<Stroke> strokes = digit_skeleton(digit);
        for (Stroke& st : strokes)
            for (Pt& p : st) p = warp(p);

        double* img = out.images.row(idx);
        const double aa = 0.030;  // antialias band, in unit coords
        for (std::size_t py = 0; py < kSide; ++py) {
            for (std::size_t px = 0; px < kSide; ++px) {
                const double ux = (static_cast<double>(px) + 0.5) / kSide;
                const double uy = (static_cast<double>(py) + 0.5) / kSide;
                double dist = 1e9;
                for (const Stroke& st : strokes)
                    for (std::size_t i = 0; i + 1 < st.size(); ++i)
                        dist = std::min(dist, segment_distance(ux, uy, st[i], st[i + 1]));
                const double v = std::clamp((thick - dist) / aa + 0.5, 0.0, 1.0);
                img[py * kSide + px] = ink * v;
            }
        }

        if (style.pixel_noise > 0.0) {
            std::vector<double> noise = rng.gaussian(kSide * kSide);
            for (std::size_t i = 0; i < kSide * kSide; ++i)
                img[i] = std::clamp(img[i] + style.pixel_noise * noise[i], 0.0, 1.0);
        }
    }
    return out;
}

}  // namespace latentshield
