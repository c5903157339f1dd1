#include "oilspec/cube.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "oilspec/error.hpp"

namespace oilspec {

BandPlan::BandPlan(std::vector<double> peak_wavelengths_nm) {
    bands_.reserve(peak_wavelengths_nm.size());
    for (std::size_t i = 0; i < peak_wavelengths_nm.size(); ++i) {
        const double wl = peak_wavelengths_nm[i];
        if (!(wl > 0.0) || !std::isfinite(wl))
            throw InputError("band peak wavelengths must be positive");
        if (i > 0 && !(wl > peak_wavelengths_nm[i - 1]))
            throw InputError("band peak wavelengths must be strictly increasing");
        bands_.push_back({static_cast<int>(i), wl});
    }
    if (bands_.empty()) throw InputError("band plan needs at least one band");
}

BandPlan BandPlan::standard() {
    return BandPlan({405, 430, 500, 610, 660, 740, 850, 890, 950});
}

std::vector<double> BandPlan::wavelengths() const {
    std::vector<double> out;
    out.reserve(bands_.size());
    for (const auto& b : bands_) out.push_back(b.peak_wavelength_nm);
    return out;
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::raw: return "raw";
        case Provenance::dark_subtracted: return "dark_subtracted";
        case Provenance::filtered: return "filtered";
    }
    return "unknown";
}

SpectralCube::SpectralCube(int height, int width, BandPlan plan, int bit_depth,
                           Provenance provenance)
    : SpectralCube(height, width, plan,
                   std::vector<double>(static_cast<std::size_t>(std::max(height, 0)) *
                                       std::max(width, 0) * plan.size()),
                   bit_depth, provenance) {}

SpectralCube::SpectralCube(int height, int width, BandPlan plan, std::vector<double> pixels,
                           int bit_depth, Provenance provenance)
    : height_(height),
      width_(width),
      plan_(std::move(plan)),
      bit_depth_(bit_depth),
      provenance_(provenance),
      pixels_(std::move(pixels)) {
    validate();
}

double SpectralCube::max_raw_value() const { return std::ldexp(1.0, bit_depth_) - 1.0; }

std::span<const double> SpectralCube::band(int b) const {
    const std::size_t plane = static_cast<std::size_t>(height_) * width_;
    return std::span<const double>(pixels_).subspan(static_cast<std::size_t>(b) * plane, plane);
}

void SpectralCube::validate() const {
    if (height_ <= 0 || width_ <= 0) throw InputError("cube dimensions must be positive");
    if (plan_.size() == 0) throw InputError("cube needs a non-empty band plan");
    if (bit_depth_ <= 0 || bit_depth_ > 32) throw InputError("bit depth out of range");
    if (pixels_.size() != static_cast<std::size_t>(height_) * width_ * plan_.size())
        throw InputError("cube pixel count does not match H x W x B");
    const double hi = max_raw_value();
    for (double v : pixels_) {
        if (!std::isfinite(v) || v < 0.0) throw InputError("cube intensities must be finite and >= 0");
        if (provenance_ == Provenance::raw && v > hi)
            throw InputError("raw intensity exceeds 2^bit_depth - 1");
    }
}

DarkFrame DarkFrame::zeros(int height, int width, int bands) {
    return {height, width, bands,
            std::vector<double>(static_cast<std::size_t>(height) * width * bands, 0.0)};
}

DarkFrame DarkFrame::from_cube(const SpectralCube& cube) {
    return {cube.height(), cube.width(), cube.band_count(),
            std::vector<double>(cube.pixels().begin(), cube.pixels().end())};
}

WindowSpec WindowSpec::centered(int height, int width, int side) {
    return {(height - side) / 2, (width - side) / 2, side};
}

SpectralCube subtract_dark(const SpectralCube& cube, const DarkFrame& dark) {
    if (cube.provenance() != Provenance::raw)
        throw InputError(std::string("dark subtraction expects a raw cube, got ") +
                         to_string(cube.provenance()));
    if (dark.height != cube.height() || dark.width != cube.width() ||
        dark.bands != cube.band_count() || dark.pixels.size() != cube.pixels().size())
        throw InputError("dark frame dimensions do not match the cube");

    std::vector<double> out(cube.pixels().begin(), cube.pixels().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!(dark.pixels[i] >= 0.0)) throw InputError("dark frame intensities must be >= 0");
        out[i] = std::max(out[i] - dark.pixels[i], 0.0);
    }
    return SpectralCube(cube.height(), cube.width(), cube.band_plan(), std::move(out),
                        cube.bit_depth(), Provenance::dark_subtracted);
}

namespace {

void mean_filter_plane(std::span<const double> in, std::span<double> out, int h, int w,
                       int half) {
    // Summed-area table with one row/column of zero padding.
    const int sw = w + 1;
    std::vector<double> sat(static_cast<std::size_t>(h + 1) * sw, 0.0);
    for (int r = 0; r < h; ++r) {
        double row_sum = 0.0;
        for (int c = 0; c < w; ++c) {
            row_sum += in[static_cast<std::size_t>(r) * w + c];
            sat[static_cast<std::size_t>(r + 1) * sw + c + 1] =
                sat[static_cast<std::size_t>(r) * sw + c + 1] + row_sum;
        }
    }
    auto at = [&](int r, int c) { return sat[static_cast<std::size_t>(r) * sw + c]; };
    for (int r = 0; r < h; ++r) {
        const int r0 = std::max(r - half, 0), r1 = std::min(r + half, h - 1) + 1;
        for (int c = 0; c < w; ++c) {
            const int c0 = std::max(c - half, 0), c1 = std::min(c + half, w - 1) + 1;
            const double sum = at(r1, c1) - at(r0, c1) - at(r1, c0) + at(r0, c0);
            const double count = static_cast<double>(r1 - r0) * (c1 - c0);
            out[static_cast<std::size_t>(r) * w + c] = std::max(sum / count, 0.0);
        }
    }
}

void median_filter_plane(std::span<const double> in, std::span<double> out, int h, int w,
                         int half) {
    std::vector<double> hood;
    hood.reserve(static_cast<std::size_t>(2 * half + 1) * (2 * half + 1));
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            hood.clear();
            for (int rr = std::max(r - half, 0); rr <= std::min(r + half, h - 1); ++rr)
                for (int cc = std::max(c - half, 0); cc <= std::min(c + half, w - 1); ++cc)
                    hood.push_back(in[static_cast<std::size_t>(rr) * w + cc]);
            const auto mid = hood.begin() + static_cast<std::ptrdiff_t>(hood.size() / 2);
            std::nth_element(hood.begin(), mid, hood.end());
            double value = *mid;
            if (hood.size() % 2 == 0) {
                // even count: average the two middle order statistics
                const double lower = *std::max_element(hood.begin(), mid);
                value = 0.5 * (value + lower);
            }
            out[static_cast<std::size_t>(r) * w + c] = value;
        }
    }
}

}  // namespace

SpectralCube window_filter(const SpectralCube& cube, int half_width, FilterMode mode) {
    if (cube.provenance() != Provenance::dark_subtracted)
        throw InputError(std::string("window filter expects a dark-subtracted cube, got ") +
                         to_string(cube.provenance()));
    if (half_width < 0) throw InputError("filter half-width must be >= 0");
    const int h = cube.height(), w = cube.width();
    if (2 * half_width + 1 > std::min(h, w))
        throw InputError("filter window " + std::to_string(2 * half_width + 1) +
                         " is larger than the image");

    std::vector<double> out(cube.pixels().size());
    const std::size_t plane = static_cast<std::size_t>(h) * w;
    for (int b = 0; b < cube.band_count(); ++b) {
        std::span<double> dst(out.data() + b * plane, plane);
        if (mode == FilterMode::mean)
            mean_filter_plane(cube.band(b), dst, h, w, half_width);
        else
            median_filter_plane(cube.band(b), dst, h, w, half_width);
    }
    return SpectralCube(h, w, cube.band_plan(), std::move(out), cube.bit_depth(),
                        Provenance::filtered);
}

SignatureSet crop_signatures(const SpectralCube& cube, const WindowSpec& window, int trial,
                             int reheat_class) {
    if (cube.provenance() != Provenance::filtered)
        throw InputError(std::string("signature cropping expects a filtered cube, got ") +
                         to_string(cube.provenance()));
    if (window.side <= 0 || window.row < 0 || window.col < 0 ||
        window.row + window.side > cube.height() || window.col + window.side > cube.width())
        throw InputError("crop window lies outside the image");

    const int n = window.side * window.side;
    Eigen::MatrixXd values(n, cube.band_count());
    for (int r = 0; r < window.side; ++r)
        for (int c = 0; c < window.side; ++c)
            for (int b = 0; b < cube.band_count(); ++b)
                values(r * window.side + c, b) = cube.at(b, window.row + r, window.col + c);
    return SignatureSet(std::move(values), std::vector<int>(n, trial),
                        std::vector<int>(n, reheat_class));
}

// ---------------------------------------------------------------------------
// MSIC container

namespace {

static_assert(std::endian::native == std::endian::little,
              "MSIC I/O assumes a little-endian host");

template <typename T>
void put(std::ostream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in, const std::string& what) {
    T value{};
    if (!in.read(reinterpret_cast<char*>(&value), sizeof(T)))
        throw InputError("truncated MSIC file while reading " + what);
    return value;
}

}  // namespace

void write_cube(const std::filesystem::path& path, const SpectralCube& cube) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open " + path.string() + " for writing");
    out.write("MSIC", 4);
    put<std::uint16_t>(out, kMsicVersion);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(cube.height()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(cube.width()));
    put<std::uint16_t>(out, static_cast<std::uint16_t>(cube.band_count()));
    put<std::uint16_t>(out, static_cast<std::uint16_t>(cube.bit_depth()));
    put<std::uint8_t>(out, static_cast<std::uint8_t>(cube.provenance()));
    for (double wl : cube.band_plan().wavelengths()) put<float>(out, static_cast<float>(wl));
    for (double v : cube.pixels()) put<float>(out, static_cast<float>(v));
    if (!out) throw InputError("failed writing " + path.string());
}

SpectralCube read_cube(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open cube file " + path.string());
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), 4) || std::memcmp(magic.data(), "MSIC", 4) != 0)
        throw InputError(path.string() + " is not an MSIC cube (bad magic)");
    const auto version = get<std::uint16_t>(in, "version");
    if (version != kMsicVersion)
        throw InputError("unsupported MSIC version " + std::to_string(version));
    const auto h = get<std::uint32_t>(in, "height");
    const auto w = get<std::uint32_t>(in, "width");
    const auto b = get<std::uint16_t>(in, "band count");
    const auto depth = get<std::uint16_t>(in, "bit depth");
    const auto prov = get<std::uint8_t>(in, "provenance");
    if (prov > 2) throw InputError("unknown MSIC provenance code " + std::to_string(prov));
    if (h == 0 || w == 0 || b == 0) throw InputError("MSIC header has a zero dimension");

    std::vector<double> wavelengths(b);
    for (auto& wl : wavelengths) wl = get<float>(in, "wavelengths");
    std::vector<double> pixels(static_cast<std::size_t>(h) * w * b);
    for (auto& v : pixels) v = get<float>(in, "pixels");
    return SpectralCube(static_cast<int>(h), static_cast<int>(w), BandPlan(std::move(wavelengths)),
                        std::move(pixels), depth, static_cast<Provenance>(prov));
}

DarkFrame read_dark(const std::filesystem::path& path) {
    return DarkFrame::from_cube(read_cube(path));
}

}  // namespace oilspec
