#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "oilspec/signatures.hpp"

namespace oilspec {

struct Band {
    int index = 0;
    double peak_wavelength_nm = 0.0;

    bool operator==(const Band&) const = default;
};

/// Ordered list of spectral bands; indices run 0..B-1 with strictly increasing peaks.
class BandPlan {
public:
    BandPlan() = default;
    explicit BandPlan(std::vector<double> peak_wavelengths_nm);

    /// The nine-LED transmittance plan (405 nm to 950 nm).
    static BandPlan standard();

    [[nodiscard]] std::size_t size() const { return bands_.size(); }
    [[nodiscard]] const std::vector<Band>& bands() const { return bands_; }
    [[nodiscard]] std::vector<double> wavelengths() const;

    bool operator==(const BandPlan&) const = default;

private:
    std::vector<Band> bands_;
};

enum class Provenance : std::uint8_t { raw = 0, dark_subtracted = 1, filtered = 2 };

const char* to_string(Provenance p);

/// H x W x B intensity stack, stored band-major (band, row, col).
class SpectralCube {
public:
    SpectralCube(int height, int width, BandPlan plan, int bit_depth = 10,
                 Provenance provenance = Provenance::raw);
    SpectralCube(int height, int width, BandPlan plan, std::vector<double> pixels,
                 int bit_depth, Provenance provenance);

    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int band_count() const { return static_cast<int>(plan_.size()); }
    [[nodiscard]] const BandPlan& band_plan() const { return plan_; }
    [[nodiscard]] int bit_depth() const { return bit_depth_; }
    [[nodiscard]] Provenance provenance() const { return provenance_; }
    [[nodiscard]] double max_raw_value() const;

    [[nodiscard]] double at(int band, int row, int col) const {
        return pixels_[index(band, row, col)];
    }
    double& at(int band, int row, int col) { return pixels_[index(band, row, col)]; }

    [[nodiscard]] std::span<const double> band(int b) const;
    [[nodiscard]] std::span<const double> pixels() const { return pixels_; }

    bool operator==(const SpectralCube&) const = default;

private:
    [[nodiscard]] std::size_t index(int band, int row, int col) const {
        return (static_cast<std::size_t>(band) * height_ + row) * width_ + col;
    }
    void validate() const;

    int height_;
    int width_;
    BandPlan plan_;
    int bit_depth_;
    Provenance provenance_;
    std::vector<double> pixels_;
};

/// Zero-illumination capture, same layout as the cube it corrects.
struct DarkFrame {
    int height = 0;
    int width = 0;
    int bands = 0;
    std::vector<double> pixels;  // band-major

    static DarkFrame zeros(int height, int width, int bands);
    static DarkFrame from_cube(const SpectralCube& cube);
};

struct WindowSpec {
    int row = 0;
    int col = 0;
    int side = 30;

    /// Window of the given side centred in an image of the given size.
    static WindowSpec centered(int height, int width, int side = 30);
};

enum class FilterMode { mean, median };

/// P = max(S - D, 0) per pixel and band.
SpectralCube subtract_dark(const SpectralCube& cube, const DarkFrame& dark);

/// Replaces each pixel by the mean (or median) of its (2w+1)^2 neighbourhood.
/// Out-of-bounds neighbours are dropped and the divisor is the in-bounds count.
SpectralCube window_filter(const SpectralCube& cube, int half_width,
                           FilterMode mode = FilterMode::mean);

/// side^2 signatures read across bands, row-major over the window.
SignatureSet crop_signatures(const SpectralCube& cube, const WindowSpec& window,
                             int trial = 0, int reheat_class = 0);

// MSIC container: "MSIC", u16 version, u32 H, u32 W, u16 B, u16 bit depth,
// u8 provenance, B x f32 wavelengths, H*W*B f32 band-major. Little-endian.
inline constexpr std::uint16_t kMsicVersion = 1;

void write_cube(const std::filesystem::path& path, const SpectralCube& cube);
SpectralCube read_cube(const std::filesystem::path& path);
DarkFrame read_dark(const std::filesystem::path& path);

}  // namespace oilspec
