#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "oilspec/cube.hpp"
#include "oilspec/error.hpp"

using namespace oilspec;

namespace {

BandPlan one_band() { return BandPlan({500.0}); }

SpectralCube constant_cube(int h, int w, double value, Provenance p = Provenance::raw) {
    const BandPlan plan = BandPlan::standard();
    return SpectralCube(h, w, plan, std::vector<double>(static_cast<std::size_t>(h) * w * plan.size(), value),
                        10, p);
}

SpectralCube random_cube(int h, int w, std::uint64_t seed, Provenance p = Provenance::raw) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> u(0, 1023);
    const BandPlan plan = BandPlan::standard();
    std::vector<double> px(static_cast<std::size_t>(h) * w * plan.size());
    for (auto& v : px) v = u(rng);
    return SpectralCube(h, w, plan, std::move(px), 10, p);
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("oilspec_test_" + name);
}

}  // namespace

TEST(BandPlan, StandardPlanHasNineIncreasingPeaks) {
    const auto plan = BandPlan::standard();
    ASSERT_EQ(plan.size(), 9u);
    const std::vector<double> expected{405, 430, 500, 610, 660, 740, 850, 890, 950};
    EXPECT_EQ(plan.wavelengths(), expected);
    for (std::size_t i = 0; i < plan.size(); ++i) EXPECT_EQ(plan.bands()[i].index, static_cast<int>(i));
}

TEST(BandPlan, RejectsNonIncreasingPeaks) {
    EXPECT_THROW(BandPlan({500, 500}), InputError);
    EXPECT_THROW(BandPlan({600, 500}), InputError);
    EXPECT_THROW(BandPlan({-1}), InputError);
}

TEST(SpectralCube, RejectsRawValuesAboveBitDepth) {
    EXPECT_THROW(SpectralCube(1, 1, one_band(), {1024.0}, 10, Provenance::raw), InputError);
    EXPECT_NO_THROW(SpectralCube(1, 1, one_band(), {1023.0}, 10, Provenance::raw));
    EXPECT_THROW(SpectralCube(1, 1, one_band(), {-1.0}, 10, Provenance::raw), InputError);
    EXPECT_THROW(SpectralCube(2, 2, one_band(), {1.0}, 10, Provenance::raw), InputError);
}

TEST(SubtractDark, SubtractsAndClamps) {
    SpectralCube cube(1, 2, one_band(), {100.0, 5.0}, 10, Provenance::raw);
    DarkFrame dark{1, 2, 1, {10.0, 10.0}};
    const auto out = subtract_dark(cube, dark);
    EXPECT_EQ(out.at(0, 0, 0), 90.0);
    EXPECT_EQ(out.at(0, 0, 1), 0.0);
    EXPECT_EQ(out.provenance(), Provenance::dark_subtracted);
}

TEST(SubtractDark, ZeroDarkIsIdentity) {
    const auto cube = random_cube(8, 7, 3);
    const auto out = subtract_dark(cube, DarkFrame::zeros(8, 7, 9));
    EXPECT_TRUE(std::equal(out.pixels().begin(), out.pixels().end(), cube.pixels().begin()));
}

TEST(SubtractDark, RejectsMismatchAndWrongStage) {
    const auto cube = random_cube(4, 4, 1);
    EXPECT_THROW(subtract_dark(cube, DarkFrame::zeros(4, 5, 9)), InputError);
    const auto once = subtract_dark(cube, DarkFrame::zeros(4, 4, 9));
    EXPECT_THROW(subtract_dark(once, DarkFrame::zeros(4, 4, 9)), InputError);
}

TEST(SubtractDark, IsMonotoneInRawIntensity) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> u(0, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        const double s = u(rng), d = u(rng), bump = 1 + u(rng) % 23;
        SpectralCube lo(1, 1, one_band(), {s}, 10, Provenance::raw);
        SpectralCube hi(1, 1, one_band(), {s + bump}, 10, Provenance::raw);
        DarkFrame dark{1, 1, 1, {d}};
        EXPECT_LE(subtract_dark(lo, dark).at(0, 0, 0), subtract_dark(hi, dark).at(0, 0, 0));
    }
}

TEST(WindowFilter, ConstantImageIsFixedPoint) {
    const auto cube = constant_cube(12, 10, 37.0, Provenance::dark_subtracted);
    for (int w : {0, 1, 3, 4}) {
        for (auto mode : {FilterMode::mean, FilterMode::median}) {
            const auto out = window_filter(cube, w, mode);
            for (double v : out.pixels()) EXPECT_DOUBLE_EQ(v, 37.0);
        }
    }
}

TEST(WindowFilter, ThreeByThreeCentre) {
    std::vector<double> px{1, 2, 3, 4, 5, 6, 7, 8, 9};
    SpectralCube cube(3, 3, one_band(), px, 10, Provenance::dark_subtracted);
    EXPECT_DOUBLE_EQ(window_filter(cube, 1, FilterMode::mean).at(0, 1, 1), 5.0);
    EXPECT_DOUBLE_EQ(window_filter(cube, 1, FilterMode::median).at(0, 1, 1), 5.0);
    // corner: in-bounds neighbourhood {1,2,4,5}
    EXPECT_DOUBLE_EQ(window_filter(cube, 1, FilterMode::mean).at(0, 0, 0), 3.0);
    EXPECT_DOUBLE_EQ(window_filter(cube, 1, FilterMode::median).at(0, 0, 0), 3.0);
}

TEST(WindowFilter, MedianRemovesIsolatedSpike) {
    std::vector<double> px(25, 10.0);
    px[12] = 1000.0;
    SpectralCube cube(5, 5, one_band(), px, 10, Provenance::dark_subtracted);
    EXPECT_DOUBLE_EQ(window_filter(cube, 1, FilterMode::median).at(0, 2, 2), 10.0);
}

TEST(WindowFilter, RejectsOversizedWindowAndWrongStage) {
    const auto cube = constant_cube(5, 8, 1.0, Provenance::dark_subtracted);
    EXPECT_THROW(window_filter(cube, 3), InputError);  // 7 > 5
    EXPECT_NO_THROW(window_filter(cube, 2));
    EXPECT_THROW(window_filter(constant_cube(5, 5, 1.0), 1), InputError);
}

TEST(WindowFilter, MeanMatchesBruteForceAverage) {
    const auto cube = subtract_dark(random_cube(9, 11, 5), DarkFrame::zeros(9, 11, 9));
    const int w = 2;
    const auto out = window_filter(cube, w, FilterMode::mean);
    for (int b = 0; b < 9; b += 4)
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 11; ++c) {
                double sum = 0;
                int n = 0;
                for (int rr = r - w; rr <= r + w; ++rr)
                    for (int cc = c - w; cc <= c + w; ++cc)
                        if (rr >= 0 && rr < 9 && cc >= 0 && cc < 11) {
                            sum += cube.at(b, rr, cc);
                            ++n;
                        }
                EXPECT_NEAR(out.at(b, r, c), sum / n, 1e-9);
            }
}

TEST(WindowFilter, CropThenFilterCommutesOnInterior) {
    const auto cube = subtract_dark(random_cube(20, 20, 8), DarkFrame::zeros(20, 20, 9));
    const int w = 2;
    const auto full = window_filter(cube, w);
    // crop a 12x12 region at (4,4), filter it, compare its interior (distance >= w from edges)
    std::vector<double> px;
    for (int b = 0; b < 9; ++b)
        for (int r = 4; r < 16; ++r)
            for (int c = 4; c < 16; ++c) px.push_back(cube.at(b, r, c));
    SpectralCube crop(12, 12, cube.band_plan(), px, 10, Provenance::dark_subtracted);
    const auto filtered_crop = window_filter(crop, w);
    for (int b = 0; b < 9; ++b)
        for (int r = w; r < 12 - w; ++r)
            for (int c = w; c < 12 - w; ++c)
                EXPECT_NEAR(filtered_crop.at(b, r, c), full.at(b, r + 4, c + 4), 1e-9);
}

TEST(WindowFilter, IsDeterministic) {
    const auto cube = subtract_dark(random_cube(16, 16, 2), DarkFrame::zeros(16, 16, 9));
    EXPECT_EQ(window_filter(cube, 3), window_filter(cube, 3));
}

TEST(CropSignatures, ThirtyByThirtyGivesNineHundred) {
    const auto cube = window_filter(constant_cube(40, 40, 0.0, Provenance::dark_subtracted), 1);
    const auto set = crop_signatures(cube, WindowSpec::centered(40, 40), 2, 3);
    EXPECT_EQ(set.size(), 900);
    EXPECT_EQ(set.dim(), 9);
    EXPECT_EQ(set.trial.front(), 2);
    EXPECT_EQ(set.reheat_class.back(), 3);
}

TEST(CropSignatures, SinglePixelAndRowMajorOrder) {
    std::vector<double> px;
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 16; ++i) px.push_back(100 * b + i);
    SpectralCube cube(4, 4, BandPlan({500, 600}), px, 10, Provenance::filtered);
    const auto one = crop_signatures(cube, {1, 2, 1});
    ASSERT_EQ(one.size(), 1);
    EXPECT_EQ(one.values(0, 0), 6.0);
    EXPECT_EQ(one.values(0, 1), 106.0);
    const auto two = crop_signatures(cube, {0, 0, 2});
    EXPECT_EQ(two.values(1, 0), 1.0);  // (0,1)
    EXPECT_EQ(two.values(2, 0), 4.0);  // (1,0)
}

TEST(CropSignatures, DisjointWindowsOnConstantCubeAgree) {
    const auto cube = window_filter(constant_cube(20, 20, 12.5, Provenance::dark_subtracted), 1);
    const auto a = crop_signatures(cube, {0, 0, 5});
    const auto b = crop_signatures(cube, {10, 12, 5});
    EXPECT_EQ(a.values, b.values);
}

TEST(CropSignatures, RejectsOutOfBounds) {
    const auto cube = window_filter(constant_cube(10, 10, 0.0, Provenance::dark_subtracted), 1);
    EXPECT_THROW(crop_signatures(cube, {5, 5, 6}), InputError);
    EXPECT_THROW(crop_signatures(cube, {-1, 0, 2}), InputError);
}

TEST(MsicFile, RoundTripsAndPreservesHeader) {
    const auto cube = random_cube(6, 5, 21);
    const auto path = temp_path("roundtrip.msic");
    write_cube(path, cube);
    EXPECT_EQ(std::filesystem::file_size(path), 4 + 2 + 4 + 4 + 2 + 2 + 1 + 9 * 4 + 6 * 5 * 9 * 4u);
    const auto back = read_cube(path);
    EXPECT_EQ(back, cube);  // integer intensities survive the f32 payload exactly
    std::filesystem::remove(path);
}

TEST(MsicFile, HeaderLayoutIsLittleEndian) {
    SpectralCube cube(2, 3, one_band(), {1, 2, 3, 4, 5, 6}, 12, Provenance::filtered);
    const auto path = temp_path("layout.msic");
    write_cube(path, cube);
    std::ifstream in(path, std::ios::binary);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), {});
    ASSERT_GE(bytes.size(), 19u);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "MSIC");
    EXPECT_EQ(bytes[4], 1);   // version
    EXPECT_EQ(bytes[6], 2);   // H
    EXPECT_EQ(bytes[10], 3);  // W
    EXPECT_EQ(bytes[14], 1);  // B
    EXPECT_EQ(bytes[16], 12); // bit depth
    EXPECT_EQ(bytes[18], 2);  // provenance: filtered
    std::filesystem::remove(path);
}

TEST(MsicFile, RejectsBadMagicAndTruncation) {
    const auto path = temp_path("bad.msic");
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOPE";
    }
    EXPECT_THROW(read_cube(path), InputError);
    write_cube(path, random_cube(3, 3, 4));
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 7);
    EXPECT_THROW(read_cube(path), InputError);
    std::filesystem::remove(path);
    EXPECT_THROW(read_cube(path), InputError);
}
