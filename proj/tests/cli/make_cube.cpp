// Writes a constant raw cube and a matching dark frame for the CLI smoke test.
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "oilspec/cube.hpp"

int main(int argc, char** argv) {
    if (argc != 4) {
        std::fprintf(stderr, "usage: make_cube <cube.msic> <dark.msic> <value>\n");
        return 2;
    }
    using namespace oilspec;
    const double value = std::atof(argv[3]);
    const BandPlan plan = BandPlan::standard();
    const int h = 40, w = 40;
    const std::vector<double> px(static_cast<std::size_t>(h) * w * plan.size(), value);
    write_cube(argv[1], SpectralCube(h, w, plan, px, 10, Provenance::raw));
    write_cube(argv[2], SpectralCube(h, w, plan, px, 10, Provenance::raw));
    return 0;
}
