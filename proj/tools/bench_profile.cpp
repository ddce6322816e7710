// Benchmark: serial vs OpenMP character-window profile scan.

#include "arr/aomoto.hpp"
#include "arr/io.hpp"
#include "arr/orlik_solomon.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iostream>

using namespace arr;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string arr_path = "fixtures/braid.json";
    std::string a_path = "fixtures/braid_a.json";
    int radius = 6;
    if (argc > 1) arr_path = argv[1];
    if (argc > 2) a_path = argv[2];
    if (argc > 3) radius = std::atoi(argv[3]);

    OSAlgebra alg = build_os(load_arrangement_file(arr_path));
    WeightMatrix a = load_weight_matrix_file(a_path);
    WindowBox box = WindowBox::radius(a.N(), radius);
    std::cout << "window radius " << radius << ", " << box.points().size() << " components\n";

    auto t0 = std::chrono::steady_clock::now();
    Profile serial = h1_completion_profile_serial(alg, a, box);
    double ts = seconds(t0);
    std::cout << "serial:   " << ts << " s\n";

#ifdef _OPENMP
    std::cout << "threads:  " << omp_get_max_threads() << "\n";
#endif
    t0 = std::chrono::steady_clock::now();
    Profile parallel = h1_completion_profile(alg, a, box);
    double tp = seconds(t0);
    std::cout << "parallel: " << tp << " s  (speedup " << ts / tp << "x)\n";

    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel profiles\n";
        return 1;
    }
    std::cout << "profiles agree\n";
    return 0;
}
