#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "seifert/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace seifert;

namespace {

bool equal_results(const SweepResult& a, const SweepResult& b) {
    if (a.enumerated != b.enumerated || a.valid != b.valid ||
        a.matches.size() != b.matches.size())
        return false;
    for (size_t i = 0; i < a.matches.size(); ++i) {
        const SweepMatch& x = a.matches[i];
        const SweepMatch& y = b.matches[i];
        if (!(x.graph == y.graph) || x.chi != y.chi || x.e != y.e ||
            x.matched_case != y.matched_case)
            return false;
    }
    return true;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare the serial sweep reference against the parallel driver"};
    long tmin = 3, tmax = 4, dmax = 6, nmax = 8;
    app.add_option("--tmin", tmin, "smallest arm count");
    app.add_option("--tmax", tmax, "largest arm count");
    app.add_option("--dmax", dmax, "largest central -C.C");
    app.add_option("--nmax", nmax, "largest arm order n");
    CLI11_PARSE(app, argc, argv);

    SweepBounds bounds;
    bounds.t_min = static_cast<int>(tmin);
    bounds.t_max = static_cast<int>(tmax);
    bounds.d_max = dmax;
    bounds.n_max = nmax;
    const SweepFilter filter = SweepFilter::qhd_cases;

    std::cout << "bounds: t=" << bounds.t_min << ".." << bounds.t_max
              << " d<=" << bounds.d_max << " n<=" << bounds.n_max
              << " filter=" << to_string(filter) << "\n";

    auto t0 = std::chrono::steady_clock::now();
    const SweepResult serial = sweep_graphs_serial(bounds, filter);
    const double serial_ms = ms_since(t0);
    std::cout << "serial:   " << serial_ms << " ms  (enumerated " << serial.enumerated
              << ", valid " << serial.valid << ", matched " << serial.matches.size()
              << ")\n";

    t0 = std::chrono::steady_clock::now();
    const SweepResult parallel = sweep_graphs_parallel(bounds, filter);
    const double parallel_ms = ms_since(t0);
    std::cout << "parallel: " << parallel_ms << " ms";
#ifdef _OPENMP
    std::cout << "  (max threads " << omp_get_max_threads() << ")";
#else
    std::cout << "  (built without OpenMP)";
#endif
    std::cout << "\n";

    if (parallel_ms > 0.0)
        std::cout << "speedup: " << serial_ms / parallel_ms << "x\n";

    if (!equal_results(serial, parallel)) {
        std::cout << "results: MISMATCH\n";
        return 1;
    }
    std::cout << "results: identical\n";
    return 0;
}
