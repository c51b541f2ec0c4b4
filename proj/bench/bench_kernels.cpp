// Harmonic-sum table: OpenMP kernel against the serial reference.
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>

#include "pmzv/mhs.hpp"

using namespace pmzv;

namespace {
template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"har_table benchmark"};
    long max_m = 200;
    int max_weight = 5, reps = 3;
    app.add_option("--max-m", max_m, "largest m");
    app.add_option("--max-weight", max_weight, "largest word weight");
    app.add_option("--reps", reps, "repetitions; the best time is reported");
    CLI11_PARSE(app, argc, argv);

    std::vector<long> ms;
    for (long m = 1; m <= max_m; ++m) ms.push_back(m);
    auto words = all_harmonic_words(1, max_weight, max_weight);

    HarTable par, ser;
    double tp = best_of(reps, [&] { par = har_table(ms, words); });
    double ts = best_of(reps, [&] { ser = har_table_serial(ms, words); });

    std::printf("entries   %zu (%zu m x %zu words)\n", par.size(), ms.size(), words.size());
    std::printf("threads   %d\n", omp_get_max_threads());
    std::printf("serial    %.3f s\n", ts);
    std::printf("parallel  %.3f s\n", tp);
    std::printf("speedup   %.2fx\n", ts / tp);
    std::printf("agree     %s\n", par == ser ? "yes" : "NO");
    return par == ser ? 0 : 1;
}
