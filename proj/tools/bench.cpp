// Times the OpenMP statistics kernels against the serial reference
// implementations on a large simulated corpus, and an ensemble of model
// runs against the same runs executed one by one.

#include <cstdio>
#include <string>

#include "textlaws/fit.hpp"
#include "textlaws/reference.hpp"
#include "textlaws/simon.hpp"
#include "textlaws/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
#else
#include <chrono>
static double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
#endif

using namespace textlaws;

namespace {

constexpr int kRepeats = 5;

template <class F>
double best_of(F&& f) {
    double best = 1e300;
    for (int r = 0; r < kRepeats; ++r) {
        double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

void report(const std::string& name, double serial, double parallel) {
    std::printf("%-22s serial %8.2f ms   parallel %8.2f ms   speedup %5.2fx\n", name.c_str(),
                serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t length = argc > 1 ? std::stoull(argv[1]) : 4000000;

    std::printf("generating corpus (T = %llu) ...\n", static_cast<unsigned long long>(length));
    ModelParams params{3.0, 0.35, 1.1, length, 7};
    EncodedSequence seq = simulate(params);
    std::printf("T = %zu, Nt = %zu\n\n", seq.T(), seq.Nt());

    report("occurrence_counts",
           best_of([&] { reference::occurrence_counts(seq); }),
           best_of([&] { occurrence_counts(seq); }));
    report("frequency_spectrum",
           best_of([&] { reference::frequency_spectrum(seq); }),
           best_of([&] { frequency_spectrum(seq); }));
    report("rank_profile",
           best_of([&] { reference::rank_profile(seq); }),
           best_of([&] { rank_profile(seq); }));
    report("growth_curve",
           best_of([&] { reference::growth_curve(seq); }),
           best_of([&] { growth_curve(seq); }));
    report("attachment_profile",
           best_of([&] { reference::attachment_profile(seq, 0.5); }),
           best_of([&] { attachment_profile(seq, 0.5); }));

    {
        GrowthCurve curve = growth_curve(seq);
        std::vector<double> dense(curve.N.begin(), curve.N.end());
        report("log_resample",
               best_of([&] {
                   // the bin loop is the parallel part; force one thread
#ifdef _OPENMP
                   int saved = omp_get_max_threads();
                   omp_set_num_threads(1);
                   log_resample(std::span<const double>(dense), 1.2);
                   omp_set_num_threads(saved);
#else
                   log_resample(std::span<const double>(dense), 1.2);
#endif
               }),
               best_of([&] { log_resample(std::span<const double>(dense), 1.2); }));
    }

    {
        ModelParams small = params;
        small.length = 100000;
        const std::size_t runs = 16;
        report("simulate x16",
               best_of([&] {
                   for (std::size_t r = 0; r < runs; ++r) {
                       ModelParams p = small;
                       p.seed = 100 + r;
                       simulate(p);
                   }
               }),
               best_of([&] { simulate_ensemble(small, runs, 100); }));
    }
    return 0;
}
