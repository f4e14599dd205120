// Benchmark for the pair-scoring kernel: times the serial reference against
// the OpenMP-parallel path on synthetic SEM data and checks that both
// produce identical beliefs.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pairgraph/benchgen.hpp"
#include "pairgraph/features.hpp"
#include "pairgraph/scorer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pairgraph;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

PairScorer flat_scorer() {
    const std::size_t k = FeatureVector::size;
    return PairScorer(FeatureVector::names(), std::vector<double>(k, 0.0),
                      std::vector<double>(k, 1.0),
                      std::vector<std::vector<double>>(3, std::vector<double>(k + 1, 0.0)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs OpenMP pair-scoring benchmark"};
    std::vector<int> dims = {10, 20, 40};
    int n = 200;
    int repeats = 3;
    std::uint64_t seed = 7;
    app.add_option("--dims", dims, "Node counts to benchmark");
    app.add_option("--samples", n, "Samples per node");
    app.add_option("--repeats", repeats, "Timed repetitions (best is kept)");
    app.add_option("--seed", seed, "Data seed");
    CLI11_PARSE(app, argc, argv);

    const PairScorer scorer = flat_scorer();

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("pair scoring, n=%d, %d thread(s)\n", n, threads);
    std::printf("%6s %8s %12s %12s %9s %6s\n", "d", "pairs", "serial[ms]", "openmp[ms]", "speedup",
                "equal");

    for (int d : dims) {
        const AcyclicGraph g = gen_er_dag(d, 2 * d, seed);
        const VariableMatrix x = standardize_columns(sample_sem(g, n, seed));

        PairBeliefs serial = score_all_pairs_serial(scorer, x);
        PairBeliefs parallel = score_all_pairs(scorer, x);
        bool equal = true;
        for (std::size_t k = 0; k < serial.entries().size(); ++k) {
            const BeliefTriple& a = serial.entries()[k];
            const BeliefTriple& b = parallel.entries()[k];
            equal = equal && a.rev == b.rev && a.none == b.none && a.fwd == b.fwd;
        }

        const double ts = time_ms([&] { score_all_pairs_serial(scorer, x); }, repeats);
        const double tp = time_ms([&] { score_all_pairs(scorer, x); }, repeats);
        std::printf("%6d %8zu %12.2f %12.2f %8.2fx %6s\n", d, pair_count(d), ts, tp, ts / tp,
                    equal ? "yes" : "NO");
    }
    return 0;
}
