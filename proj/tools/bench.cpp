// Times the serial reference implementations against the OpenMP loops:
// connected-graph enumeration and the experiment runner on the exhaustive
// n = 6 population.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hadwiger/enumerate.hpp"
#include "hadwiger/experiment.hpp"

namespace {

template <typename F> double seconds(F&& work)
{
    const auto start = std::chrono::steady_clock::now();
    work();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel paths fall back to serial\n");
#endif

    std::size_t count_serial = 0, count_parallel = 0;
    const double enum_serial =
        seconds([&] { count_serial = hadwiger::connected_graph_masks_serial(7).size(); });
    const double enum_parallel =
        seconds([&] { count_parallel = hadwiger::connected_graph_masks(7).size(); });
    std::printf("enumerate connected n=7: %zu graphs, serial %.3fs, parallel %.3fs (x%.2f)\n",
                count_serial, enum_serial, enum_parallel,
                enum_parallel > 0 ? enum_serial / enum_parallel : 0.0);
    if (count_serial != count_parallel) {
        std::printf("MISMATCH between serial and parallel enumeration\n");
        return 1;
    }

    hadwiger::ExperimentConfig cfg;
    cfg.source = hadwiger::SourceKind::Exhaustive;
    cfg.n = 6;
    cfg.checks.thm1 = true;
    cfg.checks.chi_bounds = true;

    std::vector<hadwiger::ExperimentRow> rows_serial, rows_parallel;
    const double run_serial = seconds([&] { rows_serial = hadwiger::run_experiment_serial(cfg); });
    const double run_parallel = seconds([&] { rows_parallel = hadwiger::run_experiment(cfg); });
    std::printf("experiment exhaustive n=6 (thm1+chi): %zu rows, serial %.3fs, parallel %.3fs (x%.2f)\n",
                rows_serial.size(), run_serial, run_parallel,
                run_parallel > 0 ? run_serial / run_parallel : 0.0);

    if (hadwiger::emit_csv(rows_serial) != hadwiger::emit_csv(rows_parallel)) {
        std::printf("MISMATCH between serial and parallel experiment reports\n");
        return 1;
    }
    std::printf("serial and parallel outputs identical\n");
    return 0;
}
