// Compares the serial reference kernels against the OpenMP ones on model
// algebras of growing dimension and reports timings plus the max deviation
// between the two paths.
//
//   kenmotsu-bench [max_n] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kenmotsu/connection.hpp"
#include "kenmotsu/rng.hpp"
#include "kenmotsu/verify.hpp"

using namespace kenmotsu;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 32;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel kernels fall back to serial loops\n");
#endif
    std::printf("%4s %5s | %12s %12s %8s | %10s\n", "n", "dim", "serial (ms)", "openmp (ms)",
                "speedup", "max diff");

    for (int n = 4; n <= max_n; n *= 2) {
        SplitMix64 rng(42);
        const Lambda lambda = random_lambda(n, rng);
        const auto [algebra, contact] = model_algebra(lambda);
        const RealMatrix t = random_invertible(algebra.dim, rng, 1e3);
        const auto [pushed, pushed_contact] = pushforward(algebra, contact, t);

        LeviCivitaTable table_serial, table_par;
        const double ts_table = time_ms([&] { table_serial = serial::levi_civita_table(pushed); }, reps);
        const double tp_table = time_ms([&] { table_par = par::levi_civita_table(pushed); }, reps);
        std::printf("%4d %5d | %12.2f %12.2f %7.2fx | %10.2e  levi_civita_table\n", n, pushed.dim,
                    ts_table, tp_table, ts_table / tp_table,
                    max_diff(table_serial.entries, table_par.entries));

        RealMatrix ric_serial, ric_par;
        const double ts_ric = time_ms([&] { ric_serial = serial::ricci(pushed); }, reps);
        const double tp_ric = time_ms([&] { ric_par = par::ricci(pushed); }, reps);
        std::printf("%4d %5d | %12.2f %12.2f %7.2fx | %10.2e  ricci\n", n, pushed.dim, ts_ric,
                    tp_ric, ts_ric / tp_ric, max_diff(ric_serial.entries, ric_par.entries));

        double jac_serial = 0.0, jac_par = 0.0;
        const double ts_jac = time_ms([&] { jac_serial = serial::jacobi_residual(pushed); }, reps);
        const double tp_jac = time_ms([&] { jac_par = par::jacobi_residual(pushed); }, reps);
        std::printf("%4d %5d | %12.2f %12.2f %7.2fx | %10.2e  jacobi_residual\n", n, pushed.dim,
                    ts_jac, tp_jac, ts_jac / tp_jac, std::abs(jac_serial - jac_par));

        double ken_serial = 0.0, ken_par = 0.0;
        const double ts_ken = time_ms(
            [&] { ken_serial = serial::kenmotsu_condition_residual(pushed, pushed_contact, table_serial); },
            reps);
        const double tp_ken = time_ms(
            [&] { ken_par = par::kenmotsu_condition_residual(pushed, pushed_contact, table_serial); },
            reps);
        std::printf("%4d %5d | %12.2f %12.2f %7.2fx | %10.2e  kenmotsu_condition\n", n, pushed.dim,
                    ts_ken, tp_ken, ts_ken / tp_ken, std::abs(ken_serial - ken_par));
    }
    return 0;
}
