#include "ordlift/elim.hpp"
#include "ordlift/grpalg.hpp"
#include "ordlift/quiver.hpp"

#include <chrono>
#include <iostream>
#include <random>

// Compares the serial reference elimination with the OpenMP variant on
// synthetic matrices and on the real workloads (graded quotients and group
// Cartan matrices), checking bit-identical results as it goes.

using namespace ordlift;
using clk = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& fn) {
    auto t0 = clk::now();
    fn();
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void bench_random(long p, long f, long rows, long cols, int reps) {
    Field F(p, f);
    std::mt19937_64 rng(1234);
    std::vector<std::vector<long>> M(rows, std::vector<long>(cols));
    for (auto& r : M)
        for (auto& x : r) x = (long)(rng() % F.q());

    Echelon es, ep;
    double ts = 0, tp = 0;
    for (int i = 0; i < reps; ++i) {
        ts += run_ms([&] { es = echelonize(F, M, ElimMode::Serial); });
        tp += run_ms([&] { ep = echelonize(F, M, ElimMode::Parallel); });
    }
    bool same = es.rows == ep.rows && es.pivot_cols == ep.pivot_cols;
    std::cout << "echelon F_" << F.q() << " " << rows << "x" << cols
              << ": serial " << ts / reps << " ms, parallel " << tp / reps
              << " ms, identical=" << (same ? "yes" : "NO") << "\n";
}

void bench_quotient(long p, long f) {
    double ts = run_ms([&] {
        GradedAlgebra A(delta_presentation(p, f), ElimMode::Serial);
        (void)A.total_dim();
    });
    double tp = run_ms([&] {
        GradedAlgebra A(delta_presentation(p, f), ElimMode::Parallel);
        (void)A.total_dim();
    });
    GradedAlgebra a(delta_presentation(p, f), ElimMode::Serial);
    GradedAlgebra b(delta_presentation(p, f), ElimMode::Parallel);
    bool same = a.total_dim() == b.total_dim();
    std::cout << "graded quotient delta(" << p << "," << f << "): serial " << ts
              << " ms, parallel " << tp << " ms, identical=" << (same ? "yes" : "NO") << "\n";
}

} // namespace

int main() {
    bench_random(2, 1, 800, 600, 3);
    bench_random(2, 4, 400, 300, 3);
    bench_random(3, 2, 400, 300, 3);
    bench_quotient(2, 4);
    bench_quotient(3, 2);

    double tg = run_ms([&] {
        DeltaGroup G(2, 4);
        auto C = cartan_from_group(G);
        (void)C;
    });
    std::cout << "group cartan (2,4): " << tg << " ms\n";
    return 0;
}
