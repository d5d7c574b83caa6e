// Timing comparison between the parallel kernels and their serial reference
// twins, with a bitwise equality check on every output. On a single-core host
// the interesting column is the equality one; speedups appear with threads.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spincoh/beamsplitter.hpp"
#include "spincoh/entanglement.hpp"
#include "spincoh/helstrom.hpp"
#include "spincoh/numkit.hpp"
#include "spincoh/reference.hpp"

using namespace spincoh;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "bitwise-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const SpinMagnitude s(140);
        double t0 = now_ms();
        double a = reference::linear_entropy_closed_form(s, 2.0, 1.0 / std::sqrt(2.0));
        double t1 = now_ms();
        double b = linear_entropy_closed_form(s, 2.0, 1.0 / std::sqrt(2.0));
        double t2 = now_ms();
        report("linear_entropy_closed_form", t1 - t0, t2 - t1, a == b);
    }
    {
        std::vector<int> ts;
        for (int t = 1; t <= 48; ++t)
            ts.push_back(t);
        const std::vector<double> zs{0.5, 1.0, 2.0, 3.0};
        std::vector<double> r2s;
        for (int i = 0; i <= 20; ++i)
            r2s.push_back(i / 20.0);
        double t0 = now_ms();
        auto a = reference::sweep(ts, zs, r2s);
        double t1 = now_ms();
        auto b = sweep(ts, zs, r2s);
        double t2 = now_ms();
        bool same = a.size() == b.size();
        for (std::size_t k = 0; same && k < a.size(); ++k)
            same = a[k].von_neumann == b[k].von_neumann && a[k].linear == b[k].linear;
        report("sweep", t1 - t0, t2 - t1, same);
    }
    {
        const SpinMagnitude s(160);
        const BeamSplitterParams params = BeamSplitterParams::from_r2(0.5);
        double t0 = now_ms();
        Eigen::MatrixXcd a =
            reference::reduced_density_matrix_closed_form(s, cplx(1.2, 0.4), params);
        double t1 = now_ms();
        Eigen::MatrixXcd b =
            reduced_density_matrix_closed_form(s, cplx(1.2, 0.4), params);
        double t2 = now_ms();
        report("reduced_density_closed_form", t1 - t0, t2 - t1, a == b);
    }
    {
        std::vector<cplx> betas;
        for (int k = 0; k < 24; ++k)
            betas.emplace_back(0.1 * k, 0.05 * k);
        double t0 = now_ms();
        auto a = reference::helstrom_sweep(cplx(0.3, 0.0), betas, 0.4, 1, 400);
        double t1 = now_ms();
        auto b = helstrom_sweep(cplx(0.3, 0.0), betas, 0.4, 1, 400);
        double t2 = now_ms();
        bool same = a.size() == b.size();
        for (std::size_t k = 0; same && k < a.size(); ++k)
            same = a[k].p_error == b[k].p_error;
        report("helstrom_sweep", t1 - t0, t2 - t1, same);
    }
    {
        std::mt19937_64 gen(42);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<cplx> raw(241);
        for (cplx& c : raw)
            c = cplx(u(gen), u(gen));
        ComplexPolynomial p = ComplexPolynomial::from_raw(raw);
        double t0 = now_ms();
        RootSet a = reference::polynomial_roots(p);
        double t1 = now_ms();
        RootSet b = polynomial_roots(p);
        double t2 = now_ms();
        bool same = a.roots.size() == b.roots.size();
        for (std::size_t k = 0; same && k < a.roots.size(); ++k)
            same = a.roots[k] == b.roots[k];
        report("polynomial_roots", t1 - t0, t2 - t1, same);
    }
    return 0;
}
