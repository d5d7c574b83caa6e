#include "spincoh/entanglement.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spincoh {

namespace {

double pow_log(double mod, int k) {
    if (k == 0)
        return 0.0;
    if (mod == 0.0)
        return -std::numeric_limits<double>::infinity();
    return k * std::log(mod);
}

void check_unit_trace(const Eigen::MatrixXcd& rho, const char* who) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument(std::string(who) + ": matrix not square");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
        throw std::invalid_argument(std::string(who) + ": trace must be 1");
}

double entropy_of_spectrum(const std::vector<double>& lam) {
    double e = 0.0;
    for (double r : lam) {
        if (r < 1e-14)
            continue;
        e -= r * std::log(r);
    }
    return e;
}

// per-(p, pp) partial of the closed-form purity sum; shared by the parallel
// kernel and the serial reference so both accumulate identically
double purity_partial(int two_s, int p, int pp, double lpref, double z_mod, double t2,
                      double r_mod) {
    const int mmax = std::min(two_s - p, two_s - pp);
    double partial = 0.0;
    for (int m = 0; m <= mmax; ++m) {
        for (int mp = 0; mp <= mmax; ++mp) {
            double le = lpref;
            le += pow_log(z_mod, 2 * (m + mp + p + pp));
            le += pow_log(r_mod, 2 * (p + pp));
            le += pow_log(t2, m + mp);
            le -= std::lgamma(m + 1.0) + std::lgamma(mp + 1.0) +
                  std::lgamma(p + 1.0) + std::lgamma(pp + 1.0);
            le -= 0.5 * (std::lgamma(two_s - m - p + 1.0) +
                         std::lgamma(two_s - m - pp + 1.0) +
                         std::lgamma(two_s - mp - p + 1.0) +
                         std::lgamma(two_s - mp - pp + 1.0));
            partial += std::exp(le);
        }
    }
    return partial;
}

}  // namespace

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    check_unit_trace(rho, "von_neumann_entropy");
    std::vector<double> lam = hermitian_spectrum(rho);
    for (double& r : lam)
        if (r < 0.0)
            r = 0.0;
    return entropy_of_spectrum(lam);
}

double von_neumann_from_schmidt(const std::vector<double>& singular_vals) {
    std::vector<double> lam;
    lam.reserve(singular_vals.size());
    for (double s : singular_vals)
        lam.push_back(s * s);
    return entropy_of_spectrum(lam);
}

double linear_entropy(const Eigen::MatrixXcd& rho) {
    check_unit_trace(rho, "linear_entropy");
    return 1.0 - rho.squaredNorm();
}

namespace detail_entanglement {

double linear_entropy_closed_form_impl(SpinMagnitude s, double z_mod, double r_mod,
                                       bool parallel) {
    if (r_mod < 0.0 || r_mod > 1.0)
        throw std::domain_error("linear_entropy_closed_form: r_mod outside [0, 1]");
    if (z_mod < 0.0)
        throw std::domain_error("linear_entropy_closed_form: z_mod must be nonnegative");
    const int d = s.dim();
    const double t2 = std::max(0.0, 1.0 - r_mod * r_mod);
    const double lpref =
        2.0 * std::lgamma(s.two_s + 1.0) - 2.0 * s.two_s * std::log1p(z_mod * z_mod);

    std::vector<double> partials(static_cast<std::size_t>(d) * d, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int idx = 0; idx < d * d; ++idx) {
        const int p = idx / d;
        const int pp = idx % d;
        partials[idx] = purity_partial(s.two_s, p, pp, lpref, z_mod, t2, r_mod);
    }

    double purity = 0.0;
    for (double v : partials)
        purity += v;
    return 1.0 - purity;
}

}  // namespace detail_entanglement

double linear_entropy_closed_form(SpinMagnitude s, double z_mod, double r_mod) {
    return detail_entanglement::linear_entropy_closed_form_impl(s, z_mod, r_mod, true);
}

double entanglement_of_output(SpinMagnitude s, cplx z, double r2) {
    BipartiteAmplitudeMatrix out = split_state(spin_coherent(s, z),
                                               BeamSplitterParams::from_r2(r2));
    return von_neumann_from_schmidt(singular_values(out.c));
}

double linear_entropy_of_output(SpinMagnitude s, cplx z, double r2) {
    BipartiteAmplitudeMatrix out = split_state(spin_coherent(s, z),
                                               BeamSplitterParams::from_r2(r2));
    std::vector<double> sv = singular_values(out.c);
    double purity = 0.0;
    for (double v : sv)
        purity += v * v * v * v;
    return 1.0 - purity;
}

double argmax_r2(SpinMagnitude s, cplx z, double grid_step) {
    if (!(grid_step > 0.0) || grid_step > 1.0)
        throw std::invalid_argument("argmax_r2: grid_step outside (0, 1]");
    const int k = static_cast<int>(std::lround(1.0 / grid_step));
    if (std::abs(k * grid_step - 1.0) > 1e-12)
        throw std::invalid_argument("argmax_r2: grid_step must divide 1 evenly");
    double best_r2 = 0.0, best_e = -1.0;
    const double tie = 1e-12;
    for (int i = 0; i <= k; ++i) {
        double r2 = static_cast<double>(i) / k;
        double e = entanglement_of_output(s, z, r2);
        bool better = e > best_e + tie;
        bool tied_closer = std::abs(e - best_e) <= tie &&
                           std::abs(r2 - 0.5) < std::abs(best_r2 - 0.5);
        if (better || tied_closer) {
            best_e = e;
            best_r2 = r2;
        }
    }
    return best_r2;
}

double stationarity_check(SpinMagnitude s, double z_mod) {
    const double r0 = 1.0 / std::sqrt(2.0);
    const double h = 1e-5;
    return (linear_entropy_closed_form(s, z_mod, r0 + h) -
            linear_entropy_closed_form(s, z_mod, r0 - h)) /
           (2.0 * h);
}

namespace detail_entanglement {

std::vector<SweepRecord> sweep_impl(const std::vector<int>& two_s_values,
                                    const std::vector<double>& z_values,
                                    const std::vector<double>& r2_values, bool parallel) {
    if (two_s_values.empty() || z_values.empty() || r2_values.empty())
        throw std::invalid_argument("sweep: empty grid");
    const long nt = static_cast<long>(two_s_values.size());
    const long nz = static_cast<long>(z_values.size());
    const long nr = static_cast<long>(r2_values.size());
    std::vector<SweepRecord> records(static_cast<std::size_t>(nt * nz * nr));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long idx = 0; idx < nt * nz * nr; ++idx) {
        const long it = idx / (nz * nr);
        const long iz = (idx / nr) % nz;
        const long ir = idx % nr;
        SpinMagnitude s(two_s_values[it]);
        const double zm = z_values[iz];
        const double r2 = r2_values[ir];
        BipartiteAmplitudeMatrix out =
            split_state(spin_coherent(s, zm), BeamSplitterParams::from_r2(r2));
        std::vector<double> sv = singular_values(out.c);
        double purity = 0.0;
        for (double v : sv)
            purity += v * v * v * v;
        records[idx] = SweepRecord{s.two_s, zm, r2, von_neumann_from_schmidt(sv),
                                   1.0 - purity};
    }
    return records;
}

}  // namespace detail_entanglement

std::vector<SweepRecord> sweep(const std::vector<int>& two_s_values,
                               const std::vector<double>& z_values,
                               const std::vector<double>& r2_values) {
    return detail_entanglement::sweep_impl(two_s_values, z_values, r2_values, true);
}

PeakResult peak_analysis(cplx z, int two_s_max) {
    if (two_s_max < 1)
        throw std::invalid_argument("peak_analysis: two_s_max must be at least 1");
    PeakResult res{0.0, -1.0, 0, false};
    for (int t = 1; t <= two_s_max; ++t) {
        double e = entanglement_of_output(SpinMagnitude(t), z, 0.5);
        if (e > res.e_peak) {
            res.e_peak = e;
            res.two_s_peak = t;
        }
    }
    res.s_peak = 0.5 * res.two_s_peak;
    res.interior = res.two_s_peak > 1 && res.two_s_peak < two_s_max;
    return res;
}

double limit_overlap(cplx alpha, SpinMagnitude s) {
    const double a2 = std::norm(alpha);
    if (a2 == 0.0)
        return 1.0;
    const double two_s = s.two_s;
    const double la2 = std::log(a2);
    const double lpref = -0.5 * a2 - 0.5 * two_s * std::log1p(a2 / two_s);
    std::vector<double> terms;
    terms.reserve(64);
    double lmax = -std::numeric_limits<double>::infinity();
    for (int n = 0; n <= s.two_s; ++n) {
        double lt = 0.5 * (std::lgamma(two_s + 1.0) - std::lgamma(two_s - n + 1.0) -
                           n * std::log(two_s)) +
                    n * la2 - std::lgamma(n + 1.0);
        terms.push_back(lt);
        lmax = std::max(lmax, lt);
        if (lt < lmax - 60.0 && n > 4)
            break;  // remaining terms are below double precision
    }
    return std::exp(lpref + log_sum_exp(terms));
}

}  // namespace spincoh
