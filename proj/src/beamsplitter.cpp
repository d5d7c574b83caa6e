#include "spincoh/beamsplitter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spincoh {

BeamSplitterParams::BeamSplitterParams(double t_mod_, double r_mod_, double t_phase_,
                                       double r_phase_)
    : t_mod(t_mod_), r_mod(r_mod_), t_phase(t_phase_), r_phase(r_phase_) {
    if (t_mod < 0.0 || r_mod < 0.0)
        throw std::invalid_argument("BeamSplitterParams: moduli must be nonnegative");
    if (std::abs(t_mod * t_mod + r_mod * r_mod - 1.0) > 1e-12)
        throw std::invalid_argument("BeamSplitterParams: |T|^2 + |R|^2 must equal 1");
}

BeamSplitterParams BeamSplitterParams::from_r2(double r2) {
    if (r2 < 0.0 || r2 > 1.0)
        throw std::invalid_argument("BeamSplitterParams: r2 outside [0, 1]");
    // clamp the complementary square against rounding at the endpoints
    double t2 = std::max(0.0, 1.0 - r2);
    BeamSplitterParams p(std::sqrt(t2), std::sqrt(r2));
    return p;
}

namespace {

// log |T|^k with the k = 0, T = 0 corner handled exactly
double pow_log(double mod, int k) {
    if (k == 0)
        return 0.0;
    if (mod == 0.0)
        return -std::numeric_limits<double>::infinity();
    return k * std::log(mod);
}

}  // namespace

BipartiteAmplitudeMatrix split_fock(int n, const BeamSplitterParams& params, int dim) {
    if (n < 0 || n >= dim)
        throw std::domain_error("split_fock: occupation outside [0, dim)");
    BipartiteAmplitudeMatrix out;
    out.c = Eigen::MatrixXcd::Zero(dim, dim);
    for (int p = 0; p <= n; ++p) {
        const int q = n - p;
        double lm = 0.5 * log_binomial(n, p) + pow_log(params.t_mod, p) +
                    pow_log(params.r_mod, q);
        double phase = p * params.t_phase + q * params.r_phase;
        out.c(p, q) = std::polar(std::exp(lm), phase);
    }
    return out;
}

BipartiteAmplitudeMatrix split_state(const FockVector& input,
                                     const BeamSplitterParams& params) {
    const int d = input.dim();
    BipartiteAmplitudeMatrix out;
    out.c = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        const cplx an = input.amps(n);
        if (an == cplx(0.0, 0.0))
            continue;
        const double lan = std::log(std::abs(an));
        const double pan = std::arg(an);
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            double lm = lan + 0.5 * log_binomial(n, p) + pow_log(params.t_mod, p) +
                        pow_log(params.r_mod, q);
            double phase = pan + p * params.t_phase + q * params.r_phase;
            out.c(p, q) = std::polar(std::exp(lm), phase);
        }
    }
    return out;
}

Eigen::MatrixXcd reduced_density_matrix(const BipartiteAmplitudeMatrix& out) {
    return out.c * out.c.adjoint();
}

Eigen::MatrixXcd reduced_density_matrix_b(const BipartiteAmplitudeMatrix& out) {
    return out.c.transpose() * out.c.conjugate();
}

namespace detail_beamsplitter {

Eigen::MatrixXcd reduced_density_matrix_closed_form_impl(SpinMagnitude s, cplx z,
                                                         const BeamSplitterParams& params,
                                                         bool parallel) {
    const int d = s.dim();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    const double zmod = std::abs(z);
    const double zphase = std::arg(z);
    const double lg2s = std::lgamma(s.two_s + 1.0);
    const double lnorm = s.two_s * std::log1p(zmod * zmod);

    // each matrix entry is an independent single-sum evaluation, so threads
    // write disjoint slots and the result matches the serial pass exactly
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int idx = 0; idx < d * d; ++idx) {
        const int p = idx / d;
        const int pp = idx % d;
        const int mmax = std::min(s.two_s - p, s.two_s - pp);
        double tot = 0.0;
        for (int m = 0; m <= mmax; ++m) {
            double le = lg2s - lnorm;
            le -= 0.5 * (std::lgamma(p + 1.0) + std::lgamma(pp + 1.0) +
                         std::lgamma(s.two_s - m - p + 1.0) +
                         std::lgamma(s.two_s - m - pp + 1.0));
            le -= std::lgamma(m + 1.0);
            le += pow_log(zmod, 2 * m + p + pp);
            le += pow_log(params.t_mod, 2 * m);
            le += pow_log(params.r_mod, p + pp);
            tot += std::exp(le);
        }
        // the transmission phase cancels inside the traced sum; the input
        // phase and the reflection phase survive as one diagonal twist
        rho(p, pp) = std::polar(tot, (pp - p) * (zphase - params.r_phase));
    }
    return rho;
}

}  // namespace detail_beamsplitter

Eigen::MatrixXcd reduced_density_matrix_closed_form(SpinMagnitude s, cplx z,
                                                    const BeamSplitterParams& params) {
    return detail_beamsplitter::reduced_density_matrix_closed_form_impl(s, z, params,
                                                                        true);
}

}  // namespace spincoh
