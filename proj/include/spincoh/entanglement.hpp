// Entropy measures of splitter output, parameter sweeps, the 50:50
// stationarity probe, peak location over spin magnitude, and the
// large-spin overlap with the Poissonian limit state.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spincoh/beamsplitter.hpp"
#include "spincoh/numkit.hpp"
#include "spincoh/states.hpp"

namespace spincoh {

// -sum r ln r over the spectrum, nats; eigenvalues below 1e-14 are treated
// as exact zeros. Throws std::invalid_argument if |trace - 1| > 1e-8.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

// Entropy of the squared singular values of a bipartite amplitude matrix.
double von_neumann_from_schmidt(const std::vector<double>& singular_vals);

// 1 - tr(rho^2). Throws std::invalid_argument if |trace - 1| > 1e-8.
double linear_entropy(const Eigen::MatrixXcd& rho);

// Closed-form output linear entropy of a split spin-coherent input at real
// z modulus and reflection modulus r_mod (|T|^2 = 1 - r_mod^2), evaluated as
// a log-space quadruple sum. r_mod outside [0,1] throws std::domain_error.
double linear_entropy_closed_form(SpinMagnitude s, double z_mod, double r_mod);

// Schmidt-route entanglement of split_state(spin_coherent(s, z), r2), nats.
double entanglement_of_output(SpinMagnitude s, cplx z, double r2);

// 1 - sum of fourth powers of the Schmidt coefficients.
double linear_entropy_of_output(SpinMagnitude s, cplx z, double r2);

// Grid argmax of entanglement over r2 in {i * grid_step}; grid_step must
// divide 1 evenly (std::invalid_argument otherwise); ties resolve toward 0.5.
double argmax_r2(SpinMagnitude s, cplx z, double grid_step);

// Central-difference derivative of the closed-form linear entropy with
// respect to the reflection modulus, taken at r_mod = 1/sqrt(2), h = 1e-5.
double stationarity_check(SpinMagnitude s, double z_mod);

struct SweepRecord {
    int two_s;
    double z_mod;
    double r2;
    double von_neumann;
    double linear;
};

// One record per grid point, ordered two_s-major, then z, then r2.
// Grid points are evaluated in parallel into preassigned slots, so the
// output is identical to the serial reference run.
std::vector<SweepRecord> sweep(const std::vector<int>& two_s_values,
                               const std::vector<double>& z_values,
                               const std::vector<double>& r2_values);

struct PeakResult {
    double s_peak;    // half-integer spin at the maximum
    double e_peak;    // entanglement there, nats
    int two_s_peak;
    bool interior;    // true when the argmax is strictly inside the grid
};

// Argmax of entanglement over two_s = 1..two_s_max at r2 = 1/2.
PeakResult peak_analysis(cplx z, int two_s_max);

// Overlap of the Poissonian state of amplitude alpha with the matched member
// of the spin_coherent family (coherent parameter conj(alpha)/sqrt(2S)),
// evaluated as a manifestly nonnegative log-space series.
double limit_overlap(cplx alpha, SpinMagnitude s);

namespace detail_entanglement {

// Shared kernels behind the public entry points; parallel = false gives the
// serial reference path with the same slot-then-combine accumulation.
double linear_entropy_closed_form_impl(SpinMagnitude s, double z_mod, double r_mod,
                                       bool parallel);
std::vector<SweepRecord> sweep_impl(const std::vector<int>& two_s_values,
                                    const std::vector<double>& z_values,
                                    const std::vector<double>& r2_values, bool parallel);

}  // namespace detail_entanglement

}  // namespace spincoh
