// Minimum-error discrimination of two pure states: closed form for the
// spin-coherent family, the optimal two-outcome measurement, a brute-force
// projector search, and the post-measurement basis.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spincoh/numkit.hpp"
#include "spincoh/states.hpp"

namespace spincoh {

struct DiscriminationProblem {
    FockVector state_a, state_b;
    double p_a, p_b;

    // Validates p_a + p_b = 1 within 1e-12 and equal dimensions;
    // throws std::invalid_argument.
    DiscriminationProblem(FockVector a, FockVector b, double pa, double pb);
};

struct TwoOutcomePOVM {
    Eigen::MatrixXcd e_a, e_b;
    bool degenerate = false;  // set for identical states with equal priors
};

// (1/2)(1 - sqrt(1 - 4 p_a p_b |overlap|^2)) with the closed-form coherent
// overlap modulus. Throws std::invalid_argument for p_a outside [0,1] or a
// radicand below -1e-12.
double error_probability_closed_form(SpinMagnitude s, cplx alpha, cplx beta, double p_a);

// Spectral split of p_a |A><A| - p_b |B><B| inside span{A, B}, built from the
// 2x2 Gram representation; the orthogonal complement is assigned to e_b.
// Identical states with equal priors return e_a = 0, e_b = I, degenerate set.
TwoOutcomePOVM optimal_povm(const DiscriminationProblem& problem);

// p_a <A|e_b|A> + p_b <B|e_a|B>.
double error_probability_from_povm(const DiscriminationProblem& problem,
                                   const TwoOutcomePOVM& povm);

// Minimum over rank-1 projectors in span{A, B} parametrized by (theta, phi):
// full grid scan, then a golden-section refinement that minimizes over theta
// for each candidate phi (the theta problem is unimodal on [0, pi/2]).
// angle_grid must be at least 64 (std::invalid_argument otherwise).
double brute_force_min_error(const DiscriminationProblem& problem, int angle_grid);

struct PostMeasurementStates {
    FockVector e_a, e_b;
};

// Orthonormal eigenvectors of the weighted difference operator inside
// span{A, B}, embedded in the full space; e_a carries the nonnegative
// eigenvalue. Phases fixed so the lowest-index nonzero amplitude is real
// positive. Throws std::invalid_argument when the span is 1-dimensional.
PostMeasurementStates post_measurement_states(const DiscriminationProblem& problem);

struct HelstromRecord {
    int two_s;
    cplx beta;
    double p_a;
    double p_error;
};

// Closed-form error table over two_s in [two_s_lo, two_s_hi] x beta_grid,
// deterministic row order (two_s-major), rows computed in parallel.
std::vector<HelstromRecord> helstrom_sweep(cplx alpha, const std::vector<cplx>& beta_grid,
                                           double p_a, int two_s_lo, int two_s_hi);

namespace detail_helstrom {

// Kernel behind the public sweep; parallel = false gives the serial reference
// path filling the same preassigned row slots.
std::vector<HelstromRecord> helstrom_sweep_impl(cplx alpha,
                                                const std::vector<cplx>& beta_grid,
                                                double p_a, int two_s_lo, int two_s_hi,
                                                bool parallel);

}  // namespace detail_helstrom

}  // namespace spincoh
