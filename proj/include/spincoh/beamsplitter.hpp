// Binomial beam-splitter transform on Fock inputs plus mode reductions by
// trace-out and by closed-form summation.
#pragma once

#include <Eigen/Dense>

#include "spincoh/numkit.hpp"
#include "spincoh/states.hpp"

namespace spincoh {

struct BeamSplitterParams {
    double t_mod, r_mod;
    double t_phase = 0.0, r_phase = 0.0;

    // Validates |T|^2 + |R|^2 = 1 within 1e-12; throws std::invalid_argument.
    BeamSplitterParams(double t_mod_, double r_mod_, double t_phase_ = 0.0,
                       double r_phase_ = 0.0);

    // T = sqrt(1 - r2), R = sqrt(r2), phases zero.
    static BeamSplitterParams from_r2(double r2);

    cplx t() const { return std::polar(t_mod, t_phase); }
    cplx r() const { return std::polar(r_mod, r_phase); }
};

// Two-mode output amplitudes c[p][q] = <p,q|out>; square, zero above the
// anti-diagonal p + q = dim - 1 for number-conserving inputs.
struct BipartiteAmplitudeMatrix {
    Eigen::MatrixXcd c;

    int dim() const { return static_cast<int>(c.rows()); }
};

// |n,0> input: c[p][n-p] = C(n,p)^{1/2} T^p R^{n-p}. Throws std::domain_error
// unless 0 <= n < dim.
BipartiteAmplitudeMatrix split_fock(int n, const BeamSplitterParams& params, int dim);

// Linear extension over the input amplitudes; unit Frobenius norm.
BipartiteAmplitudeMatrix split_state(const FockVector& input, const BeamSplitterParams& params);

// First-mode reduction C C^dagger: trace 1, positive semidefinite.
Eigen::MatrixXcd reduced_density_matrix(const BipartiteAmplitudeMatrix& out);

// Second-mode reduction: entry [q][q'] = sum_p c[p][q] conj(c[p][q']).
Eigen::MatrixXcd reduced_density_matrix_b(const BipartiteAmplitudeMatrix& out);

// Direct summation for the reduction of the reflected (R-weighted) mode of a
// split spin-coherent input; log-space factorials throughout. Matches
// reduced_density_matrix_b(split_state(spin_coherent(s, z), params))
// entrywise; the two reductions share one spectrum, so entropy routes agree
// for either mode.
Eigen::MatrixXcd reduced_density_matrix_closed_form(SpinMagnitude s, cplx z,
                                                    const BeamSplitterParams& params);

namespace detail_beamsplitter {

// Kernel behind the public entry point; parallel = false gives the serial
// reference path writing the same disjoint entry slots.
Eigen::MatrixXcd reduced_density_matrix_closed_form_impl(SpinMagnitude s, cplx z,
                                                         const BeamSplitterParams& params,
                                                         bool parallel);

}  // namespace detail_beamsplitter

}  // namespace spincoh
