// Serial twins of the parallel kernels. Each mirrors the parallel version's
// per-element arithmetic and accumulation structure exactly, so outputs are
// bitwise identical and tests can assert exact equality.
#pragma once

#include <vector>

#include "spincoh/beamsplitter.hpp"
#include "spincoh/entanglement.hpp"
#include "spincoh/helstrom.hpp"
#include "spincoh/numkit.hpp"

namespace spincoh::reference {

std::vector<SweepRecord> sweep(const std::vector<int>& two_s_values,
                               const std::vector<double>& z_values,
                               const std::vector<double>& r2_values);

double linear_entropy_closed_form(SpinMagnitude s, double z_mod, double r_mod);

Eigen::MatrixXcd reduced_density_matrix_closed_form(SpinMagnitude s, cplx z,
                                                    const BeamSplitterParams& params);

std::vector<HelstromRecord> helstrom_sweep(cplx alpha, const std::vector<cplx>& beta_grid,
                                           double p_a, int two_s_lo, int two_s_hi);

RootSet polynomial_roots(const ComplexPolynomial& p);

}  // namespace spincoh::reference
