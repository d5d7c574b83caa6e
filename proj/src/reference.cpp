#include "spincoh/reference.hpp"

namespace spincoh::reference {

std::vector<SweepRecord> sweep(const std::vector<int>& two_s_values,
                               const std::vector<double>& z_values,
                               const std::vector<double>& r2_values) {
    return detail_entanglement::sweep_impl(two_s_values, z_values, r2_values, false);
}

double linear_entropy_closed_form(SpinMagnitude s, double z_mod, double r_mod) {
    return detail_entanglement::linear_entropy_closed_form_impl(s, z_mod, r_mod, false);
}

Eigen::MatrixXcd reduced_density_matrix_closed_form(SpinMagnitude s, cplx z,
                                                    const BeamSplitterParams& params) {
    return detail_beamsplitter::reduced_density_matrix_closed_form_impl(s, z, params,
                                                                        false);
}

std::vector<HelstromRecord> helstrom_sweep(cplx alpha, const std::vector<cplx>& beta_grid,
                                           double p_a, int two_s_lo, int two_s_hi) {
    return detail_helstrom::helstrom_sweep_impl(alpha, beta_grid, p_a, two_s_lo,
                                                two_s_hi, false);
}

RootSet polynomial_roots(const ComplexPolynomial& p) {
    return detail::polynomial_roots_impl(p, false);
}

}  // namespace spincoh::reference
