// State constructors (spin-coherent, truncated Glauber, weighted asymptotic
// family), overlaps, spin operators, and the aligned-frame uncertainty check.
#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "spincoh/numkit.hpp"

namespace spincoh {

// Spin magnitude carried as 2S so half-integer spins stay exact.
struct SpinMagnitude {
    int two_s;

    explicit SpinMagnitude(int t);
    int dim() const { return two_s + 1; }
    double s() const { return 0.5 * two_s; }
};

struct FockVector {
    Eigen::VectorXcd amps;
    std::string label;

    int dim() const { return static_cast<int>(amps.size()); }
    double norm() const { return amps.norm(); }
};

// Normalizes and labels a raw amplitude vector.
FockVector make_state(Eigen::VectorXcd amps, std::string label);

// Lowest-weight rotation family: amplitude of |n> is
// C(2S,n)^{1/2} conj(z)^n / (1+|z|^2)^S, assembled in log space and
// renormalized.
FockVector spin_coherent(SpinMagnitude s, cplx z);

struct GlauberResult {
    FockVector state;
    double tail_weight = 0.0;   // probability mass beyond the cutoff, untruncated normalization
    bool tail_warning = false;  // set when tail_weight > 0.5
};

// Poissonian amplitudes alpha^n / sqrt(n!) for n <= cutoff, renormalized.
GlauberResult glauber_truncated(cplx alpha, int cutoff);

// ceil(|alpha|^2 + 10 |alpha| + 20): Poisson tail beyond ten standard
// deviations is negligible at double precision.
int default_glauber_cutoff(cplx alpha);

// Amplitudes proportional to f(n, d) * A^n / sqrt(n!), renormalized.
// Throws std::domain_error if f is not strictly positive on 0 <= n < d.
FockVector asymptotic_family(const std::function<double(int, int)>& f, cplx A, int d);

// Inner product <a|b>; the shorter vector is zero-padded.
cplx overlap(const FockVector& a, const FockVector& b);

// |<alpha|beta>| for two states of the spin_coherent family:
// |1 + alpha conj(beta)|^{2S} / ((1+|alpha|^2)^S (1+|beta|^2)^S), in log space.
double coherent_overlap_closed_form(SpinMagnitude s, cplx alpha, cplx beta);

struct SpinOps {
    Eigen::MatrixXcd sx, sy, sz;
};

// Irreducible (2S+1)-dimensional representation with basis ordered so |0> is
// the extremal state: raising acts as sqrt((n+1)(2S-n)) |n+1>, sz as (n-S).
SpinOps spin_operators(SpinMagnitude s);

// Unitary with U|0> = spin_coherent(s, z), built as the exponential of
// zeta S+ - conj(zeta) S- with zeta = atan(|z|) e^{-i arg z}.
Eigen::MatrixXcd rotation_to(SpinMagnitude s, cplx z);

struct UncertaintyPair {
    double lhs;  // <Sx'^2> <Sy'^2> in the frame aligned with z
    double rhs;  // (1/4) <Sz'>^2
};

// Both sides of the product uncertainty relation evaluated on
// spin_coherent(s, z) with the operator frame rotated to align with z;
// equality holds for the coherent family.
UncertaintyPair uncertainty_product(SpinMagnitude s, cplx z);

// Same evaluation for an arbitrary state against the frame aligned with
// frame_z; non-coherent states show a strict inequality.
UncertaintyPair uncertainty_product_state(SpinMagnitude s, const FockVector& state, cplx frame_z);

}  // namespace spincoh
