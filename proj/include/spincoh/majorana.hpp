// Stellar representation: amplitude polynomial, root constellation on the
// sphere, coherent-superposition circle geometry, antipodal orthogonality,
// rotation covariance, and the phase-space metric and curvature.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spincoh/numkit.hpp"
#include "spincoh/states.hpp"

namespace spincoh {

struct MajoranaConstellation {
    std::vector<Eigen::Vector3d> finite_points;  // unit vectors, multiplicity as repeats
    int north_pole_multiplicity = 0;
    int source_dim = 0;

    int total_points() const {
        return static_cast<int>(finite_points.size()) + north_pole_multiplicity;
    }
};

// Coefficient of z^n is C(2S,n)^{1/2} a_n; declared_length is the state
// dimension so degree deficiency maps to the point at infinity.
ComplexPolynomial amplitude_function(const FockVector& state);

// Plane coordinate w to sphere point; w = 0 is the south pole, |w| -> inf
// the north pole.
Eigen::Vector3d sphere_from_plane(cplx w);

// Inverse projection; throws std::domain_error within 1e-12 of the north pole.
cplx plane_from_sphere(const Eigen::Vector3d& p);

// Antipode in plane coordinates: w -> -1/conj(w).
cplx antipode_plane(cplx w);

// Roots of the amplitude polynomial projected to the sphere; degree
// deficiency becomes north-pole multiplicity.
MajoranaConstellation constellation(const FockVector& state);

struct CircleCheck {
    cplx center;
    double radius;
    double max_residual;
    bool degenerate = false;  // input collapsed to a single coherent state
};

// Builds a|0> + b|beta> (normalized), finds its 2S roots, and compares their
// distances from the predicted center -1/conj(beta) with the predicted
// radius |a/b|^{1/(2S)} sqrt(1+|beta|^2) / |beta|. b = 0 or beta = 0 throws
// std::invalid_argument; a = 0 is flagged degenerate with radius 0.
CircleCheck circle_check(cplx a, cplx b, SpinMagnitude s, cplx beta);

struct AntipodalResult {
    bool has_antipodal_point;
    double overlap_modulus;
};

// True when some constellation point of the state lies within 1e-6 angular
// tolerance of the antipode of the coherent state's point; paired with the
// overlap modulus so the orthogonality biconditional can be checked.
AntipodalResult antipodal_orthogonality(const FockVector& state, cplx alpha);

// Rotates the state by angle theta about the equatorial axis at azimuth phi
// (generator cos(phi) Sx + sin(phi) Sy), rotates the original constellation
// rigidly by the matching SO(3) element, and returns the maximum angular
// mismatch after greedy nearest-neighbor pairing.
double rotation_covariance_check(const FockVector& state, double theta, double phi);

// Quadratic coefficient g of the infinitesimal overlap deficiency
// 1 - |<z|z+delta>|^2 = g |delta|^2 + O(|delta|^4), estimated by symmetric
// finite differences in two directions (isotropy enforced at 1e-4 relative).
double fubini_study_metric(SpinMagnitude s, cplx z);

// Gaussian curvature of g |dz|^2 via -(c/g) Laplacian(ln g) with a 5-point
// stencil; the constant c is calibrated once so that the two_s = 1 state
// space has curvature 1 at the origin.
double curvature(SpinMagnitude s, cplx z);

}  // namespace spincoh
