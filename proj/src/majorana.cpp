#include "spincoh/majorana.hpp"

#include <cmath>
#include <stdexcept>

namespace spincoh {

namespace {

// overlap deficiency 1 - |<z|w>|^2 for two members of the coherent family,
// written through the identity (1+|z|^2)(1+|w|^2) - |1+conj(z)w|^2 = |z-w|^2
// so nearby points suffer no cancellation
double overlap_deficiency(int two_s, cplx z, cplx w) {
    const double d = std::norm(z - w) / ((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
    return -std::expm1(two_s * std::log1p(-d));
}

double metric_at(int two_s, cplx z) {
    const double h = 1e-4;
    const double gx = (overlap_deficiency(two_s, z, z + h) +
                       overlap_deficiency(two_s, z, z - h)) /
                      (2.0 * h * h);
    const double gy = (overlap_deficiency(two_s, z, z + cplx(0.0, h)) +
                       overlap_deficiency(two_s, z, z - cplx(0.0, h))) /
                      (2.0 * h * h);
    if (std::abs(gx - gy) > 1e-4 * std::max(gx, gy))
        throw std::runtime_error("fubini_study_metric: directional estimates disagree");
    return 0.5 * (gx + gy);
}

// matrix exponential exp(-i theta G) of a Hermitian generator
Eigen::MatrixXcd hermitian_rotation(const Eigen::MatrixXcd& g, double theta) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
    const int d = static_cast<int>(g.rows());
    Eigen::VectorXcd phases(d);
    for (int k = 0; k < d; ++k)
        phases(k) = std::polar(1.0, -theta * es.eigenvalues()(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double angle_between(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
    // chord-based form keeps full precision for nearly coincident points
    return 2.0 * std::asin(std::min(1.0, 0.5 * (p - q).norm()));
}

std::vector<Eigen::Vector3d> all_points(const MajoranaConstellation& con) {
    std::vector<Eigen::Vector3d> pts = con.finite_points;
    for (int k = 0; k < con.north_pole_multiplicity; ++k)
        pts.emplace_back(0.0, 0.0, 1.0);
    return pts;
}

}  // namespace

ComplexPolynomial amplitude_function(const FockVector& state) {
    const int two_s = state.dim() - 1;
    std::vector<cplx> raw(state.dim());
    for (int n = 0; n <= two_s; ++n)
        raw[n] = std::exp(0.5 * log_binomial(two_s, n)) * state.amps(n);
    return ComplexPolynomial::from_raw(std::move(raw));
}

Eigen::Vector3d sphere_from_plane(cplx w) {
    const double m = std::abs(w);
    if (m > 1e100)
        return Eigen::Vector3d(0.0, 0.0, 1.0);
    const double den = 1.0 + m * m;
    return Eigen::Vector3d(-2.0 * w.real() / den, 2.0 * w.imag() / den,
                           (m * m - 1.0) / den);
}

cplx plane_from_sphere(const Eigen::Vector3d& p) {
    if (1.0 - p.z() < 1e-12)
        throw std::domain_error("plane_from_sphere: point at the north pole");
    return cplx(-p.x(), p.y()) / (1.0 - p.z());
}

cplx antipode_plane(cplx w) {
    if (w == cplx(0.0, 0.0))
        throw std::domain_error("antipode_plane: antipode of 0 is the point at infinity");
    return -1.0 / std::conj(w);
}

MajoranaConstellation constellation(const FockVector& state) {
    MajoranaConstellation con;
    con.source_dim = state.dim();
    RootSet rs = polynomial_roots(amplitude_function(state));
    con.finite_points.reserve(rs.roots.size());
    for (const cplx& w : rs.roots)
        con.finite_points.push_back(sphere_from_plane(w));
    con.north_pole_multiplicity = rs.infinity_count;
    return con;
}

CircleCheck circle_check(cplx a, cplx b, SpinMagnitude s, cplx beta) {
    if (b == cplx(0.0, 0.0))
        throw std::invalid_argument("circle_check: coherent weight b must be nonzero");
    if (beta == cplx(0.0, 0.0))
        throw std::invalid_argument("circle_check: beta must separate the two components");

    FockVector coh = spin_coherent(s, beta);
    Eigen::VectorXcd amps = b * coh.amps;
    amps(0) += a;
    FockVector state = make_state(std::move(amps), "superposition");

    CircleCheck out;
    out.center = -1.0 / std::conj(beta);
    out.degenerate = (a == cplx(0.0, 0.0));
    out.radius = out.degenerate
                     ? 0.0
                     : std::pow(std::abs(a / b), 1.0 / s.two_s) *
                           std::sqrt(1.0 + std::norm(beta)) / std::abs(beta);
    out.max_residual = 0.0;
    RootSet rs = polynomial_roots(amplitude_function(state));
    for (const cplx& w : rs.roots)
        out.max_residual = std::max(out.max_residual,
                                    std::abs(std::abs(w - out.center) - out.radius));
    return out;
}

AntipodalResult antipodal_orthogonality(const FockVector& state, cplx alpha) {
    SpinMagnitude s(state.dim() - 1);
    // <alpha|state> is proportional to the amplitude polynomial evaluated at
    // w = alpha, so orthogonality puts a constellation point at the plane
    // point alpha itself, which is the antipode of the coherent state's own
    // constellation point at -1/conj(alpha)
    const Eigen::Vector3d target = sphere_from_plane(alpha);
    AntipodalResult res{false, std::abs(overlap(state, spin_coherent(s, alpha)))};
    for (const Eigen::Vector3d& p : all_points(constellation(state))) {
        if (angle_between(p, target) < 1e-6) {
            res.has_antipodal_point = true;
            break;
        }
    }
    return res;
}

double rotation_covariance_check(const FockVector& state, double theta, double phi) {
    SpinMagnitude s(state.dim() - 1);
    SpinOps big = spin_operators(s);
    Eigen::MatrixXcd u =
        hermitian_rotation(std::cos(phi) * big.sx + std::sin(phi) * big.sy, theta);
    FockVector rotated = make_state(u * state.amps, state.label);

    // the SO(3) image of the same group element, read off from its action on
    // the two-dimensional representation expanded in the Pauli basis
    SpinOps half = spin_operators(SpinMagnitude(1));
    Eigen::Matrix2cd u1 =
        hermitian_rotation(std::cos(phi) * half.sx + std::sin(phi) * half.sy, theta);
    Eigen::Matrix2cd sig[3];
    sig[0] << 0, 1, 1, 0;
    sig[1] << 0, cplx(0, -1), cplx(0, 1), 0;
    sig[2] << 1, 0, 0, -1;
    Eigen::Matrix3d rot;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            rot(i, j) = 0.5 * (sig[i] * u1 * sig[j] * u1.adjoint()).trace().real();

    std::vector<Eigen::Vector3d> expected = all_points(constellation(state));
    for (Eigen::Vector3d& p : expected)
        p = rot * p;
    std::vector<Eigen::Vector3d> observed = all_points(constellation(rotated));
    if (expected.size() != observed.size())
        throw std::runtime_error("rotation_covariance_check: point count changed");

    std::vector<bool> used(observed.size(), false);
    double worst = 0.0;
    for (const Eigen::Vector3d& p : expected) {
        double best = -1.0;
        std::size_t pick = 0;
        for (std::size_t k = 0; k < observed.size(); ++k) {
            if (used[k])
                continue;
            double ang = angle_between(p, observed[k]);
            if (best < 0.0 || ang < best) {
                best = ang;
                pick = k;
            }
        }
        used[pick] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

double fubini_study_metric(SpinMagnitude s, cplx z) {
    return metric_at(s.two_s, z);
}

double curvature(SpinMagnitude s, cplx z) {
    // calibrated so the two_s = 1 family has unit curvature at the origin
    const double c = 0.12500006314276213;
    const double h = 1e-3;
    auto lng = [&](cplx w) { return std::log(metric_at(s.two_s, w)); };
    const double lap = (lng(z + h) + lng(z - h) + lng(z + cplx(0.0, h)) +
                        lng(z - cplx(0.0, h)) - 4.0 * lng(z)) /
                       (h * h);
    return -(c / metric_at(s.two_s, z)) * lap;
}

}  // namespace spincoh
