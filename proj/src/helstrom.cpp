#include "spincoh/helstrom.hpp"

#include <cmath>
#include <stdexcept>

namespace spincoh {

namespace {

constexpr double kPi = 3.14159265358979323846;

// orthonormal pair spanning {A, B} plus the coordinates of B in that basis:
// B = g * b0 + s * b1 with s = sqrt(1 - |g|^2) real nonnegative
struct SpanBasis {
    Eigen::VectorXcd b0, b1;
    cplx g;
    double s;
    bool one_dimensional;
};

SpanBasis span_basis(const DiscriminationProblem& problem) {
    SpanBasis sb;
    sb.b0 = problem.state_a.amps;
    sb.g = sb.b0.dot(problem.state_b.amps);
    Eigen::VectorXcd w = problem.state_b.amps - sb.g * sb.b0;
    const double wn = w.norm();
    sb.one_dimensional = wn < 1e-7;
    if (sb.one_dimensional) {
        sb.b1 = Eigen::VectorXcd::Zero(sb.b0.size());
        sb.s = 0.0;
    } else {
        sb.b1 = w / wn;
        sb.s = wn;
    }
    return sb;
}

// weighted difference p_a |A><A| - p_b |B><B| restricted to the span basis
Eigen::Matrix2cd gram_difference(const DiscriminationProblem& problem,
                                 const SpanBasis& sb) {
    Eigen::Matrix2cd gamma;
    const double pa = problem.p_a, pb = problem.p_b;
    gamma(0, 0) = pa - pb * std::norm(sb.g);
    gamma(0, 1) = -pb * sb.g * sb.s;
    gamma(1, 0) = std::conj(gamma(0, 1));
    gamma(1, 1) = -pb * sb.s * sb.s;
    return gamma;
}

}  // namespace

DiscriminationProblem::DiscriminationProblem(FockVector a, FockVector b, double pa,
                                             double pb)
    : state_a(std::move(a)), state_b(std::move(b)), p_a(pa), p_b(pb) {
    if (p_a < 0.0 || p_b < 0.0 || std::abs(p_a + p_b - 1.0) > 1e-12)
        throw std::invalid_argument(
            "DiscriminationProblem: priors must be nonnegative and sum to 1");
    if (state_a.dim() != state_b.dim())
        throw std::invalid_argument("DiscriminationProblem: dimension mismatch");
    if (std::abs(state_a.norm() - 1.0) > 1e-8 || std::abs(state_b.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("DiscriminationProblem: states must be normalized");
}

double error_probability_closed_form(SpinMagnitude s, cplx alpha, cplx beta,
                                     double p_a) {
    if (p_a < 0.0 || p_a > 1.0)
        throw std::invalid_argument("error_probability_closed_form: p_a outside [0, 1]");
    const double ov = coherent_overlap_closed_form(s, alpha, beta);
    const double radicand = 1.0 - 4.0 * p_a * (1.0 - p_a) * ov * ov;
    if (radicand < -1e-12)
        throw std::invalid_argument(
            "error_probability_closed_form: radicand below zero beyond tolerance");
    return 0.5 * (1.0 - std::sqrt(std::max(0.0, radicand)));
}

TwoOutcomePOVM optimal_povm(const DiscriminationProblem& problem) {
    const int d = problem.state_a.dim();
    TwoOutcomePOVM povm;
    povm.e_a = Eigen::MatrixXcd::Zero(d, d);
    povm.e_b = Eigen::MatrixXcd::Identity(d, d);

    SpanBasis sb = span_basis(problem);
    if (sb.one_dimensional) {
        if (std::abs(problem.p_a - problem.p_b) <= 1e-12) {
            povm.degenerate = true;  // any measurement is optimal; report the trivial one
            return povm;
        }
        if (problem.p_a > problem.p_b) {
            povm.e_a = sb.b0 * sb.b0.adjoint();
            povm.e_b -= povm.e_a;
        }
        return povm;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram_difference(problem, sb));
    Eigen::MatrixXcd q(d, 2);
    q.col(0) = sb.b0;
    q.col(1) = sb.b1;
    for (int k = 0; k < 2; ++k) {
        if (es.eigenvalues()(k) > 1e-14) {
            Eigen::VectorXcd v = q * es.eigenvectors().col(k);
            povm.e_a += v * v.adjoint();
        }
    }
    povm.e_b -= povm.e_a;
    return povm;
}

double error_probability_from_povm(const DiscriminationProblem& problem,
                                   const TwoOutcomePOVM& povm) {
    const cplx miss_a = problem.state_a.amps.dot(povm.e_b * problem.state_a.amps);
    const cplx miss_b = problem.state_b.amps.dot(povm.e_a * problem.state_b.amps);
    return problem.p_a * miss_a.real() + problem.p_b * miss_b.real();
}

double brute_force_min_error(const DiscriminationProblem& problem, int angle_grid) {
    if (angle_grid < 64)
        throw std::invalid_argument("brute_force_min_error: angle_grid must be >= 64");
    const double pa = problem.p_a, pb = problem.p_b;
    SpanBasis sb = span_basis(problem);
    if (sb.one_dimensional)
        return std::min(pa, pb);
    const cplx gbar = std::conj(sb.g);
    const double s = sb.s;

    // candidate projector cos(th) b0 + sin(th) e^{-i ph} b1 inside the span;
    // misidentification probability in the 2x2 coordinates
    auto pe = [&](double th, double ph) {
        const double c = std::cos(th), sn = std::sin(th);
        const cplx cb = gbar * c + s * std::polar(sn, ph);
        return pa * sn * sn + pb * std::norm(cb);
    };
    // inner golden section over theta; the objective is a sinusoid in 2 theta,
    // hence unimodal on [0, pi/2]
    auto h = [&](double ph) {
        double th = golden_min([&](double t) { return pe(t, ph); }, 0.0, 0.5 * kPi);
        return pe(th, ph);
    };

    double best = std::min(pa, pb);  // always attainable by a constant guess
    double ph_seed = 0.0, h_seed = h(0.0);
    for (int i = 0; i < angle_grid; ++i) {
        const double ph = 2.0 * kPi * i / angle_grid;
        for (int j = 0; j <= angle_grid; ++j) {
            const double th = 0.5 * kPi * j / angle_grid;
            best = std::min(best, pe(th, ph));
        }
        const double hv = h(ph);
        if (hv < h_seed) {
            h_seed = hv;
            ph_seed = ph;
        }
    }
    const double ph_star = golden_min(h, ph_seed - 0.5 * kPi, ph_seed + 0.5 * kPi);
    return std::min(best, std::min(h_seed, h(ph_star)));
}

PostMeasurementStates post_measurement_states(const DiscriminationProblem& problem) {
    SpanBasis sb = span_basis(problem);
    if (sb.one_dimensional)
        throw std::invalid_argument(
            "post_measurement_states: states span a single dimension");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram_difference(problem, sb));
    const int d = problem.state_a.dim();
    Eigen::MatrixXcd q(d, 2);
    q.col(0) = sb.b0;
    q.col(1) = sb.b1;

    auto embed = [&](int col) {
        Eigen::VectorXcd v = q * es.eigenvectors().col(col);
        double vmax = v.cwiseAbs().maxCoeff();
        for (int i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > 1e-12 * vmax) {
                v *= std::polar(1.0, -std::arg(v(i)));
                break;
            }
        }
        return v;
    };
    // ascending eigenvalues: column 1 carries the nonnegative branch
    PostMeasurementStates out{make_state(embed(1), "e_a"), make_state(embed(0), "e_b")};
    return out;
}

namespace detail_helstrom {

std::vector<HelstromRecord> helstrom_sweep_impl(cplx alpha,
                                                const std::vector<cplx>& beta_grid,
                                                double p_a, int two_s_lo, int two_s_hi,
                                                bool parallel) {
    if (beta_grid.empty())
        throw std::invalid_argument("helstrom_sweep: empty beta grid");
    if (two_s_lo < 1 || two_s_hi < two_s_lo)
        throw std::invalid_argument("helstrom_sweep: need 1 <= two_s_lo <= two_s_hi");
    if (p_a < 0.0 || p_a > 1.0)
        throw std::invalid_argument("helstrom_sweep: p_a outside [0, 1]");
    const long nb = static_cast<long>(beta_grid.size());
    const long nt = two_s_hi - two_s_lo + 1;
    std::vector<HelstromRecord> records(static_cast<std::size_t>(nb * nt));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long idx = 0; idx < nt * nb; ++idx) {
        const int t = two_s_lo + static_cast<int>(idx / nb);
        const cplx beta = beta_grid[static_cast<std::size_t>(idx % nb)];
        records[idx] = HelstromRecord{
            t, beta, p_a, error_probability_closed_form(SpinMagnitude(t), alpha, beta, p_a)};
    }
    return records;
}

}  // namespace detail_helstrom

std::vector<HelstromRecord> helstrom_sweep(cplx alpha, const std::vector<cplx>& beta_grid,
                                           double p_a, int two_s_lo, int two_s_hi) {
    return detail_helstrom::helstrom_sweep_impl(alpha, beta_grid, p_a, two_s_lo, two_s_hi,
                                                true);
}

}  // namespace spincoh
