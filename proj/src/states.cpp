#include "spincoh/states.hpp"

#include <cmath>
#include <stdexcept>

namespace spincoh {

SpinMagnitude::SpinMagnitude(int t) : two_s(t) {
    if (t < 1)
        throw std::invalid_argument("SpinMagnitude: two_s must be at least 1");
}

FockVector make_state(Eigen::VectorXcd amps, std::string label) {
    double n = amps.norm();
    if (n <= 0.0 || !std::isfinite(n))
        throw std::invalid_argument("make_state: amplitudes have no finite norm");
    FockVector v;
    v.amps = amps / n;
    v.label = std::move(label);
    return v;
}

FockVector spin_coherent(SpinMagnitude s, cplx z) {
    const int d = s.dim();
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(d);
    const double zmod = std::abs(z);
    if (zmod == 0.0) {
        a(0) = 1.0;
    } else {
        const double lz = std::log(zmod);
        const double lnorm = 0.5 * s.two_s * std::log1p(zmod * zmod);
        const double ph = std::arg(z);
        for (int n = 0; n < d; ++n) {
            double lm = 0.5 * log_binomial(s.two_s, n) + n * lz - lnorm;
            a(n) = std::polar(std::exp(lm), -n * ph);
        }
        a /= a.norm();
    }
    FockVector v;
    v.amps = a;
    v.label = "spin_coherent";
    return v;
}

GlauberResult glauber_truncated(cplx alpha, int cutoff) {
    if (cutoff < 1)
        throw std::invalid_argument("glauber_truncated: cutoff must be at least 1");
    const int d = cutoff + 1;
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(d);
    const double amod = std::abs(alpha);
    GlauberResult res;
    if (amod == 0.0) {
        a(0) = 1.0;
        res.tail_weight = 0.0;
    } else {
        const double la = std::log(amod);
        const double ph = std::arg(alpha);
        const double lnorm = 0.5 * amod * amod;  // log of e^{|alpha|^2 / 2}
        double kept = 0.0;
        for (int n = 0; n < d; ++n) {
            double lm = n * la - 0.5 * std::lgamma(n + 1.0) - lnorm;
            a(n) = std::polar(std::exp(lm), n * ph);
            kept += std::exp(2.0 * lm);
        }
        res.tail_weight = std::max(0.0, 1.0 - kept);
        a /= a.norm();
    }
    res.tail_warning = res.tail_weight > 0.5;
    res.state.amps = a;
    res.state.label = "glauber_truncated";
    return res;
}

int default_glauber_cutoff(cplx alpha) {
    double amod = std::abs(alpha);
    return static_cast<int>(std::ceil(amod * amod + 10.0 * amod + 20.0));
}

FockVector asymptotic_family(const std::function<double(int, int)>& f, cplx A, int d) {
    if (d < 1)
        throw std::invalid_argument("asymptotic_family: dimension must be at least 1");
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(d);
    const double amod = std::abs(A);
    const double ph = (amod > 0.0) ? std::arg(A) : 0.0;
    for (int n = 0; n < d; ++n) {
        double w = f(n, d);
        if (!(w > 0.0))
            throw std::domain_error("asymptotic_family: weight function must be positive");
        if (amod == 0.0) {
            a(n) = (n == 0) ? cplx(w, 0.0) : cplx(0.0, 0.0);
        } else {
            double lm = std::log(w) + n * std::log(amod) - 0.5 * std::lgamma(n + 1.0);
            a(n) = std::polar(std::exp(lm), n * ph);
        }
    }
    return make_state(a, "asymptotic_family");
}

cplx overlap(const FockVector& a, const FockVector& b) {
    const int n = std::min(a.dim(), b.dim());
    cplx acc(0.0, 0.0);
    for (int i = 0; i < n; ++i)
        acc += std::conj(a.amps(i)) * b.amps(i);
    return acc;
}

double coherent_overlap_closed_form(SpinMagnitude s, cplx alpha, cplx beta) {
    const cplx inner = 1.0 + alpha * std::conj(beta);
    const double ai = std::abs(inner);
    if (ai == 0.0)
        return 0.0;
    double lo = s.two_s * std::log(ai) -
                0.5 * s.two_s * std::log1p(std::norm(alpha)) -
                0.5 * s.two_s * std::log1p(std::norm(beta));
    return std::exp(lo);
}

SpinOps spin_operators(SpinMagnitude s) {
    const int d = s.dim();
    Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
    const double S = s.s();
    for (int n = 0; n < d; ++n) {
        if (n + 1 < d)
            sp(n + 1, n) = std::sqrt(static_cast<double>(n + 1) *
                                     static_cast<double>(s.two_s - n));
        sz(n, n) = n - S;
    }
    Eigen::MatrixXcd sm = sp.adjoint();
    SpinOps ops;
    ops.sx = 0.5 * (sp + sm);
    ops.sy = cplx(0.0, -0.5) * (sp - sm);
    ops.sz = sz;
    return ops;
}

Eigen::MatrixXcd rotation_to(SpinMagnitude s, cplx z) {
    const int d = s.dim();
    const double zmod = std::abs(z);
    if (zmod == 0.0)
        return Eigen::MatrixXcd::Identity(d, d);
    const cplx zeta = std::polar(std::atan(zmod), -std::arg(z));

    Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n)
        sp(n + 1, n) = std::sqrt(static_cast<double>(n + 1) *
                                 static_cast<double>(s.two_s - n));
    Eigen::MatrixXcd a = zeta * sp - std::conj(zeta) * sp.adjoint();

    // exp of the anti-Hermitian generator through the spectrum of -iA
    Eigen::MatrixXcd h = cplx(0.0, -1.0) * a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("rotation_to: eigensolver failed");
    Eigen::VectorXcd phases(d);
    for (int i = 0; i < d; ++i)
        phases(i) = std::polar(1.0, es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

UncertaintyPair uncertainty_product_state(SpinMagnitude s, const FockVector& state,
                                          cplx frame_z) {
    if (state.dim() != s.dim())
        throw std::invalid_argument("uncertainty_product_state: dimension mismatch");
    SpinOps ops = spin_operators(s);
    Eigen::MatrixXcd u = rotation_to(s, frame_z);
    Eigen::MatrixXcd sx = u * ops.sx * u.adjoint();
    Eigen::MatrixXcd sy = u * ops.sy * u.adjoint();
    Eigen::MatrixXcd sz = u * ops.sz * u.adjoint();
    const Eigen::VectorXcd& v = state.amps;
    auto expval = [&](const Eigen::MatrixXcd& m) {
        return std::real(v.dot(m * v));
    };
    UncertaintyPair out;
    out.lhs = expval(sx * sx) * expval(sy * sy);
    double mz = expval(sz);
    out.rhs = 0.25 * mz * mz;
    return out;
}

UncertaintyPair uncertainty_product(SpinMagnitude s, cplx z) {
    return uncertainty_product_state(s, spin_coherent(s, z), z);
}

}  // namespace spincoh
