#include "spincoh/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spincoh {

double log_binomial(long n, long k) {
    if (n < 0 || n > 1000000)
        throw std::domain_error("log_binomial: n outside [0, 1e6]");
    if (k < 0 || k > n)
        throw std::domain_error("log_binomial: k outside [0, n]");
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

std::vector<double> hermitian_spectrum(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_spectrum: matrix not square");
    const double tol = 1e-10;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
                throw std::invalid_argument("hermitian_spectrum: matrix not Hermitian");
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_spectrum: eigensolver failed");
    Eigen::VectorXd ev = es.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& m) {
    if (!m.allFinite())
        throw std::invalid_argument("singular_values: non-finite entries");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    Eigen::VectorXd sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double log_sum_exp(const std::vector<double>& xs) {
    if (xs.empty())
        return -std::numeric_limits<double>::infinity();
    double mx = *std::max_element(xs.begin(), xs.end());
    if (!std::isfinite(mx))
        return mx;
    double acc = 0.0;
    for (double x : xs)
        acc += std::exp(x - mx);
    return mx + std::log(acc);
}

ComplexPolynomial ComplexPolynomial::from_raw(std::vector<cplx> raw) {
    ComplexPolynomial p;
    p.declared_length = raw.size();
    if (raw.empty()) {
        p.coeffs = {cplx(0.0, 0.0)};
        p.declared_length = 1;
        return p;
    }
    double maxmod = 0.0;
    for (const cplx& c : raw)
        maxmod = std::max(maxmod, std::abs(c));
    std::size_t last = 0;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (std::abs(raw[i]) > 1e-12 * maxmod)
            last = i;
    raw.resize(std::max<std::size_t>(last + 1, 1));
    p.coeffs = std::move(raw);
    return p;
}

cplx ComplexPolynomial::eval(cplx z) const {
    cplx acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + coeffs[i];
    return acc;
}

namespace {

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * z + c[i];
    return acc;
}

cplx horner_derivative(const std::vector<cplx>& c, cplx z) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 1;)
        acc = acc * z + c[i] * static_cast<double>(i);
    return acc;
}

// Rounding noise of Horner at z is proportional to sum_k |c_k| |z|^k, not to
// max |c_k|, so residual acceptance must be measured against this scale.
double eval_scale(const std::vector<cplx>& c, cplx z) {
    double scale = 0.0, zp = 1.0;
    const double az = std::abs(z);
    for (const cplx& x : c) {
        scale += std::abs(x) * zp;
        zp *= az;
    }
    return scale;
}

// Taylor coefficients of p about c via repeated synthetic division.
std::vector<cplx> taylor_at(std::vector<cplx> c, cplx center) {
    const std::size_t n = c.size();
    std::vector<cplx> t(n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx rem(0.0, 0.0);
        for (std::size_t i = c.size(); i-- > 0;) {
            cplx next = c[i] + rem * center;
            rem = next;
            c[i] = next;
        }
        // after one pass c[0] holds p(center); shift down for the next pass
        t[j] = c[0];
        c.erase(c.begin());
        if (c.empty())
            break;
    }
    return t;
}

// If every root coincides, p is its leading term times (z - c)^n with
// c = -c_{n-1} / (n c_n); confirmed when all lower Taylor coefficients at c
// vanish relative to perturbation-scale bounds.
bool all_roots_coincide(const std::vector<cplx>& coeffs, cplx& center) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 2)
        return false;
    center = -coeffs[n - 1] / (static_cast<double>(n) * coeffs[n]);
    std::vector<cplx> t = taylor_at(coeffs, center);
    const double rho = std::max(1.0, std::abs(center));
    const double eta = 1e-8;
    for (int j = 0; j < n; ++j) {
        double scale = 0.0;
        for (int k = j; k <= n; ++k)
            scale += std::abs(coeffs[k]) * std::exp(log_binomial(k, j)) *
                     std::pow(rho, k - j);
        if (std::abs(t[j]) > eta * scale)
            return false;
    }
    return true;
}

std::vector<cplx> aberth(const std::vector<cplx>& coeffs, bool parallel) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<cplx> z(n);

    double cauchy = 0.0;
    for (int k = 0; k < n; ++k)
        cauchy = std::max(cauchy, std::abs(coeffs[k] / coeffs[n]));
    double r0 = std::abs(coeffs[0] / coeffs[n]);
    r0 = (r0 > 0) ? std::pow(r0, 1.0 / n) : 0.5;
    r0 = std::min(std::max(r0, 0.5), 1.0 + cauchy);

    std::mt19937_64 rng(0x51e9c0deULL);
    std::uniform_real_distribution<double> jitter(-0.02, 0.02);
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * (i + 0.25) / n + jitter(rng);
        double rad = r0 * (1.0 + jitter(rng));
        z[i] = std::polar(rad, ang);
    }

    std::vector<cplx> znew(n);
    const double eps = std::numeric_limits<double>::epsilon();
    const int cap = 500;
    for (int it = 0; it < cap; ++it) {
        bool converged = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
        for (int i = 0; i < n; ++i) {
            cplx zi = z[i];
            cplx pv = horner(coeffs, zi);
            cplx dv = horner_derivative(coeffs, zi);
            cplx s(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i)
                    s += 1.0 / (zi - z[j]);
            cplx denom = dv - pv * s;
            cplx step;
            if (std::abs(denom) < 1e-300)
                step = cplx(0.1, 0.05) * (1.0 + std::abs(zi));
            else
                step = pv / denom;
            znew[i] = zi - step;
        }
        std::swap(z, znew);

        // stop when every residual is at the backward-stable floor
        for (int i = 0; i < n && converged; ++i) {
            double scale = 0.0, zp = 1.0;
            double azi = std::abs(z[i]);
            for (int k = 0; k <= n; ++k) {
                scale += std::abs(coeffs[k]) * zp;
                zp *= azi;
            }
            if (std::abs(horner(coeffs, z[i])) > 16.0 * n * eps * scale)
                converged = false;
        }
        if (converged)
            return z;

        bool small_steps = true;
        for (int i = 0; i < n && small_steps; ++i)
            if (std::abs(z[i] - znew[i]) > 1e-14 * (1.0 + std::abs(z[i])))
                small_steps = false;
        if (small_steps)
            return z;
    }
    throw std::runtime_error("polynomial_roots: iteration cap reached without convergence");
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

namespace detail {

RootSet polynomial_roots_impl(const ComplexPolynomial& p, bool parallel) {
    if (p.declared_length < p.coeffs.size())
        throw std::invalid_argument("polynomial_roots: declared_length below stored length");

    RootSet result;
    std::vector<cplx> c = p.coeffs;
    const int trimmed_degree = static_cast<int>(c.size()) - 1;
    result.infinity_count =
        static_cast<int>(p.declared_length) - 1 - trimmed_degree;

    double maxmod = 0.0;
    for (const cplx& x : c)
        maxmod = std::max(maxmod, std::abs(x));
    if (maxmod == 0.0)
        return result;  // zero polynomial: no isolated finite roots

    // low-power coefficients below the trim tolerance are exact origin roots
    int origin = 0;
    while (c.size() > 1 && std::abs(c.front()) <= 1e-12 * maxmod) {
        c.erase(c.begin());
        ++origin;
    }

    const int n = static_cast<int>(c.size()) - 1;
    std::vector<cplx> roots;
    if (n == 1) {
        roots.push_back(-c[0] / c[1]);
    } else if (n >= 2) {
        cplx center;
        if (all_roots_coincide(c, center)) {
            roots.assign(n, center);
        } else if (n == 2) {
            // one stable quadratic branch plus the product identity
            cplx a = c[2], b = c[1], cc = c[0];
            cplx disc = std::sqrt(b * b - 4.0 * a * cc);
            cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                             : -0.5 * (b - disc);
            if (std::abs(q) < 1e-300) {
                roots.assign(2, -b / (2.0 * a));
            } else {
                roots.push_back(q / a);
                roots.push_back(cc / q);
            }
        } else {
            roots = aberth(c, parallel);
            // collapse clusters to their centroid when the centroid still
            // satisfies the residual bound
            const double ctol = 1e-4;
            DisjointSet ds(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (std::abs(roots[i] - roots[j]) <= ctol)
                        ds.unite(i, j);
            std::vector<std::vector<int>> groups(n);
            for (int i = 0; i < n; ++i)
                groups[ds.find(i)].push_back(i);
            for (const auto& g : groups) {
                if (g.size() < 2)
                    continue;
                cplx centroid(0.0, 0.0);
                for (int idx : g)
                    centroid += roots[idx];
                centroid /= static_cast<double>(g.size());
                const double snap_scale = std::max(maxmod, eval_scale(c, centroid));
                if (std::abs(horner(c, centroid)) <= 1e-8 * snap_scale)
                    for (int idx : g)
                        roots[idx] = centroid;
            }
        }
    }

    for (int i = 0; i < origin; ++i)
        roots.push_back(cplx(0.0, 0.0));

    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });

    for (const cplx& r : roots) {
        const double rscale = std::max(maxmod, eval_scale(p.coeffs, r));
        if (std::abs(p.eval(r)) > 1e-8 * rscale)
            throw std::runtime_error("polynomial_roots: root failed the residual bound");
    }

    result.roots = std::move(roots);
    return result;
}

}  // namespace detail

RootSet polynomial_roots(const ComplexPolynomial& p) {
    return detail::polynomial_roots_impl(p, true);
}

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double tol) {
    const int n = static_cast<int>(roots.size());
    std::vector<RootCluster> out;
    if (n == 0)
        return out;
    DisjointSet ds(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= tol)
                ds.unite(i, j);
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i)
        groups[ds.find(i)].push_back(i);
    for (const auto& g : groups) {
        if (g.empty())
            continue;
        cplx centroid(0.0, 0.0);
        for (int idx : g)
            centroid += roots[idx];
        centroid /= static_cast<double>(g.size());
        out.push_back({centroid, static_cast<int>(g.size())});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.center.real() != b.center.real())
            return a.center.real() < b.center.real();
        return a.center.imag() < b.center.imag();
    });
    return out;
}

}  // namespace spincoh
