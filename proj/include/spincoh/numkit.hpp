// Numeric kernels shared by every module: log-space combinatorics, dense
// Hermitian/singular spectra, polynomial root finding with verified
// multiple-root collapse, and small scalar helpers.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace spincoh {

using cplx = std::complex<double>;

// ln C(n, k) via log-gamma. Throws std::domain_error if k is outside [0, n]
// or n exceeds 1e6.
double log_binomial(long n, long k);

// Eigenvalues of a Hermitian matrix, descending. Throws std::invalid_argument
// if the matrix is not square or deviates from Hermiticity by more than 1e-10
// in any entry.
std::vector<double> hermitian_spectrum(const Eigen::MatrixXcd& m);

// Singular values, descending, nonnegative.
std::vector<double> singular_values(const Eigen::MatrixXcd& m);

// log(sum(exp(xs))) without overflow; returns -inf for an empty input.
double log_sum_exp(const std::vector<double>& xs);

// Polynomial with coefficients indexed by power. declared_length records the
// pre-trim coefficient count so consumers can count degree deficiency.
struct ComplexPolynomial {
    std::vector<cplx> coeffs;       // trimmed: back() has modulus above the trim tolerance
    std::size_t declared_length = 0;

    // Trims trailing coefficients below 1e-12 relative to the largest modulus
    // and records the original length.
    static ComplexPolynomial from_raw(std::vector<cplx> raw);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    cplx eval(cplx z) const;
};

struct RootSet {
    std::vector<cplx> roots;   // exactly trimmed-degree entries, multiplicity as repeats
    int infinity_count = 0;    // declared_length - 1 - trimmed degree
};

// All finite roots plus the degree deficiency. A polynomial whose roots all
// coincide (detected through Taylor remainders at the coefficient centroid)
// is collapsed to the exact multiple root before any iteration runs; other
// inputs go through Aberth simultaneous iteration with a deterministic
// jittered starting ring, followed by single-linkage clustering at 1e-4 and
// a residual-verified centroid snap. Throws std::runtime_error if the
// iteration cap is reached or a returned root fails the residual bound.
RootSet polynomial_roots(const ComplexPolynomial& p);

struct RootCluster {
    cplx center;
    int multiplicity;
};

// Groups roots within tol of each other (single linkage) and reports cluster
// centroids with multiplicities, ordered by (re, im) of the centroid.
std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double tol = 1e-4);

// Golden-section minimum of a unimodal function on [lo, hi].
template <class F>
double golden_min(F&& f, double lo, double hi, int iters = 90) {
    const double gr = 0.6180339887498949;
    for (int it = 0; it < iters; ++it) {
        double m1 = hi - gr * (hi - lo);
        double m2 = lo + gr * (hi - lo);
        if (f(m1) < f(m2))
            hi = m2;
        else
            lo = m1;
    }
    return 0.5 * (lo + hi);
}

namespace detail {
// Shared by the public root finder and its serial twin.
RootSet polynomial_roots_impl(const ComplexPolynomial& p, bool parallel);
}  // namespace detail

}  // namespace spincoh
