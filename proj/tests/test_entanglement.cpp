#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "spincoh/entanglement.hpp"

using spincoh::cplx;
using spincoh::SpinMagnitude;

TEST_SUITE("entanglement") {

TEST_CASE("von Neumann entropy of a known diagonal state") {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(3, 3);
    rho(0, 0) = 0.7;
    rho(1, 1) = 0.2;
    rho(2, 2) = 0.1;
    double e = spincoh::von_neumann_entropy(rho);
    CHECK(std::abs(e - oracles::entropy({0.7, 0.2, 0.1})) < 1e-12);
    CHECK(e == doctest::Approx(0.8018185).epsilon(1e-6));
}

TEST_CASE("entropy limits: pure and maximally mixed") {
    Eigen::VectorXcd v(4);
    v << cplx(0.5, 0.1), cplx(-0.3, 0.2), cplx(0.0, 0.7), cplx(0.2, 0.0);
    v /= v.norm();
    Eigen::MatrixXcd pure = v * v.adjoint();
    CHECK(spincoh::von_neumann_entropy(pure) < 1e-10);
    CHECK(spincoh::linear_entropy(pure) < 1e-10);

    Eigen::MatrixXcd mixed = 0.25 * Eigen::MatrixXcd::Identity(4, 4);
    CHECK(spincoh::von_neumann_entropy(mixed) == doctest::Approx(std::log(4.0)));
    CHECK(spincoh::linear_entropy(mixed) == doctest::Approx(0.75));
}

TEST_CASE("trace validation") {
    Eigen::MatrixXcd off = 0.5 * Eigen::MatrixXcd::Identity(3, 3);
    CHECK_THROWS_AS(spincoh::von_neumann_entropy(off), std::invalid_argument);
    CHECK_THROWS_AS(spincoh::linear_entropy(off), std::invalid_argument);
}

TEST_CASE("Schmidt-route entropy from singular values") {
    CHECK(spincoh::von_neumann_from_schmidt({1.0, 0.0}) == doctest::Approx(0.0));
    double r = 1.0 / std::sqrt(2.0);
    CHECK(spincoh::von_neumann_from_schmidt({r, r}) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("closed-form linear entropy agrees with the Schmidt route") {
    for (int two_s : {1, 3, 8})
        for (double zm : {0.5, 1.5})
            for (double rm : {0.3, 1.0 / std::sqrt(2.0), 0.9}) {
                SpinMagnitude s(two_s);
                double closed = spincoh::linear_entropy_closed_form(s, zm, rm);
                double schmidt = spincoh::linear_entropy_of_output(s, cplx(zm, 0), rm * rm);
                CHECK(std::abs(closed - schmidt) < 1e-8);
            }
}

TEST_CASE("closed-form linear entropy rejects out-of-range inputs") {
    SpinMagnitude s(4);
    CHECK_THROWS_AS(spincoh::linear_entropy_closed_form(s, 1.0, 1.2), std::domain_error);
    CHECK_THROWS_AS(spincoh::linear_entropy_closed_form(s, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(spincoh::linear_entropy_closed_form(s, -1.0, 0.5), std::domain_error);
}

TEST_CASE("entanglement regression values at the balanced splitter") {
    CHECK(spincoh::entanglement_of_output(SpinMagnitude(30), cplx(1, 0), 0.5) ==
          doctest::Approx(0.142).epsilon(0.004));
    CHECK(std::abs(spincoh::entanglement_of_output(SpinMagnitude(8), cplx(3, 0), 0.5) -
                   1.095927012721) < 1e-8);
    CHECK(std::abs(spincoh::entanglement_of_output(SpinMagnitude(40), cplx(3, 0), 0.5) -
                   0.877708075212) < 1e-8);
    CHECK(std::abs(spincoh::entanglement_of_output(SpinMagnitude(80), cplx(3, 0), 0.5) -
                   0.825617490508) < 1e-8);
    CHECK(std::abs(spincoh::entanglement_of_output(SpinMagnitude(1), cplx(1, 0), 0.5) -
                   0.245775366668) < 1e-8);
    CHECK(std::abs(spincoh::entanglement_of_output(SpinMagnitude(2), cplx(1, 0), 0.5) -
                   0.252528590153) < 1e-8);
}

TEST_CASE("entanglement is symmetric about the balanced splitter") {
    SpinMagnitude s(7);
    const cplx z(1.3, 0.0);
    for (double r2 : {0.1, 0.3, 0.45}) {
        double lo = spincoh::entanglement_of_output(s, z, r2);
        double hi = spincoh::entanglement_of_output(s, z, 1.0 - r2);
        CHECK(std::abs(lo - hi) < 1e-10);
    }
}

TEST_CASE("argmax over the reflectivity grid sits at one half") {
    CHECK(spincoh::argmax_r2(SpinMagnitude(4), cplx(1, 0), 0.05) == 0.5);
    CHECK(spincoh::argmax_r2(SpinMagnitude(9), cplx(2, 0), 0.25) == 0.5);
    CHECK_THROWS_AS(spincoh::argmax_r2(SpinMagnitude(4), cplx(1, 0), 0.3),
                    std::invalid_argument);
    CHECK_THROWS_AS(spincoh::argmax_r2(SpinMagnitude(4), cplx(1, 0), 0.0),
                    std::invalid_argument);
}

TEST_CASE("balanced point is stationary for the closed-form linear entropy") {
    CHECK(std::abs(spincoh::stationarity_check(SpinMagnitude(6), 2.0)) < 1e-6);
    CHECK(std::abs(spincoh::stationarity_check(SpinMagnitude(11), 0.5)) < 1e-6);
}

TEST_CASE("sweep covers the grid in deterministic order") {
    const std::vector<int> ts = {2, 5};
    const std::vector<double> zs = {0.5, 1.5};
    const std::vector<double> r2s = {0.25, 0.5};
    auto records = spincoh::sweep(ts, zs, r2s);
    REQUIRE(records.size() == 8);
    std::size_t idx = 0;
    for (int t : ts)
        for (double zm : zs)
            for (double r2 : r2s) {
                const auto& rec = records[idx++];
                CHECK(rec.two_s == t);
                CHECK(rec.z_mod == zm);
                CHECK(rec.r2 == r2);
                CHECK(rec.von_neumann ==
                      doctest::Approx(spincoh::entanglement_of_output(SpinMagnitude(t),
                                                                      cplx(zm, 0), r2))
                          .epsilon(1e-13));
                CHECK(rec.linear ==
                      doctest::Approx(spincoh::linear_entropy_of_output(SpinMagnitude(t),
                                                                        cplx(zm, 0), r2))
                          .epsilon(1e-13));
            }
    CHECK_THROWS_AS(spincoh::sweep({}, zs, r2s), std::invalid_argument);
}

TEST_CASE("peak location over spin magnitude") {
    auto weak = spincoh::peak_analysis(cplx(0.8, 0.0), 12);
    CHECK(weak.two_s_peak == 1);
    CHECK_FALSE(weak.interior);

    auto unit = spincoh::peak_analysis(cplx(1.0, 0.0), 40);
    CHECK(unit.two_s_peak == 2);
    CHECK(unit.interior);
    CHECK(unit.s_peak == doctest::Approx(1.0));

    // far out the peak keeps moving with the grid edge
    auto far = spincoh::peak_analysis(cplx(10.0, 0.0), 60);
    CHECK(far.two_s_peak == 60);
    CHECK_FALSE(far.interior);

    CHECK_THROWS_AS(spincoh::peak_analysis(cplx(1, 0), 0), std::invalid_argument);
}

TEST_CASE("large-spin overlap with the Poissonian state") {
    CHECK(spincoh::limit_overlap(cplx(0, 0), SpinMagnitude(5)) == 1.0);
    struct Row {
        int two_s;
        double want;
    };
    for (const Row& row : {Row{20, 0.999542184608990}, Row{200, 0.999995324140983},
                           Row{2000, 0.999999953137324}, Row{20000, 0.9999999995320944}}) {
        double got = spincoh::limit_overlap(cplx(1, 0), SpinMagnitude(row.two_s));
        CHECK(std::abs(got - row.want) < 1e-12);
    }
}

}  // TEST_SUITE
