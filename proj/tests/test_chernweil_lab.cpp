#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurkit/chern_weil.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/sampling.hpp"
#include "schurkit/schur.hpp"

#include <numbers>

using namespace schurkit;
using Complex = std::complex<double>;

namespace {

const double kScale = 1.0 / (2.0 * std::numbers::pi);

// binom(r,k) * ((i/2pi) theta0)^k for the scalar-matrix curvature
ConstForm scalar_curvature_expected(const Eigen::MatrixXcd& theta0, int r, int k) {
    const int n = static_cast<int>(theta0.rows());
    ConstForm base(n, 1, 1);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            Complex c = Complex(0, 1) * kScale * theta0(j, l);
            if (c != 0.0)
                base.add_term({j}, {l}, c);
        }
    ConstForm acc = ConstForm::scalar(n, static_cast<double>(binomial(r, k)));
    for (int i = 0; i < k; ++i)
        acc = acc * base;
    return acc;
}

} // namespace

TEST_CASE("theta evaluation") {
    // identity tensor: theta(u,u) is the squared Frobenius norm
    CurvatureTensor id = CurvatureTensor::scaled_identity(2, 3, 1.0);
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::MatrixXcd u = rng.gaussian_complex_matrix(2, 3);
        CHECK(theta_eval(id, u) == doctest::Approx(u.squaredNorm()).epsilon(1e-12));
    }

    // zero tensor
    CurvatureTensor zero(2, 2);
    Eigen::MatrixXcd u = rng.gaussian_complex_matrix(2, 2);
    CHECK(theta_eval(zero, u) == 0.0);

    // rank-one tensor from a single functional: theta(u,u) = |<t, u>|^2 >= 0
    const int n = 2, r = 2;
    Eigen::VectorXcd t = rng.unit_complex_vector(n * r);
    Eigen::MatrixXcd a = t * t.adjoint();
    CurvatureTensor rank1 = CurvatureTensor::from_matrix(n, r, a);
    CHECK(rank1.hermitian_symmetric(1e-14));
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::MatrixXcd w = rng.gaussian_complex_matrix(n, r);
        double v = theta_eval(rank1, w);
        CHECK(v >= -1e-12);
        // flatten w in the same (j,l) order and compare
        Eigen::VectorXcd flat(n * r);
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < r; ++l)
                flat(j * r + l) = w(j, l);
        Complex inner = (t.transpose() * flat)(0);
        CHECK(v == doctest::Approx(std::norm(inner)).epsilon(1e-10));
    }

    CHECK_THROWS_AS(theta_eval(zero, rng.gaussian_complex_matrix(3, 2)), UsageError);
}

TEST_CASE("Hermitian symmetry of generated tensors") {
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        CurvatureTensor t = random_nakano_positive(3, 2, seed);
        CHECK(t.hermitian_symmetric(0.0)); // bit-exact by construction
    }
    CurvatureTensor eps = CurvatureTensor::scaled_identity(2, 2, 0.25);
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l)
            CHECK(eps.at(j, j, l, l) == Complex(0.25, 0));
}

TEST_CASE("griffiths_min on definite instances") {
    // identity: minimum 1 on unit decomposables
    CurvatureTensor id = CurvatureTensor::scaled_identity(2, 2, 1.0);
    GriffithsResult g = griffiths_min(id, 1e-9, 7);
    CHECK(g.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.reports_positive(1e-9));

    // diagonal with a negative entry aligned to a decomposable direction
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(4, 4);
    d(0, 0) = -0.5; // direction e_1 tensor e_1
    CurvatureTensor neg = CurvatureTensor::from_matrix(2, 2, d);
    GriffithsResult gn = griffiths_min(neg, 1e-9, 7);
    CHECK(gn.value == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK_FALSE(gn.reports_positive(1e-9));
    // witness reproduces the value
    Eigen::MatrixXcd u = gn.xi * gn.s.transpose();
    CHECK(theta_eval(neg, u) == doctest::Approx(gn.value).epsilon(1e-9));

    // Nakano-positive samples stay above the full-matrix lower bound
    for (std::uint64_t seed : {3ull, 17ull, 23ull}) {
        CurvatureTensor t = random_nakano_positive(2, 3, seed);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t.to_matrix());
        double lambda_min = es.eigenvalues().minCoeff();
        GriffithsResult gr = griffiths_min(t, 1e-9, seed);
        CHECK(gr.value > 0);
        CHECK(gr.value >= lambda_min - 1e-9);
    }
}

TEST_CASE("chern_form golden cases") {
    const int n = 2;
    Rng rng(8);
    // theta0 tensor identity: c_k = binom(r,k) ((i/2pi) theta0)^k
    Eigen::MatrixXcd theta0 = rng.gaussian_complex_matrix(n, n);
    theta0 = 0.5 * (theta0 + theta0.adjoint());
    for (int r = 1; r <= 3; ++r) {
        CurvatureTensor t = CurvatureTensor::from_base_form(r, theta0);
        for (int k = 0; k <= std::min(n, r); ++k) {
            ConstForm got = chern_form(t, k);
            ConstForm expect = scalar_curvature_expected(theta0, r, k);
            CHECK((got - expect).max_abs() < 1e-12);
        }
    }

    // zero curvature: c_k = 0 for k >= 1, c_0 = 1
    CurvatureTensor zero(2, 2);
    CHECK(chern_form(zero, 0).coefficient({}, {}) == Complex(1, 0));
    CHECK(chern_form(zero, 1).max_abs() == 0.0);
    CHECK(chern_form(zero, 2).max_abs() == 0.0);
    // out of range
    CHECK(chern_form(zero, 3).max_abs() == 0.0);

    // c_1 is the scaled trace
    CurvatureTensor t = random_nakano_positive(2, 2, 31);
    ConstForm c1 = chern_form(t, 1);
    ConstForm trace(2, 1, 1);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            Complex acc = 0;
            for (int l = 0; l < 2; ++l)
                acc += t.at(j, k, l, l);
            acc *= Complex(0, 1) * kScale;
            if (acc != 0.0)
                trace.add_term({j}, {k}, acc);
        }
    CHECK((c1 - trace).max_abs() < 1e-14);
}

TEST_CASE("chern forms are real") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 2 + static_cast<int>(seed % 3);
        int r = 2 + static_cast<int>(seed % 2);
        CurvatureTensor t = random_nakano_positive(n, r, seed);
        for (int k = 1; k <= std::min(n, r); ++k)
            CHECK(chern_form(t, k).is_real(1e-12));
    }
}

TEST_CASE("determinant route agrees with power-trace route") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 2 + static_cast<int>(seed % 3);
        int r = 2 + static_cast<int>((seed / 2) % 3);
        CurvatureTensor t = random_nakano_positive(n, r, seed * 101);
        for (int k = 1; k <= std::min(n, r); ++k) {
            ConstForm det_route = chern_form(t, k);
            ConstForm trace_route = chern_form_from_power_traces(t, k);
            CHECK((det_route - trace_route).max_abs() < 1e-10);
        }
    }
}

TEST_CASE("fiber gauge invariance") {
    Rng rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + trial % 3, r = 2 + trial % 3;
        CurvatureTensor t = random_nakano_positive(n, r, 1000 + trial);
        Eigen::MatrixXcd u = rng.random_unitary(r);
        CurvatureTensor g = t.fiber_gauge(u);
        CHECK(g.hermitian_symmetric(1e-12));
        for (int k = 1; k <= std::min(n, r); ++k)
            CHECK((chern_form(t, k) - chern_form(g, k)).max_abs() < 1e-10);
    }
}

TEST_CASE("schur forms") {
    // lambda = (1) is the first Chern form
    CurvatureTensor t = random_nakano_positive(2, 2, 5);
    CHECK((schur_form(t, Partition({1})) - chern_form(t, 1)).max_abs() < 1e-14);

    // scalar curvature, r = 2: s_(1,1) = c_1^2 - c_2 = 3 ((i/2pi) theta0)^2
    Rng rng(9);
    Eigen::MatrixXcd theta0 = rng.gaussian_complex_matrix(2, 2);
    theta0 = 0.5 * (theta0 + theta0.adjoint());
    CurvatureTensor scalar_t = CurvatureTensor::from_base_form(2, theta0);
    ConstForm s11 = schur_form(scalar_t, Partition({1, 1}));
    ConstForm base = scalar_curvature_expected(theta0, 1, 1); // (i/2pi) theta0
    ConstForm expect = (base * base) * 3.0;
    CHECK((s11 - expect).max_abs() < 1e-12);

    // rank-2 Griffiths-positive samples have positive c_2 = s_(2) on surfaces
    PositivityOptions opts;
    opts.exact = false;
    opts.tolerance = 1e-10;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CurvatureTensor sample = random_nakano_positive(2, 2, seed * 7);
        ConstForm c2 = schur_form(sample, Partition({2}));
        CHECK_FALSE(is_positive(c2, opts).violated());
    }

    CHECK_THROWS_AS(schur_form(t, Partition({3})), UsageError);     // part > r
    CHECK_THROWS_AS(schur_form(t, Partition({2, 1})), UsageError);  // weight > n
}

TEST_CASE("tensor round trip through the nr x nr matrix") {
    CurvatureTensor t = random_nakano_positive(3, 2, 77);
    CurvatureTensor back = CurvatureTensor::from_matrix(3, 2, t.to_matrix());
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m)
                    CHECK(back.at(j, k, l, m) == t.at(j, k, l, m));
}
