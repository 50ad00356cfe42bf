#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurkit/errors.hpp"
#include "schurkit/forms.hpp"
#include "schurkit/sampling.hpp"

#include <complex>

using namespace schurkit;
using Complex = std::complex<double>;

namespace {

ConstForm idz_dzbar(int n, int j, int k) {
    ConstForm f(n, 1, 1);
    f.add_term({j}, {k}, Complex(0, 1));
    return f;
}

} // namespace

TEST_CASE("wedge basics") {
    const int n = 2;
    // i dz1 dzbar1 ^ i dz2 dzbar2 is the volume form
    ConstForm v = idz_dzbar(n, 0, 0) * idz_dzbar(n, 1, 1);
    CHECK(v.volume_coefficient() == Complex(1, 0));
    CHECK((v - ConstForm::volume(n)).max_abs() == 0.0);

    // u ^ 1 = u
    ConstForm u = idz_dzbar(n, 0, 1);
    CHECK(((u * ConstForm::scalar(n, 1.0)) - u).max_abs() == 0.0);

    // dz1 ^ dz1 = 0
    CHECK((ConstForm::dz(n, 0) * ConstForm::dz(n, 0)).coefficients().empty());

    // anticommutativity of one-forms
    ConstForm ab = ConstForm::dz(n, 0) * ConstForm::dz(n, 1);
    ConstForm ba = ConstForm::dz(n, 1) * ConstForm::dz(n, 0);
    CHECK((ab + ba).max_abs() == 0.0);

    // wedge is associative on a mixed product
    ConstForm x = ConstForm::dz(3, 0) * ConstForm::dzbar(3, 1);
    ConstForm y = ConstForm::dz(3, 2);
    ConstForm z = ConstForm::dzbar(3, 0);
    CHECK((((x * y) * z) - (x * (y * z))).max_abs() == 0.0);
}

TEST_CASE("volume normalization in every dimension") {
    for (int n = 1; n <= 4; ++n) {
        ConstForm v = ConstForm::scalar(n, 1.0);
        for (int j = 0; j < n; ++j)
            v = v * idz_dzbar(n, j, j);
        CHECK(v.volume_coefficient().real() == doctest::Approx(1.0));
        CHECK(v.volume_coefficient().imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("reality condition") {
    const int n = 2;
    Eigen::MatrixXcd m(2, 2);
    m << Complex(1, 0), Complex(2, 1), Complex(2, -1), Complex(3, 0);
    ConstForm u = form_from_matrix_11(m);
    CHECK(u.is_real(1e-15));

    Eigen::MatrixXcd bad(2, 2);
    bad << Complex(1, 0), Complex(2, 1), Complex(5, 0), Complex(3, 0);
    CHECK_FALSE(form_from_matrix_11(bad).is_real(1e-12));
    CHECK_THROWS_AS(is_positive(form_from_matrix_11(bad)), UsageError);
}

TEST_CASE("(1,1) matrix round trip") {
    const int n = 3;
    Eigen::MatrixXcd m(n, n);
    m << Complex(2, 0), Complex(0, 1), Complex(0.5, 0.25),
         Complex(0, -1), Complex(1, 0), Complex(-1, 0),
         Complex(0.5, -0.25), Complex(-1, 0), Complex(4, 0);
    ConstForm u = form_from_matrix_11(m);
    Eigen::MatrixXcd back = matrix_of_form_11(u);
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);

    // identity matrix in dimension 2: i dz1 dzbar1 + i dz2 dzbar2
    ConstForm id2 = form_from_matrix_11(Eigen::MatrixXcd::Identity(2, 2));
    CHECK((id2 - (idz_dzbar(2, 0, 0) + idz_dzbar(2, 1, 1))).max_abs() == 0.0);
}

TEST_CASE("hat basis") {
    // n = 3: hat(1,1) = i dz2 dzbar2 ^ i dz3 dzbar3 (1-based labels)
    ConstForm h = hat_form(3, 0, 0);
    ConstForm expect = idz_dzbar(3, 1, 1) * idz_dzbar(3, 2, 2);
    CHECK((h - expect).max_abs() == 0.0);

    // defining equation in all slots
    for (int n = 2; n <= 4; ++n)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ConstForm probe(n, 1, 1);
                probe.add_term({j}, {k}, Complex(0, 1));
                ConstForm w = probe * hat_form(n, j, k);
                CHECK(w.volume_coefficient().real() == doctest::Approx(1.0));
                CHECK(std::abs(w.volume_coefficient().imag()) < 1e-15);
            }

    // round trip: matrix -> hat expansion -> matrix, bit exact
    for (int n = 2; n <= 4; ++n) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                m(j, k) = Complex(0.25 * (j + 1) * (k + 1), j == k ? 0 : (j < k ? 1 : -1));
        // Hermitianize so the form is real
        Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
        ConstForm u = form_from_matrix_hat(herm);
        Eigen::MatrixXcd back = matrix_from_form_hat(u);
        CHECK((back - herm).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("positivity: scalar bidegrees") {
    PositivityOptions opts;
    // (0,0)
    CHECK(is_positive(ConstForm::scalar(2, 3.0), opts).kind ==
          PositivityVerdict::Kind::PositiveStrict);
    CHECK(is_positive(ConstForm::scalar(2, 0.0), opts).kind ==
          PositivityVerdict::Kind::PositiveSemi);
    CHECK(is_positive(ConstForm::scalar(2, -1.0), opts).violated());
    // (n,n)
    CHECK(is_positive(ConstForm::volume(2) * 2.0, opts).kind ==
          PositivityVerdict::Kind::PositiveStrict);
    CHECK(is_positive(ConstForm::volume(2) * -0.5, opts).violated());
    // (1,1) with n = 1 is also scalar-like via the volume route
    CHECK(is_positive(idz_dzbar(1, 0, 0), opts).kind ==
          PositivityVerdict::Kind::PositiveStrict);
}

TEST_CASE("positivity: (1,1) matrix criterion") {
    PositivityOptions opts;
    // [[1,2],[2,1]] has eigenvalues 3 and -1: rejected with a witness
    Eigen::MatrixXcd m(2, 2);
    m << 1, 2, 2, 1;
    PositivityVerdict v = is_positive(form_from_matrix_11(m), opts);
    CHECK(v.violated());
    CHECK(v.method == "matrix-exact");
    REQUIRE(v.witness.size() == 1);
    // witness is an eigenvector for the negative eigenvalue
    Eigen::VectorXcd w = v.witness[0];
    CHECK((m * w + w).norm() < 1e-9);

    CHECK(is_positive(form_from_matrix_11(Eigen::MatrixXcd::Identity(2, 2)), opts).kind ==
          PositivityVerdict::Kind::PositiveStrict);
    Eigen::MatrixXcd psd(2, 2);
    psd << 1, 1, 1, 1;
    CHECK(is_positive(form_from_matrix_11(psd), opts).kind ==
          PositivityVerdict::Kind::PositiveSemi);

    // floating path agrees on these
    PositivityOptions fl;
    fl.exact = false;
    CHECK(is_positive(form_from_matrix_11(m), fl).violated());
    CHECK(is_positive(form_from_matrix_11(psd), fl).kind ==
          PositivityVerdict::Kind::PositiveSemi);
}

TEST_CASE("positivity: hat-matrix criterion") {
    PositivityOptions opts;
    ConstForm u = form_from_matrix_hat(Eigen::MatrixXcd::Identity(3, 3));
    PositivityVerdict v = is_positive(u, opts);
    CHECK(v.kind == PositivityVerdict::Kind::PositiveStrict);
    CHECK(v.accepted(PositivityMode::Strict));

    Eigen::MatrixXcd m(3, 3);
    m << 1, 2, 0, 2, 1, 0, 0, 0, 1;
    CHECK(is_positive(form_from_matrix_hat(m), opts).violated());
}

TEST_CASE("exact Hermitian sign summary") {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 2, 2, 1;
    HermitianSignSummary s = exact_hermitian_sign_summary(m);
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.zero == 0);
    CHECK_FALSE(s.psd());

    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(3, 3);
    HermitianSignSummary sz = exact_hermitian_sign_summary(z);
    CHECK(sz.zero == 3);
    CHECK(sz.psd());
    CHECK_FALSE(sz.pd());

    // complex Hermitian positive definite
    Eigen::MatrixXcd h(2, 2);
    h << Complex(2, 0), Complex(0, 1), Complex(0, -1), Complex(2, 0);
    HermitianSignSummary sh = exact_hermitian_sign_summary(h);
    CHECK(sh.pd()); // eigenvalues 1 and 3
}

TEST_CASE("unitary invariance of matrix verdicts") {
    PositivityOptions opts;
    opts.exact = false;
    opts.tolerance = 1e-9;
    Rng rng(314159);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            Eigen::MatrixXcd b = rng.gaussian_complex_matrix(n, n);
            Eigen::MatrixXcd psd = b * b.adjoint();
            Eigen::MatrixXcd u = rng.random_unitary(n);
            Eigen::MatrixXcd rotated = u.adjoint() * psd * u;

            PositivityVerdict v1 = is_positive(form_from_matrix_11(psd), opts);
            PositivityVerdict v2 = is_positive(form_from_matrix_11(rotated), opts);
            CHECK(v1.accepted(PositivityMode::Semi));
            CHECK(v2.accepted(PositivityMode::Semi));

            PositivityVerdict h1 = is_positive(form_from_matrix_hat(psd), opts);
            PositivityVerdict h2 = is_positive(form_from_matrix_hat(rotated), opts);
            CHECK(h1.accepted(PositivityMode::Semi));
            CHECK(h2.accepted(PositivityMode::Semi));
        }
    }
}

TEST_CASE("sampled verdicts in middle bidegree") {
    // strongly positive (2,2) form on C^4: no violation may be found
    Rng rng(777);
    std::vector<std::vector<Eigen::VectorXcd>> tuples;
    for (int s = 0; s < 4; ++s)
        tuples.push_back({rng.unit_complex_vector(4), rng.unit_complex_vector(4)});
    ConstForm u(4, 2, 2);
    u = u + ConstForm::decomposable(4, tuples[0]) * 0.5;
    for (std::size_t s = 1; s < tuples.size(); ++s)
        u = u + ConstForm::decomposable(4, tuples[s]);

    PositivityOptions opts;
    opts.samples = 500;
    opts.seed = 11;
    PositivityVerdict v = is_positive(u, opts);
    CHECK(v.kind == PositivityVerdict::Kind::NoViolationFound);
    CHECK(v.samples_used == 500);
    CHECK(v.seed == 11);
    CHECK(v.min_value >= -opts.tolerance);

    // a (2,2) form that is negative against a decomposable direction
    ConstForm bad = u - ConstForm::decomposable(4, tuples[0]) * 5.0;
    PositivityVerdict vb = is_positive(bad, opts);
    CHECK(vb.violated());
    REQUIRE(vb.witness.size() == 2);
    // the recorded witness reproduces the violation
    ConstForm wform = ConstForm::decomposable(4, vb.witness);
    CHECK((bad * wform).volume_coefficient().real() < 0);
}

TEST_CASE("strongly positive witness search") {
    const int n = 3;
    Rng rng(4242);
    std::vector<Eigen::VectorXcd> e1e2{Eigen::VectorXcd::Zero(n), Eigen::VectorXcd::Zero(n)};
    e1e2[0](0) = 1;
    e1e2[1](1) = 1;
    std::vector<std::vector<Eigen::VectorXcd>> generators;
    generators.push_back(e1e2);
    for (int s = 0; s < 3; ++s)
        generators.push_back({rng.unit_complex_vector(n), rng.unit_complex_vector(n)});

    // exactly the first generator
    ConstForm target = ConstForm::decomposable(n, e1e2);
    auto w = strongly_positive_witness(target, generators);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t i = 1; i < w->size(); ++i)
        CHECK((*w)[i] == doctest::Approx(0.0).epsilon(1e-6));

    // scaling
    auto w2 = strongly_positive_witness(target * 2.0, generators);
    REQUIRE(w2.has_value());
    CHECK((*w2)[0] == doctest::Approx(2.0).epsilon(1e-6));

    // a successful witness implies a positive form
    ConstForm combo(n, 2, 2);
    combo = combo + ConstForm::decomposable(n, generators[1]) * 0.7 +
            ConstForm::decomposable(n, generators[2]) * 1.3;
    auto w3 = strongly_positive_witness(combo, generators);
    REQUIRE(w3.has_value());
    PositivityOptions opts;
    opts.samples = 300;
    CHECK_FALSE(is_positive(combo, opts).violated());

    // infeasible target: i dz1 dzbar1 - something unrelated
    ConstForm off = target - ConstForm::decomposable(n, generators[3]) * 3.0;
    CHECK_FALSE(strongly_positive_witness(off, generators).has_value());
}

TEST_CASE("cone duality sampling") {
    // positive forms pair nonnegatively with decomposable strongly positive
    // forms of complementary bidegree
    for (int n = 2; n <= 4; ++n) {
        for (int p = 1; p < n; ++p) {
            Rng rng(derive_seed(123, n * 10 + p));
            // build a strongly positive (p,p) form
            ConstForm u(n, p, p);
            for (int s = 0; s < 3; ++s) {
                std::vector<Eigen::VectorXcd> tuple;
                for (int t = 0; t < p; ++t)
                    tuple.push_back(rng.unit_complex_vector(n));
                u = u + ConstForm::decomposable(n, tuple) * (0.5 + s);
            }
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<Eigen::VectorXcd> tuple;
                for (int t = 0; t < n - p; ++t)
                    tuple.push_back(rng.unit_complex_vector(n));
                ConstForm v = ConstForm::decomposable(n, tuple);
                CHECK((u * v).volume_coefficient().real() >= -1e-9);
            }
        }
    }
}

TEST_CASE("nnls basics") {
    Eigen::MatrixXd a(3, 2);
    a << 1, 0, 0, 1, 0, 0;
    Eigen::VectorXd b(3);
    b << 2, -1, 0;
    Eigen::VectorXd x = nnls(a, b);
    CHECK(x(0) == doctest::Approx(2.0));
    CHECK(x(1) == doctest::Approx(0.0)); // clamped at the boundary
}
