#ifndef SCHURKIT_FORMS_HPP
#define SCHURKIT_FORMS_HPP

#include "schurkit/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schurkit {

// Constant-coefficient (p,q) form on C^n, stored as coefficients over
// dz_I wedge dzbar_J with strictly increasing 0-based multi-indices,
// the dz block first.
class ConstForm {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    ConstForm(int n, int p, int q);

    static ConstForm zero(int n, int p, int q) { return ConstForm(n, p, q); }
    static ConstForm scalar(int n, std::complex<double> value);
    static ConstForm dz(int n, int j);    // 0-based coordinate index
    static ConstForm dzbar(int n, int j);
    static ConstForm volume(int n);       // i dz_1 dzbar_1 ... i dz_n dzbar_n
    // product over the vectors of i * alpha wedge conj(alpha); the building
    // block of strongly positive forms
    static ConstForm decomposable(int n, const std::vector<Eigen::VectorXcd>& alphas);

    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    const std::map<Key, std::complex<double>>& coefficients() const { return coeffs_; }
    std::complex<double> coefficient(const std::vector<int>& I,
                                     const std::vector<int>& J) const;
    void add_term(std::vector<int> I, std::vector<int> J, std::complex<double> v);

    ConstForm operator+(const ConstForm& other) const;
    ConstForm operator-(const ConstForm& other) const;
    ConstForm operator*(const ConstForm& other) const; // wedge product
    ConstForm operator*(std::complex<double> scalar) const;
    ConstForm operator*(double scalar) const;

    ConstForm conjugate() const;
    bool is_real(double tol) const;
    double max_abs() const;

    // coefficient against the standard volume form; requires bidegree (n,n)
    std::complex<double> volume_coefficient() const;

private:
    int n_, p_, q_;
    std::map<Key, std::complex<double>> coeffs_;
};

inline ConstForm scale(const ConstForm& f, const Rational& c) {
    return f * static_cast<double>(c);
}

// u = i sum u_jk dz_j dzbar_k from a Hermitian matrix, and back.
ConstForm form_from_matrix_11(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_of_form_11(const ConstForm& u);

// The (n-1,n-1) hat basis element: i dz_j dzbar_k wedge hat(j,k) = volume.
ConstForm hat_form(int n, int j, int k); // 0-based j, k
// Expansion of u over hat(j,k); inverts sum u_jk hat(j,k) exactly.
Eigen::MatrixXcd matrix_from_form_hat(const ConstForm& u);
ConstForm form_from_matrix_hat(const Eigen::MatrixXcd& m);

enum class PositivityMode { Semi, Strict };

struct PositivityOptions {
    PositivityMode mode = PositivityMode::Semi;
    // lift matrices to exact rationals and sign-test the characteristic
    // polynomial; when false, use a floating eigensolver with `tolerance`
    bool exact = true;
    double tolerance = 1e-10;
    int samples = 10000;       // middle bidegrees only
    std::uint64_t seed = 2026; // surfaced in the verdict
    int threads = 0;           // 0 = SCHURKIT_THREADS / hardware
};

struct PositivityVerdict {
    enum class Kind { PositiveStrict, PositiveSemi, Violated, NoViolationFound };
    Kind kind;
    std::string method; // "scalar", "matrix-exact", "matrix-float", "sampled"
    double min_value = 0.0;
    int samples_used = 0;
    std::uint64_t seed = 0;
    // violated matrix test: the offending eigenvector; violated sampling:
    // the alpha vectors of the witness decomposable form
    std::vector<Eigen::VectorXcd> witness;

    bool violated() const { return kind == Kind::Violated; }
    bool accepted(PositivityMode mode) const;
    std::string describe() const;
};

// Exact verdicts in bidegrees (0,0), (1,1), (n-1,n-1), (n,n) via the
// Hermitian matrix criterion; sampled verdicts elsewhere. Requires a real
// (p,p) form.
PositivityVerdict is_positive(const ConstForm& u, const PositivityOptions& opts = {});

// Nonnegative-combination search over the decomposable forms built from the
// generator tuples (each tuple holds p vectors in C^n). Returns the
// coefficients when the residual is below `tol`; absence proves nothing.
std::optional<std::vector<double>>
strongly_positive_witness(const ConstForm& u,
                          const std::vector<std::vector<Eigen::VectorXcd>>& generators,
                          double tol = 1e-8);

// Exact PSD/PD test for a Hermitian matrix whose entries are lifted to
// rationals: coefficient signs of the characteristic polynomial, which has
// only real roots. Exposed for the signature-sensitive tests.
struct HermitianSignSummary {
    int negative = 0, zero = 0, positive = 0;
    bool psd() const { return negative == 0; }
    bool pd() const { return negative == 0 && zero == 0; }
};
HermitianSignSummary exact_hermitian_sign_summary(const Eigen::MatrixXcd& m);

// Nonnegative least squares (Lawson-Hanson active set).
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                     int max_iterations = 0);

} // namespace schurkit

#endif
