#ifndef SCHURKIT_CHERN_WEIL_HPP
#define SCHURKIT_CHERN_WEIL_HPP

#include "schurkit/forms.hpp"
#include "schurkit/partition.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace schurkit {

// Curvature coefficients c_{j k lambda mu} at a point: j,k index the base
// directions (n of them), lambda,mu the fiber frame (r of them), with the
// Hermitian symmetry c_{jk lm} = conj(c_{kj ml}).
class CurvatureTensor {
public:
    CurvatureTensor(int n, int r); // zero tensor

    int n() const { return n_; }
    int r() const { return r_; }

    std::complex<double> at(int j, int k, int l, int m) const;
    void set(int j, int k, int l, int m, std::complex<double> v); // single entry
    // sets c_{jklm} = v and the Hermitian partner c_{kjml} = conj(v)
    void set_pair(int j, int k, int l, int m, std::complex<double> v);

    bool hermitian_symmetric(double tol) const;

    // flattening to the nr x nr matrix with row (j,l), column (k,m)
    Eigen::MatrixXcd to_matrix() const;
    static CurvatureTensor from_matrix(int n, int r, const Eigen::MatrixXcd& a);

    // scale * (identity on C^{nr}): c_{jklm} = scale * delta_jk delta_lm
    static CurvatureTensor scaled_identity(int n, int r, double s);
    // theta0 tensor identity on the fiber: c_{jklm} = h(j,k) delta_lm
    static CurvatureTensor from_base_form(int r, const Eigen::MatrixXcd& h);

    // frame change on the fiber index by a unitary
    CurvatureTensor fiber_gauge(const Eigen::MatrixXcd& u) const;

private:
    int n_, r_;
    std::vector<std::complex<double>> c_; // [((j*n + k)*r + l)*r + m]
};

// theta(u, u) = sum c_{jklm} u_{jl} conj(u_{km}); real by Hermitian symmetry.
double theta_eval(const CurvatureTensor& t, const Eigen::MatrixXcd& u);

struct GriffithsResult {
    double value = 0;      // best (smallest) theta over unit decomposables found
    Eigen::VectorXcd xi;   // base witness
    Eigen::VectorXcd s;    // fiber witness
    int restarts = 0;
    std::uint64_t seed = 0;

    // the value is an upper bound on the true minimum; > tol certifies
    // nothing beyond the searched directions, <= -tol certifies a violation
    bool reports_positive(double tol) const { return value > tol; }
};

// Alternating eigen-iteration over unit xi in C^n, unit s in C^r with
// seeded random restarts.
GriffithsResult griffiths_min(const CurvatureTensor& t, double tol, std::uint64_t seed,
                              int restarts = 16);

// B B^* + eps I reindexed into a curvature tensor; positive definite on all
// of C^{nr}, hence Griffiths-positive.
CurvatureTensor random_nakano_positive(int n, int r, std::uint64_t seed, double eps = 0.1);

// Chern form c_k(E,h): t^k coefficient of det(Id + (it/2pi) Theta), expanded
// as principal minors of the (1,1)-form-valued matrix. Zero form outside
// 0 <= k <= min(r, n).
ConstForm chern_form(const CurvatureTensor& t, int k);

// Same form via power traces and Newton's identities; independent route
// used for cross-checking.
ConstForm chern_form_from_power_traces(const CurvatureTensor& t, int k);

// schur_poly(lambda, r) evaluated on the Chern forms by wedge products.
ConstForm schur_form(const CurvatureTensor& t, const Partition& lambda);

} // namespace schurkit

#endif
