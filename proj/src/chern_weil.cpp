#include "schurkit/chern_weil.hpp"

#include "schurkit/errors.hpp"
#include "schurkit/sampling.hpp"
#include "schurkit/schur.hpp"

#include <cmath>
#include <numbers>

namespace schurkit {

CurvatureTensor::CurvatureTensor(int n, int r) : n_(n), r_(r) {
    if (n < 1 || r < 1)
        throw UsageError("curvature tensor needs n, r >= 1");
    c_.assign(static_cast<std::size_t>(n) * n * r * r, {0, 0});
}

std::complex<double> CurvatureTensor::at(int j, int k, int l, int m) const {
    return c_[((static_cast<std::size_t>(j) * n_ + k) * r_ + l) * r_ + m];
}

void CurvatureTensor::set(int j, int k, int l, int m, std::complex<double> v) {
    c_[((static_cast<std::size_t>(j) * n_ + k) * r_ + l) * r_ + m] = v;
}

void CurvatureTensor::set_pair(int j, int k, int l, int m, std::complex<double> v) {
    set(j, k, l, m, v);
    set(k, j, m, l, std::conj(v));
}

bool CurvatureTensor::hermitian_symmetric(double tol) const {
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
            for (int l = 0; l < r_; ++l)
                for (int m = 0; m < r_; ++m)
                    if (std::abs(at(j, k, l, m) - std::conj(at(k, j, m, l))) > tol)
                        return false;
    return true;
}

Eigen::MatrixXcd CurvatureTensor::to_matrix() const {
    Eigen::MatrixXcd a(n_ * r_, n_ * r_);
    for (int j = 0; j < n_; ++j)
        for (int l = 0; l < r_; ++l)
            for (int k = 0; k < n_; ++k)
                for (int m = 0; m < r_; ++m)
                    a(j * r_ + l, k * r_ + m) = at(j, k, l, m);
    return a;
}

CurvatureTensor CurvatureTensor::from_matrix(int n, int r, const Eigen::MatrixXcd& a) {
    if (a.rows() != n * r || a.cols() != n * r)
        throw UsageError("matrix must be nr x nr");
    CurvatureTensor t(n, r);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < r; ++l)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < r; ++m)
                    t.set(j, k, l, m, a(j * r + l, k * r + m));
    return t;
}

CurvatureTensor CurvatureTensor::scaled_identity(int n, int r, double s) {
    CurvatureTensor t(n, r);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < r; ++l)
            t.set(j, j, l, l, s);
    return t;
}

CurvatureTensor CurvatureTensor::from_base_form(int r, const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols())
        throw UsageError("base form matrix must be square");
    const int n = static_cast<int>(h.rows());
    CurvatureTensor t(n, r);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < r; ++l)
                t.set(j, k, l, l, h(j, k));
    return t;
}

CurvatureTensor CurvatureTensor::fiber_gauge(const Eigen::MatrixXcd& u) const {
    if (u.rows() != r_ || u.cols() != r_)
        throw UsageError("gauge matrix must be r x r");
    CurvatureTensor out(n_, r_);
    // per base pair (j,k): C'_{jk} = U^H C_{jk} U on the fiber indices
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
            Eigen::MatrixXcd block(r_, r_);
            for (int l = 0; l < r_; ++l)
                for (int m = 0; m < r_; ++m)
                    block(l, m) = at(j, k, l, m);
            Eigen::MatrixXcd g = u.adjoint() * block * u;
            for (int l = 0; l < r_; ++l)
                for (int m = 0; m < r_; ++m)
                    out.set(j, k, l, m, g(l, m));
        }
    return out;
}

double theta_eval(const CurvatureTensor& t, const Eigen::MatrixXcd& u) {
    if (u.rows() != t.n() || u.cols() != t.r())
        throw UsageError("theta argument must be an n x r matrix");
    std::complex<double> acc = 0;
    for (int j = 0; j < t.n(); ++j)
        for (int k = 0; k < t.n(); ++k)
            for (int l = 0; l < t.r(); ++l)
                for (int m = 0; m < t.r(); ++m)
                    acc += t.at(j, k, l, m) * u(j, l) * std::conj(u(k, m));
    return acc.real();
}

GriffithsResult griffiths_min(const CurvatureTensor& t, double tol, std::uint64_t seed,
                              int restarts) {
    const int n = t.n(), r = t.r();
    GriffithsResult best;
    best.seed = seed;
    best.restarts = restarts;
    bool have_best = false;

    for (int restart = 0; restart < restarts; ++restart) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
        Eigen::VectorXcd s = rng.unit_complex_vector(r);
        Eigen::VectorXcd xi = rng.unit_complex_vector(n);
        double value = 0, prev = 0;

        for (int iter = 0; iter < 200; ++iter) {
            // fix s: theta = xi^H M xi with M_{kj} = sum c_{jklm} s_l conj(s_m)
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    std::complex<double> e = 0;
                    for (int l = 0; l < r; ++l)
                        for (int mm = 0; mm < r; ++mm)
                            e += t.at(j, k, l, mm) * s(l) * std::conj(s(mm));
                    m(k, j) = e;
                }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_xi(0.5 * (m + m.adjoint()));
            int idx = 0;
            es_xi.eigenvalues().minCoeff(&idx);
            xi = es_xi.eigenvectors().col(idx);

            // fix xi: theta = s^H P s with P_{ml} = sum c_{jklm} xi_j conj(xi_k)
            Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(r, r);
            for (int l = 0; l < r; ++l)
                for (int mm = 0; mm < r; ++mm) {
                    std::complex<double> e = 0;
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            e += t.at(j, k, l, mm) * xi(j) * std::conj(xi(k));
                    p(mm, l) = e;
                }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_s(0.5 * (p + p.adjoint()));
            es_s.eigenvalues().minCoeff(&idx);
            s = es_s.eigenvectors().col(idx);
            value = es_s.eigenvalues()(idx);

            if (iter > 0 && std::abs(value - prev) < 1e-12)
                break;
            prev = value;
        }

        Eigen::MatrixXcd u = xi * s.transpose(); // u_{jl} = xi_j s_l
        value = theta_eval(t, u);
        if (!have_best || value < best.value) {
            best.value = value;
            best.xi = xi;
            best.s = s;
            have_best = true;
        }
    }
    (void)tol;
    return best;
}

CurvatureTensor random_nakano_positive(int n, int r, std::uint64_t seed, double eps) {
    Rng rng(seed);
    Eigen::MatrixXcd b = rng.gaussian_complex_matrix(n * r, n * r);
    Eigen::MatrixXcd a = b * b.adjoint() +
                         eps * Eigen::MatrixXcd::Identity(n * r, n * r);
    return CurvatureTensor::from_matrix(n, r, a);
}

namespace {

// (1,1)-form-valued r x r matrix (i/2pi) Theta
std::vector<std::vector<ConstForm>> scaled_entries(const CurvatureTensor& t) {
    const int n = t.n(), r = t.r();
    const std::complex<double> factor = std::complex<double>(0, 1) / (2.0 * std::numbers::pi);
    std::vector<std::vector<ConstForm>> f(r, std::vector<ConstForm>(r, ConstForm(n, 1, 1)));
    for (int l = 0; l < r; ++l)
        for (int m = 0; m < r; ++m) {
            ConstForm entry(n, 1, 1);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    std::complex<double> c = factor * t.at(j, k, l, m);
                    if (c != 0.0)
                        entry.add_term({j}, {k}, c);
                }
            f[l][m] = std::move(entry);
        }
    return f;
}

ConstForm form_determinant(const std::vector<std::vector<ConstForm>>& m,
                           const std::vector<int>& rows, int n) {
    // permutation expansion over the selected principal submatrix
    const int k = static_cast<int>(rows.size());
    std::vector<int> perm(rows.begin(), rows.end());
    std::sort(perm.begin(), perm.end());
    ConstForm acc(n, k, k);
    do {
        int sign = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        ConstForm term = ConstForm::scalar(n, double(sign));
        for (int i = 0; i < k; ++i)
            term = term * m[rows[i]][perm[i]];
        acc = acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

ConstForm chern_form(const CurvatureTensor& t, int k) {
    const int n = t.n(), r = t.r();
    if (k == 0)
        return ConstForm::scalar(n, 1.0);
    if (k < 0 || k > std::min(r, n))
        return ConstForm(n, std::max(k, 0), std::max(k, 0));
    auto f = scaled_entries(t);

    // det(Id + tF): the t^k coefficient is the sum of principal k x k minors
    ConstForm acc(n, k, k);
    std::vector<int> rows;
    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(rows.size()) == k) {
            acc = acc + form_determinant(f, rows, n);
            return;
        }
        for (int i = start; i < r; ++i) {
            rows.push_back(i);
            self(self, i + 1);
            rows.pop_back();
        }
    };
    recurse(recurse, 0);
    return acc;
}

ConstForm chern_form_from_power_traces(const CurvatureTensor& t, int k) {
    const int n = t.n(), r = t.r();
    if (k == 0)
        return ConstForm::scalar(n, 1.0);
    if (k < 0 || k > std::min(r, n))
        return ConstForm(n, std::max(k, 0), std::max(k, 0));
    auto f = scaled_entries(t);

    // power sums p_j = tr(F^j) with wedge-product matrix powers
    std::vector<ConstForm> power_sums; // index j-1 -> (j,j) form
    std::vector<std::vector<ConstForm>> fj = f;
    for (int j = 1; j <= k; ++j) {
        if (j > 1) {
            std::vector<std::vector<ConstForm>> next(
                r, std::vector<ConstForm>(r, ConstForm(n, j, j)));
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    ConstForm e(n, j, j);
                    for (int c = 0; c < r; ++c)
                        e = e + fj[a][c] * f[c][b];
                    next[a][b] = std::move(e);
                }
            fj = std::move(next);
        }
        ConstForm tr(n, j, j);
        for (int a = 0; a < r; ++a)
            tr = tr + fj[a][a];
        power_sums.push_back(std::move(tr));
    }

    // Newton: k e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j
    std::vector<ConstForm> e;
    e.push_back(ConstForm::scalar(n, 1.0));
    for (int m = 1; m <= k; ++m) {
        ConstForm acc(n, m, m);
        for (int j = 1; j <= m; ++j) {
            ConstForm term = e[m - j] * power_sums[j - 1];
            acc = acc + term * double(j % 2 ? 1 : -1);
        }
        e.push_back(acc * (1.0 / m));
    }
    return e[k];
}

ConstForm schur_form(const CurvatureTensor& t, const Partition& lambda) {
    const int n = t.n(), r = t.r();
    if (lambda.max_part() > r)
        throw UsageError("invalid partition: part exceeds the rank");
    if (lambda.weight() > n)
        throw UsageError("Schur form degree exceeds the base dimension");
    ChernPoly p = schur_poly(lambda, r);
    std::vector<ConstForm> vars;
    for (int i = 1; i <= r; ++i)
        vars.push_back(chern_form(t, i));
    return p.evaluate<ConstForm>(vars, ConstForm(n, lambda.weight(), lambda.weight()),
                                 ConstForm::scalar(n, 1.0));
}

} // namespace schurkit
