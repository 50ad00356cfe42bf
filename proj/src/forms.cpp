#include "schurkit/forms.hpp"

#include "schurkit/errors.hpp"
#include "schurkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace schurkit {

namespace {

// i^k as an exact unit
std::complex<double> i_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

// sign of merging two strictly increasing sequences; 0 on collision
int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    int inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining elements of a
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

void check_index(const std::vector<int>& idx, int n) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= n)
            throw UsageError("form index out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw UsageError("form multi-index must be strictly increasing");
    }
}

} // namespace

ConstForm::ConstForm(int n, int p, int q) : n_(n), p_(p), q_(q) {
    if (n < 1)
        throw UsageError("form dimension must be positive");
    if (p < 0 || q < 0)
        throw UsageError("form bidegree must be nonnegative");
}

ConstForm ConstForm::scalar(int n, std::complex<double> value) {
    ConstForm f(n, 0, 0);
    if (value != 0.0)
        f.coeffs_.emplace(Key{{}, {}}, value);
    return f;
}

ConstForm ConstForm::dz(int n, int j) {
    ConstForm f(n, 1, 0);
    f.add_term({j}, {}, 1.0);
    return f;
}

ConstForm ConstForm::dzbar(int n, int j) {
    ConstForm f(n, 0, 1);
    f.add_term({}, {j}, 1.0);
    return f;
}

ConstForm ConstForm::volume(int n) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i)
        full[i] = i;
    ConstForm f(n, n, n);
    f.add_term(full, full, i_power(n * n));
    return f;
}

ConstForm ConstForm::decomposable(int n, const std::vector<Eigen::VectorXcd>& alphas) {
    ConstForm acc = scalar(n, 1.0);
    for (const auto& a : alphas) {
        if (a.size() != n)
            throw UsageError("alpha vector dimension mismatch");
        ConstForm f(n, 1, 1);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::complex<double> c = std::complex<double>(0, 1) * a(j) * std::conj(a(k));
                if (c != 0.0)
                    f.add_term({j}, {k}, c);
            }
        acc = acc * f;
    }
    return acc;
}

std::complex<double> ConstForm::coefficient(const std::vector<int>& I,
                                            const std::vector<int>& J) const {
    auto it = coeffs_.find(Key{I, J});
    return it == coeffs_.end() ? std::complex<double>(0, 0) : it->second;
}

void ConstForm::add_term(std::vector<int> I, std::vector<int> J, std::complex<double> v) {
    if (static_cast<int>(I.size()) != p_ || static_cast<int>(J.size()) != q_)
        throw UsageError("multi-index length does not match the bidegree");
    check_index(I, n_);
    check_index(J, n_);
    auto [it, inserted] = coeffs_.emplace(Key{std::move(I), std::move(J)}, v);
    if (!inserted)
        it->second += v;
    if (it->second == 0.0)
        coeffs_.erase(it);
}

ConstForm ConstForm::operator+(const ConstForm& other) const {
    if (n_ != other.n_ || p_ != other.p_ || q_ != other.q_)
        throw UsageError("form bidegree mismatch in addition");
    ConstForm out = *this;
    for (const auto& [k, v] : other.coeffs_) {
        auto [it, inserted] = out.coeffs_.emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0.0)
                out.coeffs_.erase(it);
        }
    }
    return out;
}

ConstForm ConstForm::operator-(const ConstForm& other) const {
    return *this + other * std::complex<double>(-1, 0);
}

ConstForm ConstForm::operator*(const ConstForm& other) const {
    if (n_ != other.n_)
        throw UsageError("form dimension mismatch in wedge product");
    ConstForm out(n_, p_ + other.p_, q_ + other.q_);
    if (out.p_ > n_ || out.q_ > n_)
        return out; // overflow wedges to zero
    std::vector<int> mi, mj;
    // moving the second dz block across the first dzbar block
    int cross = (q_ * other.p_) % 2 ? -1 : 1;
    for (const auto& [ka, va] : coeffs_) {
        for (const auto& [kb, vb] : other.coeffs_) {
            int si = merge_sign(ka.first, kb.first, mi);
            if (si == 0)
                continue;
            int sj = merge_sign(ka.second, kb.second, mj);
            if (sj == 0)
                continue;
            std::complex<double> v = va * vb * double(si * sj * cross);
            auto [it, inserted] = out.coeffs_.emplace(Key{mi, mj}, v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0.0)
                    out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

ConstForm ConstForm::operator*(std::complex<double> scalar) const {
    ConstForm out(n_, p_, q_);
    if (scalar == 0.0)
        return out;
    for (const auto& [k, v] : coeffs_)
        out.coeffs_.emplace(k, v * scalar);
    return out;
}

ConstForm ConstForm::operator*(double scalar) const {
    return *this * std::complex<double>(scalar, 0);
}

ConstForm ConstForm::conjugate() const {
    ConstForm out(n_, q_, p_);
    double sign = (p_ * q_) % 2 ? -1.0 : 1.0;
    for (const auto& [k, v] : coeffs_)
        out.coeffs_.emplace(Key{k.second, k.first}, std::conj(v) * sign);
    return out;
}

bool ConstForm::is_real(double tol) const {
    if (p_ != q_)
        return false;
    ConstForm diff = *this - conjugate();
    return diff.max_abs() <= tol;
}

double ConstForm::max_abs() const {
    double m = 0;
    for (const auto& [k, v] : coeffs_) {
        (void)k;
        m = std::max(m, std::abs(v));
    }
    return m;
}

std::complex<double> ConstForm::volume_coefficient() const {
    if (p_ != n_ || q_ != n_)
        throw UsageError("volume coefficient needs an (n,n) form");
    std::vector<int> full(n_);
    for (int i = 0; i < n_; ++i)
        full[i] = i;
    // dvol = i^{n^2} dz_N dzbar_N
    return coefficient(full, full) / i_power(n_ * n_);
}

ConstForm form_from_matrix_11(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw UsageError("(1,1) coefficient matrix must be square");
    const int n = static_cast<int>(m.rows());
    ConstForm f(n, 1, 1);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::complex<double> c = std::complex<double>(0, 1) * m(j, k);
            if (c != 0.0)
                f.add_term({j}, {k}, c);
        }
    return f;
}

Eigen::MatrixXcd matrix_of_form_11(const ConstForm& u) {
    if (u.p() != 1 || u.q() != 1)
        throw UsageError("matrix_of_form_11 needs a (1,1) form");
    const int n = u.n();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [k, v] : u.coefficients())
        m(k.first[0], k.second[0]) = v / std::complex<double>(0, 1);
    return m;
}

ConstForm hat_form(int n, int j, int k) {
    if (n < 1 || j < 0 || j >= n || k < 0 || k >= n)
        throw UsageError("hat form indices out of range");
    std::vector<int> compI, compJ;
    for (int t = 0; t < n; ++t) {
        if (t != j) compI.push_back(t);
        if (t != k) compJ.push_back(t);
    }
    // solve i dz_j dzbar_k wedge c * dz_{N\j} dzbar_{N\k} = dvol for c
    ConstForm probe(n, 1, 1);
    probe.add_term({j}, {k}, std::complex<double>(0, 1));
    ConstForm candidate(n, n - 1, n - 1);
    candidate.add_term(compI, compJ, 1.0);
    std::complex<double> pairing = (probe * candidate).volume_coefficient();
    ConstForm out(n, n - 1, n - 1);
    out.add_term(compI, compJ, 1.0 / pairing);
    return out;
}

Eigen::MatrixXcd matrix_from_form_hat(const ConstForm& u) {
    const int n = u.n();
    if (u.p() != n - 1 || u.q() != n - 1)
        throw UsageError("matrix_from_form_hat needs an (n-1,n-1) form");
    Eigen::MatrixXcd m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            ConstForm probe(n, 1, 1);
            probe.add_term({j}, {k}, std::complex<double>(0, 1));
            m(j, k) = (probe * u).volume_coefficient();
        }
    return m;
}

ConstForm form_from_matrix_hat(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw UsageError("hat coefficient matrix must be square");
    const int n = static_cast<int>(m.rows());
    if (n < 2)
        throw UsageError("hat basis needs n >= 2");
    ConstForm out(n, n - 1, n - 1);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (m(j, k) != 0.0)
                out = out + hat_form(n, j, k) * m(j, k);
    return out;
}

// ---------------------------------------------------------------------------
// exact Hermitian sign test

namespace {

// complex number with exact rational parts; doubles embed exactly
struct RatComplex {
    Rational re, im;

    RatComplex() : re(0), im(0) {}
    RatComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit RatComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

    RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
    RatComplex operator-(const RatComplex& o) const { return {re - o.re, im - o.im}; }
    RatComplex operator*(const RatComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RatComplex conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
};

using RatMatrix = std::vector<std::vector<RatComplex>>;

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    const int m = static_cast<int>(a.size());
    RatMatrix out(m, std::vector<RatComplex>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (int j = 0; j < m; ++j)
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

} // namespace

HermitianSignSummary exact_hermitian_sign_summary(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw UsageError("sign summary needs a square matrix");
    const int dim = static_cast<int>(m.rows());

    // exact Hermitian part (A + A^H)/2
    RatMatrix a(dim, std::vector<RatComplex>(dim));
    const Rational half(1, 2);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            RatComplex x{Rational(m(i, j).real()), Rational(m(i, j).imag())};
            RatComplex y{Rational(m(j, i).real()), Rational(m(j, i).imag())};
            RatComplex s = x + y.conj();
            a[i][j] = RatComplex{s.re * half, s.im * half};
        }

    // Faddeev-LeVerrier: chi(t) = t^m + c[m-1] t^{m-1} + ... + c[0]
    std::vector<Rational> c(dim + 1, Rational(0));
    c[dim] = 1;
    RatMatrix mk = a;
    for (int k = 1; k <= dim; ++k) {
        RatComplex tr;
        for (int i = 0; i < dim; ++i)
            tr = tr + mk[i][i];
        if (tr.im != 0)
            throw UsageError("characteristic polynomial of a Hermitian matrix must be real");
        Rational ck = -tr.re / k;
        c[dim - k] = ck;
        if (k < dim) {
            RatMatrix shifted = mk;
            for (int i = 0; i < dim; ++i)
                shifted[i][i] = shifted[i][i] + RatComplex{ck, Rational(0)};
            mk = rat_mul(a, shifted);
        }
    }

    // All roots are real, so Descartes' rule is exact. Negative roots are
    // sign changes of chi(-t); zero roots are trailing zero coefficients.
    HermitianSignSummary out;
    int first_nonzero = 0;
    while (first_nonzero <= dim && c[first_nonzero] == 0)
        ++first_nonzero;
    out.zero = first_nonzero;

    auto count_variations = [&](bool negate) {
        int variations = 0;
        int last = 0;
        for (int k = dim; k >= first_nonzero; --k) {
            Rational v = c[k];
            if (negate && (k % 2 == 1))
                v = -v;
            int s = sign_of(v);
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++variations;
            last = s;
        }
        return variations;
    };
    out.positive = count_variations(false);
    out.negative = count_variations(true);
    return out;
}

// ---------------------------------------------------------------------------
// positivity verdicts

bool PositivityVerdict::accepted(PositivityMode mode) const {
    switch (kind) {
    case Kind::PositiveStrict: return true;
    case Kind::PositiveSemi: return mode == PositivityMode::Semi;
    case Kind::NoViolationFound: return mode == PositivityMode::Semi;
    case Kind::Violated: return false;
    }
    return false;
}

std::string PositivityVerdict::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::PositiveStrict: os << "positive-strict"; break;
    case Kind::PositiveSemi: os << "positive-semi"; break;
    case Kind::Violated: os << "violated"; break;
    case Kind::NoViolationFound:
        os << "no-violation-found(" << samples_used << ")";
        break;
    }
    return os.str();
}

namespace {

PositivityVerdict matrix_verdict(const Eigen::MatrixXcd& m, const PositivityOptions& opts,
                                 const char* method_exact, const char* method_float) {
    PositivityVerdict v;
    Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    v.min_value = es.eigenvalues().minCoeff();

    if (opts.exact) {
        v.method = method_exact;
        HermitianSignSummary s = exact_hermitian_sign_summary(m);
        if (!s.psd())
            v.kind = PositivityVerdict::Kind::Violated;
        else if (s.pd())
            v.kind = PositivityVerdict::Kind::PositiveStrict;
        else
            v.kind = PositivityVerdict::Kind::PositiveSemi;
    } else {
        v.method = method_float;
        if (v.min_value < -opts.tolerance)
            v.kind = PositivityVerdict::Kind::Violated;
        else if (v.min_value > opts.tolerance)
            v.kind = PositivityVerdict::Kind::PositiveStrict;
        else
            v.kind = PositivityVerdict::Kind::PositiveSemi;
    }
    if (v.kind == PositivityVerdict::Kind::Violated) {
        int idx = 0;
        es.eigenvalues().minCoeff(&idx);
        v.witness.push_back(es.eigenvectors().col(idx));
    }
    return v;
}

PositivityVerdict scalar_verdict(std::complex<double> value, const PositivityOptions& opts) {
    PositivityVerdict v;
    v.method = "scalar";
    v.min_value = value.real();
    double tol = opts.exact ? 0.0 : opts.tolerance;
    if (value.real() < -tol)
        v.kind = PositivityVerdict::Kind::Violated;
    else if (value.real() > tol)
        v.kind = PositivityVerdict::Kind::PositiveStrict;
    else
        v.kind = PositivityVerdict::Kind::PositiveSemi;
    return v;
}

PositivityVerdict sampled_verdict(const ConstForm& u, const PositivityOptions& opts) {
    PositivityVerdict v;
    v.method = "sampled";
    v.seed = opts.seed;
    v.samples_used = opts.samples;
    const int n = u.n();
    const int codim = n - u.p();

    std::vector<double> pairings(opts.samples, 0.0);
    parallel_for_index(opts.samples, opts.threads, [&](int i) {
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(i)));
        std::vector<Eigen::VectorXcd> alphas;
        alphas.reserve(codim);
        for (int t = 0; t < codim; ++t)
            alphas.push_back(rng.unit_complex_vector(n));
        ConstForm test = ConstForm::decomposable(n, alphas);
        pairings[i] = (u * test).volume_coefficient().real();
    });

    double min_pairing = 0.0;
    int min_index = -1;
    for (int i = 0; i < opts.samples; ++i) {
        if (min_index < 0 || pairings[i] < min_pairing) {
            min_pairing = pairings[i];
            min_index = i;
        }
    }
    v.min_value = min_pairing;
    if (min_pairing < -opts.tolerance) {
        v.kind = PositivityVerdict::Kind::Violated;
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(min_index)));
        for (int t = 0; t < codim; ++t)
            v.witness.push_back(rng.unit_complex_vector(n));
    } else {
        v.kind = PositivityVerdict::Kind::NoViolationFound;
    }
    return v;
}

} // namespace

PositivityVerdict is_positive(const ConstForm& u, const PositivityOptions& opts) {
    if (u.p() != u.q())
        throw UsageError("positivity is defined for (p,p) forms");
    if (!u.is_real(std::max(opts.tolerance, 1e-9)))
        throw UsageError("positivity test needs a real (p,p) form");
    const int n = u.n(), p = u.p();

    if (p == 0) {
        std::complex<double> c = u.coefficient({}, {});
        return scalar_verdict(c, opts);
    }
    if (p == n)
        return scalar_verdict(u.volume_coefficient(), opts);
    if (p == 1)
        return matrix_verdict(matrix_of_form_11(u), opts, "matrix-exact", "matrix-float");
    if (p == n - 1)
        return matrix_verdict(matrix_from_form_hat(u), opts, "hat-matrix-exact",
                              "hat-matrix-float");
    return sampled_verdict(u, opts);
}

// ---------------------------------------------------------------------------
// strongly positive witness search

Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iterations) {
    const int cols = static_cast<int>(a.cols());
    if (max_iterations <= 0)
        max_iterations = 3 * cols + 30;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(cols);
    std::vector<bool> passive(cols, false);
    const double tol = 1e-12 * std::max(1.0, b.norm());

    for (int iter = 0; iter < max_iterations; ++iter) {
        Eigen::VectorXd w = a.transpose() * (b - a * x);
        int best = -1;
        double best_w = tol;
        for (int i = 0; i < cols; ++i)
            if (!passive[i] && w(i) > best_w) {
                best_w = w(i);
                best = i;
            }
        if (best < 0)
            break;
        passive[best] = true;

        while (true) {
            std::vector<int> idx;
            for (int i = 0; i < cols; ++i)
                if (passive[i])
                    idx.push_back(i);
            Eigen::MatrixXd ap(a.rows(), idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                ap.col(i) = a.col(idx[i]);
            Eigen::VectorXd z = ap.colPivHouseholderQr().solve(b);

            bool all_positive = true;
            double alpha = 1.0;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (z(i) <= 0) {
                    all_positive = false;
                    double xi = x(idx[i]);
                    double step = xi / (xi - z(i));
                    alpha = std::min(alpha, step);
                }
            }
            if (all_positive) {
                x.setZero();
                for (std::size_t i = 0; i < idx.size(); ++i)
                    x(idx[i]) = z(i);
                break;
            }
            for (std::size_t i = 0; i < idx.size(); ++i)
                x(idx[i]) += alpha * (z(i) - x(idx[i]));
            for (int i = 0; i < cols; ++i)
                if (passive[i] && x(i) <= tol) {
                    passive[i] = false;
                    x(i) = 0;
                }
        }
    }
    return x;
}

std::optional<std::vector<double>>
strongly_positive_witness(const ConstForm& u,
                          const std::vector<std::vector<Eigen::VectorXcd>>& generators,
                          double tol) {
    if (u.p() != u.q())
        throw UsageError("witness search needs a (p,p) form");
    if (generators.empty())
        return std::nullopt;
    const int n = u.n();

    std::vector<ConstForm> forms;
    forms.reserve(generators.size());
    for (const auto& tuple : generators) {
        if (static_cast<int>(tuple.size()) != u.p())
            throw UsageError("each generator tuple needs p vectors");
        forms.push_back(ConstForm::decomposable(n, tuple));
    }

    // collect the key set of the target and all generators
    std::map<ConstForm::Key, int> key_index;
    auto note_keys = [&](const ConstForm& f) {
        for (const auto& [k, v] : f.coefficients()) {
            (void)v;
            key_index.emplace(k, static_cast<int>(key_index.size()));
        }
    };
    note_keys(u);
    for (const auto& f : forms)
        note_keys(f);

    const int rows = 2 * static_cast<int>(key_index.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, static_cast<int>(forms.size()));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
    auto fill = [&](const ConstForm& f, int col) {
        for (const auto& [k, v] : f.coefficients()) {
            int r = key_index.at(k);
            if (col < 0) {
                b(2 * r) = v.real();
                b(2 * r + 1) = v.imag();
            } else {
                a(2 * r, col) = v.real();
                a(2 * r + 1, col) = v.imag();
            }
        }
    };
    fill(u, -1);
    for (std::size_t i = 0; i < forms.size(); ++i)
        fill(forms[i], static_cast<int>(i));

    Eigen::VectorXd x = nnls(a, b);
    double residual = (a * x - b).norm();
    if (residual > tol * std::max(1.0, b.norm()))
        return std::nullopt;
    return std::vector<double>(x.data(), x.data() + x.size());
}

} // namespace schurkit
