#include "schurkit/theorem.hpp"

#include "schurkit/errors.hpp"
#include "schurkit/schur.hpp"

#include <algorithm>
#include <map>

namespace schurkit {

namespace {

void require_top_minus_one(const BundleModel& e, const Partition& lambda) {
    const int n = e.variety().dimension();
    if (lambda.weight() != n - 1)
        throw UsageError("partition weight must be dim - 1 = " + std::to_string(n - 1) +
                         " (got " + std::to_string(lambda.weight()) + ")");
    if (lambda.max_part() > e.rank())
        throw UsageError("invalid partition: part " + std::to_string(lambda.max_part()) +
                         " > rank " + std::to_string(e.rank()));
}

std::string ray_name(const CohomClass& ray) { return ray.to_string(); }

// Polynomial in a formal parameter with cohomology-class coefficients;
// local ring for the direct-substitution route of perturbation_check.
class ClassPoly {
public:
    ClassPoly() = default;
    explicit ClassPoly(const CohomClass& constant) { coeffs_.emplace(0, constant); }

    static ClassPoly monomial(const CohomClass& c, int power) {
        ClassPoly p;
        p.coeffs_.emplace(power, c);
        return p;
    }

    const std::map<int, CohomClass>& coefficients() const { return coeffs_; }

    ClassPoly operator+(const ClassPoly& o) const {
        ClassPoly out = *this;
        for (const auto& [k, c] : o.coeffs_)
            out.add(k, c);
        return out;
    }

    ClassPoly operator*(const ClassPoly& o) const {
        ClassPoly out;
        for (const auto& [ka, ca] : coeffs_)
            for (const auto& [kb, cb] : o.coeffs_)
                out.add(ka + kb, ca * cb);
        return out;
    }

    friend ClassPoly scale(const ClassPoly& p, const Rational& c) {
        ClassPoly out;
        for (const auto& [k, v] : p.coeffs_)
            out.add(k, v * c);
        return out;
    }

private:
    void add(int power, const CohomClass& c) {
        auto [it, inserted] = coeffs_.emplace(power, c);
        if (!inserted)
            it->second = it->second + c;
    }

    std::map<int, CohomClass> coeffs_;
};

} // namespace

std::string PositivityReport::verdict_string() const {
    switch (verdict) {
    case Verdict::StrictlyPositive: return "strictly-positive-representative";
    case Verdict::Fails: return "fails(" + failing_ray + ")";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

PositivityReport check_theorem_A(const BundleModel& e, const Partition& lambda) {
    require_top_minus_one(e, lambda);
    const VarietyModel& v = e.variety();

    PositivityReport report;
    report.variety = v.name();
    report.bundle = e.spec_string();
    report.lambda = lambda;

    if (!v.has_cone_data()) {
        report.verdict = PositivityReport::Verdict::NotApplicable;
        report.note = "no extremal-ray data for this model";
        return report;
    }

    CohomClass s = e.schur_class(lambda);
    bool all_positive = true;
    std::string first_bad;
    for (const CohomClass& ray : v.pseff_rays()) {
        Rational pairing = (s * ray).integrate();
        report.pairings.emplace_back(ray_name(ray), pairing);
        if (pairing <= 0 && all_positive) {
            all_positive = false;
            first_bad = ray_name(ray);
        }
    }

    if (s.is_zero()) {
        report.verdict = PositivityReport::Verdict::NotApplicable;
        report.note = "Schur class vanishes";
    } else if (all_positive) {
        report.verdict = PositivityReport::Verdict::StrictlyPositive;
    } else {
        report.verdict = PositivityReport::Verdict::Fails;
        report.failing_ray = first_bad;
    }
    return report;
}

PerturbationReport perturbation_check(const BundleModel& e, const Partition& lambda,
                                      const CohomClass& omega, const CohomClass& big_l) {
    require_top_minus_one(e, lambda);
    if (omega.degree() != 1 || big_l.degree() != 1)
        throw UsageError("omega and L must have degree 1");
    const VarietyModel& v = e.variety();
    const int r = e.rank();

    PerturbationReport report;
    report.variety = v.name();
    report.bundle = e.spec_string();
    report.lambda = lambda;

    // Direct route: c_k(E<delta - t omega>) as polynomials in t, where the
    // binomial twist identity is expanded with (delta - t omega)^d.
    std::vector<ClassPoly> chern_t;
    for (int k = 1; k <= r; ++k) {
        TwistSeries series = twisted_chern(k, r);
        ClassPoly acc;
        std::vector<CohomClass> untwisted;
        for (int i = 1; i <= r; ++i)
            untwisted.push_back(e.stored_chern(i));
        for (const auto& [d, poly] : series.coefficients()) {
            CohomClass base =
                poly.evaluate<CohomClass>(untwisted, v.zero_class(k - d), v.unit_class());
            // (delta - t omega)^d
            for (int j = 0; j <= d; ++j) {
                CohomClass part = base * e.twist().pow(d - j) * omega.pow(j) *
                                  Rational(binomial(d, j)) *
                                  (j % 2 ? Rational(-1) : Rational(1));
                acc = acc + ClassPoly::monomial(part, j);
            }
        }
        chern_t.push_back(acc);
    }
    ChernPoly schur = schur_poly(lambda, r);
    ClassPoly zero;
    ClassPoly one(v.unit_class());
    ClassPoly s_t = schur.evaluate<ClassPoly>(chern_t, zero, one);
    ClassPoly paired = s_t * ClassPoly(big_l);

    int max_power = 0;
    for (const auto& [k, c] : paired.coefficients()) {
        (void)c;
        max_power = std::max(max_power, k);
    }
    report.t_coefficients.assign(max_power + 1, Rational(0));
    for (const auto& [k, c] : paired.coefficients())
        report.t_coefficients[k] = c.integrate();

    // Derived route for the two coefficients the expansion pins down.
    report.expected_constant = (e.schur_class(lambda) * big_l).integrate();
    report.expected_linear =
        -(e.derived_schur_class(lambda, 1) * omega * big_l).integrate();

    report.identity_holds = report.t_coefficients[0] == report.expected_constant &&
                            (max_power < 1 ? report.expected_linear == 0
                                           : report.t_coefficients[1] == report.expected_linear);
    return report;
}

std::array<int, 3> symmetric_signature(std::vector<std::vector<Rational>> m) {
    const int dim = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != dim)
            throw UsageError("signature needs a square matrix");
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (m[i][j] != m[j][i])
                throw UsageError("signature needs a symmetric matrix");

    std::array<int, 3> sig{0, 0, 0}; // (positive, zero, negative)
    std::vector<bool> done(dim, false);

    for (int step = 0; step < dim; ++step) {
        // pick a pivot with nonzero diagonal, manufacturing one by a
        // congruence row/column addition when only off-diagonal entries
        // survive
        int pivot = -1;
        for (int i = 0; i < dim; ++i)
            if (!done[i] && m[i][i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            int a = -1, b = -1;
            for (int i = 0; i < dim && a < 0; ++i)
                if (!done[i])
                    for (int j = i + 1; j < dim; ++j)
                        if (!done[j] && m[i][j] != 0) {
                            a = i;
                            b = j;
                            break;
                        }
            if (a < 0) {
                for (int i = 0; i < dim; ++i)
                    if (!done[i])
                        ++sig[1];
                return sig;
            }
            for (int k = 0; k < dim; ++k)
                m[a][k] += m[b][k];
            for (int k = 0; k < dim; ++k)
                m[k][a] += m[k][b];
            pivot = a; // now m[a][a] = 2 m_ab != 0
        }

        Rational d = m[pivot][pivot];
        if (d > 0)
            ++sig[0];
        else
            ++sig[2];
        done[pivot] = true;
        for (int k = 0; k < dim; ++k) {
            if (done[k] || m[k][pivot] == 0)
                continue;
            Rational f = m[k][pivot] / d;
            for (int c = 0; c < dim; ++c)
                m[k][c] -= f * m[pivot][c];
            for (int c = 0; c < dim; ++c)
                m[c][k] -= f * m[c][pivot];
        }
    }
    return sig;
}

HodgeIndexReport hodge_index_matrix(const BundleModel& e, const Partition& lambda) {
    require_top_minus_one(e, lambda);
    const VarietyModel& v = e.variety();
    if (!v.has_cone_data())
        throw UsageError("Hodge index matrix needs a model with ray data");
    std::vector<CohomClass> rays = v.pseff_rays();
    if (static_cast<int>(rays.size()) != v.h11())
        throw UsageError("ray basis does not span H^{1,1}");

    HodgeIndexReport report;
    report.variety = v.name();
    report.bundle = e.spec_string();
    report.lambda = lambda;

    CohomClass s1 = e.derived_schur_class(lambda, 1);
    const int dim = static_cast<int>(rays.size());
    report.q.assign(dim, std::vector<Rational>(dim, Rational(0)));
    for (int i = 0; i < dim; ++i) {
        report.ray_names.push_back(ray_name(rays[i]));
        for (int j = 0; j < dim; ++j)
            report.q[i][j] = (s1 * rays[i] * rays[j]).integrate();
    }
    report.signature = symmetric_signature(report.q);
    return report;
}

MovableReport movable_nonnegativity_check(const BundleModel& e, const Partition& lambda) {
    require_top_minus_one(e, lambda);
    const VarietyModel& v = e.variety();
    if (!v.has_cone_data())
        throw UsageError("movable check needs a model with ray data");
    if (!e.is_nef())
        throw UsageError("movable check requires a nef bundle "
                         "(all summand degrees plus twist >= 0)");

    MovableReport report;
    report.variety = v.name();
    report.bundle = e.spec_string();
    report.lambda = lambda;

    CohomClass s = e.schur_class(lambda);
    report.all_nonnegative = true;
    for (const CohomClass& ray : v.nef_rays()) {
        Rational pairing = (s * ray).integrate();
        report.pairings.emplace_back(ray_name(ray), pairing);
        if (pairing < 0)
            report.all_nonnegative = false;
    }
    return report;
}

RestrictionReport corollary_restriction_check(const BundleModel& e, const Partition& lambda,
                                              int m, const std::optional<CohomClass>& omega) {
    const VarietyModel& v = e.variety();
    const int n = v.dimension();
    if (lambda.weight() + m + 1 != n)
        throw UsageError("need |lambda| + m + 1 = dim (got " +
                         std::to_string(lambda.weight()) + " + " + std::to_string(m) + " + 1 != " +
                         std::to_string(n) + ")");
    if (lambda.max_part() > e.rank())
        throw UsageError("invalid partition: part exceeds the rank");
    if (!v.has_cone_data())
        throw UsageError("restriction check needs a model with ray data");

    CohomClass w = v.zero_class(1);
    if (omega) {
        w = *omega;
        if (w.degree() != 1)
            throw UsageError("omega must have degree 1");
    } else {
        for (const CohomClass& ray : v.nef_rays())
            w = w + ray;
    }

    RestrictionReport report;
    report.variety = v.name();
    report.bundle = e.spec_string();
    report.lambda = lambda;
    report.hyperplane_power = m;

    CohomClass cls = e.schur_class(lambda) * w.pow(m);
    report.all_positive = true;
    for (const CohomClass& ray : v.pseff_rays()) {
        Rational pairing = (cls * ray).integrate();
        report.pairings.emplace_back(ray_name(ray), pairing);
        if (pairing <= 0)
            report.all_positive = false;
    }
    return report;
}

Rational twist_stability_margin(const BundleModel& e, const Partition& lambda,
                                const CohomClass& omega) {
    require_top_minus_one(e, lambda);
    const VarietyModel& v = e.variety();
    if (!v.has_cone_data())
        throw UsageError("stability margin needs a model with ray data");
    if (omega.degree() != 1)
        throw UsageError("omega must have degree 1");

    Rational bound(0);
    bool first = true;
    for (const CohomClass& ray : v.pseff_rays()) {
        Rational base = (e.schur_class(lambda) * ray).integrate();
        if (base <= 0)
            return Rational(0);
        // pairing of s_lambda(E<delta + eps omega>) with the ray is
        // sum_i (integral of s^(i) . omega^i . ray) eps^i
        Rational tail(0);
        for (int i = 1; i <= lambda.weight(); ++i) {
            CohomClass si = e.derived_schur_class(lambda, i);
            Rational coeff = (si * omega.pow(i) * ray).integrate();
            tail += abs(coeff);
        }
        Rational candidate = base / (1 + tail);
        if (first || candidate < bound) {
            bound = candidate;
            first = false;
        }
    }
    return std::min(bound, Rational(1));
}

} // namespace schurkit
