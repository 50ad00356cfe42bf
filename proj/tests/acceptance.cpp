// Acceptance suite: one pass/fail line per criterion, exit code equal to
// the number of failed criteria.

#include "schurkit/bundle.hpp"
#include "schurkit/chern_weil.hpp"
#include "schurkit/forms.hpp"
#include "schurkit/sampling.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/theorem.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace schurkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), static_cast<long long>(ms), note.c_str());
    if (!ok)
        ++failures;
}

ChernPoly c(int i, int rank) { return ChernPoly::chern_variable(i, rank); }

// grid of criterion 6: all split ample bundles with summand degrees in
// {1,2}, rank <= 4, on the four catalogue varieties
struct Instance {
    VarietyModel variety;
    BundleModel bundle;
    Partition lambda;
};

std::vector<Instance> ample_grid() {
    std::vector<Instance> out;
    for (const char* name : {"P3", "P4", "P2xP1", "P1xP1xP1"}) {
        VarietyModel v = VarietyModel::from_name(name);
        const int m = v.generator_count();

        std::vector<std::vector<int>> options;
        std::vector<int> cur(m, 0);
        auto build = [&](auto&& self, int g) -> void {
            if (g == m) {
                options.push_back(cur);
                return;
            }
            for (int d : {1, 2}) {
                cur[g] = d;
                self(self, g + 1);
            }
        };
        build(build, 0);

        std::vector<int> pick;
        auto rec = [&](auto&& self, int start) -> void {
            if (!pick.empty()) {
                std::vector<std::vector<int>> degrees;
                for (int i : pick)
                    degrees.push_back(options[i]);
                BundleModel e = BundleModel::split(v, degrees);
                for (const Partition& lambda :
                     Partition::enumerate(v.dimension() - 1, e.rank()))
                    out.push_back({v, e, lambda});
            }
            if (static_cast<int>(pick.size()) == 4)
                return;
            for (int i = start; i < static_cast<int>(options.size()); ++i) {
                pick.push_back(i);
                self(self, i);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

bool golden_schur_values() {
    bool ok = true;
    ok &= schur_poly(Partition({1}), 1) == c(1, 1);
    ok &= schur_poly(Partition({2}), 2) == c(2, 2);
    ok &= schur_poly(Partition({1, 1}), 2) == c(1, 2) * c(1, 2) - c(2, 2);
    ok &= schur_poly(Partition({2, 1}), 3) == c(1, 3) * c(2, 3) - c(3, 3);
    ok &= schur_poly(Partition({1, 1, 1}), 3) ==
          c(1, 3) * c(1, 3) * c(1, 3) - c(1, 3) * c(2, 3) * Rational(2) + c(3, 3);
    return ok;
}

bool tableaux_oracle_equivalence() {
    std::mt19937_64 gen(20260810);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int r = 1; r <= 4; ++r) {
        for (int k = 0; k <= 6; ++k) {
            for (const Partition& lambda : Partition::enumerate(k, r)) {
                ChernPoly s = schur_poly(lambda, r);
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<Rational> roots;
                    for (int i = 0; i < r; ++i)
                        roots.emplace_back(num(gen), den(gen));
                    std::vector<Rational> elementary;
                    for (int i = 1; i <= r; ++i)
                        elementary.push_back(testing::elementary_symmetric(i, roots));
                    if (s.evaluate_at(elementary) !=
                        testing::schur_at_roots_oracle(lambda, roots))
                        return false;
                }
            }
        }
    }
    return true;
}

bool segre_identity() {
    for (int r = 1; r <= 5; ++r)
        for (int k = 0; k <= 5; ++k) {
            Partition ones(std::vector<int>(k, 1));
            if (!(segre_poly(k, r) == schur_poly(ones, r)))
                return false;
        }
    return true;
}

bool fulton_lazarsfeld_decomposition() {
    for (int k = 1; k <= 6; ++k) {
        const int r = k;
        ChernPoly c1k = ChernPoly::one(r);
        for (int i = 0; i < k; ++i)
            c1k = c1k * c(1, r);
        ChernPoly lhs = c1k - c(k, r);

        // telescoping identity
        ChernPoly rhs = ChernPoly::zero(r);
        for (int j = 1; j <= k; ++j) {
            ChernPoly power = ChernPoly::one(r);
            for (int i = 0; i < k - j; ++i)
                power = power * c(1, r);
            rhs += power * (c(1, r) * c(j - 1, r) - c(j, r));
        }
        if (!(lhs == rhs))
            return false;

        // all Schur coefficients nonnegative
        for (const auto& [lambda, a] : schur_decompose(lhs)) {
            (void)lambda;
            if (a < 0)
                return false;
        }
        if (k >= 2 && !is_numerically_positive(lhs))
            return false;
    }
    return true;
}

bool twist_identities() {
    for (int r = 1; r <= 5; ++r)
        for (int k = 0; k <= r; ++k) {
            TwistSeries t = twisted_chern(k, r);
            for (int i = 0; i <= k; ++i)
                if (!(t.delta_coefficient(k - i) ==
                      c(i, r) * Rational(binomial(r - i, k - i))))
                    return false;
        }
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 5; ++k)
            for (const Partition& lambda : Partition::enumerate(k, r))
                for (int i = 0; i <= k; ++i)
                    if (!derived_twist_identity_check(lambda, r, i))
                        return false;
    return true;
}

bool theorem_a_suite(const std::vector<Instance>& grid) {
    for (const Instance& inst : grid) {
        if (!inst.bundle.is_ample())
            return false;
        PositivityReport rep = check_theorem_A(inst.bundle, inst.lambda);
        if (rep.verdict != PositivityReport::Verdict::StrictlyPositive)
            return false;
        for (const auto& [ray, value] : rep.pairings) {
            (void)ray;
            if (!(value > 0))
                return false;
        }
    }

    // stored spot values, frozen from the independent ring oracle
    {
        VarietyModel p3 = VarietyModel::projective_space(3);
        PositivityReport rep =
            check_theorem_A(parse_bundle("O(1)+O(1)+O(1)", p3), Partition({1, 1}));
        if (rep.pairings.size() != 1 || rep.pairings[0].second != Rational(6))
            return false;
        std::vector<int> caps{3};
        auto co = testing::split_chern_oracle(caps, {{1}, {1}, {1}});
        auto s11 = co[1] * co[1] + co[2] * Rational(-1);
        auto h = testing::ProductRingOracle::generator(caps, 0);
        if ((s11 * h).top_coefficient() != Rational(6))
            return false;
    }
    {
        VarietyModel t3 = VarietyModel::from_name("P1xP1xP1");
        PositivityReport rep = check_theorem_A(
            parse_bundle("O(1,1,1)+O(1,1,1)", t3), Partition({1, 1}));
        if (rep.pairings.size() != 3)
            return false;
        for (const auto& [ray, value] : rep.pairings) {
            (void)ray;
            if (value != Rational(6))
                return false;
        }
        std::vector<int> caps{1, 1, 1};
        auto co = testing::split_chern_oracle(caps, {{1, 1, 1}, {1, 1, 1}});
        auto s11 = co[1] * co[1] + co[2] * Rational(-1);
        for (int g = 0; g < 3; ++g)
            if ((s11 * testing::ProductRingOracle::generator(caps, g)).top_coefficient() !=
                Rational(6))
                return false;
    }
    return true;
}

bool hodge_index_suite(const std::vector<Instance>& grid) {
    for (const Instance& inst : grid) {
        HodgeIndexReport rep = hodge_index_matrix(inst.bundle, inst.lambda);
        if (rep.signature != std::array<int, 3>{1, 0, inst.variety.h11() - 1})
            return false;
    }

    // the 3x3 worked example, with the eigen-route cross-check
    VarietyModel t3 = VarietyModel::from_name("P1xP1xP1");
    HodgeIndexReport rep =
        hodge_index_matrix(parse_bundle("O(1,1,1)+O(1,1,1)", t3), Partition({2}));
    if (rep.signature != std::array<int, 3>{1, 0, 2})
        return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (rep.q[i][j] != (i == j ? Rational(0) : Rational(2)))
                return false;
    Eigen::MatrixXcd qm(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            qm(i, j) = static_cast<double>(rep.q[i][j]);
    HermitianSignSummary s = exact_hermitian_sign_summary(qm);
    return s.positive == 1 && s.zero == 0 && s.negative == 2;
}

bool perturbation_suite(const std::vector<Instance>& grid) {
    for (const Instance& inst : grid) {
        CohomClass omega = inst.variety.zero_class(1);
        for (const CohomClass& ray : inst.variety.nef_rays())
            omega = omega + ray;
        PerturbationReport rep =
            perturbation_check(inst.bundle, inst.lambda, omega, omega);
        if (!rep.identity_holds)
            return false;
        if (rep.t_coefficients.empty() ||
            rep.t_coefficients[0] != rep.expected_constant)
            return false;
        if (rep.t_coefficients.size() > 1 &&
            rep.t_coefficients[1] != rep.expected_linear)
            return false;
    }
    return true;
}

bool negative_control() {
    VarietyModel p3 = VarietyModel::projective_space(3);
    PositivityReport rep =
        check_theorem_A(parse_bundle("O(1)+O(-1)", p3), Partition({2}));
    return rep.verdict == PositivityReport::Verdict::Fails && rep.failing_ray == "H" &&
           rep.pairings.size() == 1 && rep.pairings[0].second == Rational(-1);
}

bool form_positivity() {
    // hat-basis roundtrip, bit exact
    for (int n = 2; n <= 4; ++n) {
        Eigen::MatrixXcd m(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                m(j, k) = std::complex<double>(1.0 / (1 + j + k), j == k ? 0.0 : (j < k ? 0.5 : -0.5));
        Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
        Eigen::MatrixXcd back = matrix_from_form_hat(form_from_matrix_hat(herm));
        if ((back - herm).cwiseAbs().maxCoeff() != 0.0)
            return false;
    }

    // [[1,2],[2,1]] rejected with an eigenvector witness
    {
        Eigen::MatrixXcd m(2, 2);
        m << 1, 2, 2, 1;
        PositivityVerdict v = is_positive(form_from_matrix_11(m));
        if (!v.violated() || v.witness.size() != 1)
            return false;
        if ((m * v.witness[0] + v.witness[0]).norm() > 1e-9)
            return false;
    }

    // cone-duality sampling: 10^4 pairs per (n,p), n <= 4, p <= 3
    for (int n = 2; n <= 4; ++n) {
        for (int p = 1; p <= std::min(3, n - 1); ++p) {
            Rng rng(derive_seed(9090, n * 8 + p));
            ConstForm u(n, p, p);
            for (int s = 0; s < 3; ++s) {
                std::vector<Eigen::VectorXcd> tuple;
                for (int t = 0; t < p; ++t)
                    tuple.push_back(rng.unit_complex_vector(n));
                u = u + ConstForm::decomposable(n, tuple) * (1.0 + s);
            }
            for (int trial = 0; trial < 10000; ++trial) {
                std::vector<Eigen::VectorXcd> tuple;
                for (int t = 0; t < n - p; ++t)
                    tuple.push_back(rng.unit_complex_vector(n));
                double pairing =
                    (u * ConstForm::decomposable(n, tuple)).volume_coefficient().real();
                if (pairing < -1e-9)
                    return false;
            }
        }
    }
    return true;
}

bool chern_weil_lab() {
    // 50 random tensors with n, r <= 4: determinant route vs power traces,
    // and gauge invariance, both to 1e-10
    int count = 0;
    for (std::uint64_t seed = 1; count < 50; ++seed, ++count) {
        int n = 2 + static_cast<int>(seed % 3);
        int r = 2 + static_cast<int>((seed / 3) % 3);
        CurvatureTensor t = random_nakano_positive(n, r, derive_seed(404, seed));
        Rng rng(derive_seed(505, seed));
        Eigen::MatrixXcd u = rng.random_unitary(r);
        CurvatureTensor g = t.fiber_gauge(u);
        for (int k = 1; k <= std::min(n, r); ++k) {
            ConstForm det_route = chern_form(t, k);
            if ((det_route - chern_form_from_power_traces(t, k)).max_abs() > 1e-10)
                return false;
            if ((det_route - chern_form(g, k)).max_abs() > 1e-10)
                return false;
        }
    }

    // 100 seeded rank-2, n=2 samples: the second Chern form is positive
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        CurvatureTensor t = random_nakano_positive(2, 2, derive_seed(606, seed));
        GriffithsResult gr = griffiths_min(t, 1e-9, derive_seed(707, seed));
        if (!(gr.value > 0))
            return false;
        ConstForm c2 = schur_form(t, Partition({2}));
        if (is_positive(c2).violated())
            return false;
    }
    return true;
}

} // namespace

int main() {
    std::printf("schurkit acceptance suite\n");

    criterion(1, "golden Schur polynomials", golden_schur_values);
    criterion(2, "tableaux oracle equivalence (k<=6, r<=4, 20 root tuples)",
              tableaux_oracle_equivalence);
    criterion(3, "Segre / s_(1^k) identity (k<=5, r<=5)", segre_identity);
    criterion(4, "c_1^k - c_k decomposition and telescoping identity (k<=6)",
              fulton_lazarsfeld_decomposition);
    criterion(5, "twisted Chern binomial formula and twist composition identity",
              twist_identities);

    std::vector<Instance> grid = ample_grid();
    std::printf("  (ample grid: %zu instances)\n", grid.size());
    criterion(6, "strict positivity across the ample instance grid",
              [&] { return theorem_a_suite(grid); });
    criterion(7, "Hodge-index signatures (1, 0, h11-1) across the grid",
              [&] { return hodge_index_suite(grid); });
    criterion(8, "perturbation expansion identity across the grid",
              [&] { return perturbation_suite(grid); });
    criterion(9, "negative control O(1)+O(-1) fails at the H ray", negative_control);
    criterion(10, "form positivity: hat roundtrip, witness, cone duality",
              form_positivity);
    criterion(11, "curvature lab: route agreement, gauge invariance, c_2 positivity",
              chern_weil_lab);

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
