#ifndef SCHURKIT_THEOREM_HPP
#define SCHURKIT_THEOREM_HPP

#include "schurkit/bundle.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/variety.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace schurkit {

// Per-ray pairing of a top-minus-one Schur class against the
// pseudo-effective extremal rays.
struct PositivityReport {
    std::string variety;
    std::string bundle;
    Partition lambda;
    std::vector<std::pair<std::string, Rational>> pairings; // ray name -> value

    enum class Verdict { StrictlyPositive, Fails, NotApplicable };
    Verdict verdict = Verdict::NotApplicable;
    std::string failing_ray; // set when verdict == Fails
    std::string note;        // reason for NotApplicable

    std::string verdict_string() const;
};

// Strict-positivity criterion on catalogue varieties: s_lambda(E) paired
// with every pseudo-effective extremal ray; simplicial cones make the ray
// check complete. |lambda| must equal dim - 1.
PositivityReport check_theorem_A(const BundleModel& e, const Partition& lambda);

struct PerturbationReport {
    std::string variety;
    std::string bundle;
    Partition lambda;
    std::vector<Rational> t_coefficients; // of the integral of s_lambda(E<-t omega>) . L
    Rational expected_constant;           // integral of s_lambda(E) . L
    Rational expected_linear;             // -integral of s^(1)_lambda(E) . omega . L
    bool identity_holds = false;
};

// Expands the twisted Schur class in the formal parameter t by direct
// substitution and checks the constant and linear coefficients against the
// derived-class route.
PerturbationReport perturbation_check(const BundleModel& e, const Partition& lambda,
                                      const CohomClass& omega, const CohomClass& big_l);

struct HodgeIndexReport {
    std::string variety;
    std::string bundle;
    Partition lambda;
    std::vector<std::string> ray_names;
    std::vector<std::vector<Rational>> q;  // Gram matrix over the ray basis
    std::array<int, 3> signature{0, 0, 0}; // (n_+, n_0, n_-)
};

// Q(beta, beta') = integral of s^(1)_lambda(E) . beta . beta' over the
// degree-1 ray basis, with the signature computed by exact congruence
// elimination. |lambda| must equal dim - 1.
HodgeIndexReport hodge_index_matrix(const BundleModel& e, const Partition& lambda);

// Exact signature (positive, zero, negative) of a symmetric rational matrix.
std::array<int, 3> symmetric_signature(std::vector<std::vector<Rational>> m);

struct MovableReport {
    std::string variety;
    std::string bundle;
    Partition lambda;
    std::vector<std::pair<std::string, Rational>> pairings; // nef ray -> value
    bool all_nonnegative = false;
};

// s_lambda(E) against the nef rays (the movable cone of the catalogue
// varieties); requires a nef split bundle and |lambda| = dim - 1.
MovableReport movable_nonnegativity_check(const BundleModel& e, const Partition& lambda);

struct RestrictionReport {
    std::string variety;
    std::string bundle;
    Partition lambda;
    int hyperplane_power = 0;
    std::vector<std::pair<std::string, Rational>> pairings;
    bool all_positive = false;
};

// s_lambda(E) . omega^m against the pseudo-effective rays, modelling the
// restriction to a complete intersection; |lambda| + m + 1 must equal dim.
// omega defaults to the sum of the nef rays (ample on the catalogue).
RestrictionReport corollary_restriction_check(const BundleModel& e, const Partition& lambda,
                                              int m,
                                              const std::optional<CohomClass>& omega = std::nullopt);

// Largest epsilon (clamped to 1) with a proof that twisting by
// epsilon * omega keeps every ray pairing of s_lambda strictly positive:
// min over rays of pairing / (1 + sum of |higher coefficients|). Zero when
// some base pairing is not positive.
Rational twist_stability_margin(const BundleModel& e, const Partition& lambda,
                                const CohomClass& omega);

} // namespace schurkit

#endif
