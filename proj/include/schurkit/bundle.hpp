#ifndef SCHURKIT_BUNDLE_HPP
#define SCHURKIT_BUNDLE_HPP

#include "schurkit/partition.hpp"
#include "schurkit/variety.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schurkit {

// A bundle on a model variety: rank, total Chern class c_0..c_r, and an
// optional real (1,1) twist class. The twist is stored unevaluated and
// folded in by chern_class.
class BundleModel {
public:
    BundleModel(VarietyModel variety, int rank, std::vector<CohomClass> total_chern,
                CohomClass twist, std::optional<std::vector<std::vector<int>>> split_degrees,
                std::string spec_string);

    // Direct sum of line bundles; degrees[s][g] is the coefficient of
    // generator g in c_1 of summand s.
    static BundleModel split(const VarietyModel& v,
                             const std::vector<std::vector<int>>& degrees);
    // Tangent bundle of P^n: rank n, total Chern class (1+H)^{n+1} truncated.
    static BundleModel tangent(const VarietyModel& v);

    const VarietyModel& variety() const { return variety_; }
    int rank() const { return rank_; }
    const CohomClass& twist() const { return twist_; }
    bool is_twisted() const { return !twist_.is_zero(); }
    const std::string& spec_string() const { return spec_; }

    // c_k as built, before any twist; zero outside [0, rank].
    CohomClass stored_chern(int k) const;
    // c_k of the twisted bundle via the binomial twist identity.
    CohomClass chern_class(int k) const;

    CohomClass schur_class(const Partition& lambda) const;
    CohomClass derived_schur_class(const Partition& lambda, int i) const;

    BundleModel with_twist(const CohomClass& delta) const;
    BundleModel twisted_by(const CohomClass& delta) const; // adds to the twist

    bool is_split() const { return split_degrees_.has_value(); }
    const std::vector<std::vector<int>>& split_degrees() const;

    // Componentwise tests on split bundles over products of projective
    // spaces: every summand degree plus the matching twist coordinate must
    // be > 0 (ample) or >= 0 (nef) in every factor.
    bool is_ample() const;
    bool is_nef() const;

private:
    bool summand_test(bool strict) const;

    VarietyModel variety_;
    int rank_;
    std::vector<CohomClass> chern_; // c_0..c_r
    CohomClass twist_;
    std::optional<std::vector<std::vector<int>>> split_degrees_;
    std::string spec_;
};

// Bundle DSL:
//   bundle := term ("+" term)* twist?
//   term   := "O" "(" int ("," int)* ")" | "T"
//   twist  := "<" rat "*" ident ("+" rat "*" ident)* ">"
//   rat    := int | int "/" int
// O(...) takes one integer per factor of the product; T is the tangent
// bundle and needs a single projective space. Throws ParseError with the
// offending position.
BundleModel parse_bundle(std::string_view spec, const VarietyModel& v);

// Projectivization (lines convention): adds a degree-1 generator xi with
// relation sum_i pi^* c_i(E) xi^{r-i} = 0, so the pushforward of xi^{r-1+k}
// is the degree-k part of the inverse of the full Chern series, i.e.
// (-1)^k segre_poly(k) of E (the Segre class of the dual bundle).
// Integration is normalized by \int xi^{r-1} pi^*(point) = 1. Cone data is
// not populated. Requires an untwisted bundle of rank >= 2.
VarietyModel proj_bundle(const VarietyModel& base, const BundleModel& e);

} // namespace schurkit

#endif
