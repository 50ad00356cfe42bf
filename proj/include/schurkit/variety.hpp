#ifndef SCHURKIT_VARIETY_HPP
#define SCHURKIT_VARIETY_HPP

#include "schurkit/rational.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schurkit {

// Exponent vector over a model's degree-1 generators.
using RingMonomial = std::vector<int>;

class CohomClass;

// Finite presentation of the even cohomology ring of a model variety:
// monomial basis per degree, structure constants, integration over the top
// degree, and (when known) pseudo-effective / nef extremal rays.
class VarietyModel {
public:
    struct Presentation {
        std::string name;
        int dimension = 0;
        std::vector<std::string> generator_names;
        // basis[k] lists the degree-k basis monomials, k = 0..dimension
        std::vector<std::vector<RingMonomial>> basis;
        // (p, i, q, j) with p <= q -> coordinates of basis(p)[i] * basis(q)[j]
        // in degree p + q; pairs of total degree > dimension are omitted.
        std::map<std::array<int, 4>, std::vector<std::pair<int, Rational>>> products;
        std::vector<Rational> integration; // over the degree-n basis
        std::vector<std::vector<Rational>> pseff_rays; // degree-1 coordinates
        std::vector<std::vector<Rational>> nef_rays;
        int h11 = 0;
        // per-factor dimensions when the model is a product of projective
        // spaces; absent for projectivized-bundle models
        std::optional<std::vector<int>> factor_dims;
    };

    static VarietyModel projective_space(int n);
    static VarietyModel product(const VarietyModel& a, const VarietyModel& b);
    // "P3", "P2xP1", "P1xP1xP1", ... (P<n> joined by 'x')
    static VarietyModel from_name(std::string_view name);
    static VarietyModel from_presentation(Presentation p);

    const std::string& name() const;
    int dimension() const;
    int h11() const;

    int generator_count() const;
    const std::vector<std::string>& generator_names() const;
    int generator_index(std::string_view name) const; // -1 when absent

    int basis_size(int degree) const;
    const std::vector<RingMonomial>& basis(int degree) const;
    std::optional<int> basis_index(int degree, const RingMonomial& m) const;
    std::string basis_monomial_name(int degree, int index) const;

    // Extremal-ray data is populated only for projective spaces and their
    // products, where both cones are simplicial.
    bool has_cone_data() const;
    std::vector<CohomClass> pseff_rays() const;
    std::vector<CohomClass> nef_rays() const;
    const std::optional<std::vector<int>>& factor_dimensions() const;

    CohomClass zero_class(int degree) const;
    CohomClass unit_class() const;
    CohomClass generator_class(int g) const;
    CohomClass class_from_coords(int degree, std::vector<Rational> coords) const;

    bool same_model(const VarietyModel& other) const { return impl_ == other.impl_; }

private:
    friend class CohomClass;
    struct Impl;
    explicit VarietyModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Element of a fixed degree, stored as exact coordinates over the model's
// monomial basis in that degree.
class CohomClass {
public:
    const VarietyModel variety() const { return VarietyModel(impl_); }
    int degree() const { return degree_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;

    CohomClass operator+(const CohomClass& other) const;
    CohomClass operator-(const CohomClass& other) const;
    CohomClass operator-() const;
    CohomClass operator*(const CohomClass& other) const; // cup product
    CohomClass operator*(const Rational& scalar) const;
    CohomClass pow(int e) const;

    friend bool operator==(const CohomClass& a, const CohomClass& b);

    // Requires degree == dimension.
    Rational integrate() const;

    std::string to_string() const;

private:
    friend class VarietyModel;
    CohomClass(std::shared_ptr<const VarietyModel::Impl> impl, int degree,
               std::vector<Rational> coords);
    void check_compatible(const CohomClass& other, bool same_degree) const;

    std::shared_ptr<const VarietyModel::Impl> impl_;
    int degree_;
    std::vector<Rational> coords_;
};

inline CohomClass scale(const CohomClass& c, const Rational& q) { return c * q; }

// Exact intersection number of a product of classes of total degree equal
// to the dimension.
Rational intersection_number(std::span<const CohomClass> classes);

} // namespace schurkit

#endif
