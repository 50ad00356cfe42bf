#include "schurkit/variety.hpp"

#include "schurkit/errors.hpp"

#include <algorithm>

namespace schurkit {

struct VarietyModel::Impl {
    Presentation p;
    // monomial -> index within its degree
    std::vector<std::map<RingMonomial, int>> index;
};

VarietyModel VarietyModel::from_presentation(Presentation p) {
    if (p.dimension < 1)
        throw UsageError("variety dimension must be positive");
    if (static_cast<int>(p.basis.size()) != p.dimension + 1)
        throw UsageError("presentation must list bases for degrees 0..n");
    if (p.basis[0].size() != 1)
        throw UsageError("degree-0 basis must be the unit monomial");
    if (p.integration.size() != p.basis[p.dimension].size())
        throw UsageError("integration vector size must match the top-degree basis");
    auto impl = std::make_shared<Impl>();
    impl->p = std::move(p);
    impl->index.resize(impl->p.basis.size());
    for (std::size_t d = 0; d < impl->p.basis.size(); ++d)
        for (std::size_t i = 0; i < impl->p.basis[d].size(); ++i)
            impl->index[d].emplace(impl->p.basis[d][i], static_cast<int>(i));
    return VarietyModel(std::move(impl));
}

VarietyModel VarietyModel::projective_space(int n) {
    if (n < 1)
        throw UsageError("projective space dimension must be positive");
    Presentation p;
    p.name = "P" + std::to_string(n);
    p.dimension = n;
    p.generator_names = {"H"};
    p.basis.resize(n + 1);
    for (int k = 0; k <= n; ++k)
        p.basis[k] = {RingMonomial{k}};
    for (int a = 1; a <= n; ++a)
        for (int b = a; a + b <= n; ++b)
            p.products[{a, 0, b, 0}] = {{0, Rational(1)}};
    p.integration = {Rational(1)};
    p.pseff_rays = {{Rational(1)}};
    p.nef_rays = {{Rational(1)}};
    p.h11 = 1;
    p.factor_dims = std::vector<int>{n};
    return from_presentation(std::move(p));
}

VarietyModel VarietyModel::product(const VarietyModel& A, const VarietyModel& B) {
    const Presentation& a = A.impl_->p;
    const Presentation& b = B.impl_->p;
    Presentation p;
    p.name = a.name + "x" + b.name;
    p.dimension = a.dimension + b.dimension;
    const int ga = static_cast<int>(a.generator_names.size());
    const int gb = static_cast<int>(b.generator_names.size());

    // Generators keep factor order; names are made product-unique below.
    p.generator_names.insert(p.generator_names.end(), a.generator_names.begin(),
                             a.generator_names.end());
    p.generator_names.insert(p.generator_names.end(), b.generator_names.begin(),
                             b.generator_names.end());

    // basis(k) = union over i+j=k of pairs; bookkeeping maps a pair of
    // factor indices to the product index.
    auto join = [&](const RingMonomial& ma, const RingMonomial& mb) {
        RingMonomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        return m;
    };
    p.basis.resize(p.dimension + 1);
    // (degree_a, i, degree_b, j) -> product basis index in degree a+b
    std::map<std::array<int, 4>, int> pair_index;
    for (int k = 0; k <= p.dimension; ++k) {
        for (int i = std::max(0, k - b.dimension); i <= std::min(k, a.dimension); ++i) {
            int j = k - i;
            for (std::size_t ia = 0; ia < a.basis[i].size(); ++ia)
                for (std::size_t ib = 0; ib < b.basis[j].size(); ++ib) {
                    pair_index[{i, static_cast<int>(ia), j, static_cast<int>(ib)}] =
                        static_cast<int>(p.basis[k].size());
                    p.basis[k].push_back(join(a.basis[i][ia], b.basis[j][ib]));
                }
        }
    }

    // Structure constants multiply componentwise (all classes have even
    // total degree, so no Koszul signs appear).
    auto factor_product = [](const Presentation& f, int dp, int i, int dq, int j)
        -> std::vector<std::pair<int, Rational>> {
        if (dp + dq > f.dimension)
            return {};
        if (dp == 0)
            return {{j, Rational(1)}};
        if (dq == 0)
            return {{i, Rational(1)}};
        auto key = dp <= dq ? std::array<int, 4>{dp, i, dq, j} : std::array<int, 4>{dq, j, dp, i};
        auto it = f.products.find(key);
        return it == f.products.end() ? std::vector<std::pair<int, Rational>>{} : it->second;
    };

    for (int dp = 1; dp <= p.dimension; ++dp) {
        for (int dq = dp; dp + dq <= p.dimension; ++dq) {
            for (std::size_t u = 0; u < p.basis[dp].size(); ++u) {
                for (std::size_t v = 0; v < p.basis[dq].size(); ++v) {
                    // split each product basis element back into factor parts
                    // by scanning the enumeration blocks
                    int ua = -1, ia = -1, ub = -1, ib = -1;
                    {
                        int idx = static_cast<int>(u);
                        for (int i = std::max(0, dp - b.dimension);
                             i <= std::min(dp, a.dimension); ++i) {
                            int j = dp - i;
                            int nb = static_cast<int>(b.basis[j].size());
                            int block = static_cast<int>(a.basis[i].size()) * nb;
                            if (idx < block) { ua = i; ia = idx / nb; ub = j; ib = idx % nb; break; }
                            idx -= block;
                        }
                    }
                    int va = -1, ja = -1, vb = -1, jb = -1;
                    {
                        int idx = static_cast<int>(v);
                        for (int i = std::max(0, dq - b.dimension);
                             i <= std::min(dq, a.dimension); ++i) {
                            int j = dq - i;
                            int nb = static_cast<int>(b.basis[j].size());
                            int block = static_cast<int>(a.basis[i].size()) * nb;
                            if (idx < block) { va = i; ja = idx / nb; vb = j; jb = idx % nb; break; }
                            idx -= block;
                        }
                    }
                    auto pa = factor_product(a, ua, ia, va, ja);
                    auto pb = factor_product(b, ub, ib, vb, jb);
                    std::vector<std::pair<int, Rational>> out;
                    for (const auto& [ra, ca] : pa)
                        for (const auto& [rb, cb] : pb) {
                            auto it = pair_index.find({ua + va, ra, ub + vb, rb});
                            if (it != pair_index.end())
                                out.emplace_back(it->second, ca * cb);
                        }
                    if (!out.empty())
                        p.products[{dp, static_cast<int>(u), dq, static_cast<int>(v)}] =
                            std::move(out);
                }
            }
        }
    }

    // integration: product of factor integrations over the paired top basis
    p.integration.assign(p.basis[p.dimension].size(), Rational(0));
    for (std::size_t ia = 0; ia < a.basis[a.dimension].size(); ++ia)
        for (std::size_t ib = 0; ib < b.basis[b.dimension].size(); ++ib) {
            auto it = pair_index.find({a.dimension, static_cast<int>(ia), b.dimension,
                                       static_cast<int>(ib)});
            p.integration[it->second] = a.integration[ia] * b.integration[ib];
        }

    // rays pull back from the factors
    auto pad = [&](const std::vector<Rational>& coords, bool from_a) {
        std::vector<Rational> out(ga + gb, Rational(0));
        for (std::size_t i = 0; i < coords.size(); ++i)
            out[from_a ? i : ga + i] = coords[i];
        return out;
    };
    for (const auto& r : a.pseff_rays) p.pseff_rays.push_back(pad(r, true));
    for (const auto& r : b.pseff_rays) p.pseff_rays.push_back(pad(r, false));
    for (const auto& r : a.nef_rays) p.nef_rays.push_back(pad(r, true));
    for (const auto& r : b.nef_rays) p.nef_rays.push_back(pad(r, false));
    p.h11 = a.h11 + b.h11;
    if (a.factor_dims && b.factor_dims) {
        std::vector<int> dims = *a.factor_dims;
        dims.insert(dims.end(), b.factor_dims->begin(), b.factor_dims->end());
        p.factor_dims = std::move(dims);
    }

    // rename generators f1..fm on genuine products
    if (p.generator_names.size() > 1)
        for (std::size_t i = 0; i < p.generator_names.size(); ++i)
            p.generator_names[i] = "f" + std::to_string(i + 1);

    return from_presentation(std::move(p));
}

VarietyModel VarietyModel::from_name(std::string_view name) {
    std::vector<int> dims;
    std::size_t pos = 0;
    while (pos < name.size()) {
        if (name[pos] != 'P')
            throw ParseError("expected 'P' in variety name", pos);
        ++pos;
        std::size_t start = pos;
        while (pos < name.size() && name[pos] >= '0' && name[pos] <= '9')
            ++pos;
        if (pos == start)
            throw ParseError("expected dimension after 'P'", pos);
        dims.push_back(std::stoi(std::string(name.substr(start, pos - start))));
        if (pos < name.size()) {
            if (name[pos] != 'x')
                throw ParseError("expected 'x' between factors", pos);
            ++pos;
            if (pos == name.size())
                throw ParseError("trailing 'x' in variety name", pos);
        }
    }
    if (dims.empty())
        throw ParseError("empty variety name", 0);
    VarietyModel v = projective_space(dims[0]);
    for (std::size_t i = 1; i < dims.size(); ++i)
        v = product(v, projective_space(dims[i]));
    return v;
}

const std::string& VarietyModel::name() const { return impl_->p.name; }
int VarietyModel::dimension() const { return impl_->p.dimension; }
int VarietyModel::h11() const { return impl_->p.h11; }
int VarietyModel::generator_count() const {
    return static_cast<int>(impl_->p.generator_names.size());
}
const std::vector<std::string>& VarietyModel::generator_names() const {
    return impl_->p.generator_names;
}

int VarietyModel::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < impl_->p.generator_names.size(); ++i)
        if (impl_->p.generator_names[i] == name)
            return static_cast<int>(i);
    return -1;
}

int VarietyModel::basis_size(int degree) const {
    if (degree < 0 || degree > impl_->p.dimension)
        return 0;
    return static_cast<int>(impl_->p.basis[degree].size());
}

const std::vector<RingMonomial>& VarietyModel::basis(int degree) const {
    static const std::vector<RingMonomial> empty;
    if (degree < 0 || degree > impl_->p.dimension)
        return empty;
    return impl_->p.basis[degree];
}

std::optional<int> VarietyModel::basis_index(int degree, const RingMonomial& m) const {
    if (degree < 0 || degree > impl_->p.dimension)
        return std::nullopt;
    auto it = impl_->index[degree].find(m);
    if (it == impl_->index[degree].end())
        return std::nullopt;
    return it->second;
}

std::string VarietyModel::basis_monomial_name(int degree, int index) const {
    const RingMonomial& m = basis(degree).at(index);
    std::string s;
    for (std::size_t g = 0; g < m.size(); ++g) {
        if (m[g] == 0)
            continue;
        if (!s.empty()) s += "*";
        s += impl_->p.generator_names[g];
        if (m[g] > 1)
            s += "^" + std::to_string(m[g]);
    }
    return s.empty() ? "1" : s;
}

bool VarietyModel::has_cone_data() const { return !impl_->p.pseff_rays.empty(); }

std::vector<CohomClass> VarietyModel::pseff_rays() const {
    std::vector<CohomClass> out;
    for (const auto& r : impl_->p.pseff_rays)
        out.push_back(CohomClass(impl_, 1, r));
    return out;
}

std::vector<CohomClass> VarietyModel::nef_rays() const {
    std::vector<CohomClass> out;
    for (const auto& r : impl_->p.nef_rays)
        out.push_back(CohomClass(impl_, 1, r));
    return out;
}

const std::optional<std::vector<int>>& VarietyModel::factor_dimensions() const {
    return impl_->p.factor_dims;
}

CohomClass VarietyModel::zero_class(int degree) const {
    return CohomClass(impl_, degree, std::vector<Rational>(basis_size(degree), Rational(0)));
}

CohomClass VarietyModel::unit_class() const {
    return CohomClass(impl_, 0, {Rational(1)});
}

CohomClass VarietyModel::generator_class(int g) const {
    if (g < 0 || g >= generator_count())
        throw UsageError("generator index out of range");
    RingMonomial m(generator_count(), 0);
    m[g] = 1;
    auto idx = basis_index(1, m);
    if (!idx)
        throw UsageError("generator is not a degree-1 basis monomial");
    std::vector<Rational> coords(basis_size(1), Rational(0));
    coords[*idx] = 1;
    return CohomClass(impl_, 1, std::move(coords));
}

CohomClass VarietyModel::class_from_coords(int degree, std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) != basis_size(degree))
        throw UsageError("coordinate length does not match the basis size");
    return CohomClass(impl_, degree, std::move(coords));
}

CohomClass::CohomClass(std::shared_ptr<const VarietyModel::Impl> impl, int degree,
                       std::vector<Rational> coords)
    : impl_(std::move(impl)), degree_(degree), coords_(std::move(coords)) {}

bool CohomClass::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational& c) { return c == 0; });
}

void CohomClass::check_compatible(const CohomClass& other, bool same_degree) const {
    if (impl_ != other.impl_)
        throw UsageError("classes live on different variety models");
    if (same_degree && degree_ != other.degree_)
        throw UsageError("degree mismatch: " + std::to_string(degree_) + " vs " +
                         std::to_string(other.degree_));
}

CohomClass CohomClass::operator+(const CohomClass& other) const {
    check_compatible(other, true);
    CohomClass out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.coords_[i] += other.coords_[i];
    return out;
}

CohomClass CohomClass::operator-(const CohomClass& other) const {
    check_compatible(other, true);
    CohomClass out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.coords_[i] -= other.coords_[i];
    return out;
}

CohomClass CohomClass::operator-() const {
    CohomClass out = *this;
    for (auto& c : out.coords_)
        c = -c;
    return out;
}

CohomClass CohomClass::operator*(const CohomClass& other) const {
    check_compatible(other, false);
    const auto& pres = impl_->p;
    const int dp = degree_, dq = other.degree_;
    const int dr = dp + dq;
    if (dr > pres.dimension)
        return CohomClass(impl_, dr, {});
    std::vector<Rational> out(pres.basis[dr].size(), Rational(0));
    if (dp == 0) {
        for (std::size_t j = 0; j < other.coords_.size(); ++j)
            out[j] = coords_[0] * other.coords_[j];
        return CohomClass(impl_, dr, std::move(out));
    }
    if (dq == 0) {
        for (std::size_t i = 0; i < coords_.size(); ++i)
            out[i] = coords_[i] * other.coords_[0];
        return CohomClass(impl_, dr, std::move(out));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0)
            continue;
        for (std::size_t j = 0; j < other.coords_.size(); ++j) {
            if (other.coords_[j] == 0)
                continue;
            auto key = dp <= dq
                           ? std::array<int, 4>{dp, static_cast<int>(i), dq, static_cast<int>(j)}
                           : std::array<int, 4>{dq, static_cast<int>(j), dp, static_cast<int>(i)};
            auto it = pres.products.find(key);
            if (it == pres.products.end())
                continue;
            Rational c = coords_[i] * other.coords_[j];
            for (const auto& [k, s] : it->second)
                out[k] += c * s;
        }
    }
    return CohomClass(impl_, dr, std::move(out));
}

CohomClass CohomClass::operator*(const Rational& scalar) const {
    CohomClass out = *this;
    for (auto& c : out.coords_)
        c *= scalar;
    return out;
}

CohomClass CohomClass::pow(int e) const {
    if (e < 0)
        throw UsageError("negative power of a cohomology class");
    CohomClass out = VarietyModel(impl_).unit_class();
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

bool operator==(const CohomClass& a, const CohomClass& b) {
    return a.impl_ == b.impl_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

Rational CohomClass::integrate() const {
    const auto& pres = impl_->p;
    if (degree_ != pres.dimension)
        throw UsageError("integration requires a top-degree class (degree " +
                         std::to_string(degree_) + " on a " +
                         std::to_string(pres.dimension) + "-fold)");
    Rational total(0);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        total += coords_[i] * pres.integration[i];
    return total;
}

std::string CohomClass::to_string() const {
    VarietyModel v(impl_);
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0)
            continue;
        if (!s.empty())
            s += coords_[i] > 0 ? " + " : " - ";
        else if (coords_[i] < 0)
            s += "-";
        Rational a = abs(coords_[i]);
        std::string mono = v.basis_monomial_name(degree_, static_cast<int>(i));
        if (mono == "1")
            s += rational_to_string(a);
        else
            s += (a == 1 ? "" : rational_to_string(a) + "*") + mono;
    }
    return s.empty() ? "0" : s;
}

Rational intersection_number(std::span<const CohomClass> classes) {
    if (classes.empty())
        throw UsageError("intersection number needs at least one class");
    CohomClass acc = classes[0].variety().unit_class();
    for (const CohomClass& c : classes)
        acc = acc * c;
    return acc.integrate();
}

} // namespace schurkit
