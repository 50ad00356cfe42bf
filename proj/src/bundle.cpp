#include "schurkit/bundle.hpp"

#include "schurkit/errors.hpp"
#include "schurkit/schur.hpp"

#include <algorithm>

namespace schurkit {

BundleModel::BundleModel(VarietyModel variety, int rank, std::vector<CohomClass> total_chern,
                         CohomClass twist, std::optional<std::vector<std::vector<int>>> split_degrees,
                         std::string spec_string)
    : variety_(std::move(variety)),
      rank_(rank),
      chern_(std::move(total_chern)),
      twist_(std::move(twist)),
      split_degrees_(std::move(split_degrees)),
      spec_(std::move(spec_string)) {
    if (rank_ < 1)
        throw UsageError("bundle rank must be positive");
    if (static_cast<int>(chern_.size()) != rank_ + 1)
        throw UsageError("total Chern class must list c_0..c_r");
    if (!(chern_[0] == variety_.unit_class()))
        throw UsageError("c_0 must be the unit class");
    for (int k = 0; k <= rank_; ++k)
        if (chern_[k].degree() != k)
            throw UsageError("c_k must have degree k");
    if (twist_.degree() != 1)
        throw UsageError("twist class must have degree 1");
}

BundleModel BundleModel::split(const VarietyModel& v,
                               const std::vector<std::vector<int>>& degrees) {
    if (degrees.empty())
        throw UsageError("split bundle needs at least one summand");
    const int g = v.generator_count();
    const int r = static_cast<int>(degrees.size());
    const int n = v.dimension();

    // Whitney product of the summands' total Chern classes, truncated at n.
    std::vector<CohomClass> total;
    for (int k = 0; k <= r; ++k)
        total.push_back(v.zero_class(std::min(k, n + 1)));
    total[0] = v.unit_class();
    std::string spec;
    for (int s = 0; s < r; ++s) {
        const auto& d = degrees[s];
        if (static_cast<int>(d.size()) != g)
            throw UsageError("summand degree vector must have one entry per generator");
        CohomClass c1 = v.zero_class(1);
        for (int i = 0; i < g; ++i)
            c1 = c1 + v.generator_class(i) * Rational(d[i]);
        for (int k = std::min(s + 1, n); k >= 1; --k) {
            if (k > n)
                continue;
            CohomClass bump = total[k - 1] * c1;
            if (bump.degree() <= n)
                total[k] = total[k] + bump;
        }
        if (!spec.empty()) spec += "+";
        spec += "O(";
        for (int i = 0; i < g; ++i)
            spec += (i ? "," : "") + std::to_string(d[i]);
        spec += ")";
    }
    // degrees above the dimension contribute zero classes of the right degree
    for (int k = 0; k <= r; ++k)
        if (total[k].degree() != k)
            total[k] = v.zero_class(k);
    return BundleModel(v, r, std::move(total), v.zero_class(1), degrees, spec);
}

BundleModel BundleModel::tangent(const VarietyModel& v) {
    const auto& dims = v.factor_dimensions();
    if (!dims || dims->size() != 1)
        throw UsageError("tangent bundle is only supported on a single projective space");
    const int n = v.dimension();
    CohomClass h = v.generator_class(0);
    std::vector<CohomClass> total;
    for (int k = 0; k <= n; ++k)
        total.push_back(h.pow(k) * Rational(binomial(n + 1, k)));
    return BundleModel(v, n, std::move(total), v.zero_class(1), std::nullopt, "T");
}

CohomClass BundleModel::stored_chern(int k) const {
    if (k < 0 || k > rank_)
        return variety_.zero_class(std::max(k, 0));
    return chern_[k];
}

CohomClass BundleModel::chern_class(int k) const {
    if (k < 0 || k > rank_)
        return variety_.zero_class(std::max(k, 0));
    if (!is_twisted())
        return chern_[k];
    TwistSeries series = twisted_chern(k, rank_);
    CohomClass out = variety_.zero_class(std::min(k, variety_.dimension() + 1));
    if (k > variety_.dimension())
        return variety_.zero_class(k);
    std::vector<CohomClass> vars;
    for (int i = 1; i <= rank_; ++i)
        vars.push_back(stored_chern(i));
    for (const auto& [d, poly] : series.coefficients()) {
        // each delta-power coefficient is homogeneous of degree k - d
        CohomClass value =
            poly.evaluate<CohomClass>(vars, variety_.zero_class(k - d), variety_.unit_class());
        out = out + value * twist_.pow(d);
    }
    return out;
}

CohomClass BundleModel::schur_class(const Partition& lambda) const {
    if (lambda.max_part() > rank_)
        throw UsageError("invalid partition: part " + std::to_string(lambda.max_part()) +
                         " > rank " + std::to_string(rank_));
    if (lambda.weight() > variety_.dimension())
        throw UsageError("Schur class degree exceeds the variety dimension");
    ChernPoly p = schur_poly(lambda, rank_);
    std::vector<CohomClass> vars;
    for (int i = 1; i <= rank_; ++i)
        vars.push_back(chern_class(i));
    return p.evaluate<CohomClass>(vars, variety_.zero_class(lambda.weight()),
                                  variety_.unit_class());
}

CohomClass BundleModel::derived_schur_class(const Partition& lambda, int i) const {
    if (lambda.max_part() > rank_)
        throw UsageError("invalid partition: part " + std::to_string(lambda.max_part()) +
                         " > rank " + std::to_string(rank_));
    const int degree = lambda.weight() - i;
    if (degree < 0)
        return variety_.zero_class(0);
    if (degree > variety_.dimension())
        throw UsageError("derived Schur class degree exceeds the variety dimension");
    ChernPoly p = derived_schur(lambda, i, rank_);
    std::vector<CohomClass> vars;
    for (int k = 1; k <= rank_; ++k)
        vars.push_back(chern_class(k));
    return p.evaluate<CohomClass>(vars, variety_.zero_class(degree), variety_.unit_class());
}

BundleModel BundleModel::with_twist(const CohomClass& delta) const {
    BundleModel out = *this;
    if (delta.degree() != 1)
        throw UsageError("twist class must have degree 1");
    out.twist_ = delta;
    return out;
}

BundleModel BundleModel::twisted_by(const CohomClass& delta) const {
    return with_twist(twist_ + delta);
}

const std::vector<std::vector<int>>& BundleModel::split_degrees() const {
    if (!split_degrees_)
        throw UsageError("bundle is not split");
    return *split_degrees_;
}

bool BundleModel::summand_test(bool strict) const {
    if (!split_degrees_)
        throw UsageError("ampleness test is only defined for split DSL bundles");
    if (!variety_.factor_dimensions())
        throw UsageError("ampleness test needs a product-of-projective-spaces model");
    const int g = variety_.generator_count();
    for (const auto& d : *split_degrees_) {
        for (int i = 0; i < g; ++i) {
            Rational margin = Rational(d[i]) + twist_.coords()[i];
            if (strict ? margin <= 0 : margin < 0)
                return false;
        }
    }
    return true;
}

bool BundleModel::is_ample() const { return summand_test(true); }
bool BundleModel::is_nef() const { return summand_test(false); }

// ---------------------------------------------------------------------------
// bundle DSL parser

namespace {

class BundleParser {
public:
    BundleParser(std::string_view text, const VarietyModel& v) : text_(text), v_(v) {}

    BundleModel parse() {
        std::vector<std::vector<int>> summands;
        bool has_tangent = false;

        parse_term(summands, has_tangent);
        skip_ws();
        while (peek() == '+') {
            ++pos_;
            parse_term(summands, has_tangent);
            skip_ws();
        }

        CohomClass twist = v_.zero_class(1);
        skip_ws();
        if (peek() == '<') {
            twist = parse_twist();
            skip_ws();
        }
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);

        // assemble: tangent terms are folded by Whitney product on top of
        // the split part, losing splitness
        if (!has_tangent) {
            BundleModel b = BundleModel::split(v_, summands);
            return twist.is_zero() ? b : b.with_twist(twist);
        }
        BundleModel t = BundleModel::tangent(v_);
        if (summands.empty())
            return twist.is_zero() ? t : t.with_twist(twist);
        BundleModel s = BundleModel::split(v_, summands);
        // Whitney product of the two total Chern classes
        const int n = v_.dimension();
        const int r = t.rank() + s.rank();
        std::vector<CohomClass> total;
        for (int k = 0; k <= r; ++k) {
            CohomClass c = v_.zero_class(std::min(k, n + 1));
            if (k > n) {
                total.push_back(v_.zero_class(k));
                continue;
            }
            for (int i = std::max(0, k - s.rank()); i <= std::min(k, t.rank()); ++i) {
                CohomClass part = t.stored_chern(i) * s.stored_chern(k - i);
                c = c + part;
            }
            total.push_back(c);
        }
        std::string spec(text_);
        BundleModel b(v_, r, std::move(total), v_.zero_class(1), std::nullopt, spec);
        return twist.is_zero() ? b : b.with_twist(twist);
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+')
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            ++pos_;
        if (pos_ == digits)
            throw ParseError("expected an integer", start);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Rational parse_rat() {
        long num = parse_int();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            std::size_t dpos = pos_;
            long den = parse_int();
            if (den == 0)
                throw ParseError("zero denominator", dpos);
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected a generator name", start);
        return std::string(text_.substr(start, pos_ - start));
    }

    void parse_term(std::vector<std::vector<int>>& summands, bool& has_tangent) {
        skip_ws();
        if (peek() == 'T') {
            ++pos_;
            const auto& dims = v_.factor_dimensions();
            if (!dims || dims->size() != 1)
                throw ParseError("tangent bundle 'T' needs a single projective space", pos_ - 1);
            has_tangent = true;
            return;
        }
        if (peek() != 'O')
            throw ParseError("expected a bundle term 'O(...)' or 'T'", pos_);
        ++pos_;
        skip_ws();
        expect('(');
        std::vector<int> degs;
        degs.push_back(static_cast<int>(parse_int()));
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            degs.push_back(static_cast<int>(parse_int()));
            skip_ws();
        }
        expect(')');
        if (!v_.factor_dimensions())
            throw ParseError("split bundle terms need a product-of-projective-spaces model",
                             pos_);
        if (degs.size() != v_.factor_dimensions()->size())
            throw ParseError("O(...) needs one degree per factor (got " +
                                 std::to_string(degs.size()) + ", want " +
                                 std::to_string(v_.factor_dimensions()->size()) + ")",
                             pos_);
        summands.push_back(std::move(degs));
    }

    CohomClass parse_twist() {
        expect('<');
        CohomClass twist = v_.zero_class(1);
        while (true) {
            Rational q = parse_rat();
            skip_ws();
            expect('*');
            std::size_t ident_pos = pos_;
            std::string name = parse_ident();
            int g = v_.generator_index(name);
            if (g < 0)
                throw ParseError("unknown generator '" + name + "'", ident_pos);
            twist = twist + v_.generator_class(g) * q;
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                continue;
            }
            break;
        }
        expect('>');
        return twist;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    const VarietyModel& v_;
};

} // namespace

BundleModel parse_bundle(std::string_view spec, const VarietyModel& v) {
    return BundleParser(spec, v).parse();
}

// ---------------------------------------------------------------------------
// projectivization

namespace {

// coordinates over the base in a fixed degree
struct BaseSlice {
    int degree;
    std::vector<Rational> coords;
};

} // namespace

VarietyModel proj_bundle(const VarietyModel& base, const BundleModel& e) {
    if (!base.same_model(e.variety()))
        throw UsageError("bundle does not live on the given base");
    if (e.is_twisted())
        throw UsageError("proj_bundle needs an untwisted bundle");
    const int r = e.rank();
    if (r < 2)
        throw UsageError("proj_bundle needs rank >= 2");
    const int nb = base.dimension();
    const int n = nb + r - 1;
    const int gb = base.generator_count();

    VarietyModel::Presentation p;
    p.name = "P(" + e.spec_string() + " on " + base.name() + ")";
    p.dimension = n;
    p.generator_names = base.generator_names();
    p.generator_names.push_back("xi");
    p.h11 = base.h11() + 1;

    // basis(k): base monomial of degree k - j times xi^j, 0 <= j <= r-1
    p.basis.resize(n + 1);
    // (xi power j, base degree, base index) -> flat index within degree
    auto flat_index = [&](int degree, int j, int bi) -> int {
        int idx = 0;
        for (int jj = std::max(0, degree - nb); jj < j; ++jj)
            idx += base.basis_size(degree - jj);
        return idx + bi;
    };
    for (int k = 0; k <= n; ++k) {
        for (int j = std::max(0, k - nb); j <= std::min(r - 1, k); ++j) {
            for (const RingMonomial& m : base.basis(k - j)) {
                RingMonomial ext = m;
                ext.push_back(j);
                p.basis[k].push_back(std::move(ext));
            }
        }
    }

    // xi^j * (base class) reduced by the Grothendieck relation
    // xi^r = -(c_1 xi^{r-1} + ... + c_r).
    auto reduce = [&](auto&& self, int j, const CohomClass& beta)
        -> std::vector<std::pair<int, Rational>> {
        const int total = j + beta.degree();
        if (total > n || beta.degree() > nb || beta.is_zero())
            return {};
        if (j <= r - 1) {
            std::vector<std::pair<int, Rational>> out;
            for (std::size_t bi = 0; bi < beta.coords().size(); ++bi)
                if (beta.coords()[bi] != 0)
                    out.emplace_back(flat_index(total, j, static_cast<int>(bi)),
                                     beta.coords()[bi]);
            return out;
        }
        std::map<int, Rational> acc;
        for (int i = 1; i <= r; ++i) {
            CohomClass ci = e.stored_chern(i);
            if (ci.degree() > nb)
                continue;
            CohomClass prod = beta * ci;
            if (prod.degree() > nb)
                continue;
            for (const auto& [idx, c] : self(self, j - i, -prod))
                acc[idx] += c;
        }
        std::vector<std::pair<int, Rational>> out;
        for (const auto& [idx, c] : acc)
            if (c != 0)
                out.emplace_back(idx, c);
        return out;
    };

    // structure constants
    for (int dp = 1; dp <= n; ++dp) {
        for (int dq = dp; dp + dq <= n; ++dq) {
            for (int u = 0; u < static_cast<int>(p.basis[dp].size()); ++u) {
                for (int v = 0; v < static_cast<int>(p.basis[dq].size()); ++v) {
                    const RingMonomial& mu = p.basis[dp][u];
                    const RingMonomial& mv = p.basis[dq][v];
                    int ju = mu[gb], jv = mv[gb];
                    RingMonomial bu(mu.begin(), mu.end() - 1);
                    RingMonomial bv(mv.begin(), mv.end() - 1);
                    auto iu = base.basis_index(dp - ju, bu);
                    auto iv = base.basis_index(dq - jv, bv);
                    std::vector<Rational> cu(base.basis_size(dp - ju), Rational(0));
                    std::vector<Rational> cv(base.basis_size(dq - jv), Rational(0));
                    cu[*iu] = 1;
                    cv[*iv] = 1;
                    CohomClass beta = base.class_from_coords(dp - ju, cu) *
                                      base.class_from_coords(dq - jv, cv);
                    if (beta.degree() > nb)
                        continue;
                    auto out = reduce(reduce, ju + jv, beta);
                    if (!out.empty())
                        p.products[{dp, u, dq, v}] = std::move(out);
                }
            }
        }
    }

    // integrate xi^{r-1} against the base's top degree
    p.integration.assign(p.basis[n].size(), Rational(0));
    for (int bi = 0; bi < base.basis_size(nb); ++bi) {
        std::vector<Rational> c(base.basis_size(nb), Rational(0));
        c[bi] = 1;
        p.integration[flat_index(n, r - 1, bi)] =
            base.class_from_coords(nb, c).integrate();
    }

    // cone data deliberately left empty: positivity checks reject these models
    return VarietyModel::from_presentation(std::move(p));
}

} // namespace schurkit
