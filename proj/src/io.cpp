#include "schurkit/io.hpp"

#include "schurkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace schurkit {

Json chern_poly_to_json(const ChernPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::array();
        for (int e : m.exponents)
            exps.push_back(e);
        terms.push_back(Json::array({exps, rational_to_string(c)}));
    }
    return Json{{"rank", p.rank()}, {"terms", terms}};
}

ChernPoly chern_poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("terms"))
        throw ParseError("polynomial JSON needs \"rank\" and \"terms\"", 0);
    ChernPoly p(j.at("rank").get<int>());
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("each term must be [[exponents], \"p/q\"]", 0);
        ChernMonomial m;
        for (const auto& e : term.at(0))
            m.exponents.push_back(e.get<int>());
        if (static_cast<int>(m.exponents.size()) != p.rank())
            throw ParseError("exponent vector length must equal the rank", 0);
        p.add_term(m, rational_from_string(term.at(1).get<std::string>()));
    }
    return p;
}

Json twist_series_to_json(const TwistSeries& s) {
    Json series = Json::array();
    for (const auto& [i, poly] : s.coefficients())
        series.push_back(Json::array({i, chern_poly_to_json(poly)}));
    return Json{{"rank", s.rank()}, {"series", series}};
}

Json schur_coefficients_to_json(const std::map<Partition, Rational>& coeffs) {
    // canonical order: lexicographically decreasing
    std::vector<const Partition*> order;
    for (const auto& [l, c] : coeffs) {
        (void)c;
        order.push_back(&l);
    }
    std::sort(order.begin(), order.end(),
              [](const Partition* a, const Partition* b) { return *b < *a; });
    Json out = Json::array();
    for (const Partition* l : order) {
        Json parts = Json::array();
        for (int p : l->parts())
            parts.push_back(p);
        out.push_back(Json::array({parts, rational_to_string(coeffs.at(*l))}));
    }
    return out;
}

Json form_to_json(const ConstForm& f) {
    Json coeffs = Json::array();
    for (const auto& [key, v] : f.coefficients()) {
        Json I = Json::array(), J = Json::array();
        for (int i : key.first)
            I.push_back(i + 1);
        for (int j : key.second)
            J.push_back(j + 1);
        coeffs.push_back(Json::array({I, J, v.real(), v.imag()}));
    }
    return Json{{"n", f.n()}, {"p", f.p()}, {"q", f.q()}, {"coefficients", coeffs}};
}

ConstForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("p") || !j.contains("q"))
        throw ParseError("form JSON needs \"n\", \"p\", \"q\"", 0);
    ConstForm f(j.at("n").get<int>(), j.at("p").get<int>(), j.at("q").get<int>());
    if (j.contains("coefficients")) {
        for (const auto& entry : j.at("coefficients")) {
            if (!entry.is_array() || entry.size() != 4)
                throw ParseError("form coefficient must be [[I],[J],re,im]", 0);
            std::vector<int> I, J;
            for (const auto& i : entry.at(0))
                I.push_back(i.get<int>() - 1);
            for (const auto& i : entry.at(1))
                J.push_back(i.get<int>() - 1);
            f.add_term(std::move(I), std::move(J),
                       {entry.at(2).get<double>(), entry.at(3).get<double>()});
        }
    }
    return f;
}

Json curvature_to_json(const CurvatureTensor& t) {
    Json entries = Json::array();
    for (int j = 0; j < t.n(); ++j)
        for (int k = 0; k < t.n(); ++k)
            for (int l = 0; l < t.r(); ++l)
                for (int m = 0; m < t.r(); ++m) {
                    // keep one representative per Hermitian pair
                    std::array<int, 4> a{j, k, l, m}, b{k, j, m, l};
                    if (b < a)
                        continue;
                    std::complex<double> v = t.at(j, k, l, m);
                    if (v == 0.0)
                        continue;
                    entries.push_back(
                        Json::array({j + 1, k + 1, l + 1, m + 1, v.real(), v.imag()}));
                }
    return Json{{"n", t.n()}, {"r", t.r()}, {"c", entries}};
}

CurvatureTensor curvature_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r"))
        throw ParseError("tensor JSON needs \"n\" and \"r\"", 0);
    CurvatureTensor t(j.at("n").get<int>(), j.at("r").get<int>());
    if (j.contains("c")) {
        for (const auto& entry : j.at("c")) {
            if (!entry.is_array() || entry.size() != 6)
                throw ParseError("tensor entry must be [j,k,l,m,re,im]", 0);
            t.set_pair(entry.at(0).get<int>() - 1, entry.at(1).get<int>() - 1,
                       entry.at(2).get<int>() - 1, entry.at(3).get<int>() - 1,
                       {entry.at(4).get<double>(), entry.at(5).get<double>()});
        }
    }
    return t;
}

Partition partition_from_string(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "0")
        return Partition{};
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',')
            ++pos;
        std::string token(text.substr(start, pos - start));
        try {
            parts.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw ParseError("invalid partition part '" + token + "'", start);
        }
        if (pos < text.size())
            ++pos; // skip comma
    }
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// expression parsers

namespace {

// shared recursive-descent core; Value is any commutative ring with
// from_rational / from_variable hooks
template <typename Value, typename FromRat, typename FromVar>
class ExprParser {
public:
    ExprParser(std::string_view text, FromRat from_rat, FromVar from_var)
        : text_(text), from_rat_(from_rat), from_var_(from_var) {}

    Value parse() {
        Value v = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return v;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    Value parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        Value acc = parse_term();
        if (negate)
            acc = acc * Rational(-1);
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            Value t = parse_term();
            acc = acc + (c == '-' ? t * Rational(-1) : t);
        }
        return acc;
    }

    Value parse_term() {
        Value acc = parse_power();
        while (true) {
            skip_ws();
            if (peek() != '*')
                break;
            ++pos_;
            acc = acc * parse_power();
        }
        return acc;
    }

    Value parse_power() {
        Value base = parse_factor();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start)
                throw ParseError("expected an exponent", start);
            int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            Value acc = base;
            for (int i = 1; i < e; ++i)
                acc = acc * base;
            if (e == 0)
                acc = from_rat_(Rational(1));
            return acc;
        }
        return base;
    }

    Value parse_factor() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            Value v = parse_expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            BigInt num(std::string(text_.substr(start, pos_ - start)));
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t dstart = pos_;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (pos_ == dstart)
                    throw ParseError("expected a denominator", dstart);
                BigInt den(std::string(text_.substr(dstart, pos_ - dstart)));
                if (den == 0)
                    throw ParseError("zero denominator", dstart);
                return from_rat_(Rational(num, den));
            }
            return from_rat_(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return from_var_(text_.substr(start, pos_ - start), start);
        }
        throw ParseError("expected a number, a variable or '('", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    FromRat from_rat_;
    FromVar from_var_;
};

int max_chern_index(std::string_view text) {
    int best = 1;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 'c' && std::isdigit(static_cast<unsigned char>(text[i + 1])) &&
            (i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1])))) {
            std::size_t j = i + 1;
            int v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                v = v * 10 + (text[j++] - '0');
            best = std::max(best, v);
        }
    }
    return best;
}

// graded element: classes per degree, for class expressions that mix
// degrees mid-computation
struct Graded {
    const VarietyModel* v = nullptr;
    std::map<int, CohomClass> parts;

    Graded operator+(const Graded& o) const {
        Graded out = *this;
        for (const auto& [d, c] : o.parts)
            out.add(d, c);
        return out;
    }
    Graded operator*(const Graded& o) const {
        Graded out;
        out.v = v;
        for (const auto& [da, ca] : parts)
            for (const auto& [db, cb] : o.parts)
                out.add(da + db, ca * cb);
        return out;
    }
    Graded operator*(const Rational& q) const {
        Graded out;
        out.v = v;
        for (const auto& [d, c] : parts)
            out.add(d, c * q);
        return out;
    }
    void add(int d, const CohomClass& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = parts.emplace(d, c);
        if (!inserted)
            it->second = it->second + c;
    }
};

} // namespace

ChernPoly parse_chern_poly_expr(std::string_view text, std::optional<int> rank) {
    const int r = rank.value_or(max_chern_index(text));
    auto from_rat = [r](const Rational& q) { return ChernPoly::constant(r, q); };
    auto from_var = [r](std::string_view name, std::size_t pos) {
        if (name.size() < 2 || name[0] != 'c')
            throw ParseError("unknown variable '" + std::string(name) + "' (want c1..c" +
                                 std::to_string(r) + ")",
                             pos);
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw ParseError("unknown variable '" + std::string(name) + "'", pos);
        int idx = std::stoi(std::string(name.substr(1)));
        if (idx < 1 || idx > r)
            throw ParseError("variable '" + std::string(name) + "' exceeds rank " +
                                 std::to_string(r),
                             pos);
        return ChernPoly::chern_variable(idx, r);
    };
    ExprParser<ChernPoly, decltype(from_rat), decltype(from_var)> parser(text, from_rat,
                                                                         from_var);
    return parser.parse();
}

CohomClass parse_class_expr(std::string_view text, const VarietyModel& v) {
    auto from_rat = [&v](const Rational& q) {
        Graded g;
        g.v = &v;
        g.add(0, v.unit_class() * q);
        return g;
    };
    auto from_var = [&v](std::string_view name, std::size_t pos) {
        int g = v.generator_index(name);
        if (g < 0)
            throw ParseError("unknown generator '" + std::string(name) + "' on " + v.name(),
                             pos);
        Graded out;
        out.v = &v;
        out.add(1, v.generator_class(g));
        return out;
    };
    ExprParser<Graded, decltype(from_rat), decltype(from_var)> parser(text, from_rat, from_var);
    Graded g = parser.parse();
    if (g.parts.empty())
        return v.zero_class(0);
    if (g.parts.size() != 1)
        throw ParseError("class expression must be homogeneous", 0);
    return g.parts.begin()->second;
}

std::string render_text(const Json& j) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) {
        (void)value;
        width = std::max(width, key.size());
    }
    for (const auto& [key, value] : j.items()) {
        out << key << std::string(width - key.size() + 2, ' ');
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
    return out.str();
}

} // namespace schurkit
