#include "toricaut/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toricaut {

GradedPolynomial GradedPolynomial::constant(std::size_t nvars, Rat c)
{
    GradedPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

GradedPolynomial GradedPolynomial::variable(std::size_t nvars, std::size_t index)
{
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(nvars, std::move(e));
}

GradedPolynomial GradedPolynomial::monomial(std::size_t nvars, Exponents e, Rat c)
{
    if (e.size() != nvars) throw Error("exponent vector has wrong length");
    GradedPolynomial p(nvars);
    p.add_term(e, c);
    return p;
}

void GradedPolynomial::add_term(const Exponents& e, const Rat& c)
{
    if (e.size() != nvars_) throw Error("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& rhs) const
{
    if (nvars_ != rhs.nvars_) throw Error("polynomial rings differ");
    GradedPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& rhs) const
{
    if (nvars_ != rhs.nvars_) throw Error("polynomial rings differ");
    GradedPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& rhs) const
{
    if (nvars_ != rhs.nvars_) throw Error("polynomial rings differ");
    GradedPolynomial out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const Rat& c) const
{
    GradedPolynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

GradedPolynomial GradedPolynomial::pow(unsigned n) const
{
    GradedPolynomial out = constant(nvars_, 1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
}

int GradedPolynomial::polynomial_degree() const
{
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (int x : e) total += x;
        deg = std::max(deg, total);
    }
    return deg;
}

std::optional<ClassVec> GradedPolynomial::homogeneous_degree(const GradingData& g) const
{
    if (g.variable_count() != nvars_) throw Error("grading has wrong variable count");
    std::optional<ClassVec> deg;
    for (const auto& [e, c] : terms_) {
        std::vector<Int> exps(e.begin(), e.end());
        ClassVec d = g.degree_of_exponents(exps);
        if (!deg) deg = std::move(d);
        else if (*deg != d) return std::nullopt;
    }
    return deg; // nullopt for the zero polynomial
}

bool GradedPolynomial::uses_only_variables_below(std::size_t bound) const
{
    for (const auto& [e, c] : terms_)
        for (std::size_t i = bound; i < nvars_; ++i)
            if (e[i] != 0) return false;
    return true;
}

std::string GradedPolynomial::to_string(const std::vector<std::string>& names) const
{
    if (names.size() != nvars_) throw Error("name list has wrong length");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat coeff = c;
        if (first) {
            if (coeff < 0) { os << "-"; coeff = -coeff; }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (coeff != 1 || !has_vars) {
            os << coeff.str();
            if (has_vars) os << "*";
        }
        bool started = false;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << names[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<std::string> cox_variable_names(std::size_t l, std::size_t r)
{
    std::vector<std::string> names;
    names.reserve(l + r);
    for (std::size_t i = 1; i <= l; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= r; ++j) names.push_back("y" + std::to_string(j));
    return names;
}

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& names;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error("polynomial parse error at position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int parse_integer()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return Int(text.substr(start, pos - start));
    }

    Rat parse_rational()
    {
        Int num = parse_integer();
        if (peek() == '/') {
            ++pos;
            Int den = parse_integer();
            if (den == 0) fail("zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

    std::optional<std::size_t> try_parse_variable()
    {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        pos = start;
        fail("unknown variable '" + name + "'");
    }

    int parse_exponent()
    {
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == '*') pos += 2;
        else if (pos < text.size() && text[pos] == '^') ++pos;
        else return 1;
        Int e = parse_integer();
        if (e < 0 || e > 1'000'000) fail("exponent out of range");
        return static_cast<int>(e);
    }

    // term := [coefficient] factor*  with '*' optional between factors
    GradedPolynomial parse_term()
    {
        Rat coeff = 1;
        Exponents exps(names.size(), 0);
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            any = true;
        }
        for (;;) {
            skip_ws();
            if (peek() == '*' && !(pos + 1 < text.size() && text[pos + 1] == '*')) {
                ++pos;
                skip_ws();
            }
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_rational();
                any = true;
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(peek()))) break;
            auto var = try_parse_variable();
            if (!var) break;
            exps[*var] += parse_exponent();
            any = true;
        }
        if (!any) fail("expected a term");
        GradedPolynomial p(names.size());
        p.add_term(exps, coeff);
        return p;
    }

    GradedPolynomial parse()
    {
        GradedPolynomial p(names.size());
        bool negative = false;
        if (peek() == '+') ++pos;
        else if (peek() == '-') { ++pos; negative = true; }
        for (;;) {
            GradedPolynomial t = parse_term();
            p = negative ? p - t : p + t;
            if (eof()) return p;
            char c = peek();
            if (c == '+') { negative = false; ++pos; }
            else if (c == '-') { negative = true; ++pos; }
            else fail(std::string("unexpected character '") + c + "'");
        }
    }
};

} // namespace

GradedPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names)
{
    Parser parser{text, names};
    if (parser.eof()) throw Error("polynomial parse error: empty input");
    return parser.parse();
}

GradedSubstitution GradedSubstitution::identity(std::size_t nvars)
{
    GradedSubstitution s;
    s.images.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        s.images.push_back(GradedPolynomial::variable(nvars, i));
    return s;
}

void GradedSubstitution::validate(const GradingData& g) const
{
    if (images.size() != g.variable_count())
        throw Error("substitution has wrong number of variable images");
    for (std::size_t v = 0; v < images.size(); ++v) {
        if (images[v].is_zero()) continue;
        auto deg = images[v].homogeneous_degree(g);
        if (!deg || *deg != g.variable_degrees[v])
            throw Error("substitution image of variable " + std::to_string(v + 1) +
                        " is not homogeneous of the variable's degree");
    }
}

GradedPolynomial apply_substitution(const GradedPolynomial& p, const GradedSubstitution& s)
{
    if (s.images.size() != p.variable_count())
        throw Error("substitution does not match the polynomial ring");
    const std::size_t n = p.variable_count();
    GradedPolynomial out(n);
    for (const auto& [e, c] : p.terms()) {
        GradedPolynomial term = GradedPolynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0) term = term * s.images[i].pow(static_cast<unsigned>(e[i]));
        out = out + term;
    }
    return out;
}

ClassVec embed_base_class(const ProjectivizedFan& p, const ClassVec& alpha)
{
    const auto& pic = p.picard.class_group;
    const std::size_t base_free = pic.free_rank - 1;
    if (alpha.size() != base_free + pic.torsion.size())
        throw Error("base class vector has wrong length");
    ClassVec out = pic.zero();
    for (std::size_t i = 0; i < base_free; ++i) out[i] = alpha[i];
    for (std::size_t t = 0; t < pic.torsion.size(); ++t)
        out[pic.free_rank + t] = alpha[base_free + t];
    return pic.reduce(std::move(out));
}

CayleyForm cayley_form(const std::vector<GradedPolynomial>& fs, const ProjectivizedFan& p)
{
    const std::size_t l = p.base_count, r = p.fiber_count;
    if (fs.size() != r)
        throw Error("expected " + std::to_string(r) + " coefficient polynomials, got " +
                    std::to_string(fs.size()));

    CayleyForm cf;
    cf.assembled = GradedPolynomial(l + r);
    const auto& pic = p.picard.class_group;
    for (std::size_t j = 0; j < r; ++j) {
        const auto& f = fs[j];
        if (f.variable_count() != l + r)
            throw Error("coefficient polynomial " + std::to_string(j + 1) +
                        " lives in the wrong ring");
        if (!f.uses_only_variables_below(l))
            throw Error("coefficient polynomial " + std::to_string(j + 1) +
                        " involves fiber variables");
        // deg f_j = alpha_j, i.e. (0,1) minus the degree of y_j
        ClassVec expected = pic.add(p.hyperplane_class(),
                                    pic.negate(p.picard.variable_degrees[l + j]));
        auto deg = f.homogeneous_degree(p.picard);
        if (!f.is_zero() && (!deg || *deg != expected))
            throw Error("coefficient polynomial " + std::to_string(j + 1) +
                        " does not have the bundle class alpha_" + std::to_string(j + 1));
        cf.coefficients.push_back(f);
        cf.assembled = cf.assembled + f * GradedPolynomial::variable(l + r, l + j);
    }
    auto deg = cf.assembled.homogeneous_degree(p.picard);
    if (!cf.assembled.is_zero() && (!deg || *deg != p.hyperplane_class()))
        throw Error("assembled Cayley form is not of degree (0,1)");
    return cf;
}

std::vector<GradedPolynomial> extract_coefficients(const GradedPolynomial& p,
                                                   const ProjectivizedFan& pf)
{
    const std::size_t l = pf.base_count, r = pf.fiber_count;
    if (p.variable_count() != l + r) throw Error("polynomial lives in the wrong ring");

    auto deg = p.homogeneous_degree(pf.picard);
    if (!p.is_zero() && (!deg || *deg != pf.hyperplane_class()))
        throw Error("polynomial is not homogeneous of degree (0,1)");

    std::vector<GradedPolynomial> out(r, GradedPolynomial(l + r));
    for (const auto& [e, c] : p.terms()) {
        std::size_t which = r;
        int ysum = 0;
        for (std::size_t j = 0; j < r; ++j) {
            ysum += e[l + j];
            if (e[l + j] == 1 && which == r) which = j;
        }
        if (ysum != 1 || which == r)
            throw Error("polynomial is not linear in the fiber variables");
        Exponents stripped = e;
        stripped[l + which] = 0;
        out[which].add_term(stripped, c);
    }
    return out;
}

bool nondegenerate(const std::vector<ClassVec>& beta, const GradingData& g)
{
    for (const auto& b : beta) {
        ClassVec rb = g.class_group.reduce(b);
        for (const auto& vd : g.variable_degrees)
            if (rb == vd) return false;
    }
    return true;
}

} // namespace toricaut
