#include "schlicht/schwarz.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "schlicht/scalars.hpp"

namespace schlicht {

std::string_view to_string(SchwarzRole role)
{
    switch (role) {
    case SchwarzRole::omega: return "omega";
    case SchwarzRole::omega1: return "omega1";
    case SchwarzRole::phi: return "phi";
    }
    return "?";
}

cplx SchwarzCandidate::value(cplx z) const { return value_fn ? value_fn(z) : eval(series, z); }

cplx SchwarzCandidate::derivative(cplx z) const
{
    return derivative_fn ? derivative_fn(z) : eval(differentiate(series), z);
}

cplx SchwarzCandidate::primitive(cplx z) const
{
    return primitive_fn ? primitive_fn(z) : eval(integrate0(series), z);
}

SchwarzCandidate schwarz_polynomial(SchwarzRole role, const std::vector<cplx> &coeffs,
                                    std::size_t order, std::string tag)
{
    if (coeffs.size() > order + 1)
        throw DomainError("schwarz_polynomial: degree exceeds truncation order");
    std::vector<cplx> c(order + 1);
    std::copy(coeffs.begin(), coeffs.end(), c.begin());
    SchwarzCandidate s{role, std::move(tag), TruncatedSeries(c), {}, {}, {}};
    // Polynomials are represented exactly; derivative and primitive lose at
    // most the top coefficient, so keep one order of headroom explicit.
    const TruncatedSeries wide = s.series.truncate(order + 1);
    const TruncatedSeries d = differentiate(s.series);
    const TruncatedSeries p = integrate0(wide);
    s.derivative_fn = [d](cplx z) { return eval(d, z); };
    s.primitive_fn = [p](cplx z) { return eval(p, z); };
    return s;
}

SchwarzCandidate schwarz_mobius(double a, std::size_t order)
{
    if (!(a >= 0.0 && a < 1.0))
        throw DomainError("schwarz_mobius: a must lie in [0,1)");
    std::vector<cplx> c(order + 1);
    c[0] = a;
    double pw = 1.0; // (-a)^{k-1}
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = pw * (1.0 - a * a);
        pw *= -a;
    }
    SchwarzCandidate s{SchwarzRole::omega, "(z+a)/(1+az)", TruncatedSeries(std::move(c)), {}, {}, {}};
    s.value_fn = [a](cplx z) { return (z + a) / (1.0 + a * z); };
    s.derivative_fn = [a](cplx z) {
        const cplx d = 1.0 + a * z;
        return (1.0 - a * a) / (d * d);
    };
    s.primitive_fn = [a](cplx z) { return mobius_primitive(a, z); };
    return s;
}

namespace {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    std::vector<cplx> parse()
    {
        std::vector<cplx> coeffs;
        skip_ws();
        if (at_end())
            fail("empty formula");
        bool first = true;
        while (!at_end()) {
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [c, power] = term();
            if (coeffs.size() <= power)
                coeffs.resize(power + 1);
            coeffs[power] += sign * c;
            skip_ws();
        }
        return coeffs;
    }

private:
    std::pair<cplx, std::size_t> term()
    {
        cplx c{1.0};
        bool have_coeff = false;
        if (peek() == '(') {
            c = complex_literal();
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            c = number();
            have_coeff = true;
        }
        skip_ws();
        if (have_coeff && peek() == '*') {
            ++pos_;
            skip_ws();
            if (peek() != 'z')
                fail("expected 'z' after '*'");
        }
        if (peek() != 'z') {
            if (!have_coeff)
                fail("expected a coefficient or 'z'");
            return {c, 0};
        }
        ++pos_;
        skip_ws();
        std::size_t power = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const char *b = text_.data() + pos_;
            const auto [ptr, ec] = std::from_chars(b, text_.data() + text_.size(), power);
            if (ec != std::errc{} || ptr == b)
                fail("expected integer exponent");
            pos_ += static_cast<std::size_t>(ptr - b);
        }
        return {c, power};
    }

    cplx complex_literal()
    {
        ++pos_; // '('
        skip_ws();
        const double re = signed_number();
        skip_ws();
        if (peek() != ',')
            fail("expected ',' in complex literal");
        ++pos_;
        skip_ws();
        const double im = signed_number();
        skip_ws();
        if (peek() != ')')
            fail("expected ')' closing complex literal");
        ++pos_;
        return {re, im};
    }

    double signed_number()
    {
        double s = 1.0;
        if (peek() == '-' || peek() == '+') {
            s = peek() == '-' ? -1.0 : 1.0;
            ++pos_;
        }
        return s * number();
    }

    double number()
    {
        const char *b = text_.data() + pos_;
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(b, text_.data() + text_.size(), x);
        if (ec != std::errc{} || ptr == b)
            fail("expected number");
        pos_ += static_cast<std::size_t>(ptr - b);
        return x;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw std::invalid_argument("omega formula '" + std::string(text_) + "': " + msg +
                                    " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

} // namespace

SchwarzCandidate schwarz_from_formula(std::string_view formula, SchwarzRole role,
                                      std::size_t order, double a)
{
    if (strip_spaces(formula) == "(z+a)/(1+az)") {
        SchwarzCandidate s = schwarz_mobius(a, order);
        s.role = role;
        return s;
    }
    auto coeffs = FormulaParser(formula).parse();
    return schwarz_polynomial(role, coeffs, order, std::string(formula));
}

SchwarzCheck validate(const SchwarzCandidate &candidate, const SamplingPlan &plan)
{
    SchwarzCheck check;
    if (candidate.role != SchwarzRole::omega && std::abs(candidate.value(0.0)) > 1e-12) {
        check.ok = false;
        check.reason = "value at 0 must vanish";
        return check;
    }
    if (candidate.role == SchwarzRole::omega1 && std::abs(candidate.derivative(0.0)) > 1e-12) {
        check.ok = false;
        check.reason = "derivative at 0 must vanish";
        return check;
    }
    for (std::size_t i = 0; i < plan.radii.size(); ++i) {
        for (std::size_t k = 0; k < plan.angles_per_circle; ++k) {
            const cplx z = plan.point(i, k);
            const double m = std::abs(candidate.value(z));
            if (m > check.max_modulus) {
                check.max_modulus = m;
                check.worst_point = z;
            }
        }
    }
    if (check.max_modulus > 1.0 + 1e-12) {
        check.ok = false;
        check.reason = "modulus exceeds 1 on the grid";
    }
    return check;
}

} // namespace schlicht
