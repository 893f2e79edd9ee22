#include "selberg/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace selberg {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

long parse_int(Cursor& c) {
    c.skip_ws();
    const std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    std::size_t digits = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        ++c.i;
        ++digits;
    }
    if (digits == 0) throw syntax_error(start, "expected an integer");
    return std::strtol(c.s.c_str() + start, nullptr, 10);
}

double parse_number(Cursor& c) {
    c.skip_ws();
    const std::size_t start = c.i;
    std::size_t digits = 0;
    while (c.i < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '.')) {
        if (std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++digits;
        ++c.i;
    }
    if (digits == 0) throw syntax_error(start, "expected a number");
    double v = std::strtod(c.s.substr(start, c.i - start).c_str(), nullptr);
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        const std::size_t dstart = c.i;
        std::size_t d2 = 0;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            ++c.i;
            ++d2;
        }
        if (d2 == 0) throw syntax_error(dstart, "expected a denominator");
        const double den = std::strtod(c.s.substr(dstart, c.i - dstart).c_str(), nullptr);
        if (den == 0.0) throw syntax_error(dstart, "zero denominator");
        v /= den;
    }
    return v;
}

// factor = xK[^E]
void parse_factor(Cursor& c, int nvars, std::vector<int>& exps) {
    c.skip_ws();
    const std::size_t start = c.i;
    if (c.peek() != 'x') throw syntax_error(start, "expected a variable factor xK");
    c.take();
    const long k = parse_int(c);
    if (k < 1 || k > nvars)
        throw variable_out_of_range(start, "variable index x" + std::to_string(k) +
                                               " outside 1.." + std::to_string(nvars));
    long e = 1;
    if (c.peek() == '^') {
        c.take();
        e = parse_int(c);
    }
    exps[static_cast<std::size_t>(k - 1)] += static_cast<int>(e);
}

} // namespace

LaurentPoly parse_poly(const std::string& text, int nvars) {
    LaurentPoly out(nvars);
    Cursor c{text};
    if (c.eof()) throw syntax_error(0, "empty polynomial");
    bool first = true;
    while (!c.eof()) {
        double sign = 1.0;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = (c.take() == '-') ? -1.0 : 1.0;
        } else if (!first) {
            throw syntax_error(c.i, "expected '+' or '-' between terms");
        }
        first = false;
        double coeff = 1.0;
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        bool any_factor = false;
        c.skip_ws();
        if (c.peek() != 'x') {
            coeff = parse_number(c);
            if (c.peek() == '*') c.take();
            else {
                out.add_term(exps, sign * coeff);
                continue;
            }
        }
        for (;;) {
            parse_factor(c, nvars, exps);
            any_factor = true;
            if (c.peek() == '*') {
                c.take();
                continue;
            }
            break;
        }
        if (!any_factor) throw syntax_error(c.i, "expected a factor");
        out.add_term(exps, sign * coeff);
    }
    // cancelling input like "x1 - x1" leaves the zero polynomial
    return out;
}

std::string emit_poly(const LaurentPoly& p) {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        double co = c.real();
        if (!first) {
            os << (co < 0 ? " - " : " + ");
            if (co < 0) co = -co;
        } else {
            if (co < 0) {
                os << "-";
                co = -co;
            }
            first = false;
        }
        bool any = false;
        std::ostringstream vars;
        for (int i = 0; i < p.nvars(); ++i) {
            if (k[static_cast<std::size_t>(i)] == 0) continue;
            if (any) vars << "*";
            vars << "x" << (i + 1);
            if (k[static_cast<std::size_t>(i)] != 1) vars << "^" << k[static_cast<std::size_t>(i)];
            any = true;
        }
        if (!any) {
            os << co;
        } else if (co == 1.0) {
            os << vars.str();
        } else {
            os << co << "*" << vars.str();
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace selberg
