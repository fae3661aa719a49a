#include "kappa/parser.hpp"

#include <cctype>
#include <string>

namespace kappa {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return std::string(text.substr(start, pos - start));
    }

    Rational number() {
        std::string num = digits();
        if (accept('/')) {
            std::string den = digits();
            Rational r = Rational::from_string(num + "/" + den);
            return r;
        }
        return Rational::from_string(num);
    }

    long var_index(Index d) {
        std::size_t at = pos;
        ++pos;  // consume 'y'
        long i = std::stol(digits());
        if (i < 1 || i > d) throw ParseError("variable index y" + std::to_string(i) + " out of range 1.." + std::to_string(d), at);
        return i;
    }
};

}  // namespace

Mat<Rational> parse_form(std::string_view text, Index d) {
    if (d < 1) throw ParseError("dimension must be positive", 0);
    Mat<Rational> gram = Mat<Rational>::Zero(d, d);
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty form", 0);

    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.accept('+')) {
            sign = 1;
        } else if (cur.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        first = false;

        Rational coeff(sign);
        long deg = 0;
        long idx[2] = {0, 0};
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            std::size_t at = cur.pos;
            char c = cur.peek();
            if (c == 'y') {
                long i = cur.var_index(d);
                long exp = 1;
                if (cur.accept('^')) {
                    exp = std::stol(cur.digits());
                    if (exp < 1) throw ParseError("exponent must be positive", at);
                }
                if (deg + exp > 2) throw ParseError("monomial of degree > 2", at);
                for (long k = 0; k < exp; ++k) idx[deg++] = i;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= cur.number();
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", cur.pos);
            }
            saw_factor = true;
            expect_factor = cur.accept('*');
            if (expect_factor && cur.done()) throw ParseError("dangling '*'", cur.pos);
        }
        if (!saw_factor) throw ParseError("empty term", cur.pos);
        if (deg == 0) throw ParseError("constant term not allowed in a quadratic form", cur.pos);
        if (deg == 1) throw ParseError("linear term not allowed in a quadratic form", cur.pos);

        Index i = idx[0] - 1, j = idx[1] - 1;
        if (i == j) {
            gram(i, i) += coeff;
        } else {
            Rational half = coeff / Rational(2);
            gram(i, j) += half;
            gram(j, i) += half;
        }
    }
    return gram;
}

}  // namespace kappa
