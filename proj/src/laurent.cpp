#include "qhopf/laurent.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace qhopf {

double LaurentPoly::eval(double q0) const {
    if (q0 == 0.0) throw std::domain_error("q0 = 0: negative exponents undefined");
    double acc = 0.0;
    for (const auto& [k, c] : terms_) acc += rat_to_double(c) * std::pow(q0, k);
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit_coeff = (mag == 1) && (k != 0);
        if (!unit_coeff) os << rat_to_string(mag);
        if (k != 0) {
            if (!unit_coeff) os << "*";
            os << "q";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

struct LpLexer {
    const std::string& s;
    size_t pos = 0;
    explicit LpLexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("expected integer at position " + std::to_string(pos) +
                                        " in '" + s + "'");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& str) {
    LpLexer lx(str);
    LaurentPoly out;
    bool first = true;
    while (!lx.eof()) {
        bool neg = false;
        if (lx.accept('-'))
            neg = true;
        else if (lx.accept('+')) {
            if (first) throw std::invalid_argument("unexpected leading '+' in '" + str + "'");
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' at position " +
                                        std::to_string(lx.pos) + " in '" + str + "'");
        }
        first = false;

        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            long num = lx.integer();
            long den = 1;
            if (lx.accept('/')) den = lx.integer();
            coeff = rat(num, den);
            saw_coeff = true;
        }
        int expo = 0;
        bool saw_q = false;
        if (saw_coeff && !lx.accept('*')) {
            // bare constant term
        } else {
            if (lx.peek() == 'q') {
                ++lx.pos;
                saw_q = true;
                expo = 1;
                if (lx.accept('^')) expo = static_cast<int>(lx.integer());
            } else if (saw_coeff) {
                throw std::invalid_argument("expected 'q' after '*' at position " +
                                            std::to_string(lx.pos) + " in '" + str + "'");
            }
        }
        if (!saw_coeff && !saw_q)
            throw std::invalid_argument("expected term at position " + std::to_string(lx.pos) +
                                        " in '" + str + "'");
        out += LaurentPoly::monomial(neg ? Rational(-coeff) : coeff, expo);
    }
    return out;
}

}  // namespace qhopf
