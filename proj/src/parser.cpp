#include "qhopf/parser.hpp"

#include <cctype>

namespace qhopf {

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    NCPoly parse() {
        NCPoly e = expr();
        skip_ws();
        if (pos_ < s_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    long integer() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("malformed exponent: expected integer", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    std::string ident() {
        skip_ws();
        std::string id;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            id.push_back(s_[pos_++]);
        return id;
    }

    NCPoly expr() {
        NCPoly acc;
        bool neg = accept('-');
        acc += sign(term(), neg);
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    static NCPoly sign(NCPoly p, bool neg) { return neg ? -p : p; }

    NCPoly term() {
        NCPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    NCPoly factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            long den = 1;
            if (accept('/')) den = integer();
            if (den == 0) throw ParseError("zero denominator", pos_);
            return NCPoly(LaurentPoly(rat(num, den)));
        }
        if (c == '(') {
            ++pos_;
            NCPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            std::string id = ident();
            if (id == "q") {
                int k = 1;
                if (accept('^')) k = static_cast<int>(integer());
                return NCPoly(LaurentPoly::q_power(k));
            }
            if (id == "conj") {
                expect('(');
                NCPoly inner = expr();
                expect(')');
                return nc_star(inner);
            }
            if (auto g = gen_from_name(id)) return NCPoly::gen(*g);
            throw ParseError("unknown generator name '" + id + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

NCPoly parse_expr(const std::string& s) { return ExprParser(s).parse(); }

}  // namespace qhopf
