#include "msym/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace msym {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Polynomial parse() {
        Polynomial result = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool negate = consume('-');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (consume('+'))
                acc = acc + term();
            else if (consume('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (!consume('*')) return acc;
            acc = acc * factor();
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (!consume('^')) return b;
        Int e = read_uint("exponent");
        Polynomial acc = Polynomial::one();
        for (Int k = 0; k < e; ++k) acc = acc * b;
        return acc;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'y') {
            ++pos_;
            Int j = read_uint("variable index");
            if (j < 1) fail("variable index must be >= 1");
            return y(j);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_uint("number");
            skip_ws();
            if (consume('/')) {
                Int den = read_uint("denominator");
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(make_rational(num, den));
            }
            return Polynomial::constant(Rational(num));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Int read_uint(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        Int value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000) fail("number too large");
            ++pos_;
        }
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " +
                                    std::to_string(pos_) + ": " + msg);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    return Parser(text).parse();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text) {
    std::vector<Polynomial> entries;
    std::size_t start = 0;
    for (;;) {
        std::size_t sep = text.find(';', start);
        std::string piece = text.substr(
            start, sep == std::string::npos ? std::string::npos : sep - start);
        entries.push_back(parse_polynomial(piece));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return entries;
}

Int max_y_index(const std::vector<Polynomial>& entries) {
    Int top = 0;
    for (const auto& f : entries)
        for (const auto& [mono, coeff] : f.terms())
            for (const auto& [var, exp] : mono.factors())
                if (var.family == Variable::Family::Y && var.a > top)
                    top = var.a;
    return top;
}

}  // namespace msym
