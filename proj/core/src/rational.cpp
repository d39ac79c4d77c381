#include "msym/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace msym {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& token) {
    const std::string s = strip(token);
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) {
            throw std::invalid_argument("malformed rational: '" + token + "'");
        }
        return Rational(mpz_class(s));
    }
    const std::string num = strip(s.substr(0, slash));
    const std::string den = strip(s.substr(slash + 1));
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw std::invalid_argument("malformed rational: '" + token + "'");
    }
    mpz_class d(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: '" + token + "'");
    }
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

Rational make_rational(Int num, Int den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(static_cast<long>(num), 1);
    q /= Rational(static_cast<long>(den), 1);
    return q;
}

std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

bool is_integral(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_den() == 1;
}

namespace {

template <typename T, typename Parse>
std::vector<T> parse_csv(const std::string& csv, Parse parse) {
    std::vector<T> out;
    const std::string s = strip(csv);
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse(item));
    }
    if (!s.empty() && s.back() == ',') {
        throw std::invalid_argument("trailing comma in vector: '" + csv + "'");
    }
    return out;
}

}  // namespace

std::vector<Rational> parse_rational_vector(const std::string& csv) {
    return parse_csv<Rational>(csv, parse_rational);
}

std::vector<Int> parse_int_vector(const std::string& csv) {
    return parse_csv<Int>(csv, [](const std::string& item) {
        const std::string s = strip(item);
        if (!is_integer_token(s)) {
            throw std::invalid_argument("malformed integer: '" + item + "'");
        }
        mpz_class z(s);
        if (z < 0) {
            throw std::invalid_argument("negative entry: '" + item + "'");
        }
        if (!z.fits_slong_p()) {
            throw std::invalid_argument("integer out of range: '" + item + "'");
        }
        return static_cast<Int>(z.get_si());
    });
}

}  // namespace msym
