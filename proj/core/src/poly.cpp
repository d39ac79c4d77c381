#include "msym/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace msym {

std::string Variable::to_string() const {
    std::ostringstream os;
    switch (family) {
        case Family::Y: os << "y" << a; break;
        case Family::X: os << "x{" << a << "," << b << "}"; break;
        case Family::T: os << "t" << a; break;
    }
    return os.str();
}

namespace {

void check_index(Int v, const char* what) {
    if (v < 1) {
        throw std::domain_error(std::string(what) + " index must be >= 1");
    }
}

}  // namespace

Variable y_var(Int j) {
    check_index(j, "y");
    return Variable{Variable::Family::Y, j, 0};
}

Variable x_var(Int i, Int j) {
    check_index(i, "x point");
    check_index(j, "x coordinate");
    return Variable{Variable::Family::X, i, j};
}

Variable t_var(Int k) {
    check_index(k, "t");
    return Variable{Variable::Family::T, k, 0};
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
        if (e < 0) throw std::domain_error("negative exponent in monomial");
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v) {
            factors_.back().second += e;
        } else {
            factors_.emplace_back(v, e);
        }
    }
}

Monomial Monomial::variable(const Variable& v, Int exponent) {
    return Monomial({{v, exponent}});
}

Int Monomial::exponent_of(const Variable& v) const {
    auto it = std::lower_bound(
        factors_.begin(), factors_.end(), v,
        [](const Factor& f, const Variable& w) { return f.first < w; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Int Monomial::total_degree() const {
    Int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    // Merge of two sorted factor lists with exponent addition.
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << v.to_string();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(const Variable& v, Int exponent) {
    Polynomial p;
    p.add_term(Monomial::variable(v, exponent), 1);
    return p;
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
    Polynomial p;
    p.add_term(m, coeff);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out;
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_constant()) {
            os << rational_to_string(mag);
        } else if (mag == 1) {
            os << m.to_string();
        } else {
            os << rational_to_string(mag) << "*" << m.to_string();
        }
    }
    return os.str();
}

Polynomial y(Int j) { return Polynomial::variable(y_var(j)); }
Polynomial x(Int i, Int j) { return Polynomial::variable(x_var(i, j)); }
Polynomial t(Int k) { return Polynomial::variable(t_var(k)); }

Polynomial substitute(const Polynomial& f, Int point_index, Int d) {
    if (point_index < 1) {
        throw std::domain_error("point index must be >= 1");
    }
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Monomial::Factor> factors;
        factors.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) {
            if (v.family != Variable::Family::Y) {
                throw std::domain_error("substitute: polynomial contains non-Y variable " +
                                        v.to_string());
            }
            if (v.a > d) {
                throw std::domain_error("substitute: y" + std::to_string(v.a) +
                                        " exceeds dimension d=" + std::to_string(d));
            }
            factors.emplace_back(x_var(point_index, v.a), e);
        }
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

namespace {

// Splits a monomial into its T-exponent vector (indexed by t-index) and the
// T-free remainder. Returns false if any t_k with k > cap_len appears.
bool split_t_part(const Monomial& m, std::size_t cap_len,
                  std::vector<Int>& t_exp, Monomial& rest) {
    std::vector<Monomial::Factor> rest_factors;
    t_exp.assign(cap_len, 0);
    for (const auto& [v, e] : m.factors()) {
        if (v.family == Variable::Family::T) {
            if (static_cast<std::size_t>(v.a) > cap_len) return false;
            t_exp[static_cast<std::size_t>(v.a) - 1] = e;
        } else {
            rest_factors.emplace_back(v, e);
        }
    }
    rest = Monomial(std::move(rest_factors));
    return true;
}

}  // namespace

Polynomial coefficient_of_t(const Polynomial& P, const std::vector<Int>& alpha) {
    Polynomial out;
    std::vector<Int> t_exp;
    Monomial rest;
    for (const auto& [m, c] : P.terms()) {
        if (!split_t_part(m, alpha.size(), t_exp, rest)) continue;
        if (t_exp == alpha) out.add_term(rest, c);
    }
    return out;
}

Polynomial mul_t_capped(const Polynomial& a, const Polynomial& b,
                        const std::vector<Int>& cap) {
    Polynomial out;
    std::vector<Int> t_exp;
    Monomial rest;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial prod = ma * mb;
            if (!split_t_part(prod, cap.size(), t_exp, rest)) continue;
            bool dominated = true;
            for (std::size_t k = 0; k < cap.size(); ++k) {
                if (t_exp[k] > cap[k]) {
                    dominated = false;
                    break;
                }
            }
            if (dominated) out.add_term(prod, ca * cb);
        }
    }
    return out;
}

Polynomial permute_points(const Polynomial& f, const std::vector<Int>& perm) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Monomial::Factor> factors;
        factors.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) {
            if (v.family == Variable::Family::X) {
                const auto i = static_cast<std::size_t>(v.a);
                if (i < 1 || i > perm.size()) {
                    throw std::domain_error("permute_points: point index out of range");
                }
                factors.emplace_back(x_var(perm[i - 1], v.b), e);
            } else {
                factors.emplace_back(v, e);
            }
        }
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

std::string polynomial_to_json(const Polynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : m.factors()) {
            switch (v.family) {
                case Variable::Family::Y:
                    mono.push_back({"Y", v.a, e});
                    break;
                case Variable::Family::X:
                    mono.push_back({"X", v.a, v.b, e});
                    break;
                case Variable::Family::T:
                    mono.push_back({"T", v.a, e});
                    break;
            }
        }
        terms.push_back({{"coeff", rational_to_string(c)}, {"monomial", mono}});
    }
    return terms.dump();
}

}  // namespace msym
