#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msym/rational.hpp"

namespace msym {

/// An indexed variable from one of three commuting families:
///   Y(j)    -- the abstract coordinates y_1, ..., y_d,
///   X(i,j)  -- the point coordinates x_{ij}, i-th point, j-th coordinate,
///   T(k)    -- the formal markers t_1, t_2, ...
/// Canonical order is family Y < X < T, then index (pairs lexicographic).
struct Variable {
    enum class Family : std::uint8_t { Y = 0, X = 1, T = 2 };

    Family family;
    Int a;  // Y: index j, T: index k, X: point index i
    Int b;  // X: coordinate index j; 0 otherwise

    friend auto operator<=>(const Variable&, const Variable&) = default;

    std::string to_string() const;
};

Variable y_var(Int j);
Variable x_var(Int i, Int j);
Variable t_var(Int k);

/// A power product of variables. Exponents are strictly positive and the
/// factor list is kept sorted, so equality is structural. The empty monomial
/// is the constant 1.
class Monomial {
public:
    using Factor = std::pair<Variable, Int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(const Variable& v, Int exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }
    Int exponent_of(const Variable& v) const;
    Int total_degree() const;

    Monomial operator*(const Monomial& other) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficients are stored; the zero polynomial is the
/// empty term map. All operations return canonical forms, so operator== is
/// structural equality of values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    static Polynomial one() { return constant(1); }
    static Polynomial variable(const Variable& v, Int exponent = 1);
    static Polynomial term(const Rational& coeff, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial; zero when absent.
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& coeff);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;

    Polynomial& operator+=(const Polynomial& other);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Convenience factories for single-variable polynomials.
Polynomial y(Int j);
Polynomial x(Int i, Int j);
Polynomial t(Int k);

/// Replaces every y_j in f by x_{ij}, the evaluation of f at point i.
/// f must contain only Y-variables with index <= d; throws std::domain_error
/// otherwise.
Polynomial substitute(const Polynomial& f, Int point_index, Int d);

/// The polynomial multiplying exactly the monomial t^alpha in P: monomials
/// whose T-exponents match alpha entrywise (and contain no t_k beyond
/// alpha's length) contribute their T-free part. Zero when no term matches.
Polynomial coefficient_of_t(const Polynomial& P, const std::vector<Int>& alpha);

/// Product of a and b keeping only monomials whose T-exponent vector is
/// dominated entrywise by cap (T-variables past cap's length are excluded).
/// Exponents only grow under multiplication, so dropping dominated-out terms
/// never changes any coefficient ultimately extracted against t^alpha with
/// alpha <= cap.
Polynomial mul_t_capped(const Polynomial& a, const Polynomial& b,
                        const std::vector<Int>& cap);

/// Applies a permutation of the point indices to all X-variables:
/// x_{ij} -> x_{perm[i-1], j}. perm is a 1-based permutation of 1..n.
Polynomial permute_points(const Polynomial& f, const std::vector<Int>& perm);

/// JSON rendering of a polynomial: a list of
///   {"coeff": "num/den", "monomial": [[family, index..., exponent], ...]}
/// in canonical term order. Deterministic.
std::string polynomial_to_json(const Polynomial& f);

}  // namespace msym
