#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msym/lset.hpp"
#include "msym/poly.hpp"

namespace msym {

/// An ordered tuple (f_1, ..., f_p) of polynomials in y_1..y_d.
/// Construction validates that every entry only uses Y-variables with
/// index <= d.
class FunctionTuple {
public:
    FunctionTuple(std::vector<Polynomial> entries, Int d);

    const std::vector<Polynomial>& entries() const { return entries_; }
    Int d() const { return d_; }
    std::size_t size() const { return entries_.size(); }
    const Polynomial& operator[](std::size_t k) const { return entries_[k]; }

    friend bool operator==(const FunctionTuple&, const FunctionTuple&) = default;

private:
    std::vector<Polynomial> entries_;
    Int d_;
};

/// A formal term c * e_{exponents}(tuple).
struct MultiSymTerm {
    std::vector<Int> gamma_vec;  // exponent per tuple component
    FunctionTuple tuple;
    Rational coefficient = 1;
};

/// The coefficient of t^alpha in prod_{i=1}^{n} (1 + f_1(i) t_1 + ... +
/// f_p(i) t_p), an X-variable polynomial invariant under permuting the n
/// point indices. Zero when |alpha| > n. Throws std::domain_error when
/// alpha's length differs from the tuple's.
Polynomial elementary_multisym(const FunctionTuple& f, const Margin& alpha, Int n);

/// (f, g, fg): the f-block, the g-block, then all products f_i g_j in
/// row-major order (i outer, j inner); length p + q + pq.
FunctionTuple composite_tuple(const FunctionTuple& f, const FunctionTuple& g);

/// The matrices gamma of L(alpha,beta,n) indexing the product-rule
/// expansion e_alpha(f) e_beta(g) = sum over gamma of e_gamma(f,g,fg),
/// in lexicographic order of the flattened vectors. Throws
/// std::invalid_argument when |alpha| > n or |beta| > n (the product is
/// identically zero there and the empty sum would be misleading).
std::vector<GammaMatrix> product_rule(const Margin& alpha, const Margin& beta, Int n);

/// Drops tuple components whose exponent is zero; value-preserving.
MultiSymTerm reduce_term(const MultiSymTerm& term);

/// Positions (0-based) of the nonzero entries of an exponent vector.
std::vector<std::size_t> surviving_indices(const std::vector<Int>& gamma_vec);

struct VerifyResult {
    bool ok = false;
    std::string report;
    std::optional<Monomial> first_difference;
};

/// Symbolic check of the product rule on one instance: expands both
/// e_alpha(f) e_beta(g) and the sum of e_gamma over L(alpha,beta,n) of the
/// composite tuple, and compares canonical forms. On failure the report
/// names the first differing monomial.
VerifyResult verify_product_identity(const FunctionTuple& f, const FunctionTuple& g,
                                     const Margin& alpha, const Margin& beta, Int n);

/// {"alpha", "beta", "n", "composite_tuple", "terms": [{"gamma_matrix",
/// "gamma_vec", "reduced_exponents", "reduced_tuple_indices"}]}.
/// reduced_tuple_indices are 1-based component positions.
std::string product_rule_to_json(const Margin& alpha, const Margin& beta, Int n,
                                 const FunctionTuple& f, const FunctionTuple& g);

}  // namespace msym
