#include "msym/multisym.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace msym {

FunctionTuple::FunctionTuple(std::vector<Polynomial> entries, Int d)
    : entries_(std::move(entries)), d_(d) {
    if (d < 0) throw std::domain_error("tuple dimension must be >= 0");
    for (const auto& f : entries_) {
        for (const auto& [m, c] : f.terms()) {
            for (const auto& [v, e] : m.factors()) {
                if (v.family != Variable::Family::Y) {
                    throw std::domain_error("tuple entry contains non-Y variable " +
                                            v.to_string());
                }
                if (v.a > d) {
                    throw std::domain_error("tuple entry uses y" + std::to_string(v.a) +
                                            " beyond d=" + std::to_string(d));
                }
            }
        }
    }
}

Polynomial elementary_multisym(const FunctionTuple& f, const Margin& alpha, Int n) {
    if (alpha.size() != f.size()) {
        throw std::domain_error("alpha length does not match tuple length");
    }
    for (Int a : alpha) {
        if (a < 0) throw std::domain_error("alpha has a negative entry");
    }
    if (margin_total(alpha) > n) return Polynomial::zero();

    Polynomial product = Polynomial::one();
    for (Int i = 1; i <= n; ++i) {
        Polynomial factor = Polynomial::one();
        for (std::size_t k = 0; k < f.size(); ++k) {
            factor += substitute(f[k], i, f.d()) * t(static_cast<Int>(k) + 1);
        }
        // Keeping only T-exponents dominated by alpha bounds the expansion;
        // discarded monomials can never reach t^alpha again.
        product = mul_t_capped(product, factor, alpha);
    }
    return coefficient_of_t(product, alpha);
}

FunctionTuple composite_tuple(const FunctionTuple& f, const FunctionTuple& g) {
    if (f.d() != g.d()) {
        throw std::invalid_argument("tuples must share the same Y-dimension");
    }
    std::vector<Polynomial> entries;
    entries.reserve(f.size() + g.size() + f.size() * g.size());
    for (const auto& fi : f.entries()) entries.push_back(fi);
    for (const auto& gj : g.entries()) entries.push_back(gj);
    for (const auto& fi : f.entries()) {
        for (const auto& gj : g.entries()) {
            entries.push_back(fi * gj);
        }
    }
    return FunctionTuple(std::move(entries), f.d());
}

std::vector<GammaMatrix> product_rule(const Margin& alpha, const Margin& beta, Int n) {
    if (margin_total(alpha) > n || margin_total(beta) > n) {
        throw std::invalid_argument(
            "|alpha| and |beta| must be at most n (the product vanishes otherwise)");
    }
    return enumerate_L(alpha, beta, n);
}

MultiSymTerm reduce_term(const MultiSymTerm& term) {
    if (term.gamma_vec.size() != term.tuple.size()) {
        throw std::domain_error("exponent vector length does not match tuple length");
    }
    std::vector<Int> exponents;
    std::vector<Polynomial> entries;
    for (std::size_t k = 0; k < term.gamma_vec.size(); ++k) {
        if (term.gamma_vec[k] != 0) {
            exponents.push_back(term.gamma_vec[k]);
            entries.push_back(term.tuple[k]);
        }
    }
    return MultiSymTerm{std::move(exponents),
                        FunctionTuple(std::move(entries), term.tuple.d()),
                        term.coefficient};
}

std::vector<std::size_t> surviving_indices(const std::vector<Int>& gamma_vec) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < gamma_vec.size(); ++k) {
        if (gamma_vec[k] != 0) out.push_back(k);
    }
    return out;
}

VerifyResult verify_product_identity(const FunctionTuple& f, const FunctionTuple& g,
                                     const Margin& alpha, const Margin& beta, Int n) {
    const Polynomial lhs =
        elementary_multisym(f, alpha, n) * elementary_multisym(g, beta, n);

    const FunctionTuple fg = composite_tuple(f, g);
    Polynomial rhs;
    for (const auto& gamma : product_rule(alpha, beta, n)) {
        rhs += elementary_multisym(fg, gamma_to_vec(gamma), n);
    }

    VerifyResult result;
    if (lhs == rhs) {
        result.ok = true;
        result.report = "identity holds";
        return result;
    }
    const Polynomial diff = lhs - rhs;
    const auto& [mono, coeff] = *diff.terms().begin();
    result.ok = false;
    result.first_difference = mono;
    std::ostringstream os;
    os << "identity fails at monomial " << mono.to_string() << ": lhs coefficient "
       << rational_to_string(lhs.coefficient(mono)) << ", rhs coefficient "
       << rational_to_string(rhs.coefficient(mono));
    result.report = os.str();
    return result;
}

std::string product_rule_to_json(const Margin& alpha, const Margin& beta, Int n,
                                 const FunctionTuple& f, const FunctionTuple& g) {
    const FunctionTuple fg = composite_tuple(f, g);
    nlohmann::json j;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["n"] = n;
    nlohmann::json tuple = nlohmann::json::array();
    for (const auto& entry : fg.entries()) {
        tuple.push_back(nlohmann::json::parse(polynomial_to_json(entry)));
    }
    j["composite_tuple"] = tuple;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& gamma : product_rule(alpha, beta, n)) {
        const std::vector<Int> vec = gamma_to_vec(gamma);
        nlohmann::json term;
        term["gamma_matrix"] = gamma.to_rows();
        term["gamma_vec"] = vec;
        nlohmann::json exps = nlohmann::json::array();
        nlohmann::json idxs = nlohmann::json::array();
        for (std::size_t k : surviving_indices(vec)) {
            exps.push_back(vec[k]);
            idxs.push_back(k + 1);
        }
        term["reduced_exponents"] = exps;
        term["reduced_tuple_indices"] = idxs;
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j.dump(2);
}

}  // namespace msym
