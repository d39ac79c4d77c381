#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msym/rational.hpp"

namespace msym {

/// A margin vector: finite list of non-negative integers.
using Margin = std::vector<Int>;

Int margin_total(const Margin& m);

/// A (p+1)x(q+1) natural-number matrix with rows and columns indexed from 0.
/// Members of L(alpha,beta,n) additionally satisfy: zero corner, full row
/// sums equal alpha on rows 1..p, full column sums equal beta on columns
/// 1..q, and total mass at most n. Row 0 and column 0 carry the slack.
class GammaMatrix {
public:
    GammaMatrix(Int p, Int q);  // zero-filled

    static GammaMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    Int p() const { return p_; }
    Int q() const { return q_; }
    Int rows() const { return p_ + 1; }
    Int cols() const { return q_ + 1; }

    Int& at(Int i, Int j);
    Int at(Int i, Int j) const;

    Int total() const;
    Int row_sum(Int i) const;
    Int col_sum(Int j) const;

    std::vector<std::vector<Int>> to_rows() const;

    friend auto operator<=>(const GammaMatrix&, const GammaMatrix&) = default;

private:
    Int p_, q_;
    std::vector<Int> entries_;  // row-major, (p+1)*(q+1)
};

/// All members of L with a fixed total mass N, sorted by flattened vector.
struct LStratum {
    Int N = 0;
    std::vector<GammaMatrix> members;
};

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntegerInterval {
    Int lo = 0;
    Int hi = -1;
    bool contains(Int v) const { return lo <= v && v <= hi; }
    bool empty() const { return lo > hi; }
    friend bool operator==(const IntegerInterval&, const IntegerInterval&) = default;
};

/// Membership test for L(alpha,beta,n). gamma must be shaped
/// (len(alpha)+1) x (len(beta)+1); throws std::domain_error otherwise.
bool is_member(const GammaMatrix& gamma, const Margin& alpha, const Margin& beta,
               Int n);

/// All members of L(alpha,beta,n) in lexicographic order of the flattened
/// vector gamma_to_vec(gamma).
std::vector<GammaMatrix> enumerate_L(const Margin& alpha, const Margin& beta, Int n);

/// The stratum L_N: members with total mass exactly N.
LStratum enumerate_LN(const Margin& alpha, const Margin& beta, Int N);

/// [max(|alpha|,|beta|), |alpha|+|beta|]: L_N is nonempty exactly for N in
/// this interval.
IntegerInterval nonempty_range(const Margin& alpha, const Margin& beta);

/// Strata for N from max(|alpha|,|beta|) to min(n, |alpha|+|beta|); their
/// disjoint union is enumerate_L(alpha,beta,n).
std::vector<LStratum> decompose(const Margin& alpha, const Margin& beta, Int n);

/// A deterministic member of L_N built by the northwest corner rule on the
/// padded margins, visiting rows 0..p and columns 1..q then 0. Putting
/// column 0 last keeps the corner entry at zero. Throws std::out_of_range
/// when N lies outside nonempty_range(alpha,beta).
GammaMatrix witness(const Margin& alpha, const Margin& beta, Int N);

/// Flattening (g_{10},..,g_{p0}, g_{01},..,g_{0q}, g_{11},..,g_{1q}, ...,
/// g_{p1},..,g_{pq}): column-0 block, row-0 block, then the inner block in
/// row-major order. Length p + q + pq; the corner entry is not included.
std::vector<Int> gamma_to_vec(const GammaMatrix& gamma);

/// Inverse of gamma_to_vec given the block dimensions. The corner entry is
/// set to zero. Throws std::domain_error on a length mismatch.
GammaMatrix vec_to_gamma(const std::vector<Int>& vec, Int p, Int q);

/// Matrix rendering with the margin arrows: column margins on top with
/// up-arrows, row margins on the right with right-arrows.
std::string render_gamma(const GammaMatrix& gamma, const Margin& alpha,
                         const Margin& beta);

/// {"alpha", "beta", "n", "strata": [{"N", "count", "matrices"}]}.
std::string strata_to_json(const Margin& alpha, const Margin& beta, Int n,
                           const std::vector<LStratum>& strata);

}  // namespace msym
