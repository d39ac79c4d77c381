#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msym/lset.hpp"
#include "msym/rational.hpp"

namespace msym {

/// Row and column margins of a p x q transportation polytope. Following the
/// definition, u prescribes the row sums and v the column sums.
struct MarginPair {
    std::vector<Rational> u;  // row margins, length p
    std::vector<Rational> v;  // column margins, length q

    MarginPair() = default;
    MarginPair(std::vector<Rational> row_margins, std::vector<Rational> col_margins);

    Rational u_total() const;
    Rational v_total() const;
};

/// Margins of the padded polytope P_N: alpha_bar = (N-|alpha|, alpha),
/// beta_bar = (N-|beta|, beta); both sum to N.
struct PaddedMargins {
    Margin alpha_bar;  // length p+1
    Margin beta_bar;   // length q+1
    Int N = 0;
};

/// The system A x = b, x >= 0 describing a transportation polytope. A is a
/// vertex-edge incidence matrix (every column has exactly two ones: one
/// U-vertex row, one V-vertex row); variable_order names the edge behind
/// each column as a grid position (i, j).
struct ConstraintSystem {
    std::vector<std::vector<Int>> A;          // 0/1 entries
    std::vector<Rational> b;
    std::vector<std::pair<Int, Int>> variable_order;

    std::size_t num_rows() const { return A.size(); }
    std::size_t num_cols() const { return variable_order.size(); }
};

/// The polytope is nonempty exactly when the margin totals agree.
bool feasible(const MarginPair& m);

/// Greedy top-left fill: x_{ij} = min(residual row, residual column),
/// advancing past exhausted rows and columns. Throws std::domain_error when
/// the margins are infeasible. Output row sums equal u and column sums v.
std::vector<std::vector<Rational>> northwest_corner(const MarginPair& m);

/// Vertex-edge incidence matrix of K_{p,q} (or K'_{p,q} when the corner
/// edge is removed). Rows: U-vertices then V-vertices; columns: edges (i,j)
/// in lexicographic order. Vertices are 1-based for the plain graph and
/// 0-based against the gamma grid when the corner edge (0,0) is dropped.
ConstraintSystem incidence_matrix(Int p, Int q, bool remove_corner_edge);

/// Full constraint system of the p x q transportation polytope with margins
/// m: A = incidence of K_{p,q}, b = (u, v).
ConstraintSystem constraint_system(const MarginPair& m);

/// Pads alpha and beta to total N. Throws std::out_of_range when
/// N < max(|alpha|, |beta|) (a pad entry would be negative).
PaddedMargins padded_margins(const Margin& alpha, const Margin& beta, Int N);

/// The system whose non-negative integer solutions are exactly the
/// flattened members of L_N: start from the incidence matrix B of
/// K'_{p+1,q+1} and permute columns so the variable order becomes the
/// gamma_to_vec order; b = (alpha_0, alpha, beta_0, beta).
ConstraintSystem rearranged_constraint_system(const Margin& alpha, const Margin& beta,
                                              Int N);

/// True iff A x = b and x >= 0 (and x integral when required). Throws
/// std::domain_error if x's length differs from the number of columns.
bool check_membership(const std::vector<Rational>& x, const ConstraintSystem& sys,
                      bool integral_required);

/// Aligned 0/1 grid with per-column labels ("B^k" / "A^k") and the b vector.
std::string render_constraint_system(const ConstraintSystem& sys,
                                     const std::string& column_label);

/// {"rows", "cols", "entries", "variable_order", "b"}.
std::string constraint_system_to_json(const ConstraintSystem& sys);

/// Matrix rendering with margin arrows (rows ->, columns ^).
std::string render_transport_matrix(const std::vector<std::vector<Rational>>& x,
                                    const MarginPair& m);

}  // namespace msym
