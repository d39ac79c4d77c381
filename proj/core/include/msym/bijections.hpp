#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msym/lset.hpp"

namespace msym {

/// A two-line array (generalized permutation): pairs (i_r, j_r) with the
/// top line non-decreasing and, within equal top entries, the bottom line
/// non-decreasing. Pair values are 1-based.
class BiWord {
public:
    using Pair = std::pair<Int, Int>;

    BiWord() = default;
    explicit BiWord(std::vector<Pair> pairs);  // validates the sort order

    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    std::vector<Int> top_line() const;
    std::vector<Int> bottom_line() const;

    friend bool operator==(const BiWord&, const BiWord&) = default;

private:
    std::vector<Pair> pairs_;
};

/// A semistandard Young tableau in English convention: weakly decreasing
/// row lengths, rows weakly increasing, columns strictly increasing
/// downward. The empty tableau has no rows.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<Int>> rows);  // validates SSYT

    const std::vector<std::vector<Int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    std::vector<std::size_t> shape() const;

    /// Multiplicity vector of the entries, padded to length at least
    /// min_length.
    std::vector<Int> type(std::size_t min_length = 0) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<Int>> rows_;
};

struct TableauPair {
    Tableau P;  // insertion tableau
    Tableau Q;  // recording tableau
    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// The unique sorted biword with a_{ij} copies of the pair (i+1, j+1) for
/// each grid entry.
BiWord matrix_to_biword(const GammaMatrix& a);

/// Multiplicity matrix of shape (p+1)x(q+1); inverse of matrix_to_biword.
/// Throws std::domain_error when a pair falls outside the grid.
GammaMatrix biword_to_matrix(const BiWord& w, Int p, Int q);

/// (type1, type2): multiplicities of each value in the top and bottom
/// lines, padded with zeros to len1 and len2 (0 = up to the largest value
/// present).
std::pair<Margin, Margin> type_vectors(const BiWord& w, std::size_t len1 = 0,
                                       std::size_t len2 = 0);

/// True iff the biword is empty or its first pair differs from (1,1);
/// equivalent to a zero corner entry in the associated matrix.
bool in_omega_N(const BiWord& w);

/// RSK row insertion of the bottom line with top-line recording. The
/// resulting tableaux share their shape; type(P) is the bottom-line type
/// and type(Q) the top-line type.
TableauPair rsk(const BiWord& w);

/// Inverse RSK. Throws std::domain_error when the shapes differ or either
/// tableau is not semistandard.
BiWord rsk_inverse(const TableauPair& pair);

/// The literal reading "the first box of the last row of P and Q is not
/// equal to 1 simultaneously" is convention-dependent, so both readings are
/// reported: first_row checks the corner box of the longest (English first)
/// row, the row a bottom-up display prints last; last_row checks the corner
/// box of the shortest (English last) row. Reporting only; neither reading
/// is used as a membership test.
struct CorollaryReport {
    bool first_row_reading = false;
    bool last_row_reading = false;
};

CorollaryReport corollary_condition(const TableauPair& pair);

/// Text rendering; bottom-up row order when french is true.
std::string render_tableau(const Tableau& t, bool french);

std::string biword_to_json(const BiWord& w);
std::string tableau_pair_to_json(const TableauPair& pair);

}  // namespace msym
