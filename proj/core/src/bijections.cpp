#include "msym/bijections.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace msym {

BiWord::BiWord(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (const auto& [i, j] : pairs_) {
        if (i < 1 || j < 1)
            throw std::domain_error("biword entries must be positive");
    }
    for (std::size_t r = 1; r < pairs_.size(); ++r) {
        if (pairs_[r - 1] > pairs_[r])
            throw std::domain_error(
                "biword pairs must be sorted lexicographically");
    }
}

std::vector<Int> BiWord::top_line() const {
    std::vector<Int> line;
    line.reserve(pairs_.size());
    for (const auto& pr : pairs_) line.push_back(pr.first);
    return line;
}

std::vector<Int> BiWord::bottom_line() const {
    std::vector<Int> line;
    line.reserve(pairs_.size());
    for (const auto& pr : pairs_) line.push_back(pr.second);
    return line;
}

Tableau::Tableau(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::domain_error("empty tableau row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::domain_error("tableau rows must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1)
                throw std::domain_error("tableau entries must be positive");
            if (c > 0 && row[c - 1] > row[c])
                throw std::domain_error("tableau rows must weakly increase");
            if (r > 0 && rows_[r - 1][c] >= row[c])
                throw std::domain_error(
                    "tableau columns must strictly increase");
        }
    }
}

std::vector<std::size_t> Tableau::shape() const {
    std::vector<std::size_t> sh;
    sh.reserve(rows_.size());
    for (const auto& row : rows_) sh.push_back(row.size());
    return sh;
}

std::vector<Int> Tableau::type(std::size_t min_length) const {
    std::vector<Int> mult(min_length, 0);
    for (const auto& row : rows_)
        for (Int v : row) {
            if (mult.size() < static_cast<std::size_t>(v))
                mult.resize(static_cast<std::size_t>(v), 0);
            ++mult[static_cast<std::size_t>(v) - 1];
        }
    return mult;
}

BiWord matrix_to_biword(const GammaMatrix& a) {
    std::vector<BiWord::Pair> pairs;
    for (Int i = 0; i <= a.p(); ++i)
        for (Int j = 0; j <= a.q(); ++j)
            for (Int c = 0; c < a.at(i, j); ++c)
                pairs.emplace_back(i + 1, j + 1);
    return BiWord(std::move(pairs));
}

GammaMatrix biword_to_matrix(const BiWord& w, Int p, Int q) {
    GammaMatrix a(p, q);
    for (const auto& [i, j] : w.pairs()) {
        if (i > p + 1 || j > q + 1)
            throw std::domain_error("biword pair exceeds matrix dimensions");
        ++a.at(i - 1, j - 1);
    }
    return a;
}

namespace {

Margin line_type(const std::vector<Int>& line, std::size_t min_length) {
    Margin mult(min_length, 0);
    for (Int v : line) {
        if (mult.size() < static_cast<std::size_t>(v))
            mult.resize(static_cast<std::size_t>(v), 0);
        ++mult[static_cast<std::size_t>(v) - 1];
    }
    return mult;
}

}  // namespace

std::pair<Margin, Margin> type_vectors(const BiWord& w, std::size_t len1,
                                       std::size_t len2) {
    return {line_type(w.top_line(), len1), line_type(w.bottom_line(), len2)};
}

bool in_omega_N(const BiWord& w) {
    return w.empty() || w.pairs().front() != BiWord::Pair{1, 1};
}

namespace {

// Insert v into row r of shape, bumping the leftmost entry strictly
// greater than v; records the landing cell when the value settles.
void row_insert(std::vector<std::vector<Int>>& p_rows,
                std::vector<std::vector<Int>>& q_rows, Int v, Int label) {
    std::size_t r = 0;
    for (;;) {
        if (r == p_rows.size()) {
            p_rows.emplace_back();
            q_rows.emplace_back();
        }
        auto& row = p_rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            q_rows[r].push_back(label);
            return;
        }
        std::swap(*it, v);
        ++r;
    }
}

}  // namespace

TableauPair rsk(const BiWord& w) {
    std::vector<std::vector<Int>> p_rows, q_rows;
    for (const auto& [i, j] : w.pairs()) row_insert(p_rows, q_rows, j, i);
    return {Tableau(std::move(p_rows)), Tableau(std::move(q_rows))};
}

BiWord rsk_inverse(const TableauPair& pair) {
    Tableau p_check = pair.P;  // constructor re-validation is the cheap part
    Tableau q_check = pair.Q;
    if (p_check.shape() != q_check.shape())
        throw std::domain_error("tableau shapes differ");

    auto p_rows = p_check.rows();
    const auto& q_rows = q_check.rows();

    // Cells of Q in removal order: largest label first, and among equal
    // labels rightmost column first, so each removal peels a horizontal
    // strip from the end.
    struct Cell {
        Int label;
        std::size_t row, col;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < q_rows.size(); ++r)
        for (std::size_t c = 0; c < q_rows[r].size(); ++c)
            cells.push_back({q_rows[r][c], r, c});
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.label != b.label) return a.label > b.label;
        return a.col > b.col;
    });

    std::vector<BiWord::Pair> rev;
    for (const auto& cell : cells) {
        // The cell must currently be an outer corner of P.
        if (cell.row >= p_rows.size() ||
            cell.col + 1 != p_rows[cell.row].size() ||
            (cell.row + 1 < p_rows.size() &&
             p_rows[cell.row + 1].size() >= p_rows[cell.row].size()))
            throw std::domain_error("recording tableau is not consistent");
        Int v = p_rows[cell.row].back();
        p_rows[cell.row].pop_back();
        if (p_rows[cell.row].empty()) p_rows.pop_back();
        // Reverse-bump upward: in each row above, the rightmost entry
        // strictly smaller than v is displaced.
        for (std::size_t r = cell.row; r-- > 0;) {
            auto& row = p_rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), v);
            if (it == row.begin())
                throw std::domain_error("reverse insertion found no bump");
            --it;
            std::swap(*it, v);
        }
        rev.emplace_back(cell.label, v);
    }
    std::reverse(rev.begin(), rev.end());
    return BiWord(std::move(rev));
}

CorollaryReport corollary_condition(const TableauPair& pair) {
    CorollaryReport rep;
    if (pair.P.empty() || pair.Q.empty()) {
        rep.first_row_reading = true;
        rep.last_row_reading = true;
        return rep;
    }
    const auto& pr = pair.P.rows();
    const auto& qr = pair.Q.rows();
    rep.first_row_reading = !(pr.front().front() == 1 && qr.front().front() == 1);
    rep.last_row_reading = !(pr.back().front() == 1 && qr.back().front() == 1);
    return rep;
}

std::string render_tableau(const Tableau& t, bool french) {
    if (t.empty()) return "(empty)\n";
    std::ostringstream out;
    const auto& rows = t.rows();
    auto print_row = [&](const std::vector<Int>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ' ';
            out << row[c];
        }
        out << '\n';
    };
    if (french)
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) print_row(*it);
    else
        for (const auto& row : rows) print_row(row);
    return out.str();
}

std::string biword_to_json(const BiWord& w) {
    nlohmann::json j;
    j["top"] = w.top_line();
    j["bottom"] = w.bottom_line();
    auto [t1, t2] = type_vectors(w);
    j["type1"] = t1;
    j["type2"] = t2;
    j["in_omega"] = in_omega_N(w);
    return j.dump(2);
}

std::string tableau_pair_to_json(const TableauPair& pair) {
    nlohmann::json j;
    j["P"] = pair.P.rows();
    j["Q"] = pair.Q.rows();
    std::vector<std::size_t> sh = pair.P.shape();
    j["shape"] = sh;
    auto rep = corollary_condition(pair);
    j["corollary"] = {{"first_row_reading", rep.first_row_reading},
                      {"last_row_reading", rep.last_row_reading}};
    return j.dump(2);
}

}  // namespace msym
