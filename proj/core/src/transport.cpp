#include "msym/transport.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace msym {

namespace {

void validate_nonnegative(const std::vector<Rational>& v, const char* name) {
    for (const auto& e : v) {
        if (e < 0) {
            throw std::domain_error(std::string(name) + " has a negative entry");
        }
    }
}

}  // namespace

MarginPair::MarginPair(std::vector<Rational> row_margins,
                       std::vector<Rational> col_margins)
    : u(std::move(row_margins)), v(std::move(col_margins)) {
    // mpq_class built from two integers is not reduced; normalize here so
    // exact comparisons downstream are safe.
    for (auto& e : u) e.canonicalize();
    for (auto& e : v) e.canonicalize();
    validate_nonnegative(u, "u");
    validate_nonnegative(v, "v");
}

Rational MarginPair::u_total() const {
    return std::accumulate(u.begin(), u.end(), Rational(0));
}

Rational MarginPair::v_total() const {
    return std::accumulate(v.begin(), v.end(), Rational(0));
}

bool feasible(const MarginPair& m) {
    return m.u_total() == m.v_total();
}

std::vector<std::vector<Rational>> northwest_corner(const MarginPair& m) {
    if (!feasible(m)) {
        throw std::domain_error("margins differ: " + rational_to_string(m.u_total()) +
                                " ≠ " + rational_to_string(m.v_total()));
    }
    const std::size_t p = m.u.size();
    const std::size_t q = m.v.size();
    std::vector<std::vector<Rational>> x(p, std::vector<Rational>(q, Rational(0)));
    std::vector<Rational> row_res = m.u;
    std::vector<Rational> col_res = m.v;
    std::size_t i = 0, j = 0;
    while (i < p && j < q) {
        const Rational step = std::min(row_res[i], col_res[j]);
        x[i][j] += step;
        row_res[i] -= step;
        col_res[j] -= step;
        if (row_res[i] == 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return x;
}

ConstraintSystem incidence_matrix(Int p, Int q, bool remove_corner_edge) {
    if (p < 1 || q < 1) {
        throw std::domain_error("incidence matrix needs p, q >= 1");
    }
    // 0-based vertex labels against the gamma grid when the corner edge is
    // removed; 1-based otherwise.
    const Int base = remove_corner_edge ? 0 : 1;
    ConstraintSystem sys;
    for (Int i = 0; i < p; ++i) {
        for (Int j = 0; j < q; ++j) {
            if (remove_corner_edge && i == 0 && j == 0) continue;
            sys.variable_order.emplace_back(i + base, j + base);
        }
    }
    sys.A.assign(static_cast<std::size_t>(p + q),
                 std::vector<Int>(sys.variable_order.size(), 0));
    for (std::size_t col = 0; col < sys.variable_order.size(); ++col) {
        const auto [i, j] = sys.variable_order[col];
        sys.A[static_cast<std::size_t>(i - base)][col] = 1;
        sys.A[static_cast<std::size_t>(p + j - base)][col] = 1;
    }
    return sys;
}

ConstraintSystem constraint_system(const MarginPair& m) {
    ConstraintSystem sys = incidence_matrix(static_cast<Int>(m.u.size()),
                                            static_cast<Int>(m.v.size()),
                                            /*remove_corner_edge=*/false);
    sys.b = m.u;
    sys.b.insert(sys.b.end(), m.v.begin(), m.v.end());
    return sys;
}

PaddedMargins padded_margins(const Margin& alpha, const Margin& beta, Int N) {
    const Int a = margin_total(alpha);
    const Int b = margin_total(beta);
    if (N < std::max(a, b)) {
        throw std::out_of_range("N below max(|alpha|, |beta|): pad would be negative");
    }
    PaddedMargins out;
    out.N = N;
    out.alpha_bar.reserve(alpha.size() + 1);
    out.alpha_bar.push_back(N - a);
    out.alpha_bar.insert(out.alpha_bar.end(), alpha.begin(), alpha.end());
    out.beta_bar.reserve(beta.size() + 1);
    out.beta_bar.push_back(N - b);
    out.beta_bar.insert(out.beta_bar.end(), beta.begin(), beta.end());
    return out;
}

ConstraintSystem rearranged_constraint_system(const Margin& alpha, const Margin& beta,
                                              Int N) {
    const PaddedMargins pads = padded_margins(alpha, beta, N);
    const Int p = static_cast<Int>(alpha.size());
    const Int q = static_cast<Int>(beta.size());
    const ConstraintSystem B = incidence_matrix(p + 1, q + 1, /*remove_corner_edge=*/true);

    // Column permutation, in 1-based column indices of B:
    //   A^i     = B^{i(q+1)}  for i in [p]   (the column-0 variables),
    //   A^{p+i} = B^i         for i in [q]   (the row-0 variables),
    //   then the remaining columns of B in ascending order (inner block).
    std::vector<std::size_t> perm;
    std::vector<bool> used(B.num_cols(), false);
    for (Int i = 1; i <= p; ++i) {
        const std::size_t col = static_cast<std::size_t>(i * (q + 1)) - 1;
        perm.push_back(col);
        used[col] = true;
    }
    for (Int i = 1; i <= q; ++i) {
        const std::size_t col = static_cast<std::size_t>(i) - 1;
        perm.push_back(col);
        used[col] = true;
    }
    for (std::size_t col = 0; col < B.num_cols(); ++col) {
        if (!used[col]) perm.push_back(col);
    }

    ConstraintSystem sys;
    sys.A.assign(B.num_rows(), std::vector<Int>(B.num_cols(), 0));
    for (std::size_t to = 0; to < perm.size(); ++to) {
        const std::size_t from = perm[to];
        sys.variable_order.push_back(B.variable_order[from]);
        for (std::size_t r = 0; r < B.num_rows(); ++r) {
            sys.A[r][to] = B.A[r][from];
        }
    }
    sys.b.reserve(pads.alpha_bar.size() + pads.beta_bar.size());
    for (Int v : pads.alpha_bar) sys.b.emplace_back(v);
    for (Int v : pads.beta_bar) sys.b.emplace_back(v);
    return sys;
}

bool check_membership(const std::vector<Rational>& x, const ConstraintSystem& sys,
                      bool integral_required) {
    if (x.size() != sys.num_cols()) {
        throw std::domain_error("vector length does not match the constraint system");
    }
    for (const auto& e : x) {
        if (e < 0) return false;
        if (integral_required && !is_integral(e)) return false;
    }
    for (std::size_t r = 0; r < sys.num_rows(); ++r) {
        Rational dot(0);
        for (std::size_t c = 0; c < sys.num_cols(); ++c) {
            if (sys.A[r][c] != 0) dot += x[c];
        }
        if (dot != sys.b[r]) return false;
    }
    return true;
}

std::string render_constraint_system(const ConstraintSystem& sys,
                                     const std::string& column_label) {
    std::ostringstream os;
    std::vector<std::size_t> width(sys.num_cols(), 1);
    for (std::size_t c = 0; c < sys.num_cols(); ++c) {
        width[c] = std::max<std::size_t>(
            1, column_label.size() + std::to_string(c + 1).size() + 1);
    }
    for (std::size_t c = 0; c < sys.num_cols(); ++c) {
        std::string label = column_label + "^" + std::to_string(c + 1);
        os << label << std::string(width[c] - label.size() + 2, ' ');
    }
    os << "\n";
    for (std::size_t r = 0; r < sys.num_rows(); ++r) {
        for (std::size_t c = 0; c < sys.num_cols(); ++c) {
            std::string cell = std::to_string(sys.A[r][c]);
            os << cell << std::string(width[c] - cell.size() + 2, ' ');
        }
        if (r < sys.b.size()) os << "| " << rational_to_string(sys.b[r]);
        os << "\n";
    }
    os << "variables: ";
    for (std::size_t c = 0; c < sys.num_cols(); ++c) {
        if (c) os << " ";
        os << "(" << sys.variable_order[c].first << "," << sys.variable_order[c].second
           << ")";
    }
    os << "\n";
    return os.str();
}

std::string constraint_system_to_json(const ConstraintSystem& sys) {
    nlohmann::json j;
    j["rows"] = sys.num_rows();
    j["cols"] = sys.num_cols();
    j["entries"] = sys.A;
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [i, jj] : sys.variable_order) vars.push_back({i, jj});
    j["variable_order"] = vars;
    nlohmann::json b = nlohmann::json::array();
    for (const auto& e : sys.b) b.push_back(rational_to_string(e));
    j["b"] = b;
    return j.dump(2);
}

std::string render_transport_matrix(const std::vector<std::vector<Rational>>& x,
                                    const MarginPair& m) {
    const std::size_t p = x.size();
    const std::size_t q = p == 0 ? m.v.size() : x[0].size();
    std::vector<std::size_t> width(q, 1);
    for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t i = 0; i < p; ++i) {
            width[j] = std::max(width[j], rational_to_string(x[i][j]).size());
        }
        if (j < m.v.size()) {
            width[j] = std::max(width[j], rational_to_string(m.v[j]).size());
        }
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::ostringstream os;
    std::string header, arrows;
    for (std::size_t j = 0; j < q; ++j) {
        header += pad(rational_to_string(m.v[j]), width[j]) + "  ";
        arrows += std::string(width[j] - 1, ' ') + "↑  ";
    }
    os << header << "\n" << arrows << "\n";
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            os << pad(rational_to_string(x[i][j]), width[j]) << "  ";
        }
        os << "→ " << rational_to_string(m.u[i]) << "\n";
    }
    return os.str();
}

}  // namespace msym
