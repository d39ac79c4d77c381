#include "msym/lset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace msym {

Int margin_total(const Margin& m) {
    return std::accumulate(m.begin(), m.end(), Int{0});
}

namespace {

void validate_margin(const Margin& m, const char* name) {
    for (Int v : m) {
        if (v < 0) {
            throw std::domain_error(std::string(name) + " has a negative entry");
        }
    }
}

}  // namespace

GammaMatrix::GammaMatrix(Int p, Int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw std::domain_error("negative block dimension");
    entries_.assign(static_cast<std::size_t>((p + 1) * (q + 1)), 0);
}

GammaMatrix GammaMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows[0].empty()) {
        throw std::domain_error("matrix needs at least one row and column");
    }
    GammaMatrix g(static_cast<Int>(rows.size()) - 1,
                  static_cast<Int>(rows[0].size()) - 1);
    for (Int i = 0; i < g.rows(); ++i) {
        if (static_cast<Int>(rows[static_cast<std::size_t>(i)].size()) != g.cols()) {
            throw std::domain_error("ragged matrix rows");
        }
        for (Int j = 0; j < g.cols(); ++j) {
            Int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v < 0) throw std::domain_error("negative matrix entry");
            g.at(i, j) = v;
        }
    }
    return g;
}

Int& GammaMatrix::at(Int i, Int j) {
    return entries_[static_cast<std::size_t>(i * (q_ + 1) + j)];
}

Int GammaMatrix::at(Int i, Int j) const {
    return entries_[static_cast<std::size_t>(i * (q_ + 1) + j)];
}

Int GammaMatrix::total() const {
    return std::accumulate(entries_.begin(), entries_.end(), Int{0});
}

Int GammaMatrix::row_sum(Int i) const {
    Int s = 0;
    for (Int j = 0; j <= q_; ++j) s += at(i, j);
    return s;
}

Int GammaMatrix::col_sum(Int j) const {
    Int s = 0;
    for (Int i = 0; i <= p_; ++i) s += at(i, j);
    return s;
}

std::vector<std::vector<Int>> GammaMatrix::to_rows() const {
    std::vector<std::vector<Int>> out;
    out.reserve(static_cast<std::size_t>(rows()));
    for (Int i = 0; i < rows(); ++i) {
        std::vector<Int> row;
        row.reserve(static_cast<std::size_t>(cols()));
        for (Int j = 0; j < cols(); ++j) row.push_back(at(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

bool is_member(const GammaMatrix& gamma, const Margin& alpha, const Margin& beta,
               Int n) {
    validate_margin(alpha, "alpha");
    validate_margin(beta, "beta");
    if (gamma.p() != static_cast<Int>(alpha.size()) ||
        gamma.q() != static_cast<Int>(beta.size())) {
        throw std::domain_error("matrix shape does not match margin lengths");
    }
    if (gamma.at(0, 0) != 0) return false;
    if (gamma.total() > n) return false;
    for (Int i = 1; i <= gamma.p(); ++i) {
        if (gamma.row_sum(i) != alpha[static_cast<std::size_t>(i - 1)]) return false;
    }
    for (Int j = 1; j <= gamma.q(); ++j) {
        if (gamma.col_sum(j) != beta[static_cast<std::size_t>(j - 1)]) return false;
    }
    return true;
}

namespace {

// Backtracking over the inner block, one row at a time. Row i's column-0
// entry is the slack alpha_i minus the inner row sum; after the last row,
// row 0 takes the residual column budgets. Since |gamma| = |alpha| + |beta|
// minus the inner mass, the n-budget is a lower bound on inner mass.
struct Enumerator {
    Int p, q;
    const Margin& alpha;
    const Margin& beta;
    Int min_inner_mass;          // |alpha| + |beta| - n
    std::vector<Int> col_res;    // residual inner-column budgets, size q
    std::vector<Int> alpha_suffix;  // sum of alpha[i-1..p-1]
    GammaMatrix work;
    std::vector<GammaMatrix> out;

    Enumerator(const Margin& a, const Margin& b, Int n)
        : p(static_cast<Int>(a.size())),
          q(static_cast<Int>(b.size())),
          alpha(a),
          beta(b),
          min_inner_mass(margin_total(a) + margin_total(b) - n),
          col_res(b.begin(), b.end()),
          work(p, q) {
        alpha_suffix.assign(static_cast<std::size_t>(p) + 2, 0);
        for (Int i = p; i >= 1; --i) {
            alpha_suffix[static_cast<std::size_t>(i)] =
                alpha_suffix[static_cast<std::size_t>(i) + 1] +
                a[static_cast<std::size_t>(i - 1)];
        }
    }

    Int col_res_total() const {
        return std::accumulate(col_res.begin(), col_res.end(), Int{0});
    }

    void run() { fill_row(1, 0); }

    void fill_row(Int i, Int inner_mass) {
        if (i > p) {
            if (inner_mass < min_inner_mass) return;
            for (Int j = 1; j <= q; ++j) {
                work.at(0, j) = col_res[static_cast<std::size_t>(j - 1)];
            }
            out.push_back(work);
            return;
        }
        // Future rows can add at most min(remaining alpha, remaining columns).
        Int future = std::min(alpha_suffix[static_cast<std::size_t>(i)], col_res_total());
        if (inner_mass + future < min_inner_mass) return;
        fill_cell(i, 1, alpha[static_cast<std::size_t>(i - 1)], inner_mass);
    }

    void fill_cell(Int i, Int j, Int row_rem, Int inner_mass) {
        if (j > q) {
            work.at(i, 0) = row_rem;  // slack into column 0
            fill_row(i + 1, inner_mass);
            return;
        }
        Int cap = std::min(row_rem, col_res[static_cast<std::size_t>(j - 1)]);
        for (Int v = 0; v <= cap; ++v) {
            work.at(i, j) = v;
            col_res[static_cast<std::size_t>(j - 1)] -= v;
            fill_cell(i, j + 1, row_rem - v, inner_mass + v);
            col_res[static_cast<std::size_t>(j - 1)] += v;
        }
        work.at(i, j) = 0;
    }
};

}  // namespace

std::vector<GammaMatrix> enumerate_L(const Margin& alpha, const Margin& beta, Int n) {
    validate_margin(alpha, "alpha");
    validate_margin(beta, "beta");
    Enumerator e(alpha, beta, n);
    e.run();
    std::sort(e.out.begin(), e.out.end(),
              [](const GammaMatrix& a, const GammaMatrix& b) {
                  return gamma_to_vec(a) < gamma_to_vec(b);
              });
    return e.out;
}

LStratum enumerate_LN(const Margin& alpha, const Margin& beta, Int N) {
    if (N < 0) throw std::domain_error("N must be non-negative");
    LStratum stratum;
    stratum.N = N;
    for (auto& g : enumerate_L(alpha, beta, N)) {
        if (g.total() == N) stratum.members.push_back(std::move(g));
    }
    return stratum;
}

IntegerInterval nonempty_range(const Margin& alpha, const Margin& beta) {
    const Int a = margin_total(alpha);
    const Int b = margin_total(beta);
    return IntegerInterval{std::max(a, b), a + b};
}

std::vector<LStratum> decompose(const Margin& alpha, const Margin& beta, Int n) {
    const IntegerInterval range = nonempty_range(alpha, beta);
    const Int hi = std::min(n, range.hi);
    std::vector<LStratum> strata;
    if (range.lo > hi) return strata;
    strata.resize(static_cast<std::size_t>(hi - range.lo + 1));
    for (std::size_t k = 0; k < strata.size(); ++k) {
        strata[k].N = range.lo + static_cast<Int>(k);
    }
    for (auto& g : enumerate_L(alpha, beta, n)) {
        strata[static_cast<std::size_t>(g.total() - range.lo)].members.push_back(
            std::move(g));
    }
    return strata;
}

GammaMatrix witness(const Margin& alpha, const Margin& beta, Int N) {
    validate_margin(alpha, "alpha");
    validate_margin(beta, "beta");
    if (!nonempty_range(alpha, beta).contains(N)) {
        throw std::out_of_range("N outside the nonempty range of L_N");
    }
    const Int p = static_cast<Int>(alpha.size());
    const Int q = static_cast<Int>(beta.size());

    std::vector<Int> row_res(static_cast<std::size_t>(p) + 1);
    row_res[0] = N - margin_total(alpha);
    for (Int i = 1; i <= p; ++i) row_res[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i - 1)];

    std::vector<Int> col_res(static_cast<std::size_t>(q) + 1);
    col_res[0] = N - margin_total(beta);
    for (Int j = 1; j <= q; ++j) col_res[static_cast<std::size_t>(j)] = beta[static_cast<std::size_t>(j - 1)];

    // Column 0 is visited last; row 0's padded mass N - |alpha| never exceeds
    // |beta|, so it is absorbed by the inner columns and the corner stays 0.
    std::vector<Int> col_order;
    for (Int j = 1; j <= q; ++j) col_order.push_back(j);
    col_order.push_back(0);

    GammaMatrix g(p, q);
    std::size_t ii = 0, jj = 0;
    while (ii < row_res.size() && jj < col_order.size()) {
        const Int i = static_cast<Int>(ii);
        const Int j = col_order[jj];
        const Int x = std::min(row_res[ii], col_res[static_cast<std::size_t>(j)]);
        g.at(i, j) += x;
        row_res[ii] -= x;
        col_res[static_cast<std::size_t>(j)] -= x;
        if (row_res[ii] == 0) {
            ++ii;
        } else {
            ++jj;
        }
    }
    return g;
}

std::vector<Int> gamma_to_vec(const GammaMatrix& gamma) {
    std::vector<Int> vec;
    vec.reserve(static_cast<std::size_t>(gamma.p() + gamma.q() + gamma.p() * gamma.q()));
    for (Int i = 1; i <= gamma.p(); ++i) vec.push_back(gamma.at(i, 0));
    for (Int j = 1; j <= gamma.q(); ++j) vec.push_back(gamma.at(0, j));
    for (Int i = 1; i <= gamma.p(); ++i) {
        for (Int j = 1; j <= gamma.q(); ++j) vec.push_back(gamma.at(i, j));
    }
    return vec;
}

GammaMatrix vec_to_gamma(const std::vector<Int>& vec, Int p, Int q) {
    if (static_cast<Int>(vec.size()) != p + q + p * q) {
        throw std::domain_error("flattened vector length does not match (p,q)");
    }
    for (Int v : vec) {
        if (v < 0) throw std::domain_error("negative entry in flattened vector");
    }
    GammaMatrix g(p, q);
    std::size_t k = 0;
    for (Int i = 1; i <= p; ++i) g.at(i, 0) = vec[k++];
    for (Int j = 1; j <= q; ++j) g.at(0, j) = vec[k++];
    for (Int i = 1; i <= p; ++i) {
        for (Int j = 1; j <= q; ++j) g.at(i, j) = vec[k++];
    }
    return g;
}

std::string render_gamma(const GammaMatrix& gamma, const Margin& alpha,
                         const Margin& beta) {
    const Int p = gamma.p();
    const Int q = gamma.q();
    std::vector<std::size_t> width(static_cast<std::size_t>(q) + 1, 1);
    for (Int j = 0; j <= q; ++j) {
        for (Int i = 0; i <= p; ++i) {
            width[static_cast<std::size_t>(j)] = std::max(
                width[static_cast<std::size_t>(j)], std::to_string(gamma.at(i, j)).size());
        }
        if (j >= 1 && j <= static_cast<Int>(beta.size())) {
            width[static_cast<std::size_t>(j)] = std::max(
                width[static_cast<std::size_t>(j)],
                std::to_string(beta[static_cast<std::size_t>(j - 1)]).size());
        }
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::ostringstream os;
    if (!beta.empty()) {
        std::string header, arrows;
        for (Int j = 0; j <= q; ++j) {
            const std::size_t w = width[static_cast<std::size_t>(j)];
            std::string label = (j >= 1) ? std::to_string(beta[static_cast<std::size_t>(j - 1)]) : "";
            std::string arrow = (j >= 1) ? "↑" : "";
            header += pad(label, w) + "  ";
            // The arrow glyph is multi-byte; pad by display width.
            arrows += std::string(w - (j >= 1 ? 1 : 0), ' ') + arrow + "  ";
        }
        os << header << "\n" << arrows << "\n";
    }
    for (Int i = 0; i <= p; ++i) {
        for (Int j = 0; j <= q; ++j) {
            os << pad(std::to_string(gamma.at(i, j)), width[static_cast<std::size_t>(j)])
               << "  ";
        }
        if (i >= 1 && i <= static_cast<Int>(alpha.size())) {
            os << "→ " << alpha[static_cast<std::size_t>(i - 1)];
        }
        os << "\n";
    }
    return os.str();
}

std::string strata_to_json(const Margin& alpha, const Margin& beta, Int n,
                           const std::vector<LStratum>& strata) {
    nlohmann::json j;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["n"] = n;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : strata) {
        nlohmann::json js;
        js["N"] = s.N;
        js["count"] = s.members.size();
        nlohmann::json mats = nlohmann::json::array();
        for (const auto& g : s.members) mats.push_back(g.to_rows());
        js["matrices"] = mats;
        arr.push_back(js);
    }
    j["strata"] = arr;
    return j.dump(2);
}

}  // namespace msym
